#pragma once

#include "bcov/cli.hpp"
#include "bcov/dynamics.hpp"
#include "bcov/errors.hpp"
#include "bcov/exact.hpp"
#include "bcov/geometry.hpp"
#include "bcov/json_io.hpp"
#include "bcov/montecarlo.hpp"
#include "bcov/parents.hpp"
#include "bcov/polynomial.hpp"
#include "bcov/rational.hpp"
#include "bcov/reductions.hpp"
#include "bcov/renyi.hpp"
#include "bcov/rng.hpp"
#include "bcov/simplex.hpp"
