#include "bcov/geometry.hpp"

namespace bcov {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Empty:
      return "Empty";
    case Regime::Partial:
      return "Partial";
    case Regime::Full:
      return "Full";
  }
  return "?";
}

Configuration to_float(const ExactConfiguration& c) {
  std::vector<double> x;
  x.reserve(c.size());
  for (const auto& p : c.positions()) x.push_back(to_double(p));
  return Configuration(to_double(c.length()), std::move(x));
}

}  // namespace bcov
