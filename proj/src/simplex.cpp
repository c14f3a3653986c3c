#include "bcov/simplex.hpp"

#include <string>

#include "bcov/errors.hpp"
#include "bcov/parents.hpp"

namespace bcov {

SimplexND SimplexND::canonical(std::size_t n) {
  SimplexND s;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = 1;
    s.vertices.push_back(std::move(v));
  }
  s.vertices.emplace_back(n, Rational(0));
  return s;
}

Rational monomial_canonical_integral(std::span<const unsigned> exponents) {
  Integer num = 1;
  unsigned long total = exponents.size();
  for (unsigned m : exponents) {
    num *= factorial(m);
    total += m;
  }
  Rational r(num, factorial(total));
  r.canonicalize();
  return r;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) require(row.size() == n, "determinant needs a square matrix");
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Rational integrate_over_simplex(const RationalPolynomial& poly, const SimplexND& simplex) {
  const std::size_t n = simplex.dimension();
  require(simplex.vertices.size() == n + 1, "a simplex needs dimension + 1 vertices");
  for (const auto& v : simplex.vertices) require(v.size() == n, "vertex dimension mismatch");
  require(poly.vars() == n, "polynomial variable count differs from simplex dimension");
  if (n == 0) return poly.evaluate(std::span<const Rational>{});

  const auto& base = simplex.vertices.back();
  // edge matrix E[j][i] = v_i[j] - base[j]
  std::vector<std::vector<Rational>> edges(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) edges[j][i] = simplex.vertices[i][j] - base[j];
  Rational det = determinant(edges);
  if (sgn(det) == 0) return 0;

  std::vector<RationalPolynomial> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) images.push_back(RationalPolynomial::affine(base[j], edges[j]));
  RationalPolynomial pulled = poly.compose(images);

  Rational integral = 0;
  for (const auto& [e, c] : pulled.terms()) integral += c * monomial_canonical_integral(e);
  return integral * abs(det);
}

// ---------------------------------------------------------------------------

namespace {

void check_polynomial_instance(const UniPoly& density, const Rational& s, std::size_t n) {
  // validates nonnegativity and unit mass
  (void)ParentDistribution::polynomial(density, s);
  if (n > kMaxPolynomialRobots)
    throw CapacityError("polynomial-parent pcon is capped at n = " + std::to_string(kMaxPolynomialRobots));
  if (static_cast<unsigned long>(density.degree()) * n > kMaxPolynomialDegree)
    throw CapacityError("polynomial-parent pcon is capped at total degree " + std::to_string(kMaxPolynomialDegree));
}

// Signed sum over threshold patterns; G_k(y) = int_0^y f(t + C_k) G_{k-1}(t) dt
// is shared by every pattern with the same first k choices.
class IteratedJanossy {
 public:
  IteratedJanossy(const UniPoly& f, const Rational& s, std::span<const Rational> d)
      : f_(f), s_(s), d_(d.begin(), d.end()), n_(d.size() - 1) {}

  // returns (sum over all V of (-1)^|V| I(V), I(empty))
  std::pair<Rational, Rational> run() {
    total_ = 0;
    full_ = 0;
    descend(0, UniPoly::constant(1), Rational(0), false, true);
    Rational nf(factorial(n_));
    return {total_ * nf, full_ * nf};
  }

 private:
  // robot k (1-based) is about to be placed; prefix = C_{k-1}
  void descend(std::size_t k, const UniPoly& g, const Rational& prefix, bool odd, bool empty) {
    if (k == n_) {
      // last slack: free or forced above d_{n+1}
      finish(g, prefix, odd, empty);
      finish(g, prefix + d_[n_], !odd, false);
      return;
    }
    for (int forced = 0; forced < 2; ++forced) {
      Rational c = forced ? Rational(prefix + d_[k]) : prefix;
      if (c >= s_) continue;
      UniPoly next = (f_.shifted(c) * g).antiderivative();
      descend(k + 1, next, c, forced ? !odd : odd, empty && !forced);
    }
  }

  void finish(const UniPoly& g, const Rational& prefix, bool odd, bool empty) {
    Rational length = s_ - prefix;
    // zero length: measure zero for n > 0, and for n = 0 a slack equal to its
    // threshold counts as connected
    if (sgn(length) <= 0) return;
    Rational value = g(length);
    if (empty) full_ = value;
    if (odd)
      total_ -= value;
    else
      total_ += value;
  }

  UniPoly f_;
  Rational s_;
  std::vector<Rational> d_;
  std::size_t n_;
  Rational total_, full_;
};

}  // namespace

Rational pcon_polynomial_parent(const UniPoly& density, const Rational& s, std::span<const Rational> d) {
  require(!d.empty(), "need one threshold per slack");
  const std::size_t n = d.size() - 1;
  check_polynomial_instance(density, s, n);
  for (const auto& x : d) require(sgn(x) > 0, "thresholds must be positive");
  auto [signed_sum, full] = IteratedJanossy(density, s, d).run();
  require(sgn(full) > 0, "density has no mass on the position simplex");
  return signed_sum / full;
}

Rational pcon_polynomial_parent(const UniPoly& density, const Rational& s, const Rational& d, std::size_t n) {
  require(sgn(d) > 0, "threshold must be positive");
  std::vector<Rational> dv(n + 1, d);
  return pcon_polynomial_parent(density, s, std::span<const Rational>(dv));
}

Rational pcon_polynomial_parent_by_simplices(const UniPoly& density, const Rational& s, const Rational& d,
                                            std::size_t n) {
  check_polynomial_instance(density, s, n);
  require(sgn(d) > 0, "threshold must be positive");
  if (n == 0) return s <= d ? 1 : 0;

  // Janossy density n! prod f(x_i) as a polynomial in the n positions
  RationalPolynomial janossy = RationalPolynomial::constant(n, Rational(factorial(n)));
  for (std::size_t i = 0; i < n; ++i) {
    RationalPolynomial fi(n);
    auto c = density.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
      Exponents e(n, 0);
      e[i] = static_cast<unsigned>(k);
      fi.add_term(e, c[k]);
    }
    janossy = janossy * fi;
  }

  // compatible simplex of V: slack vertices L e_k + d 1_V (k = 1..n+1), with
  // L = s - d|V|; positions are prefix sums of the first n slacks
  auto measure = [&](const std::vector<bool>& in_v) -> Rational {
    Rational forced = 0;
    for (bool b : in_v)
      if (b) forced += d;
    Rational length = s - forced;
    if (sgn(length) <= 0) return 0;
    SimplexND simplex;
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<Rational> slack(n + 1);
      for (std::size_t i = 0; i <= n; ++i) slack[i] = in_v[i] ? d : Rational(0);
      slack[k] += length;
      std::vector<Rational> pos(n);
      Rational acc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += slack[i];
        pos[i] = acc;
      }
      simplex.vertices.push_back(std::move(pos));
    }
    return integrate_over_simplex(janossy, simplex);
  };

  Rational signed_sum = 0, full = 0;
  const std::size_t subsets = std::size_t{1} << (n + 1);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<bool> in_v(n + 1);
    int bits = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      in_v[i] = (mask >> i) & 1u;
      bits += in_v[i];
    }
    Rational m = measure(in_v);
    if (mask == 0) full = m;
    if (bits % 2)
      signed_sum -= m;
    else
      signed_sum += m;
  }
  return signed_sum / full;
}

Rational beta_pcon(unsigned a, unsigned b, const Rational& s, const Rational& d, std::size_t n) {
  return pcon_polynomial_parent(beta_to_polynomial(a, b, s), s, d, n);
}

}  // namespace bcov
