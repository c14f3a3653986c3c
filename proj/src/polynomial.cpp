#include "bcov/polynomial.hpp"

#include <algorithm>

#include "bcov/errors.hpp"

namespace bcov {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UniPoly::operator()(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

UniPoly UniPoly::antiderivative() const {
  if (c_.empty()) return {};
  std::vector<Rational> v(c_.size() + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    v[k + 1] = c_[k] / static_cast<unsigned long>(k + 1);
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::shifted(const Rational& shift) const {
  if (sgn(shift) == 0 || c_.empty()) return *this;
  // Horner in polynomial arithmetic: ((c_m)(x+h) + c_{m-1})(x+h) + ...
  UniPoly lin({shift, Rational(1)});
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin;
    acc += UniPoly::constant(*it);
  }
  return acc;
}

UniPoly UniPoly::scaled(const Rational& factor) const {
  std::vector<Rational> v(c_);
  Rational f = 1;
  for (auto& c : v) {
    c *= f;
    f *= factor;
  }
  return UniPoly(std::move(v));
}

Rational UniPoly::integrate(const Rational& a, const Rational& b) const {
  UniPoly anti = antiderivative();
  return anti(b) - anti(a);
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& k) {
  for (auto& c : c_) c *= k;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

// ---------------------------------------------------------------------------

RationalPolynomial RationalPolynomial::constant(std::size_t vars, const Rational& c) {
  RationalPolynomial p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

RationalPolynomial RationalPolynomial::variable(std::size_t vars, std::size_t i) {
  require(i < vars, "variable index out of range");
  RationalPolynomial p(vars);
  Exponents e(vars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

RationalPolynomial RationalPolynomial::affine(const Rational& c0, std::span<const Rational> c) {
  RationalPolynomial p(c.size());
  p.add_term(Exponents(c.size(), 0), c0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Exponents e(c.size(), 0);
    e[i] = 1;
    p.add_term(e, c[i]);
  }
  return p;
}

RationalPolynomial RationalPolynomial::from_univariate(const UniPoly& u) {
  RationalPolynomial p(1);
  auto c = u.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) p.add_term({static_cast<unsigned>(k)}, c[k]);
  return p;
}

unsigned RationalPolynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void RationalPolynomial::add_term(const Exponents& e, const Rational& c) {
  require(e.size() == vars_, "exponent vector length does not match variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational RationalPolynomial::evaluate(std::span<const Rational> x) const {
  require(x.size() == vars_, "point dimension does not match variable count");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < vars_; ++i)
      if (e[i]) t *= bcov::pow(x[i], e[i]);
    acc += t;
  }
  return acc;
}

double RationalPolynomial::evaluate(std::span<const double> x) const {
  require(x.size() == vars_, "point dimension does not match variable count");
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (std::size_t i = 0; i < vars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  require(o.vars_ == vars_, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  require(o.vars_ == vars_, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& k) {
  if (sgn(k) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  require(a.vars_ == b.vars_, "variable count mismatch");
  RationalPolynomial out(a.vars_);
  Exponents e(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

RationalPolynomial RationalPolynomial::pow(unsigned k) const {
  RationalPolynomial result = constant(vars_, 1);
  RationalPolynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

RationalPolynomial RationalPolynomial::compose(std::span<const RationalPolynomial> images) const {
  require(images.size() == vars_, "one image polynomial per variable is required");
  std::size_t out_vars = images.empty() ? 0 : images.front().vars();
  for (const auto& im : images) require(im.vars() == out_vars, "image polynomials disagree on variable count");

  // power tables: powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<RationalPolynomial>> powers(vars_);
  auto power = [&](std::size_t i, unsigned k) -> const RationalPolynomial& {
    auto& table = powers[i];
    if (table.empty()) table.push_back(constant(out_vars, 1));
    while (table.size() <= k) table.push_back(table.back() * images[i]);
    return table[k];
  };

  RationalPolynomial out(out_vars);
  for (const auto& [e, c] : terms_) {
    RationalPolynomial term = constant(out_vars, c);
    for (std::size_t i = 0; i < vars_; ++i)
      if (e[i]) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

}  // namespace bcov
