#include "bcov/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "bcov/errors.hpp"

namespace bcov {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("malformed rational '" + std::string(whole) + "'");
  Integer z(std::string(s), 10);
  return neg ? Integer(-z) : z;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  std::string_view mantissa = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view ex = s.substr(e + 1);
    Integer ez = parse_integer(ex, whole);
    if (!ez.fits_slong_p() || std::labs(ez.get_si()) > 4000)
      throw DomainError("exponent out of range in '" + std::string(whole) + "'");
    exp10 = ez.get_si();
  }
  bool neg = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    neg = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  auto dot = mantissa.find('.');
  if (dot == std::string_view::npos) {
    digits = std::string(mantissa);
  } else {
    std::string_view ip = mantissa.substr(0, dot);
    std::string_view fp = mantissa.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw DomainError("malformed rational '" + std::string(whole) + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw DomainError("malformed rational '" + std::string(whole) + "'");
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  }
  if (!all_digits(digits)) throw DomainError("malformed rational '" + std::string(whole) + "'");
  Rational q{Integer(digits, 10)};
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  if (exp10 >= 0)
    q *= ten_pow;
  else
    q /= ten_pow;
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty rational string");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_s = text.substr(slash + 1);
    if (!den_s.empty() && den_s.front() == '+') den_s.remove_prefix(1);
    if (!all_digits(den_s)) throw DomainError("malformed rational '" + std::string(text) + "'");
    Integer den(std::string(den_s), 10);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text, text);
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned long n) {
  Integer z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return z;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return z;
}

Integer floor(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value has no rational form");
  Rational q(x);  // exact: mpq_set_d is exact for finite doubles
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) {
  int sign = sgn(q);
  if (sign == 0) return 0.0;
  Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  // choose e with 2^52 <= num / (den * 2^e) < 2^53
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 53;
  Integer scaled_num = num, scaled_den = den;
  if (e >= 0)
    scaled_den <<= static_cast<mp_bitcnt_t>(e);
  else
    scaled_num <<= static_cast<mp_bitcnt_t>(-e);
  Integer m, rem;
  mpz_tdiv_qr(m.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  while (mpz_sizeinbase(m.get_mpz_t(), 2) < 53) {
    scaled_num <<= 1;
    --e;
    mpz_tdiv_qr(m.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  }
  while (mpz_sizeinbase(m.get_mpz_t(), 2) > 53) {
    scaled_den <<= 1;
    ++e;
    mpz_tdiv_qr(m.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  }
  int cmp = mpz_cmp(Integer(rem * 2).get_mpz_t(), scaled_den.get_mpz_t());
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(m.get_mpz_t()))) m += 1;
  double r = std::ldexp(m.get_d(), static_cast<int>(e));
  return sign < 0 ? -r : r;
}

}  // namespace bcov
