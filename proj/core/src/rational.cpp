#include "rcover/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace rcover {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  // p/q form is handled by gmp directly.
  if (s.find('/') != std::string::npos) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    // Order matters: canonicalizing a zero denominator is a division by zero.
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
  }
  std::size_t dot = s.find('.');
  if (dot == std::string::npos) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed number: " + s);
    return q;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  if (frac_len == 0 || digits.empty()) throw std::invalid_argument("malformed decimal: " + s);
  // Reject a second dot or stray characters; mpz catches non-digits.
  Int num;
  if (num.set_str(digits, 10) != 0) throw std::invalid_argument("malformed decimal: " + s);
  Int den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_to_double(const Rat& q) { return q.get_d(); }

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Rat harmonic(int n) {
  Rat h = 0;
  for (int i = 1; i <= n; ++i) h += Rat(1, i);
  return h;
}

Rat rat_pow(const Rat& q, unsigned e) {
  Rat acc = 1, base = q;
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

namespace {

// Exact rational equal to the given double (doubles are dyadic).
Rat rat_from_double_exact(double d) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), d);
  return q;
}

double bump_up(double d, int ulps) {
  for (int i = 0; i < ulps; ++i) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

}  // namespace

Rat ln_upper(const Rat& x) {
  if (x <= 0) throw std::invalid_argument("ln_upper: nonpositive argument");
  if (x == 1) return Rat(0);
  double d = std::log(rat_to_double(x));
  // log(1) == 0 exactly; elsewhere a handful of ulps dominates the combined
  // conversion + libm error by a wide margin.
  return rat_from_double_exact(bump_up(d, 16));
}

Rat sqrt_upper(const Rat& q) {
  if (q < 0) throw std::invalid_argument("sqrt_upper: negative argument");
  if (q == 0) return Rat(0);
  // sqrt(p/r) = sqrt(p*r)/r. Scale by 2^128 so the +1 slack is ~2^-64 relative.
  Int p = q.get_num(), r = q.get_den();
  Int z = p * r;
  mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), 128);
  Int s;
  mpz_sqrt(s.get_mpz_t(), z.get_mpz_t());
  s += 1;  // (s+1)^2 > z by definition of the integer square root
  Int den = r;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 64);
  Rat u(s, den);
  u.canonicalize();
  return u;
}

Rat ten_e_over_e_minus_one_upper() {
  static const Rat v = rat_from_double_exact(bump_up(10.0 * M_E / (M_E - 1.0), 16));
  return v;
}

Rat one_minus_inv_e_lower() {
  double d = 1.0 - 1.0 / M_E;
  for (int i = 0; i < 16; ++i) d = std::nextafter(d, 0.0);
  return rat_from_double_exact(d);
}

Int common_denominator(const std::vector<Rat>& values) {
  Int l = 1;
  for (const Rat& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  return l;
}

}  // namespace rcover
