#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace weyl_ising {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

inline Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Exact square root of a rational square; false if `q` is not a square.
inline bool exact_sqrt(const Rational& q, Rational& out) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  out = Rational(n, d);
  out.canonicalize();
  return true;
}

}  // namespace weyl_ising
