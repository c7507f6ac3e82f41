#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gridgeom {

// All counts and bound checks run in exact arithmetic; doubles appear only
// in clearly labeled reference values.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(const Int& n, unsigned long k) {
  if (n < 0 || Int(k) > n) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Falling-factorial extension x(x-1)...(x-r+1)/r! for rational x.
// Clamped to 0 for x < r-1, where the convex extension is not used.
inline Rat binomial_rat(const Rat& x, unsigned long r) {
  if (x < Rat(static_cast<long>(r) - 1)) return 0;
  Rat num = 1;
  for (unsigned long j = 0; j < r; ++j) num *= x - Rat(static_cast<long>(j));
  Rat den;
  mpz_fac_ui(mpq_numref(den.get_mpq_t()), r);
  den.canonicalize();
  return num / den;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  Rat r = 1;
  Rat b = e >= 0 ? base : Rat(1) / base;
  for (long i = 0, n = e >= 0 ? e : -e; i < n; ++i) r *= b;
  return r;
}

inline double to_double(const Rat& q) { return q.get_d(); }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace gridgeom
