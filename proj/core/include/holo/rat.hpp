#ifndef HOLO_RAT_HPP
#define HOLO_RAT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace holo {

// Exact arithmetic substrate: arbitrary-precision integers and rationals.
// Rationals are kept canonical (coprime, positive denominator) by GMP.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) {
  return make_rat(Int(num), Int(den));
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int binomial(const Int& n, const Int& k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

// rising factorial (x)_k = x (x+1) ... (x+k-1), exact in Q
inline Rat rising_factorial(const Rat& x, long k) {
  Rat r = 1;
  Rat t = x;
  for (long i = 0; i < k; ++i, t += 1) r *= t;
  return r;
}

inline Rat rat_pow(const Rat& x, long e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("rat_pow: 0^negative");
    return 1 / rat_pow(x, -e);
  }
  Rat r = 1, b = x;
  for (long n = e; n > 0; n >>= 1) {
    if (n & 1) r *= b;
    b *= b;
  }
  return r;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// parses "p/q" or "p"; throws on malformed input
inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace holo

#endif
