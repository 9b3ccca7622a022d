#include <holo/reconstruct.hpp>

#include <holo/modint.hpp>

#include <stdexcept>

namespace holo {

std::vector<std::uint64_t> default_primes(int count, bool portable_31bit) {
  // largest primes below 2^63 (resp. 2^31)
  static const std::uint64_t big[] = {
      9223372036854775783ULL, 9223372036854775643ULL, 9223372036854775549ULL,
      9223372036854775507ULL, 9223372036854775433ULL, 9223372036854775421ULL,
      9223372036854775417ULL, 9223372036854775399ULL};
  static const std::uint64_t small[] = {2147483647ULL, 2147483629ULL, 2147483587ULL,
                                        2147483579ULL, 2147483563ULL, 2147483549ULL,
                                        2147483543ULL, 2147483497ULL};
  const std::uint64_t* src = portable_31bit ? small : big;
  int n = count < 0 ? 0 : (count > 8 ? 8 : count);
  return std::vector<std::uint64_t>(src, src + n);
}

std::optional<Rat> rational_reconstruct(const Int& residue, const Int& modulus) {
  if (modulus < 2 || residue < 0 || residue >= modulus)
    throw std::invalid_argument("rational_reconstruct: need 0 <= residue < modulus, modulus >= 2");

  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int((modulus - 1) / 2).get_mpz_t());

  // half-extended Euclid on (modulus, residue); invariant a_i = b_i * residue (mod modulus)
  Int a0 = modulus, a1 = residue;
  Int b0 = 0, b1 = 1;
  while (a1 > bound) {
    Int q = a0 / a1;
    Int a2 = a0 - q * a1;
    Int b2 = b0 - q * b1;
    a0 = a1; a1 = a2;
    b0 = b1; b1 = b2;
  }
  Int a = a1, b = b1;
  if (b < 0) { a = -a; b = -b; }
  if (b == 0 || b > bound) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), modulus.get_mpz_t());
  if (g != 1) return std::nullopt;
  return make_rat(a, b);
}

std::pair<Int, Int> crt_combine(const std::vector<std::pair<Int, Int>>& residues) {
  if (residues.empty()) throw std::invalid_argument("crt_combine: empty input");
  Int r = residues[0].first % residues[0].second;
  if (r < 0) r += residues[0].second;
  Int m = residues[0].second;
  for (std::size_t i = 1; i < residues.size(); ++i) {
    const Int& ri = residues[i].first;
    const Int& mi = residues[i].second;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t(), mi.get_mpz_t());
    if (g != 1) throw std::invalid_argument("crt_combine: moduli not pairwise coprime");
    // r_new = r + m * s * (ri - r) mod m*mi
    Int mm = m * mi;
    Int rnew = (r + m * s % mm * ((ri - r) % mm)) % mm;
    if (rnew < 0) rnew += mm;
    r = rnew;
    m = mm;
  }
  return {r, m};
}

}  // namespace holo
