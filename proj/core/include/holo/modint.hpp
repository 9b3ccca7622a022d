#ifndef HOLO_MODINT_HPP
#define HOLO_MODINT_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <holo/rat.hpp>

namespace holo {

// Residue in [0, p) for an odd prime p that fits a machine word.
// The modulus travels with the value; mixing moduli is an error.
class ModInt {
 public:
  ModInt() : r_(0), p_(0) {}
  ModInt(std::uint64_t r, std::uint64_t p) : r_(r % p), p_(p) {
    if (p < 3) throw std::invalid_argument("ModInt: modulus must be an odd prime >= 3");
  }
  ModInt(const Int& v, std::uint64_t p) : p_(p) {
    if (p < 3) throw std::invalid_argument("ModInt: modulus must be an odd prime >= 3");
    Int m = v % Int(static_cast<unsigned long>(p));
    if (m < 0) m += Int(static_cast<unsigned long>(p));
    r_ = m.get_ui();
  }

  std::uint64_t residue() const { return r_; }
  std::uint64_t modulus() const { return p_; }

  friend ModInt operator+(ModInt a, ModInt b) {
    a.check(b);
    std::uint64_t s = a.r_ + b.r_;
    if (s >= a.p_) s -= a.p_;
    return ModInt::raw(s, a.p_);
  }
  friend ModInt operator-(ModInt a, ModInt b) {
    a.check(b);
    std::uint64_t s = a.r_ >= b.r_ ? a.r_ - b.r_ : a.r_ + a.p_ - b.r_;
    return ModInt::raw(s, a.p_);
  }
  friend ModInt operator*(ModInt a, ModInt b) {
    a.check(b);
    auto prod = static_cast<unsigned __int128>(a.r_) * b.r_;
    return ModInt::raw(static_cast<std::uint64_t>(prod % a.p_), a.p_);
  }
  ModInt operator-() const { return raw(r_ == 0 ? 0 : p_ - r_, p_); }

  ModInt inv() const {
    // extended Euclid; p prime so any nonzero residue is invertible
    if (r_ == 0) throw std::domain_error("ModInt: inverse of zero");
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(r_);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return raw(static_cast<std::uint64_t>(t), p_);
  }
  friend ModInt operator/(ModInt a, ModInt b) { return a * b.inv(); }

  friend bool operator==(const ModInt& a, const ModInt& b) {
    return a.r_ == b.r_ && a.p_ == b.p_;
  }

 private:
  static ModInt raw(std::uint64_t r, std::uint64_t p) {
    ModInt m;
    m.r_ = r;
    m.p_ = p;
    return m;
  }
  void check(const ModInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("ModInt: modulus mismatch");
  }
  std::uint64_t r_;
  std::uint64_t p_;
};

// image of a rational mod p (fails if the denominator vanishes mod p)
inline ModInt mod_image(const Rat& q, std::uint64_t p) {
  ModInt num(q.get_num(), p);
  ModInt den(q.get_den(), p);
  return num / den;
}

// default word-size primes for modular runs; configurable at call sites
std::vector<std::uint64_t> default_primes(int count = 4, bool portable_31bit = false);

}  // namespace holo

#endif
