#ifndef HOLO_RATFUN_HPP
#define HOLO_RATFUN_HPP

#include <holo/mpoly.hpp>

namespace holo {

// Rational function num/den in canonical form: gcd(num, den) = 1 and den
// integer-primitive with positive leading coefficient (lex).
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(MPoly num) : num_(std::move(num)) {
    den_ = MPoly::constant(num_.vars(), 1);
  }
  RatFun(MPoly num, MPoly den);

  static RatFun constant(std::vector<std::string> vars, const Rat& c) {
    return RatFun(MPoly::constant(std::move(vars), c));
  }
  static RatFun variable(std::vector<std::string> vars, const std::string& name) {
    return RatFun(MPoly::variable(std::move(vars), name));
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const std::vector<std::string>& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& b) { *this = *this + b; return *this; }
  RatFun& operator-=(const RatFun& b) { *this = *this - b; return *this; }
  RatFun& operator*=(const RatFun& b) { *this = *this * b; return *this; }
  RatFun& operator/=(const RatFun& b) { *this = *this / b; return *this; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFun inv() const;

  // throws std::domain_error if the denominator vanishes at the point
  Rat evaluate(const std::vector<Rat>& point) const;
  RatFun eval_partial(std::size_t var_index, const Rat& value) const;
  RatFun shift_var(std::size_t var_index, long c) const;
  RatFun subst_var(std::size_t var_index, std::size_t target_index, long c) const;
  RatFun embed(const std::vector<std::string>& vars) const;

  std::string str() const;

 private:
  MPoly num_;
  MPoly den_;
};

}  // namespace holo

#endif
