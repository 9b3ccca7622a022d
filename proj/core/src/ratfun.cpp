#include <holo/ratfun.hpp>

#include <stdexcept>

namespace holo {

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.vars() != den_.vars())
    throw std::invalid_argument("RatFun: variable lists differ");
  if (den_.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.vars(), 1);
    return;
  }
  MPoly g = poly_gcd(num_, den_);
  if (!(g.is_constant() && g.constant_value() == 1)) {
    num_ = poly_divexact(num_, g);
    den_ = poly_divexact(den_, g);
  }
  // normalize denominator: integer-primitive, positive leading coefficient
  MPoly dn = poly_normalize(den_);
  // den_ = dn * s for a rational scalar s; divide num_ by s as well
  Rat s = den_.lead_coeff() / dn.lead_coeff();
  den_ = dn;
  num_ = num_ * (1 / s);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::inv() const {
  if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
  return RatFun(den_, num_);
}

Rat RatFun::evaluate(const std::vector<Rat>& point) const {
  Rat d = den_.evaluate(point);
  if (d == 0) throw std::domain_error("RatFun: denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

RatFun RatFun::eval_partial(std::size_t var_index, const Rat& value) const {
  MPoly d = den_.eval_partial(var_index, value);
  if (d.is_zero())
    throw std::domain_error("RatFun: denominator vanishes under insertion");
  return RatFun(num_.eval_partial(var_index, value), d);
}

RatFun RatFun::shift_var(std::size_t var_index, long c) const {
  return RatFun(num_.shift_var(var_index, c), den_.shift_var(var_index, c));
}

RatFun RatFun::subst_var(std::size_t var_index, std::size_t target_index, long c) const {
  MPoly d = den_.subst_var(var_index, target_index, c);
  if (d.is_zero())
    throw std::domain_error("RatFun: denominator vanishes under substitution");
  return RatFun(num_.subst_var(var_index, target_index, c), d);
}

RatFun RatFun::embed(const std::vector<std::string>& vars) const {
  return RatFun(num_.embed(vars), den_.embed(vars));
}

std::string RatFun::str() const {
  if (is_polynomial()) {
    Rat dc = den_.constant_value();
    if (dc == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace holo
