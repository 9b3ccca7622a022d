#ifndef HOLO_ORE_HPP
#define HOLO_ORE_HPP

#include <map>
#include <string>
#include <vector>

#include <holo/ratfun.hpp>
#include <holo/sequence.hpp>

namespace holo {

// Shift Ore algebra Q(x1,...,xd)<Sx1,...,Sxd> with Sx * x = (x+1) * Sx.
// The shift symbol for variable "n" is written "Sn".
struct OreAlgebra {
  std::vector<std::string> vars;

  std::size_t arity() const { return vars.size(); }
  std::string symbol(std::size_t i) const { return "S" + vars[i]; }
  int symbol_index(const std::string& sym) const;  // -1 if unknown
  friend bool operator==(const OreAlgebra& a, const OreAlgebra& b) {
    return a.vars == b.vars;
  }
};

// monomial in the shift symbols: one exponent per symbol
using ShiftMonomial = Exp;

inline int mono_total_degree(const ShiftMonomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline bool mono_divides(const ShiftMonomial& a, const ShiftMonomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ShiftMonomial mono_add(const ShiftMonomial& a, const ShiftMonomial& b) {
  ShiftMonomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ShiftMonomial mono_sub(const ShiftMonomial& a, const ShiftMonomial& b) {
  ShiftMonomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ShiftMonomial mono_lcm(const ShiftMonomial& a, const ShiftMonomial& b) {
  ShiftMonomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

struct TermOrder {
  enum Kind { kDegRevLex, kLex, kBlockElim };
  Kind kind = kDegRevLex;
  // for kBlockElim: symbol indices forming the (heavier) first block
  std::vector<std::size_t> first_block;

  bool less(const ShiftMonomial& a, const ShiftMonomial& b) const;
  bool equal(const ShiftMonomial& a, const ShiftMonomial& b) const { return a == b; }
};

// Noncommutative operator: sparse map monomial -> rational-function coefficient.
class OreOperator {
 public:
  OreOperator() = default;
  explicit OreOperator(OreAlgebra alg) : alg_(std::move(alg)) {}

  static OreOperator coefficient(const OreAlgebra& alg, const RatFun& c);
  static OreOperator shift(const OreAlgebra& alg, std::size_t symbol_index, int power = 1);
  static OreOperator monomial_op(const OreAlgebra& alg, const ShiftMonomial& m,
                                 const RatFun& c);

  const OreAlgebra& algebra() const { return alg_; }
  const std::map<ShiftMonomial, RatFun>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ShiftMonomial& m, const RatFun& c);

  OreOperator operator-() const;
  friend OreOperator operator+(const OreOperator& a, const OreOperator& b);
  friend OreOperator operator-(const OreOperator& a, const OreOperator& b);
  // noncommutative product honoring S^a * f(x) = f(x+a) * S^a
  friend OreOperator operator*(const OreOperator& a, const OreOperator& b);
  OreOperator& operator+=(const OreOperator& b) { *this = *this + b; return *this; }
  OreOperator& operator-=(const OreOperator& b) { *this = *this - b; return *this; }
  OreOperator& operator*=(const OreOperator& b) { *this = *this * b; return *this; }
  friend bool operator==(const OreOperator& a, const OreOperator& b) {
    return a.alg_ == b.alg_ && a.terms_ == b.terms_;
  }

  // left multiplication by a coefficient (no shifting involved)
  OreOperator scaled(const RatFun& c) const;
  // left multiplication by a shift monomial: coefficients get shifted
  OreOperator shifted(const ShiftMonomial& m) const;

  ShiftMonomial lead_monomial(const TermOrder& order) const;  // requires nonzero
  const RatFun& lead_coeff(const TermOrder& order) const;

  // rename algebra variables (and symbols), e.g. Sj -> Si with j -> i-1+c
  OreOperator rename(const OreAlgebra& target,
                     const std::vector<std::size_t>& var_map,
                     const std::vector<long>& offsets) const;

  std::string str() const;

 private:
  OreAlgebra alg_;
  std::map<ShiftMonomial, RatFun> terms_;
};

OreOperator op_mul(const OreOperator& a, const OreOperator& b);

// applies the operator to a table at a point; throws if a needed point is
// missing or a coefficient denominator vanishes there
Rat op_apply(const OreOperator& a, const SequenceTable& f, const Point& at);

// B applied to the whole table (defined wherever all shifts are available)
SequenceTable op_apply_table(const OreOperator& a, const SequenceTable& f);

// text grammar round-trip (see parser.cpp)
OreOperator parse_operator(const std::string& text, const OreAlgebra& alg);
std::vector<OreOperator> parse_operator_list(std::istream& in, const OreAlgebra& alg);

}  // namespace holo

#endif
