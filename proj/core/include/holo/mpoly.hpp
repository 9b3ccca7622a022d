#ifndef HOLO_MPOLY_HPP
#define HOLO_MPOLY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include <holo/rat.hpp>

namespace holo {

// exponent vector; length always equals the variable count of the owner
using Exp = std::vector<int>;

// Sparse multivariate polynomial over Q with a fixed, ordered variable list.
// The variable order is fixed per session (e.g. i < j < n); binary operations
// require identical variable lists. No zero coefficients are stored.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MPoly constant(std::vector<std::string> vars, const Rat& c);
  static MPoly variable(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exp, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()

  int degree(std::size_t var_index) const;
  int total_degree() const;
  int var_index(const std::string& name) const;  // -1 if absent

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const Rat& c);
  friend MPoly operator*(const Rat& c, const MPoly& a) { return a * c; }
  MPoly& operator+=(const MPoly& b) { *this = *this + b; return *this; }
  MPoly& operator-=(const MPoly& b) { *this = *this - b; return *this; }
  MPoly& operator*=(const MPoly& b) { *this = *this * b; return *this; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MPoly pow(int e) const;

  void add_term(const Exp& e, const Rat& c);

  // full evaluation, one value per variable
  Rat evaluate(const std::vector<Rat>& point) const;
  // substitute one variable by a rational constant; other variables stay
  MPoly eval_partial(std::size_t var_index, const Rat& value) const;
  // var -> var + c (shift action on coefficients)
  MPoly shift_var(std::size_t var_index, long c) const;
  // var -> other variable + c (diagonal-type substitution)
  MPoly subst_var(std::size_t var_index, std::size_t target_index, long c) const;
  // reinterpret over a superset variable list (same names, possibly more)
  MPoly embed(const std::vector<std::string>& vars) const;

  // leading exponent/coefficient under lex on the exponent vectors
  const Exp& lead_exp() const;  // requires nonzero
  const Rat& lead_coeff() const;

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::map<Exp, Rat> terms_;
};

// gcd of a and b (same variable list), normalized integer-primitive with
// positive leading coefficient; poly_gcd(0, b) is normalized b
MPoly poly_gcd(const MPoly& a, const MPoly& b);

// exact division; throws if the division leaves a remainder
MPoly poly_divexact(const MPoly& a, const MPoly& b);

// integer-primitive, positive leading coefficient scalar normalization
MPoly poly_normalize(const MPoly& p);

// content of p with respect to one variable: gcd of its coefficients
MPoly poly_content(const MPoly& p, std::size_t var_index);

// all integer roots of a nonzero univariate polynomial; throws on zero input
std::set<long> integer_roots(const MPoly& p);

}  // namespace holo

#endif
