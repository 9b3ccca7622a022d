#ifndef HOLO_GROEBNER_HPP
#define HOLO_GROEBNER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>

#include <holo/ore.hpp>

namespace holo {

// Reduced left Groebner basis: monic elements, pairwise non-divisible
// leading monomials.
struct GroebnerBasis {
  std::vector<OreOperator> elements;
  TermOrder order;

  const OreAlgebra& algebra() const { return elements.at(0).algebra(); }
  bool empty() const { return elements.empty(); }
  std::vector<ShiftMonomial> lead_monomials() const;
};

// thrown when an insertion point hits a vanishing denominator or leading
// coefficient; callers retry with a fresh point
struct UnluckyPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// full left normal form: no monomial of the result is divisible by any lm(g)
OreOperator normal_form(OreOperator p, const GroebnerBasis& G);

// normal form under the insertion homomorphism h: insert_var -> n0, applied
// AFTER the shift-monomial multiplication of each reducer (the order matters:
// shifting first preserves the noncommutation with the inserted variable).
// With a prime, rational coefficients are additionally reduced mod p.
OreOperator modular_normal_form(const OreOperator& p, const GroebnerBasis& G,
                                const std::string& insert_var, long n0,
                                std::optional<std::uint64_t> prime = std::nullopt);

// deliberately wrong variant that applies h before shifting; kept as a
// regression witness for the noncommutativity pitfall
OreOperator modular_normal_form_wrong_order(const OreOperator& p, const GroebnerBasis& G,
                                            const std::string& insert_var, long n0);

// insertion homomorphism on a whole operator
OreOperator insert_value(const OreOperator& p, const std::string& var, long n0);
// reduce all rational coefficients of p mod prime (canonical residues)
OreOperator reduce_mod(const OreOperator& p, std::uint64_t prime);

GroebnerBasis left_groebner_basis(std::vector<OreOperator> gens, const TermOrder& order);

OreOperator spolynomial(const OreOperator& f, const OreOperator& g, const TermOrder& order);

struct Staircase {
  std::vector<ShiftMonomial> lead_monomials;
  bool dfinite = false;
  std::vector<ShiftMonomial> under_the_stairs;  // meaningful iff dfinite
};

Staircase staircase(const GroebnerBasis& G);
Staircase staircase_of(const std::vector<ShiftMonomial>& lms, std::size_t arity);

// serialization: "order <name>" header, then one operator per line
void write_basis(std::ostream& out, const GroebnerBasis& G);
GroebnerBasis read_basis(std::istream& in, const OreAlgebra& alg);

}  // namespace holo

#endif
