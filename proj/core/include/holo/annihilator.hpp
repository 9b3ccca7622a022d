#ifndef HOLO_ANNIHILATOR_HPP
#define HOLO_ANNIHILATOR_HPP

#include <iosfwd>
#include <set>

#include <holo/groebner.hpp>

namespace holo {

// inclusive integer box, one [lo, hi] range per variable
struct Box {
  std::vector<long> lo, hi;

  std::size_t arity() const { return lo.size(); }
  bool contains(const Point& p) const;
  static Box cube(std::size_t arity, long lo, long hi);
};

// Gröbner basis of the annihilator plus the initial values needed to pin the
// sequence down: one value per monomial under the stairs and one per point
// where the recurrences do not apply.
struct DFiniteDescription {
  GroebnerBasis basis;
  SequenceTable initial_values;
  std::vector<Point> exceptional_points;
};

// leading coefficient of g after clearing coefficient denominators; this is
// the polynomial whose zeros block the recurrence
MPoly cleared_lead_coeff(const OreOperator& g, const TermOrder& order);

// points of the region where every basis element's cleared leading
// coefficient vanishes, so no recurrence can be applied there
std::set<Point> singular_points(const GroebnerBasis& G, const Box& region);

// candidate analysis of a single cleared leading coefficient over lo + N^d:
// integer roots of the content give whole case lines, the primitive part is
// scanned line by line for its nonnegative integer zeros
struct SingularityCandidates {
  std::vector<std::set<long>> case_lines;  // per variable, lines var = value
  std::set<Point> points;                  // zeros of the primitive part
};
SingularityCandidates singularity_candidates(const MPoly& lead, const Point& lo);

// extend the stored initial values over a box by running the recurrences;
// points that stay unreachable are simply absent from the result
SequenceTable unroll(const DFiniteDescription& D, const Box& box);

// closure properties; each returns a description whose initial values are
// derived by unrolling the inputs over value_box
DFiniteDescription closure_apply_operator(const DFiniteDescription& D, const OreOperator& L,
                                          long value_box = 24);
DFiniteDescription closure_sum(const DFiniteDescription& a, const DFiniteDescription& b,
                               long value_box = 24);
// substitution var0 -> var1 + c on a bivariate description; the result
// describes the diagonal g(n) = f(n + c, n)
DFiniteDescription closure_substitute(const DFiniteDescription& D, long c,
                                      long value_box = 24);

// hypergeometric term given by its shift quotients h(x+e_i)/h(x) and one
// anchor value
struct HypergeometricTerm {
  std::vector<RatFun> quotients;
  Point base;
  Rat base_value;
};
SequenceTable hypergeometric_table(const HypergeometricTerm& h, const Box& box);
DFiniteDescription closure_product_hypergeometric(const DFiniteDescription& D,
                                                  const HypergeometricTerm& h,
                                                  long value_box = 24);

// attach initial values (under the stairs plus singular points) from a table
DFiniteDescription make_description(GroebnerBasis basis, const SequenceTable& values,
                                    long search_box = 24);

struct ProofReport {
  bool reduced = false;      // one basis lies in the ideal of the other
  std::string direction;     // "left-by-right" or "right-by-left"
  std::vector<Point> compared;
  std::vector<Point> mismatches;
  std::set<Point> singular;  // of the common description inside the region
  bool proved = false;
  std::string detail;
};

// proves the two described sequences equal on the region: a common
// annihilator via reduction to zero, then value agreement on the points the
// recurrences cannot reach
ProofReport prove_equal(const DFiniteDescription& L, const DFiniteDescription& R,
                        const Box& region);

void write_description(std::ostream& out, const DFiniteDescription& D);
DFiniteDescription read_description(std::istream& in, const OreAlgebra& alg);

}  // namespace holo

#endif
