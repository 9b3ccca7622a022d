#ifndef HOLO_TELESCOPE_HPP
#define HOLO_TELESCOPE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>

#include <holo/annihilator.hpp>

namespace holo {

// shape of the telescoping ansatz P + (Sj - 1) Q: P of order <= order in Sn
// with coefficients in n, Q supported on Sj^l Sn^m for (l, m) in q_support
// with coefficients polynomial in j of degree <= jdeg over Q(n)
struct AnsatzShape {
  int order = 1;
  int jdeg = 1;
  std::vector<std::pair<int, int>> q_support;

  // q_support = the total-degree triangle l + m <= t
  static AnsatzShape triangle(int order, int jdeg, int t);
  bool empty() const { return order <= 0 && q_support.empty(); }
  std::string str() const;
};

struct TelescoperCertificate {
  OreOperator P;      // principal part, free of Sj and of j
  OreOperator Q;      // delta part, reduced to normal form
  AnsatzShape shape;  // shape that produced the solution
};

// polynomial ansatz for one fixed shape; per-monomial normal forms are
// cached and reused unless use_cache is off (the slow path exists to check
// the cache); solutions with a j-shift-free part of order zero are useless
// for summation and rejected
std::optional<TelescoperCertificate> telescope_ansatz(const DFiniteDescription& D,
                                                      const AnsatzShape& shape,
                                                      bool use_cache = true);

// deterministic shape schedule: order = 1, 2, ...; support triangle t = order;
// j-degree from the basis coefficient degrees upward
std::optional<TelescoperCertificate> telescope_search(const DFiniteDescription& D,
                                                      int max_order,
                                                      const AnsatzShape* start = nullptr);

// solves the system with n inserted at n0 and coefficients mod prime, then
// drops the unknowns that vanish in the chosen modular solution; returns an
// empty shape when no useful solution exists; an unlucky n0/prime surfaces
// later as an unsolvable pruned exact system, the caller then retries
AnsatzShape modular_support_probe(const DFiniteDescription& D, const AnsatzShape& shape,
                                  long n0, std::uint64_t prime);

// true iff P + (Sj - 1) Q reduces to zero modulo the summand's annihilator
bool verify_telescoper(const TelescoperCertificate& cert, const DFiniteDescription& D);

// the recurrence satisfied by the definite sum over j; with natural
// boundaries the delta part telescopes away, otherwise a textual residue
// description is emitted through boundary_note
OreOperator sum_recurrence(const TelescoperCertificate& cert, bool natural_boundaries,
                           std::string* boundary_note = nullptr);

// resource caps for the elimination method; generous for desk-size inputs,
// tiny compared to what full-scale inputs would need
struct ElimCaps {
  int max_j_degree = 24;
  std::size_t max_basis = 64;
  std::size_t max_terms = 20000;
};

// elimination of the variable j from the annihilator (the slow algorithm):
// Buchberger in Q(n)[j]<Sj,Sn> under a block order with the j-block first;
// returns an ideal element free of j, or absent when the caps are hit
std::optional<OreOperator> telescope_eliminate(const DFiniteDescription& D,
                                               const ElimCaps& caps = {},
                                               std::string* diagnostics = nullptr);

// E = P + (Sj - 1) Q with P free of Sj; P is E with Sj set to one
std::pair<OreOperator, OreOperator> delta_decompose(const OreOperator& E);

// serialization: shape header plus the two operators
void write_certificate(std::ostream& out, const TelescoperCertificate& cert);
TelescoperCertificate read_certificate(std::istream& in, const OreAlgebra& alg);

}  // namespace holo

#endif
