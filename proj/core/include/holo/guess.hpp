#ifndef HOLO_GUESS_HPP
#define HOLO_GUESS_HPP

#include <cstdint>

#include <holo/ore.hpp>

namespace holo {

// ansatz for fitting recurrences to table data: one unknown polynomial
// coefficient of total degree <= coeff_degree per structure monomial
struct GuessProblem {
  OreAlgebra alg;
  SequenceTable table;
  std::vector<ShiftMonomial> structure_set;
  int coeff_degree = 0;
  // required ratio of fitted equations to unknowns; a quarter of the usable
  // points is always held out for validation
  double safety_margin = 1.25;
};

// nullspace of the evaluation matrix, one candidate operator per basis
// vector; candidates failing on held-out points are dropped, so every
// returned operator annihilates the whole table wherever it is evaluable
std::vector<OreOperator> guess_recurrences(const GuessProblem& gp);

// same system solved modulo each prime, combined by CRT and rational
// reconstruction; agrees with the exact path on lucky primes
std::vector<OreOperator> guess_recurrences_modular(const GuessProblem& gp,
                                                   const std::vector<std::uint64_t>& primes);

// true iff every operator yields exactly 0 at every table point where all
// shifted values exist and no coefficient denominator vanishes
bool verify_guess(const std::vector<OreOperator>& ops, const SequenceTable& table);

}  // namespace holo

#endif
