#include <holo/guess.hpp>

#include <holo/linalg.hpp>
#include <holo/modint.hpp>
#include <holo/reconstruct.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace holo {

namespace {

std::vector<Exp> exponents_up_to(std::size_t arity, int max_deg) {
  std::vector<Exp> out;
  Exp cur(arity, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (i == arity) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= rest; ++e) {
      cur[i] = e;
      rec(i + 1, rest - e);
    }
    cur[i] = 0;
  };
  rec(0, max_deg);
  return out;
}

struct Ansatz {
  std::vector<std::pair<std::size_t, Exp>> unknowns;  // (structure index, coeff exponent)
  std::vector<Point> train, holdout;
};

Ansatz build_ansatz(const GuessProblem& gp) {
  Ansatz a;
  for (std::size_t s = 0; s < gp.structure_set.size(); ++s) {
    if (gp.structure_set[s].size() != gp.alg.arity())
      throw std::invalid_argument("guess: structure monomial arity mismatch");
    for (const auto& e : exponents_up_to(gp.alg.arity(), gp.coeff_degree))
      a.unknowns.emplace_back(s, e);
  }
  // usable points: all shifted values present; every fourth one is held out
  std::size_t idx = 0;
  for (const auto& [p, v] : gp.table.values()) {
    bool usable = true;
    for (const auto& s : gp.structure_set) {
      Point q = p;
      for (std::size_t i = 0; i < q.size(); ++i) q[i] += s[i];
      if (!gp.table.has(q)) { usable = false; break; }
    }
    if (!usable) continue;
    if (idx++ % 4 == 3)
      a.holdout.push_back(p);
    else
      a.train.push_back(p);
  }
  double required = gp.safety_margin * static_cast<double>(a.unknowns.size());
  if (static_cast<double>(a.train.size()) < required)
    throw std::runtime_error("guess: insufficient data for the requested ansatz");
  return a;
}

// matrix entry p^e * f(p + s) for unknown (s, e) at row point p
Rat entry_at(const GuessProblem& gp, const Point& p, const std::pair<std::size_t, Exp>& u) {
  Rat r = 1;
  for (std::size_t i = 0; i < u.second.size(); ++i)
    r *= rat_pow(Rat(p[i]), u.second[i]);
  Point q = p;
  const auto& s = gp.structure_set[u.first];
  for (std::size_t i = 0; i < q.size(); ++i) q[i] += s[i];
  return r * gp.table.at(q);
}

// integer-primitive scaling with a positive coefficient on the leading term
OreOperator assemble(const GuessProblem& gp, const std::vector<Rat>& sol,
                     const std::vector<std::pair<std::size_t, Exp>>& unknowns) {
  std::map<std::size_t, MPoly> coeffs;
  Int num_gcd = 0, den_lcm = 1;
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    if (sol[k] == 0) continue;
    auto it = coeffs.find(unknowns[k].first);
    if (it == coeffs.end()) it = coeffs.emplace(unknowns[k].first, MPoly(gp.alg.vars)).first;
    it->second.add_term(unknowns[k].second, sol[k]);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), sol[k].get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), sol[k].get_den().get_mpz_t());
  }
  OreOperator op(gp.alg);
  if (coeffs.empty()) return op;
  Rat scale = make_rat(den_lcm, num_gcd);
  for (auto& [s, c] : coeffs) op.add_term(gp.structure_set[s], RatFun(c * scale));
  TermOrder ord;
  if (op.lead_coeff(ord).num().lead_coeff() < 0) op = -op;
  return op;
}

}  // namespace

bool verify_guess(const std::vector<OreOperator>& ops, const SequenceTable& table) {
  for (const auto& op : ops) {
    for (const auto& [p, v] : table.values()) {
      bool in_range = true;
      for (const auto& [m, c] : op.terms()) {
        Point q = p;
        for (std::size_t i = 0; i < q.size(); ++i) q[i] += m[i];
        if (!table.has(q)) { in_range = false; break; }
      }
      if (!in_range) continue;
      try {
        if (op_apply(op, table, p) != 0) return false;
      } catch (const std::domain_error&) {
        continue;  // coefficient pole: not evaluable here
      }
    }
  }
  return true;
}

std::vector<OreOperator> guess_recurrences(const GuessProblem& gp) {
  Ansatz a = build_ansatz(gp);
  Matrix<Rat> m(a.train.size(), a.unknowns.size(), Rat(0));
  for (std::size_t r = 0; r < a.train.size(); ++r)
    for (std::size_t c = 0; c < a.unknowns.size(); ++c)
      m.at(r, c) = entry_at(gp, a.train[r], a.unknowns[c]);
  auto vecs = nullspace(m, Rat(1), [](const Rat& x) { return x == 0; });
  std::vector<OreOperator> out;
  for (const auto& v : vecs) {
    OreOperator op = assemble(gp, v, a.unknowns);
    if (op.is_zero()) continue;
    if (verify_guess({op}, gp.table)) out.push_back(std::move(op));
  }
  return out;
}

std::vector<OreOperator> guess_recurrences_modular(const GuessProblem& gp,
                                                   const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) throw std::invalid_argument("guess: no primes supplied");
  Ansatz a = build_ansatz(gp);

  // one nullspace per prime; the rref normalization makes corresponding
  // entries images of the same rationals as long as the free columns agree
  std::vector<std::vector<std::vector<ModInt>>> per_prime;
  std::vector<std::uint64_t> used;
  std::vector<std::size_t> pattern;
  for (std::uint64_t p : primes) {
    Matrix<ModInt> m(a.train.size(), a.unknowns.size(), ModInt(0, p));
    bool lucky = true;
    for (std::size_t r = 0; r < a.train.size() && lucky; ++r)
      for (std::size_t c = 0; c < a.unknowns.size(); ++c) {
        try {
          m.at(r, c) = mod_image(entry_at(gp, a.train[r], a.unknowns[c]), p);
        } catch (const std::domain_error&) {
          lucky = false;  // a table denominator collapses mod p
          break;
        }
      }
    if (!lucky) continue;
    auto is_zero = [](const ModInt& x) { return x.residue() == 0; };
    auto ech = rref(m, is_zero);
    std::vector<std::size_t> pat = ech.pivot_cols;
    // nullspace vectors exactly as in the generic helper, from the rref rows
    std::vector<bool> is_pivot(a.unknowns.size(), false);
    for (std::size_t c : pat) is_pivot[c] = true;
    std::vector<std::vector<ModInt>> vecs;
    for (std::size_t free_col = 0; free_col < a.unknowns.size(); ++free_col) {
      if (is_pivot[free_col]) continue;
      std::vector<ModInt> v(a.unknowns.size(), ModInt(0, p));
      v[free_col] = ModInt(1, p);
      for (std::size_t r = 0; r < pat.size(); ++r) v[pat[r]] = -m.at(r, free_col);
      vecs.push_back(std::move(v));
    }
    if (used.empty()) {
      pattern = pat;
    } else if (pat != pattern) {
      continue;  // rank dropped at this prime
    }
    per_prime.push_back(std::move(vecs));
    used.push_back(p);
  }
  if (used.empty()) throw std::runtime_error("guess: all primes were unlucky");

  std::size_t nvecs = per_prime[0].size();
  std::vector<OreOperator> out;
  for (std::size_t v = 0; v < nvecs; ++v) {
    std::vector<Rat> sol(a.unknowns.size());
    bool ok = true;
    for (std::size_t c = 0; c < a.unknowns.size() && ok; ++c) {
      std::vector<std::pair<Int, Int>> residues;
      for (std::size_t k = 0; k < used.size(); ++k)
        residues.emplace_back(Int(per_prime[k][v][c].residue()), Int(used[k]));
      auto [val, mod] = crt_combine(residues);
      auto q = rational_reconstruct(val, mod);
      if (!q) {
        ok = false;
        break;
      }
      sol[c] = *q;
    }
    if (!ok) throw std::runtime_error("guess: rational reconstruction failed; add primes");
    OreOperator op = assemble(gp, sol, a.unknowns);
    if (op.is_zero()) continue;
    if (verify_guess({op}, gp.table)) out.push_back(std::move(op));
  }
  return out;
}

}  // namespace holo
