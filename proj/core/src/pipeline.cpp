#include <holo/tspp.hpp>

#include <holo/guess.hpp>

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace holo {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const OreAlgebra& alg_jn() {
  static OreAlgebra a{{"j", "n"}};
  return a;
}

const OreAlgebra& alg_n() {
  static OreAlgebra a{{"n"}};
  return a;
}

SequenceTable binomial_table(long size) {
  SequenceTable t(2);
  for (long n = 0; n <= size; ++n)
    for (long j = 0; j <= size; ++j) t.set({j, n}, Rat(binomial(n, j)));
  return t;
}

SequenceTable geometric_table(const Rat& scale, long ratio, long up_to) {
  SequenceTable t(1);
  Rat v = scale;
  for (long n = 0; n <= up_to; ++n) {
    t.set({n}, v);
    v *= ratio;
  }
  return t;
}

DFiniteDescription univariate_description(const std::string& op_text,
                                          const SequenceTable& values) {
  GroebnerBasis G = left_groebner_basis({parse_operator(op_text, alg_n())}, TermOrder{});
  return make_description(std::move(G), values);
}

// the first basis element's leading coefficient of the full-scale cofactor
// annihilator, recorded from a completed full-scale run; its nonnegative
// integer zeros are the points the recurrences cannot reach
MPoly reference_lead_coeff() {
  std::vector<std::string> vars = {"j", "n"};
  MPoly n = MPoly::variable(vars, "n");
  MPoly j = MPoly::variable(vars, "j");
  auto c = [&](long v) { return MPoly::constant(vars, Rat(v)); };
  return (n - c(3)).pow(2) * (n - c(2)) * (n - c(1)).pow(2) * (c(2) * n - c(3)).pow(2) *
         (c(2) * n - c(1)) * (j + n - c(1)) * (j + n);
}

// thrown by a stage body to mark itself SKIPPED-CAP with a note
struct CapNote : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StageRunner {
  CheckReport& rep;
  const PipelineConfig& cfg;
  Clock::time_point t0 = Clock::now();
  bool blocked = false;  // an earlier required stage did not complete

  // runs fn inside a stage record; fn returns (ok, detail); exceptions and
  // exhausted budgets become explicit statuses, never silence
  void stage(const std::string& name, long n,
             const std::function<std::pair<bool, std::string>()>& fn,
             bool needs_previous = true) {
    CheckRecord rec{name, n, -1, CheckStatus::ok, ""};
    if (blocked && needs_previous) {
      rec.status = CheckStatus::skipped_cap;
      rec.detail = "requires a stage that was not completed at this scale";
      rep.checks.push_back(std::move(rec));
      return;
    }
    if (seconds_since(t0) > cfg.cap_seconds) {
      rec.status = CheckStatus::skipped_cap;
      rec.detail = "wall-clock budget exhausted before this stage";
      blocked = blocked || needs_previous;
      rep.checks.push_back(std::move(rec));
      return;
    }
    try {
      auto [ok, detail] = fn();
      rec.status = ok ? CheckStatus::ok : CheckStatus::fail;
      rec.detail = std::move(detail);
      if (!ok) blocked = true;
    } catch (const CapNote& e) {
      rec.status = CheckStatus::skipped_cap;
      rec.detail = e.what();
      blocked = true;
    } catch (const std::exception& e) {
      rec.status = CheckStatus::fail;
      rec.detail = std::string("exception: ") + e.what();
      blocked = true;
    }
    rep.checks.push_back(std::move(rec));
  }

  void skip(const std::string& name, long n, const std::string& why) {
    rep.checks.push_back({name, n, -1, CheckStatus::skipped_cap, why});
  }
};

std::pair<bool, std::string> singularity_reference_check() {
  auto cand = singularity_candidates(reference_lead_coeff(), {0, 0});
  bool ok = cand.points == std::set<Point>{{0, 0}, {1, 0}, {0, 1}} &&
            cand.case_lines[1] == std::set<long>{1, 2, 3} && cand.case_lines[0].empty();
  std::ostringstream d;
  d << "candidate points:";
  for (const auto& p : cand.points) d << " (" << p[0] << "," << p[1] << ")";
  d << "; case lines n =";
  for (long v : cand.case_lines[1]) d << " " << v;
  return {ok, d.str()};
}

CheckReport toy_pipeline(const PipelineConfig& cfg) {
  CheckReport rep;
  StageRunner run{rep, cfg};
  long size = cfg.table_size;

  SequenceTable table(2);
  run.stage("table", size, [&]() -> std::pair<bool, std::string> {
    std::size_t cells = static_cast<std::size_t>(size + 1) * (size + 1);
    if (cells * 64 > cfg.cap_bytes) return {false, "table estimate exceeds the byte cap"};
    table = binomial_table(size);
    return {true, std::to_string(table.values().size()) + " summand values"};
  });

  std::vector<OreOperator> ops;
  run.stage("guess", size, [&]() -> std::pair<bool, std::string> {
    GuessProblem in_j{alg_jn(), table, {{0, 0}, {1, 0}}, 1};
    GuessProblem in_n{alg_jn(), table, {{0, 0}, {0, 1}}, 1};
    for (auto& o : guess_recurrences(in_j)) ops.push_back(std::move(o));
    for (auto& o : guess_recurrences(in_n)) ops.push_back(std::move(o));
    if (ops.size() < 2) return {false, "expected two first-order candidates"};
    std::string d;
    for (const auto& o : ops) d += (d.empty() ? "" : "; ") + o.str();
    return {true, d};
  });

  GroebnerBasis G;
  run.stage("basis", size, [&]() -> std::pair<bool, std::string> {
    G = left_groebner_basis(ops, TermOrder{});
    auto st = staircase(G);
    if (!st.dfinite) return {false, "staircase is not finite"};
    return {true, std::to_string(st.under_the_stairs.size()) + " standard monomials"};
  });

  run.stage("singularities", size, [&]() -> std::pair<bool, std::string> {
    auto pts = singular_points(G, Box::cube(2, 0, 60));
    if (!pts.empty()) return {false, std::to_string(pts.size()) + " unreachable points"};
    return {true, "no common leading-coefficient zeros in the region"};
  });

  DFiniteDescription D;
  run.stage("diagonal-normalization-proof", size, [&]() -> std::pair<bool, std::string> {
    D = make_description(G, table);
    auto diag = closure_substitute(D, 0);  // the diagonal C(n,n) = 1
    auto one = univariate_description("Sn - 1", geometric_table(1, 1, 20));
    auto pr = prove_equal(diag, one, Box::cube(1, 0, 16));
    return {pr.proved, pr.detail};
  });

  run.stage("sum-identity-proof", size, [&]() -> std::pair<bool, std::string> {
    // sum_j C(n,j) 2^j = 3^n by telescoping, then the two-piece sum
    // 2^n + 3^n against its directly constructed annihilator
    HypergeometricTerm h{{RatFun::constant(alg_jn().vars, 2), RatFun::constant(alg_jn().vars, 1)},
                         {0, 0},
                         1};
    auto Dw = closure_product_hypergeometric(D, h);
    auto cert = telescope_search(Dw, 2);
    if (!cert) return {false, "no telescoper within the shape schedule"};
    OreOperator rec = sum_recurrence(*cert, true);
    auto D3 = univariate_description(rec.str(), geometric_table(1, 3, 20));
    auto D2 = univariate_description("Sn - 2", geometric_table(1, 2, 20));
    auto Dsum = closure_sum(D2, D3);
    SequenceTable both(1);
    Rat a = 1, b = 1;
    for (long n = 0; n <= 20; ++n, a *= 2, b *= 3) both.set({n}, a + b);
    auto target = univariate_description("Sn^2 - 5*Sn + 6", both);
    auto pr = prove_equal(Dsum, target, Box::cube(1, 0, 16));
    return {pr.proved, "telescoper " + cert->P.str() + "; " + pr.detail};
  });

  run.stage("row-relation-proof", size, [&]() -> std::pair<bool, std::string> {
    // two independent routes to the principal part must agree, then an
    // operator application identity with trapezoid-style initial values
    auto cert = telescope_ansatz(D, AnsatzShape::triangle(1, 1, 1));
    if (!cert) return {false, "ansatz route found no certificate"};
    std::string diag;
    auto E = telescope_eliminate(D, cfg.elim_caps, &diag);
    if (!E) return {false, "elimination route hit caps: " + diag};
    auto [Pe, Qe] = delta_decompose(*E);
    GroebnerBasis Ga = left_groebner_basis({cert->P}, TermOrder{});
    GroebnerBasis Ge = left_groebner_basis({Pe}, TermOrder{});
    if (!normal_form(Pe, Ga).is_zero() || !normal_form(cert->P, Ge).is_zero())
      return {false, "principal parts disagree: " + cert->P.str() + " vs " + Pe.str()};
    auto D2 = univariate_description("Sn - 2", geometric_table(1, 2, 20));
    auto applied = closure_apply_operator(D2, parse_operator("1 - 2*Sn", alg_n()));
    auto target = univariate_description("Sn - 2", geometric_table(-3, 2, 20));
    auto pr = prove_equal(applied, target, Box::cube(1, 0, 16));
    return {pr.proved, pr.detail};
  });

  return rep;
}

CheckReport full_pipeline(const PipelineConfig& cfg) {
  CheckReport rep;
  StageRunner run{rep, cfg};
  long size = cfg.table_size;

  SequenceTable table(2);
  run.stage("table", size, [&]() -> std::pair<bool, std::string> {
    std::size_t cells = static_cast<std::size_t>(size) * (size + 1) / 2;
    if (cells * 256 > cfg.cap_bytes) return {false, "table estimate exceeds the byte cap"};
    table = cofactor_table(static_cast<int>(size));
    return {true, std::to_string(table.values().size()) + " cofactor values"};
  });

  std::vector<OreOperator> ops;
  run.stage("guess", size, [&]() -> std::pair<bool, std::string> {
    // desk-size shapes only; the actual annihilator has far larger supports
    // and coefficient degrees, so an empty result here is the expected
    // outcome and is reported as such by the caller below
    std::vector<std::vector<ShiftMonomial>> structures = {
        {{0, 0}, {1, 0}},
        {{0, 0}, {0, 1}},
        {{0, 0}, {1, 0}, {0, 1}},
        {{0, 0}, {1, 0}, {0, 1}, {1, 1}},
        {{0, 0}, {1, 0}, {2, 0}},
        {{0, 0}, {0, 1}, {0, 2}},
    };
    int shapes_tried = 0;
    bool out_of_time = false;
    for (const auto& s : structures)
      for (int deg = 1; deg <= 3 && !out_of_time; ++deg) {
        if (seconds_since(run.t0) > cfg.cap_seconds) {
          out_of_time = true;
          break;
        }
        ++shapes_tried;
        try {
          GuessProblem gp{alg_jn(), table, s, deg};
          for (auto& o : guess_recurrences(gp)) ops.push_back(std::move(o));
        } catch (const std::runtime_error&) {
          // not enough data for this shape at this table size
        }
      }
    if (ops.empty())
      throw CapNote(std::to_string(shapes_tried) +
                    " desk-size shapes fit nothing; the full annihilator "
                    "needs supports and degrees beyond this scale" +
                    (out_of_time ? " (budget ran out mid-schedule)" : ""));
    std::string d;
    for (const auto& o : ops) d += (d.empty() ? "" : "; ") + o.str();
    return {true, d};
  });

  run.stage("basis", size, [&]() -> std::pair<bool, std::string> {
    auto G = left_groebner_basis(ops, TermOrder{});
    auto st = staircase(G);
    return {st.dfinite, st.dfinite ? "finite staircase" : "staircase is not finite"};
  });

  // independent of the guessing outcome: the recorded full-scale leading
  // coefficient and the points it rules out
  run.stage("singularities", size, singularity_reference_check, false);

  const char* why = "needs the full-scale annihilator; not completed at this scale";
  run.skip("diagonal-normalization-proof", size, why);
  run.skip("sum-identity-proof", size, why);
  run.skip("row-relation-proof", size, why);
  return rep;
}

}  // namespace

CheckReport run_proof_pipeline(const PipelineConfig& cfg) {
  return cfg.scale == PipelineScale::toy ? toy_pipeline(cfg) : full_pipeline(cfg);
}

}  // namespace holo
