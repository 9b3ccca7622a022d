#include <benchmark/benchmark.h>

#include <holo/guess.hpp>
#include <holo/telescope.hpp>
#include <holo/tspp.hpp>

using namespace holo;

namespace {

const OreAlgebra& alg_jn() {
  static OreAlgebra a{{"j", "n"}};
  return a;
}

GroebnerBasis pascal_basis() {
  return left_groebner_basis({parse_operator("(j+1)*Sj - (n-j)", alg_jn()),
                              parse_operator("(n+1-j)*Sn - (n+1)", alg_jn())},
                             TermOrder{});
}

SequenceTable binomial_table(long size) {
  SequenceTable t(2);
  for (long n = 0; n <= size; ++n)
    for (long j = 0; j <= size; ++j) t.set({j, n}, Rat(binomial(n, j)));
  return t;
}

void bm_okada_det(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(okada_det(n));
}

void bm_cofactor_row(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cofactor_row(n));
}

void bm_op_mul(benchmark::State& state) {
  auto a = parse_operator("(n+1)*Sn^2*Sj - (4*n+2)*Sn + (j^2+1)", alg_jn());
  auto b = parse_operator("(j+1)*Sj^2 - (n-j)*Sn + 3", alg_jn());
  for (auto _ : state) benchmark::DoNotOptimize(op_mul(a, b));
}

void bm_normal_form(benchmark::State& state) {
  auto G = pascal_basis();
  int d = static_cast<int>(state.range(0));
  ShiftMonomial m = {d, d};
  auto p = OreOperator::monomial_op(alg_jn(), m, RatFun::constant(alg_jn().vars, 1));
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(p, G));
}

void bm_groebner(benchmark::State& state) {
  std::vector<OreOperator> gens = {parse_operator("Sj*Sn - Sj - 1", alg_jn()),
                                   parse_operator("Sj^2 - 2*Sj*Sn + 1", alg_jn())};
  for (auto _ : state) benchmark::DoNotOptimize(left_groebner_basis(gens, TermOrder{}));
}

void bm_guess(benchmark::State& state) {
  auto t = binomial_table(12);
  GuessProblem gp{alg_jn(), t, {{0, 0}, {1, 0}, {0, 1}}, 1};
  for (auto _ : state) benchmark::DoNotOptimize(guess_recurrences(gp));
}

void bm_telescope(benchmark::State& state) {
  auto D = make_description(pascal_basis(), binomial_table(24));
  auto shape = AnsatzShape::triangle(1, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(telescope_ansatz(D, shape));
}

void bm_enumerate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_tspp_bruteforce(n));
}

}  // namespace

BENCHMARK(bm_okada_det)->Arg(10)->Arg(20)->Arg(30);
BENCHMARK(bm_cofactor_row)->Arg(10)->Arg(20);
BENCHMARK(bm_op_mul);
BENCHMARK(bm_normal_form)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(bm_groebner);
BENCHMARK(bm_guess);
BENCHMARK(bm_telescope);
BENCHMARK(bm_enumerate)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
