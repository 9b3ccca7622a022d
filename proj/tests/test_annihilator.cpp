#include <doctest.h>

#include <sstream>

#include <holo/annihilator.hpp>

#include "test_util.hpp"

using namespace holo;

namespace {

const OreAlgebra& alg_n() {
  static OreAlgebra a{{"n"}};
  return a;
}

const OreAlgebra& alg_jn() {
  static OreAlgebra a{{"j", "n"}};
  return a;
}

GroebnerBasis basis_of(std::initializer_list<const char*> ops, const OreAlgebra& alg) {
  std::vector<OreOperator> gens;
  for (const char* s : ops) gens.push_back(parse_operator(s, alg));
  return left_groebner_basis(std::move(gens), TermOrder{});
}

SequenceTable binomial_table(long size) {
  SequenceTable t(2);
  for (long n = 0; n <= size; ++n)
    for (long j = 0; j <= size; ++j) t.set({j, n}, Rat(binomial(n, j)));
  return t;
}

// rows of the Pascal triangle indexed by (j, n) -> binom(n+j, j)
SequenceTable pascal_rows_table(long size) {
  SequenceTable t(2);
  for (long n = 0; n <= size; ++n)
    for (long j = 0; j <= size; ++j) t.set({j, n}, Rat(binomial(n + j, j)));
  return t;
}

SequenceTable geometric_table(long ratio, long up_to) {
  SequenceTable t(1);
  Rat v = 1;
  for (long n = 0; n <= up_to; ++n) {
    t.set({n}, v);
    v *= ratio;
  }
  return t;
}

SequenceTable fibonacci_table(long up_to) {
  SequenceTable t(1);
  Rat a = 0, b = 1;
  for (long n = 0; n <= up_to; ++n) {
    t.set({n}, a);
    Rat c = a + b;
    a = b;
    b = c;
  }
  return t;
}

DFiniteDescription geometric_description(long ratio) {
  return make_description(
      basis_of({("Sn - " + std::to_string(ratio)).c_str()}, alg_n()), geometric_table(ratio, 4));
}

DFiniteDescription fibonacci_description() {
  return make_description(basis_of({"Sn^2 - Sn - 1"}, alg_n()), fibonacci_table(4));
}

DFiniteDescription pascal_description() {
  return make_description(basis_of({"(j+1)*Sj - (n-j)", "(n+1-j)*Sn - (n+1)"}, alg_jn()),
                          binomial_table(3));
}

// applies every basis element to the table everywhere it is defined
void check_annihilates(const GroebnerBasis& G, const SequenceTable& t) {
  int checked = 0;
  for (const auto& g : G.elements) {
    for (const auto& [p, v] : t.values()) {
      bool in_range = true;
      for (const auto& [m, c] : g.terms()) {
        Point q = p;
        for (std::size_t i = 0; i < q.size(); ++i) q[i] += m[i];
        if (!t.has(q)) { in_range = false; break; }
      }
      if (!in_range) continue;
      Rat applied;
      try {
        applied = op_apply(g, t, p);
      } catch (const std::domain_error&) {
        continue;  // a coefficient pole; nothing to check here
      }
      CHECK(applied == 0);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

}  // namespace

TEST_CASE("cleared leading coefficient recovers the polynomial form") {
  auto G = basis_of({"(n+1-j)*Sn - (n+1)"}, alg_jn());
  MPoly lead = cleared_lead_coeff(G.elements[0], G.order);
  std::vector<std::string> vars = {"j", "n"};
  MPoly expect = MPoly::variable(vars, "n") - MPoly::variable(vars, "j") +
                 MPoly::constant(vars, 1);
  CHECK(lead == poly_normalize(expect));
}

TEST_CASE("singular points: unit leading coefficient has none") {
  auto G = basis_of({"Sn - 2"}, alg_n());
  CHECK(singular_points(G, Box::cube(1, 0, 50)).empty());
}

TEST_CASE("singular points: single vanishing line in one variable") {
  auto G = basis_of({"(n-5)*Sn - 1"}, alg_n());
  auto s = singular_points(G, Box::cube(1, 0, 10));
  REQUIRE(s.size() == 1);
  CHECK(*s.begin() == Point{5});
}

TEST_CASE("singular points need all leading coefficients to vanish") {
  auto G = basis_of({"(n-5)*Sn - 1", "(j-2)*Sj - 1"}, alg_jn());
  auto s = singular_points(G, Box::cube(2, 0, 10));
  REQUIRE(s.size() == 1);
  CHECK(*s.begin() == Point{2, 5});

  // superset check: everywhere else some leading coefficient is nonzero
  std::vector<MPoly> leads;
  for (const auto& g : G.elements) leads.push_back(cleared_lead_coeff(g, G.order));
  for (long j = 0; j <= 8; ++j)
    for (long n = 0; n <= 8; ++n) {
      if (s.count({j, n})) continue;
      bool some_nonzero = false;
      for (const auto& L : leads)
        if (L.evaluate({Rat(j), Rat(n)}) != 0) some_nonzero = true;
      CHECK(some_nonzero);
    }
}

TEST_CASE("singular point scan agrees with the line-by-line path") {
  auto G = basis_of({"(n-5)*Sn - 1", "(j-2)*Sj - 1"}, alg_jn());
  Box wide = Box::cube(2, 0, 3000);  // too large for the plain scan
  auto s = singular_points(G, wide);
  REQUIRE(s.size() == 1);
  CHECK(*s.begin() == Point{2, 5});
}

TEST_CASE("singularity candidates on the determinant cofactor leading coefficient") {
  std::vector<std::string> vars = {"j", "n"};
  MPoly n = MPoly::variable(vars, "n");
  MPoly j = MPoly::variable(vars, "j");
  auto c = [&](long v) { return MPoly::constant(vars, Rat(v)); };
  MPoly lead = (n - c(3)).pow(2) * (n - c(2)) * (n - c(1)).pow(2) * (c(2) * n - c(3)).pow(2) *
               (c(2) * n - c(1)) * (j + n - c(1)) * (j + n);

  auto cand = singularity_candidates(lead, {0, 0});
  CHECK(cand.case_lines[1] == std::set<long>{1, 2, 3});
  CHECK(cand.case_lines[0].empty());
  CHECK(cand.points == std::set<Point>{{0, 0}, {1, 0}, {0, 1}});
}

TEST_CASE("unroll reproduces Fibonacci from two initial values") {
  DFiniteDescription D;
  D.basis = basis_of({"Sn^2 - Sn - 1"}, alg_n());
  D.initial_values = SequenceTable(1);
  D.initial_values.set({0}, 0);
  D.initial_values.set({1}, 1);
  auto t = unroll(D, Box::cube(1, 0, 15));
  auto expect = fibonacci_table(15);
  for (long n = 0; n <= 15; ++n) {
    REQUIRE(t.has({n}));
    CHECK(t.at({n}) == expect.at({n}));
  }
}

TEST_CASE("unroll reproduces the binomial table from one initial value") {
  DFiniteDescription D;
  D.basis = basis_of({"(j+1)*Sj - (n-j)", "(n+1-j)*Sn - (n+1)"}, alg_jn());
  D.initial_values = SequenceTable(2);
  D.initial_values.set({0, 0}, 1);
  auto t = unroll(D, Box::cube(2, 0, 9));
  auto expect = binomial_table(9);
  for (long j = 0; j <= 9; ++j)
    for (long n = 0; n <= 9; ++n) {
      REQUIRE(t.has({j, n}));
      CHECK(t.at({j, n}) == expect.at({j, n}));
    }
}

TEST_CASE("apply operator: shift of a geometric sequence") {
  auto D = geometric_description(2);
  auto out = closure_apply_operator(D, parse_operator("Sn", alg_n()));
  REQUIRE(out.basis.elements.size() == 1);
  CHECK(out.basis.elements[0] == parse_operator("Sn - 2", alg_n()));
  CHECK(out.initial_values.at({0}) == 2);  // the shifted sequence 2^(n+1)
}

TEST_CASE("apply operator: Fibonacci shifted twice satisfies the same recurrence") {
  auto D = fibonacci_description();
  auto out = closure_apply_operator(D, parse_operator("Sn^2", alg_n()));
  REQUIRE(out.basis.elements.size() == 1);
  CHECK(out.basis.elements[0] == parse_operator("Sn^2 - Sn - 1", alg_n()));
  SequenceTable shifted(1);
  auto fib = fibonacci_table(20);
  for (long n = 0; n <= 18; ++n) shifted.set({n}, fib.at({n + 2}));
  check_annihilates(out.basis, shifted);
}

TEST_CASE("apply operator on the binomial description") {
  auto D = pascal_description();
  auto L = parse_operator("1 - 2*Sj", alg_jn());
  auto out = closure_apply_operator(D, L);
  auto sc_in = staircase(D.basis);
  auto sc_out = staircase(out.basis);
  REQUIRE(sc_out.dfinite);
  CHECK(sc_out.under_the_stairs.size() <= sc_in.under_the_stairs.size());

  SequenceTable t(2);
  for (long n = 0; n <= 12; ++n)
    for (long j = 0; j <= 11; ++j)
      t.set({j, n}, Rat(binomial(n, j)) - 2 * Rat(binomial(n, j + 1)));
  check_annihilates(out.basis, t);
}

TEST_CASE("sum closure: 2^n plus 3^n") {
  auto out = closure_sum(geometric_description(2), geometric_description(3));
  REQUIRE(out.basis.elements.size() == 1);
  CHECK(out.basis.elements[0] == parse_operator("Sn^2 - 5*Sn + 6", alg_n()));
  CHECK(out.initial_values.at({0}) == 2);
  CHECK(out.initial_values.at({1}) == 5);
}

TEST_CASE("sum closure with the zero sequence changes nothing") {
  auto D = fibonacci_description();
  DFiniteDescription zero;
  OreOperator one = OreOperator::coefficient(alg_n(), RatFun::constant({"n"}, 1));
  zero.basis = left_groebner_basis({one}, TermOrder{});
  zero.initial_values = SequenceTable(1);
  auto out = closure_sum(D, zero);
  REQUIRE(out.basis.elements.size() == 1);
  CHECK(out.basis.elements[0] == D.basis.elements[0]);
}

TEST_CASE("sum closure: Fibonacci plus one has order three") {
  auto D = fibonacci_description();
  DFiniteDescription ones;
  ones.basis = basis_of({"Sn - 1"}, alg_n());
  ones.initial_values = SequenceTable(1);
  ones.initial_values.set({0}, 1);
  auto out = closure_sum(D, ones);
  auto sc = staircase(out.basis);
  REQUIRE(sc.dfinite);
  CHECK(sc.under_the_stairs.size() == 3);
  SequenceTable t(1);
  auto fib = fibonacci_table(20);
  for (long n = 0; n <= 20; ++n) t.set({n}, fib.at({n}) + 1);
  check_annihilates(out.basis, t);
}

TEST_CASE("substitution: diagonal of the Pascal triangle rows is the central binomial") {
  auto D = make_description(basis_of({"(j+1)*Sj - (n+j+1)", "(n+1)*Sn - (n+j+1)"}, alg_jn()),
                            pascal_rows_table(3));
  auto out = closure_substitute(D, 0);
  auto central = basis_of({"(n+1)*Sn - (4*n+2)"}, alg_n());
  for (const auto& g : out.basis.elements) CHECK(normal_form(g, central).is_zero());

  SequenceTable t(1);
  for (long n = 0; n <= 15; ++n) t.set({n}, Rat(binomial(2 * n, n)));
  check_annihilates(out.basis, t);
  CHECK(out.initial_values.at({0}) == 1);
}

TEST_CASE("substitution j -> n-1 on the binomial description gives the sequence n") {
  auto D = pascal_description();
  auto out = closure_substitute(D, -1);
  SequenceTable t(1);
  for (long n = 0; n <= 15; ++n) t.set({n}, Rat(n));  // binom(n, n-1) = n
  check_annihilates(out.basis, t);
}

TEST_CASE("substitution on the constant description") {
  DFiniteDescription ones;
  ones.basis = basis_of({"Sj - 1", "Sn - 1"}, alg_jn());
  ones.initial_values = SequenceTable(2);
  ones.initial_values.set({0, 0}, 1);
  for (long c : {0L, 2L}) {
    auto out = closure_substitute(ones, c);
    REQUIRE(out.basis.elements.size() == 1);
    CHECK(out.basis.elements[0] == parse_operator("Sn - 1", alg_n()));
  }
}

namespace {

// coefficient of the identity monomial, used to build quotient certificates
RatFun rf(const char* s) { return parse_operator(s, alg_jn()).terms().begin()->second; }

HypergeometricTerm binomial_hypergeometric() {
  HypergeometricTerm h;
  h.quotients = {rf("n - j") / rf("j + 1"), rf("n + 1") / rf("n + 1 - j")};
  h.base = {0, 0};
  h.base_value = 1;
  return h;
}

// a'(n, j) = binom(n+j-2, n-1) + binom(n+j-1, n), hypergeometric in j and n
HypergeometricTerm a_prime_hypergeometric() {
  HypergeometricTerm h;
  h.quotients = {rf("(2*n + j) * (n + j - 1)") / rf("(2*n + j - 1) * j"),
                 rf("(2*n + j + 1) * (n + j - 1)") / rf("(2*n + j - 1) * (n + 1)")};
  h.base = {1, 1};
  h.base_value = 2;
  return h;
}

Rat a_prime(long n, long j) {
  return Rat(binomial(n + j - 2, n - 1)) + Rat(binomial(n + j - 1, n));
}

}  // namespace

TEST_CASE("hypergeometric table from shift quotients") {
  auto h = a_prime_hypergeometric();
  Box box{{1, 1}, {8, 8}};
  auto t = hypergeometric_table(h, box);
  for (long j = 1; j <= 8; ++j)
    for (long n = 1; n <= 8; ++n) {
      REQUIRE(t.has({j, n}));
      CHECK(t.at({j, n}) == a_prime(n, j));
    }
}

TEST_CASE("product with a hypergeometric term: 1 times binom(n,j)") {
  DFiniteDescription ones;
  ones.basis = basis_of({"Sj - 1", "Sn - 1"}, alg_jn());
  ones.initial_values = SequenceTable(2);
  ones.initial_values.set({0, 0}, 1);
  auto out = closure_product_hypergeometric(ones, binomial_hypergeometric());
  auto pascal = basis_of({"(j+1)*Sj - (n-j)", "(n+1-j)*Sn - (n+1)"}, alg_jn());
  REQUIRE(out.basis.elements.size() == pascal.elements.size());
  for (std::size_t i = 0; i < pascal.elements.size(); ++i)
    CHECK(out.basis.elements[i] == pascal.elements[i]);
}

TEST_CASE("product closure: binom(n,j) squared") {
  auto D = pascal_description();
  auto out = closure_product_hypergeometric(D, binomial_hypergeometric());
  // twisting keeps the staircase shape
  auto in_lms = D.basis.lead_monomials();
  auto out_lms = out.basis.lead_monomials();
  CHECK(in_lms == out_lms);
  SequenceTable t(2);
  for (long n = 0; n <= 12; ++n)
    for (long j = 0; j <= 12; ++j) t.set({j, n}, Rat(binomial(n, j)) * Rat(binomial(n, j)));
  check_annihilates(out.basis, t);
}

TEST_CASE("product closure against the matrix-entry term") {
  DFiniteDescription ones;
  ones.basis = basis_of({"Sj - 1", "Sn - 1"}, alg_jn());
  ones.initial_values = SequenceTable(2);
  ones.initial_values.set({1, 1}, 1);
  auto out = closure_product_hypergeometric(ones, a_prime_hypergeometric());
  SequenceTable t(2);
  for (long n = 1; n <= 10; ++n)
    for (long j = 1; j <= 10; ++j) t.set({j, n}, a_prime(n, j));
  check_annihilates(out.basis, t);
}

TEST_CASE("prove_equal on identical descriptions") {
  auto D = fibonacci_description();
  auto rep = prove_equal(D, D, Box::cube(1, 0, 30));
  CHECK(rep.reduced);
  CHECK(rep.proved);
}

TEST_CASE("prove_equal rejects distinct sequences") {
  auto rep = prove_equal(geometric_description(2), geometric_description(3),
                         Box::cube(1, 0, 30));
  CHECK(!rep.reduced);
  CHECK(!rep.proved);
}

TEST_CASE("prove_equal rejects equal recurrences with different initial values") {
  auto a = geometric_description(2);
  DFiniteDescription b = a;
  b.initial_values = SequenceTable(1);
  b.initial_values.set({0}, 3);  // 3 * 2^n
  auto rep = prove_equal(a, b, Box::cube(1, 0, 30));
  CHECK(rep.reduced);
  CHECK(!rep.proved);
  CHECK(!rep.mismatches.empty());
}

TEST_CASE("prove_equal: diagonal of the constant-1 table equals the constant sequence") {
  DFiniteDescription ones2;
  ones2.basis = basis_of({"Sj - 1", "Sn - 1"}, alg_jn());
  ones2.initial_values = SequenceTable(2);
  ones2.initial_values.set({0, 0}, 1);
  auto diag = closure_substitute(ones2, 0);

  DFiniteDescription ones1;
  ones1.basis = basis_of({"Sn - 1"}, alg_n());
  ones1.initial_values = SequenceTable(1);
  ones1.initial_values.set({0}, 1);

  auto rep = prove_equal(diag, ones1, Box::cube(1, 0, 30));
  CHECK(rep.reduced);
  CHECK(rep.proved);
}

TEST_CASE("description serialization round-trip") {
  auto D = pascal_description();
  D.exceptional_points.push_back({3, 7});
  D.initial_values.set({3, 7}, make_rat(22, 7));
  std::stringstream ss;
  write_description(ss, D);
  auto E = read_description(ss, alg_jn());
  REQUIRE(E.basis.elements.size() == D.basis.elements.size());
  for (std::size_t i = 0; i < D.basis.elements.size(); ++i)
    CHECK(E.basis.elements[i] == D.basis.elements[i]);
  CHECK(E.initial_values.values() == D.initial_values.values());
  CHECK(E.exceptional_points == D.exceptional_points);
}
