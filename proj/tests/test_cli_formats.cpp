#include <doctest.h>

#include <holo/annihilator.hpp>
#include <holo/tspp.hpp>

#include <sstream>

#include "test_util.hpp"

using namespace holo;

namespace {

const OreAlgebra& alg_jn() {
  static OreAlgebra a{{"j", "n"}};
  return a;
}

}  // namespace

TEST_CASE("operator text round-trips on 500 random operators") {
  testutil::Rng rng(0x5eed);
  for (int k = 0; k < 500; ++k) {
    OreOperator op = testutil::random_operator(rng, alg_jn(), 3, 4, 2);
    OreOperator back = parse_operator(op.str(), alg_jn());
    CHECK(back == op);
    // printing the parse of a canonical form is the identity on the text too
    CHECK(back.str() == op.str());
  }
}

TEST_CASE("operator list files: comments, blanks, and errors") {
  std::istringstream in(
      "# a comment\n"
      "\n"
      "(j+1)*Sj - (n-j)\n"
      "(n+1-j)*Sn - (n+1)\n");
  auto ops = parse_operator_list(in, alg_jn());
  REQUIRE(ops.size() == 2);
  CHECK(ops[0] == parse_operator("(j+1)*Sj - (n-j)", alg_jn()));

  std::istringstream empty("");
  CHECK(parse_operator_list(empty, alg_jn()).empty());

  std::istringstream bad("Sj - 1\nSn^-1\n");
  try {
    parse_operator_list(bad, alg_jn());
    CHECK(false);
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();  // the position must name line and column
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);
  }
}

TEST_CASE("table files round-trip") {
  SequenceTable t(2);
  t.set({0, 0}, 1);
  t.set({1, 3}, make_rat(10, 3));
  t.set({2, 5}, -7);
  std::ostringstream out;
  t.write(out);
  std::istringstream in(out.str());
  SequenceTable back = SequenceTable::read(in, 2);
  CHECK(back.values() == t.values());
}

TEST_CASE("basis and description files round-trip") {
  auto G = left_groebner_basis({parse_operator("(j+1)*Sj - (n-j)", alg_jn()),
                                parse_operator("(n+1-j)*Sn - (n+1)", alg_jn())},
                               TermOrder{});
  std::ostringstream bout;
  write_basis(bout, G);
  std::istringstream bin(bout.str());
  auto G2 = read_basis(bin, alg_jn());
  CHECK(G2.elements == G.elements);

  SequenceTable t(2);
  for (long n = 0; n <= 8; ++n)
    for (long j = 0; j <= 8; ++j) t.set({j, n}, Rat(binomial(n, j)));
  auto D = make_description(G, t);
  std::ostringstream dout;
  write_description(dout, D);
  std::istringstream din(dout.str());
  auto D2 = read_description(din, alg_jn());
  CHECK(D2.basis.elements == D.basis.elements);
  CHECK(D2.initial_values.values() == D.initial_values.values());
  CHECK(D2.exceptional_points == D.exceptional_points);
}

TEST_CASE("identical configuration gives byte-identical reports") {
  std::ostringstream a, b;
  verify_identities(6, 2).render(a);
  verify_identities(6, 2).render(b);
  CHECK(a.str() == b.str());

  PipelineConfig cfg;
  cfg.scale = PipelineScale::full;
  cfg.table_size = 6;
  std::ostringstream p, q;
  run_proof_pipeline(cfg).render(p);
  run_proof_pipeline(cfg).render(q);
  CHECK(p.str() == q.str());
}
