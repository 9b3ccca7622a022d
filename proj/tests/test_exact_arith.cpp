#include <doctest.h>

#include <holo/linalg.hpp>
#include <holo/modint.hpp>
#include <holo/mpoly.hpp>
#include <holo/ratfun.hpp>
#include <holo/reconstruct.hpp>

#include "test_util.hpp"

using namespace holo;
using testutil::Rng;

namespace {

// exhaustive oracle: all fractions a/b with |a|, b <= bound
std::optional<Rat> reconstruct_bruteforce(const Int& residue, const Int& modulus) {
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int((modulus - 1) / 2).get_mpz_t());
  for (Int b = 1; b <= bound; ++b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1) continue;
    for (Int a = -bound; a <= bound; ++a) {
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      if (g != 1 && !(a == 0 && b == 1)) continue;
      Int lhs = (b * residue - a) % modulus;
      if (lhs % modulus == 0) return make_rat(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("rational reconstruction: fixed cases") {
  CHECK(rational_reconstruct(0, 101).value() == Rat(0));
  CHECK(rational_reconstruct(26, 101).value() == make_rat(3, 4));  // 4*26 = 104 = 3 mod 101
}

TEST_CASE("rational reconstruction agrees with exhaustive search on small moduli") {
  for (long m : {7L, 11L, 13L, 101L, 997L}) {
    for (long r = 0; r < m && r < 120; ++r) {
      auto fast = rational_reconstruct(r, m);
      auto slow = reconstruct_bruteforce(r, m);
      CHECK(fast.has_value() == slow.has_value());
      if (fast && slow) {
        // both must satisfy the defining congruence within the bound
        Int check = (fast->get_den() * r - fast->get_num()) % m;
        CHECK(check % m == 0);
      }
    }
  }
}

TEST_CASE("rational reconstruction roundtrip through a large prime") {
  const Int p("2147483659");  // prime > 2*10^8
  Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    Int a(rng.range(-9999, 9999)), b(rng.range(1, 9999));
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g; b /= g;
    Int binv;
    mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t());
    Int res = a * binv % p;
    if (res < 0) res += p;
    auto q = rational_reconstruct(res, p);
    REQUIRE(q.has_value());
    CHECK(*q == make_rat(a, b));
  }
}

TEST_CASE("crt_combine fixed cases") {
  auto r = crt_combine({{2, 3}, {3, 5}});
  CHECK(r.first == 8);
  CHECK(r.second == 15);
  r = crt_combine({{0, 3}, {0, 5}});
  CHECK(r.first == 0);
  CHECK(r.second == 15);
  r = crt_combine({{1, 2}});
  CHECK(r.first == 1);
  CHECK(r.second == 2);
  CHECK_THROWS(crt_combine({{1, 6}, {2, 4}}));
}

TEST_CASE("crt_combine is order independent") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::pair<Int, Int>> rs = {
        {rng.range(0, 2), 3}, {rng.range(0, 4), 5}, {rng.range(0, 6), 7}, {rng.range(0, 10), 11}};
    auto a = crt_combine(rs);
    std::swap(rs[0], rs[3]);
    std::swap(rs[1], rs[2]);
    auto b = crt_combine(rs);
    // also a grouped evaluation
    auto left = crt_combine({rs[0], rs[1]});
    auto right = crt_combine({rs[2], rs[3]});
    auto c = crt_combine({left, right});
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("ModInt arithmetic and inverse") {
  std::uint64_t p = default_primes(1)[0];
  ModInt a(123456789, p), b(987654321, p);
  CHECK((a * b / b) == a);
  CHECK((a + (-a)).residue() == 0);
  CHECK_THROWS(ModInt(0, p).inv());
  CHECK(mod_image(make_rat(3, 4), 101).residue() == (3 * ModInt(4, 101).inv().residue()) % 101);
}

TEST_CASE("poly_gcd fixed cases") {
  std::vector<std::string> vars = {"j", "n"};
  MPoly n = MPoly::variable(vars, "n");
  MPoly j = MPoly::variable(vars, "j");
  MPoly one = MPoly::constant(vars, 1);

  CHECK(poly_gcd(n * n - one, n - one) == n - one);
  CHECK(poly_gcd(MPoly(vars), n + 3 * one) == n + 3 * one);
  CHECK(poly_gcd(j * n + j, n + one) == n + one);
}

TEST_CASE("poly_gcd divides both arguments on random products") {
  Rng rng(99);
  std::vector<std::string> vars = {"j", "n"};
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    MPoly g = testutil::random_nonzero_poly(rng, vars, 2, 2);
    MPoly a = testutil::random_poly(rng, vars, 2, 2) * g;
    MPoly b = testutil::random_poly(rng, vars, 2, 2) * g;
    if (a.is_zero() && b.is_zero()) continue;
    MPoly d = poly_gcd(a, b);
    if (!a.is_zero()) CHECK(poly_divexact(a, d) * d == a);
    if (!b.is_zero()) CHECK(poly_divexact(b, d) * d == b);
    ++checked;
  }
  CHECK(checked >= 150);
}

TEST_CASE("integer_roots") {
  std::vector<std::string> vars = {"n"};
  MPoly n = MPoly::variable(vars, "n");
  auto c = [&](long v) { return MPoly::constant(vars, Rat(v)); };

  // leading coefficient from the singularity analysis:
  // (n-3)^2 (n-2) (n-1)^2 (2n-3)^2 (2n-1)
  MPoly p = (n - c(3)).pow(2) * (n - c(2)) * (n - c(1)).pow(2) *
            (c(2) * n - c(3)).pow(2) * (c(2) * n - c(1));
  CHECK(integer_roots(p) == std::set<long>{1, 2, 3});

  CHECK(integer_roots(n * n + c(1)).empty());
  CHECK(integer_roots(n * (n - c(5))) == std::set<long>{0, 5});
  CHECK_THROWS(integer_roots(MPoly(vars)));
}

TEST_CASE("RatFun normalization is canonical") {
  std::vector<std::string> vars = {"j", "n"};
  MPoly n = MPoly::variable(vars, "n");
  MPoly j = MPoly::variable(vars, "j");
  MPoly one = MPoly::constant(vars, 1);

  RatFun f(n * n - one, n - one);  // reduces to n+1
  CHECK(f.is_polynomial());
  CHECK(f.num() == n + one);

  RatFun a(j, n - one), b(-j, n - one);
  CHECK((a + b).is_zero());

  // idempotence: renormalizing the stored pair changes nothing
  RatFun g(f.num(), f.den());
  CHECK(g == f);

  // negative leading denominator gets flipped
  RatFun h(one, one - n);
  CHECK(h.den().lead_coeff() > 0);
}

TEST_CASE("rational nullspace solves small systems") {
  Matrix<Rat> m(2, 3, Rat(0));
  // x + y + z = 0 ; x + 2y + 3z = 0  ->  nullspace span (1, -2, 1)
  m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(0, 2) = 1;
  m.at(1, 0) = 1; m.at(1, 1) = 2; m.at(1, 2) = 3;
  auto ns = nullspace(m, Rat(1), [](const Rat& x) { return x == 0; });
  REQUIRE(ns.size() == 1);
  Rat x = ns[0][0], y = ns[0][1], z = ns[0][2];
  CHECK(x + y + z == 0);
  CHECK(x + 2 * y + 3 * z == 0);
  CHECK(!(x == 0 && y == 0 && z == 0));
}

TEST_CASE("bareiss determinant") {
  std::vector<std::vector<Int>> m = {{4, 3}, {1, 7}};
  CHECK(bareiss_det(m) == 25);
  std::vector<std::vector<Int>> s = {{1, 2}, {2, 4}};
  CHECK(bareiss_det(s) == 0);
  CHECK(bareiss_det({}) == 1);
}
