#include <holo/tspp.hpp>

#include <holo/linalg.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace holo {

namespace {

struct Cell {
  int i, j, k;
};

// lex order on (i,j,k) is a linear extension of the componentwise order, so
// the lowest remaining index is always a minimal element of the subposet
std::vector<Cell> fundamental_domain(int n) {
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) cells.push_back({i, j, k});
  return cells;
}

Int count_ideals(std::uint64_t mask, const std::vector<std::uint64_t>& up,
                 std::unordered_map<std::uint64_t, Int>& memo) {
  if (mask == 0) return 1;
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  int x = __builtin_ctzll(mask);
  // ideals avoiding cell x lack its whole up-set; ideals containing x are
  // ideals of the poset with the (here minimal, hence singleton) down-set
  // of x removed
  Int r = count_ideals(mask & ~up[x], up, memo) + count_ideals(mask & ~(1ULL << x), up, memo);
  memo.emplace(mask, r);
  return r;
}

std::vector<std::vector<Int>> okada_matrix(int n) {
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Rat e = okada_entry(i, j);
      m[i - 1][j - 1] = e.get_num();  // entries are integers
    }
  return m;
}

Int minor_bottom_row(const std::vector<std::vector<Int>>& m, int n, int j) {
  std::vector<std::vector<Int>> sub(n - 1, std::vector<Int>(n - 1));
  for (int r = 0; r < n - 1; ++r)
    for (int c = 0, cc = 0; c < n; ++c) {
      if (c == j - 1) continue;
      sub[r][cc++] = m[r][c];
    }
  return bareiss_det(std::move(sub));
}

void run_indexed(int items, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || items <= 1) {
    for (int x = 0; x < items; ++x) fn(x);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  int workers = std::min(threads, items);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int x = next.fetch_add(1); x < items; x = next.fetch_add(1)) fn(x);
    });
  for (auto& t : pool) t.join();
}

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::ok: return "OK";
    case CheckStatus::fail: return "FAIL";
    default: return "SKIPPED-CAP";
  }
}

}  // namespace

Int count_tspp_bruteforce(int n) {
  if (n < 0) throw std::invalid_argument("count_tspp_bruteforce: n < 0");
  auto cells = fundamental_domain(n);
  if (cells.size() > 64)
    throw std::invalid_argument("count_tspp_bruteforce: past the practical cap n <= 6");
  std::vector<std::uint64_t> up(cells.size(), 0);
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = 0; b < cells.size(); ++b)
      if (cells[a].i <= cells[b].i && cells[a].j <= cells[b].j && cells[a].k <= cells[b].k)
        up[a] |= 1ULL << b;
  std::uint64_t all = cells.empty() ? 0 : ~0ULL >> (64 - cells.size());
  std::unordered_map<std::uint64_t, Int> memo;
  return count_ideals(all, up, memo);
}

Rat nice(int n) {
  Rat r = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) r *= make_rat(i + j + k - 1, i + j + k - 2);
  return r;
}

Rat nice_ratio(int n) {
  if (n < 1) throw std::invalid_argument("nice_ratio: n < 1");
  Rat a = nice(n), b = nice(n - 1);
  return (a * a) / (b * b);
}

Rat nice_ratio_closed(int n) {
  if (n < 1) throw std::invalid_argument("nice_ratio_closed: n < 1");
  Rat num = rat_pow(Rat(4), 1 - n) * Rat((3 * n - 1) * (3 * n - 1));
  Rat p = rising_factorial(Rat(2 * n), n - 1);
  num *= p * p;
  Rat q = rising_factorial(make_rat(n, 2), n - 1);
  Rat den = Rat((3 * n - 2) * (3 * n - 2)) * q * q;
  return num / den;
}

Rat okada_entry(long i, long j) {
  Rat r = Rat(binomial(Int(i + j - 2), Int(i - 1))) + Rat(binomial(Int(i + j - 1), Int(i)));
  if (i == j) r += 2;
  if (i == j + 1) r -= 1;
  return r;
}

Rat a_prime(long n, long j) {
  return Rat(binomial(Int(n + j - 2), Int(n - 1))) + Rat(binomial(Int(n + j - 1), Int(n)));
}

Rat a_prime_closed(long n, long j) {
  return make_rat(2 * n + j - 1, n + j - 1) * Rat(binomial(Int(n + j - 1), Int(j - 1)));
}

Rat okada_det(int n) {
  if (n < 0) throw std::invalid_argument("okada_det: n < 0");
  return Rat(bareiss_det(okada_matrix(n)));
}

std::vector<Rat> cofactor_row(int n) {
  if (n < 1) throw std::invalid_argument("cofactor_row: n < 1");
  Int sub_det = bareiss_det(okada_matrix(n - 1));
  if (sub_det == 0) throw std::runtime_error("cofactor_row: zero minor determinant");
  auto m = okada_matrix(n);
  std::vector<Rat> row(n);
  for (int j = 1; j <= n; ++j) {
    Int mnr = minor_bottom_row(m, n, j);
    if ((n + j) % 2 != 0) mnr = -mnr;
    row[j - 1] = make_rat(mnr, sub_det);
  }
  return row;
}

Rat cofactor_B(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("cofactor_B: need 1 <= j <= n");
  return cofactor_row(n)[j - 1];
}

SequenceTable cofactor_table(int n_max) {
  SequenceTable t(2);
  for (int n = 1; n <= n_max; ++n) {
    auto row = cofactor_row(n);
    for (int j = 1; j <= n; ++j) t.set({j, n}, row[j - 1]);
  }
  return t;
}

bool CheckReport::all_ok() const {
  for (const auto& c : checks)
    if (c.status != CheckStatus::ok) return false;
  return true;
}

bool CheckReport::any_fail() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return true;
  return false;
}

bool CheckReport::any_skipped() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::skipped_cap) return true;
  return false;
}

std::string CheckReport::verdict() const {
  if (any_fail()) return "failed";
  if (any_skipped()) return "incomplete";
  return "proved";
}

void CheckReport::render(std::ostream& out) const {
  for (const auto& c : checks) {
    out << "CHECK " << c.name;
    if (c.n >= 0) out << " n=" << c.n;
    if (c.i >= 0) out << " i=" << c.i;
    out << ' ' << status_str(c.status) << '\n';
    if (!c.detail.empty()) out << "# " << c.detail << '\n';
  }
}

CheckReport verify_identities(int n_max, int threads) {
  if (n_max < 1) throw std::invalid_argument("verify_identities: n_max < 1");
  std::vector<std::vector<Rat>> rows(n_max);
  run_indexed(n_max, threads, [&](int x) { rows[x] = cofactor_row(x + 1); });

  CheckReport rep;
  auto add = [&](std::string name, long n, long i, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), n, i,
                          ok ? CheckStatus::ok : CheckStatus::fail, std::move(detail)});
  };
  auto B = [&](int n, int j) { return j >= 1 ? rows[n - 1][j - 1] : Rat(0); };

  for (int n = 1; n <= n_max; ++n) {
    add("diagonal-normalization", n, -1, B(n, n) == 1);

    for (int i = 1; i < n; ++i) {
      Rat s = 0;
      for (int j = 1; j <= n; ++j) s += B(n, j) * okada_entry(i, j);
      add("row-relation", n, i, s == 0, s == 0 ? "" : "residue " + rat_str(s));
    }

    Rat rhs = nice_ratio(n);
    Rat diag = 0;
    for (int j = 1; j <= n; ++j) diag += B(n, j) * okada_entry(n, j);
    add("diagonal-sum", n, -1, diag == rhs,
        diag == rhs ? "" : "got " + rat_str(diag) + ", want " + rat_str(rhs));

    // the same sum with the Kronecker deltas split off the matrix entries
    Rat delta_free = 2 * B(n, n) - B(n, n - 1);
    for (int j = 1; j <= n; ++j) delta_free += B(n, j) * a_prime(n, j);
    add("delta-free-diagonal-sum", n, -1, delta_free == rhs);

    for (int i = 1; i < n; ++i) {
      Rat s = 0;
      for (int j = 1; j <= n; ++j) s += B(n, j) * a_prime(i, j);
      add("delta-free-row-relation", n, i, s == B(n, i - 1) - 2 * B(n, i));
    }
  }

  // the row relation must NOT extend to i = n (there it turns into the
  // diagonal sum, whose right side is nonzero)
  for (int n = 2; n <= std::min(n_max, 10); ++n) {
    Rat s = 0;
    for (int j = 1; j <= n; ++j) s += B(n, j) * okada_entry(n, j);
    add("row-relation-fails-on-diagonal", n, -1, s != 0,
        s != 0 ? "diagonal residue " + rat_str(s) : "unexpectedly zero");
  }
  return rep;
}

}  // namespace holo
