#include <holo/telescope.hpp>

#include <holo/linalg.hpp>
#include <holo/modint.hpp>

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace holo {

AnsatzShape AnsatzShape::triangle(int order, int jdeg, int t) {
  AnsatzShape s;
  s.order = order;
  s.jdeg = jdeg;
  for (int l = 0; l <= t; ++l)
    for (int m = 0; m + l <= t; ++m) s.q_support.emplace_back(l, m);
  return s;
}

std::string AnsatzShape::str() const {
  std::ostringstream os;
  os << "order=" << order << " jdeg=" << jdeg << " support=";
  for (std::size_t i = 0; i < q_support.size(); ++i) {
    if (i) os << ";";
    os << q_support[i].first << "," << q_support[i].second;
  }
  return os.str();
}

namespace {

MPoly poly_lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("poly_lcm: zero input");
  return poly_normalize(poly_divexact(a * b, poly_gcd(a, b)));
}

// coefficients of the powers of the first variable, each over the tail vars
std::vector<MPoly> split_first_var(const MPoly& p, const std::vector<std::string>& tail) {
  std::vector<MPoly> out;
  for (const auto& [e, c] : p.terms()) {
    std::size_t d = static_cast<std::size_t>(e[0]);
    while (out.size() <= d) out.emplace_back(tail);
    Exp e2(e.begin() + 1, e.end());
    out[d].add_term(e2, c);
  }
  if (out.empty()) out.emplace_back(tail);
  return out;
}

std::vector<RatFun> coords_on(const OreOperator& r, const std::vector<ShiftMonomial>& U,
                              const std::vector<std::string>& vars) {
  std::vector<RatFun> v(U.size(), RatFun::constant(vars, 0));
  for (const auto& [m, c] : r.terms()) {
    auto it = std::find(U.begin(), U.end(), m);
    if (it == U.end()) throw std::logic_error("telescope: monomial outside the staircase");
    v[static_cast<std::size_t>(it - U.begin())] = c;
  }
  return v;
}

// memoized normal forms of the shift monomials modulo the basis
struct NfMemo {
  const GroebnerBasis& G;
  std::map<ShiftMonomial, OreOperator> cache;

  explicit NfMemo(const GroebnerBasis& g) : G(g) {
    const auto& alg = g.algebra();
    OreOperator one = OreOperator::coefficient(alg, RatFun::constant(alg.vars, 1));
    cache[ShiftMonomial(alg.arity(), 0)] = normal_form(std::move(one), g);
  }
  const OreOperator& get(const ShiftMonomial& a) {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    std::size_t i = 0;
    while (a[i] == 0) ++i;
    ShiftMonomial prev = a;
    --prev[i];
    ShiftMonomial step(a.size(), 0);
    step[i] = 1;
    OreOperator r = normal_form(get(prev).shifted(step), G);
    return cache.emplace(a, std::move(r)).first->second;
  }
};

// unknown layout of one ansatz: the principal coefficients first, then one
// unknown per (support pair, j-power)
struct Layout {
  std::size_t n_c;                                // = order + 1
  std::vector<std::array<int, 3>> d_index;        // (l, m, k) per d-unknown
  std::size_t size() const { return n_c + d_index.size(); }
};

Layout make_layout(const AnsatzShape& shape) {
  Layout lay;
  lay.n_c = static_cast<std::size_t>(shape.order) + 1;
  for (const auto& [l, m] : shape.q_support)
    for (int k = 0; k <= shape.jdeg; ++k) lay.d_index.push_back({l, m, k});
  return lay;
}

// the raw ansatz operator of one unknown, before reduction
OreOperator column_operator(const OreAlgebra& alg, const Layout& lay, std::size_t col) {
  RatFun j = RatFun::variable(alg.vars, alg.vars[0]);
  RatFun one = RatFun::constant(alg.vars, 1);
  if (col < lay.n_c) {
    ShiftMonomial sn(alg.arity(), 0);
    sn[1] = static_cast<int>(col);
    return OreOperator::monomial_op(alg, sn, one);
  }
  const auto& [l, m, k] = lay.d_index[col - lay.n_c];
  RatFun jk = one, j1k = one;
  for (int t = 0; t < k; ++t) {
    jk *= j;
    j1k *= j + one;
  }
  OreOperator up = OreOperator::monomial_op(alg, ShiftMonomial{l + 1, m}, j1k);
  OreOperator lo = OreOperator::monomial_op(alg, ShiftMonomial{l, m}, jk);
  return up - lo;  // (Sj - 1) * j^k * Sj^l * Sn^m, commuted past j^k
}

// reduced column: fast path splices cached monomial normal forms together,
// slow path reduces the assembled operator from scratch
OreOperator reduced_column(const GroebnerBasis& G, NfMemo& memo, const Layout& lay,
                           std::size_t col, bool use_cache) {
  const auto& alg = G.algebra();
  if (!use_cache) return normal_form(column_operator(alg, lay, col), G);
  if (col < lay.n_c) {
    ShiftMonomial sn(alg.arity(), 0);
    sn[1] = static_cast<int>(col);
    return memo.get(sn);
  }
  RatFun j = RatFun::variable(alg.vars, alg.vars[0]);
  RatFun one = RatFun::constant(alg.vars, 1);
  const auto& [l, m, k] = lay.d_index[col - lay.n_c];
  RatFun jk = one, j1k = one;
  for (int t = 0; t < k; ++t) {
    jk *= j;
    j1k *= j + one;
  }
  return memo.get(ShiftMonomial{l + 1, m}).scaled(j1k) -
         memo.get(ShiftMonomial{l, m}).scaled(jk);
}

// equate the coefficient of every power of the inner variable to zero: the
// system lives over the rational functions of the outer variable alone
Matrix<RatFun> build_system(const std::vector<std::vector<RatFun>>& cols,
                            std::size_t n_std, const std::vector<std::string>& jn,
                            const std::vector<std::string>& n_only) {
  std::vector<std::vector<RatFun>> rows;
  const RatFun zero = RatFun::constant(n_only, 0);
  for (std::size_t u = 0; u < n_std; ++u) {
    MPoly den = MPoly::constant(jn, 1);
    for (const auto& c : cols)
      if (!c[u].is_zero()) den = poly_lcm(den, c[u].den());
    std::vector<std::vector<MPoly>> cleared(cols.size());
    std::size_t maxdeg = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (cols[i][u].is_zero()) continue;
      MPoly p = cols[i][u].num() * poly_divexact(den, cols[i][u].den());
      cleared[i] = split_first_var(p, n_only);
      maxdeg = std::max(maxdeg, cleared[i].size());
    }
    for (std::size_t t = 0; t < maxdeg; ++t) {
      std::vector<RatFun> row(cols.size(), zero);
      bool any = false;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (t >= cleared[i].size() || cleared[i][t].is_zero()) continue;
        row[i] = RatFun(cleared[i][t]);
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  Matrix<RatFun> m(rows.size(), cols.size(), zero);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

// choose the solution with the lowest principal order, then reduce its free
// part modulo the directions with no principal part to make the output
// deterministic
template <class F, class IsZero>
std::optional<std::vector<F>> select_solution(std::vector<std::vector<F>> vecs,
                                              std::size_t n_c, IsZero is_zero) {
  std::vector<std::vector<F>> pure;  // no principal part at all
  std::optional<std::vector<F>> best;
  int best_ord = 0;
  std::size_t best_nz = 0;
  for (auto& v : vecs) {
    int ord = -1;
    for (std::size_t i = 0; i < n_c; ++i)
      if (!is_zero(v[i])) ord = static_cast<int>(i);
    if (ord < 0) {
      pure.push_back(std::move(v));
      continue;
    }
    // an order-zero principal part cannot drive a sum recurrence, and mixing
    // it into the chosen solution would disturb its principal part
    if (ord == 0) continue;
    std::size_t nz = 0;
    for (const auto& x : v)
      if (!is_zero(x)) ++nz;
    if (!best || ord < best_ord || (ord == best_ord && nz < best_nz)) {
      best = std::move(v);
      best_ord = ord;
      best_nz = nz;
    }
  }
  if (!best) return std::nullopt;
  // echelonize the pure directions and eliminate them from the chosen vector
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < pure.size(); ++r) {
    std::size_t p = 0;
    while (p < pure[r].size() && is_zero(pure[r][p])) ++p;
    if (p == pure[r].size()) continue;
    F inv = pure[r][p];
    for (auto& x : pure[r]) x = x / inv;
    for (std::size_t r2 = 0; r2 < pure.size(); ++r2) {
      if (r2 == r || is_zero(pure[r2][p])) continue;
      F f = pure[r2][p];
      for (std::size_t c = 0; c < pure[r2].size(); ++c)
        pure[r2][c] = pure[r2][c] - f * pure[r][c];
    }
    pivots.push_back(r);
  }
  for (std::size_t r : pivots) {
    std::size_t p = 0;
    while (p < pure[r].size() && is_zero(pure[r][p])) ++p;
    if (is_zero((*best)[p])) continue;
    F f = (*best)[p];
    for (std::size_t c = 0; c < best->size(); ++c)
      (*best)[c] = (*best)[c] - f * pure[r][c];
  }
  return best;
}

// scale so the principal part has coprime integer polynomial coefficients
// with a positive leading coefficient; the delta part follows the same scale
void normalize_solution(std::vector<RatFun>& sol, std::size_t n_c,
                        const std::vector<std::string>& n_only) {
  MPoly den = MPoly::constant(n_only, 1);
  for (std::size_t i = 0; i < n_c; ++i)
    if (!sol[i].is_zero()) den = poly_lcm(den, sol[i].den());
  RatFun scale(den);
  MPoly content(n_only);
  for (std::size_t i = 0; i < n_c; ++i)
    if (!sol[i].is_zero()) content = poly_gcd(content, (sol[i] * scale).num());
  if (!content.is_zero()) scale = scale / RatFun(content);
  Int num_gcd = 0, den_lcm = 1;
  for (std::size_t i = 0; i < n_c; ++i) {
    if (sol[i].is_zero()) continue;
    MPoly scaled = (sol[i] * scale).num();  // keep alive while iterating
    for (const auto& [e, c] : scaled.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
  }
  if (num_gcd != 0) scale = scale * RatFun::constant(n_only, make_rat(den_lcm, num_gcd));
  std::size_t top = 0;
  for (std::size_t i = 0; i < n_c; ++i)
    if (!sol[i].is_zero()) top = i;
  if ((sol[top] * scale).num().lead_coeff() < 0) scale = -scale;
  for (auto& x : sol) x = x * scale;
}

}  // namespace

std::optional<TelescoperCertificate> telescope_ansatz(const DFiniteDescription& D,
                                                      const AnsatzShape& shape,
                                                      bool use_cache) {
  const auto& G = D.basis;
  const auto& alg = G.algebra();
  if (alg.arity() != 2)
    throw std::invalid_argument("telescope_ansatz: bivariate description required");
  auto sc = staircase(G);
  if (!sc.dfinite) throw std::invalid_argument("telescope_ansatz: input is not d-finite");
  const auto& U = sc.under_the_stairs;
  const std::vector<std::string> n_only{alg.vars[1]};

  Layout lay = make_layout(shape);
  NfMemo memo(G);
  std::vector<std::vector<RatFun>> cols;
  for (std::size_t c = 0; c < lay.size(); ++c)
    cols.push_back(coords_on(reduced_column(G, memo, lay, c, use_cache), U, alg.vars));

  Matrix<RatFun> m = build_system(cols, U.size(), alg.vars, n_only);
  auto is_zero = [](const RatFun& x) { return x.is_zero(); };
  auto vecs = nullspace(m, RatFun::constant(n_only, 1), is_zero);
  auto sol = select_solution(std::move(vecs), lay.n_c, is_zero);
  if (!sol) return std::nullopt;
  normalize_solution(*sol, lay.n_c, n_only);

  TelescoperCertificate cert;
  cert.shape = shape;
  cert.P = OreOperator(alg);
  for (std::size_t i = 0; i < lay.n_c; ++i) {
    ShiftMonomial sn(alg.arity(), 0);
    sn[1] = static_cast<int>(i);
    cert.P.add_term(sn, (*sol)[i].embed(alg.vars));
  }
  RatFun j = RatFun::variable(alg.vars, alg.vars[0]);
  OreOperator q_raw(alg);
  for (std::size_t d = 0; d < lay.d_index.size(); ++d) {
    const auto& [l, mm, k] = lay.d_index[d];
    RatFun jk = RatFun::constant(alg.vars, 1);
    for (int t = 0; t < k; ++t) jk *= j;
    q_raw.add_term(ShiftMonomial{l, mm}, (*sol)[lay.n_c + d].embed(alg.vars) * jk);
  }
  cert.Q = normal_form(q_raw, G);
  if (!verify_telescoper(cert, D))
    throw std::logic_error("telescope_ansatz: certificate failed verification");
  return cert;
}

std::optional<TelescoperCertificate> telescope_search(const DFiniteDescription& D,
                                                      int max_order,
                                                      const AnsatzShape* start) {
  int k0 = 1;
  for (const auto& g : D.basis.elements)
    for (const auto& [m, c] : g.terms())
      k0 = std::max({k0, c.num().degree(0), c.den().degree(0)});
  int order0 = 1;
  if (start) {
    order0 = std::max(order0, start->order);
    k0 = std::max(k0, start->jdeg);
  }
  for (int order = order0; order <= max_order; ++order)
    for (int k = k0; k <= k0 + 2; ++k)
      if (auto cert = telescope_ansatz(D, AnsatzShape::triangle(order, k, order)))
        return cert;
  return std::nullopt;
}

namespace {

// dense univariate polynomial over GF(p), lowest degree first
using PolyP = std::vector<ModInt>;

void trim(PolyP& p) {
  while (!p.empty() && p.back().residue() == 0) p.pop_back();
}

PolyP poly_mul(const PolyP& a, const PolyP& b, std::uint64_t prime) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, ModInt(0, prime));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) r[i + k] = r[i + k] + a[i] * b[k];
  trim(r);
  return r;
}

// image of a polynomial in the inner variable (the outer one already
// inserted); an unlucky prime shows up as a vanishing denominator
PolyP poly_image(const MPoly& p, std::uint64_t prime) {
  PolyP out;
  for (const auto& [e, c] : p.terms()) {
    if (e[1] != 0)
      throw std::logic_error("modular_support_probe: outer variable not inserted");
    std::size_t d = static_cast<std::size_t>(e[0]);
    if (out.size() <= d) out.resize(d + 1, ModInt(0, prime));
    try {
      out[d] = out[d] + mod_image(c, prime);
    } catch (const std::domain_error&) {
      throw UnluckyPoint("modular_support_probe: coefficient collapses mod p");
    }
  }
  trim(out);
  return out;
}

}  // namespace

AnsatzShape modular_support_probe(const DFiniteDescription& D, const AnsatzShape& shape,
                                  long n0, std::uint64_t prime) {
  const auto& G = D.basis;
  const auto& alg = G.algebra();
  if (alg.arity() != 2)
    throw std::invalid_argument("modular_support_probe: bivariate description required");
  auto sc = staircase(G);
  if (!sc.dfinite) throw std::invalid_argument("modular_support_probe: input is not d-finite");
  const auto& U = sc.under_the_stairs;

  Layout lay = make_layout(shape);
  std::vector<std::vector<std::pair<PolyP, PolyP>>> cols;  // (num, den) per coordinate
  for (std::size_t c = 0; c < lay.size(); ++c) {
    OreOperator red = modular_normal_form(column_operator(alg, lay, c), G,
                                          alg.vars[1], n0, prime);
    auto coords = coords_on(red, U, alg.vars);
    std::vector<std::pair<PolyP, PolyP>> col;
    for (const auto& x : coords) {
      PolyP num = poly_image(x.num(), prime);
      PolyP den = poly_image(x.den(), prime);
      if (den.empty()) throw UnluckyPoint("modular_support_probe: denominator image is zero");
      col.emplace_back(std::move(num), std::move(den));
    }
    cols.push_back(std::move(col));
  }

  // clear denominators per coordinate with suffix/prefix products, then
  // equate every power of the inner variable to zero
  std::vector<std::vector<ModInt>> rows;
  for (std::size_t u = 0; u < U.size(); ++u) {
    std::size_t nc = cols.size();
    std::vector<PolyP> pre(nc + 1), suf(nc + 1);
    pre[0] = {ModInt(1, prime)};
    for (std::size_t i = 0; i < nc; ++i) pre[i + 1] = poly_mul(pre[i], cols[i][u].second, prime);
    suf[nc] = {ModInt(1, prime)};
    for (std::size_t i = nc; i-- > 0;) suf[i] = poly_mul(suf[i + 1], cols[i][u].second, prime);
    std::vector<PolyP> cleared(nc);
    std::size_t maxdeg = 0;
    for (std::size_t i = 0; i < nc; ++i) {
      cleared[i] = poly_mul(cols[i][u].first, poly_mul(pre[i], suf[i + 1], prime), prime);
      maxdeg = std::max(maxdeg, cleared[i].size());
    }
    for (std::size_t t = 0; t < maxdeg; ++t) {
      std::vector<ModInt> row(nc, ModInt(0, prime));
      bool any = false;
      for (std::size_t i = 0; i < nc; ++i) {
        if (t >= cleared[i].size() || cleared[i][t].residue() == 0) continue;
        row[i] = cleared[i][t];
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }

  Matrix<ModInt> m(rows.size(), lay.size(), ModInt(0, prime));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < lay.size(); ++c) m.at(r, c) = rows[r][c];
  auto is_zero = [](const ModInt& x) { return x.residue() == 0; };
  auto vecs = nullspace(m, ModInt(1, prime), is_zero);
  auto sol = select_solution(std::move(vecs), lay.n_c, is_zero);
  if (!sol) return AnsatzShape{0, 0, {}};

  AnsatzShape pruned{0, 0, {}};
  for (std::size_t i = 0; i < lay.n_c; ++i)
    if ((*sol)[i].residue() != 0) pruned.order = static_cast<int>(i);
  for (std::size_t d = 0; d < lay.d_index.size(); ++d) {
    if ((*sol)[lay.n_c + d].residue() == 0) continue;
    const auto& [l, mm, k] = lay.d_index[d];
    pruned.jdeg = std::max(pruned.jdeg, k);
    std::pair<int, int> lm{l, mm};
    if (std::find(pruned.q_support.begin(), pruned.q_support.end(), lm) ==
        pruned.q_support.end())
      pruned.q_support.push_back(lm);
  }
  std::sort(pruned.q_support.begin(), pruned.q_support.end());
  return pruned;
}

bool verify_telescoper(const TelescoperCertificate& cert, const DFiniteDescription& D) {
  const auto& alg = D.basis.algebra();
  OreOperator delta = OreOperator::shift(alg, 0) -
                      OreOperator::coefficient(alg, RatFun::constant(alg.vars, 1));
  return normal_form(cert.P + op_mul(delta, cert.Q), D.basis).is_zero();
}

OreOperator sum_recurrence(const TelescoperCertificate& cert, bool natural_boundaries,
                           std::string* boundary_note) {
  const auto& alg = cert.P.algebra();
  OreAlgebra out_alg{{alg.vars[1]}};
  OreOperator out(out_alg);
  for (const auto& [m, c] : cert.P.terms()) {
    if (m[0] != 0)
      throw std::invalid_argument("sum_recurrence: principal part contains the inner shift");
    if (c.num().degree(0) != 0 || c.den().degree(0) != 0)
      throw std::invalid_argument("sum_recurrence: principal part depends on the inner variable");
    MPoly num(out_alg.vars), den(out_alg.vars);
    for (const auto& [e, v] : c.num().terms()) num.add_term({e[1]}, v);
    for (const auto& [e, v] : c.den().terms()) den.add_term({e[1]}, v);
    out.add_term(ShiftMonomial{m[1]}, RatFun(num, den));
  }
  if (!natural_boundaries) {
    if (cert.Q.is_zero())
      throw std::invalid_argument(
          "sum_recurrence: boundary residues require a delta part to evaluate");
    if (boundary_note)
      *boundary_note =
          "inhomogeneous boundary residue: with G = (" + cert.Q.str() +
          ") applied to the summand, the recurrence picks up G at one past the upper "
          "summation bound minus G at the lower bound";
  } else if (boundary_note) {
    boundary_note->clear();
  }
  return out;
}

namespace {

// elimination works in Q(n)[j]<Sj,Sn>: monomials j^a Sj^l Sn^m with rational
// function coefficients in the outer variable only
using ElimKey = std::array<int, 3>;  // (j-degree, Sj, Sn)

// block order, j-degree block first, so the j-free elements generate the
// elimination ideal
struct ElimLess {
  bool operator()(const ElimKey& x, const ElimKey& y) const {
    if (x[0] != y[0]) return x[0] < y[0];
    if (x[1] + x[2] != y[1] + y[2]) return x[1] + x[2] < y[1] + y[2];
    return x[1] < y[1];
  }
};

struct ElimOp {
  std::map<ElimKey, RatFun, ElimLess> t;

  bool is_zero() const { return t.empty(); }
  void add(const ElimKey& k, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
      t[k] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  const std::pair<const ElimKey, RatFun>& lead() const { return *t.rbegin(); }
};

struct CapHit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool key_divides(const ElimKey& a, const ElimKey& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

// left multiplication by c(n) j^a Sj^l Sn^m: the Sn block shifts the
// coefficients, the Sj block turns j^a' into (j+l)^a'
ElimOp left_mul(const ElimKey& u, const RatFun& cu, const ElimOp& g, const ElimCaps& caps) {
  ElimOp out;
  for (const auto& [k, c] : g.t) {
    RatFun cs = cu * c.shift_var(0, u[2]);
    for (int tdeg = 0; tdeg <= k[0]; ++tdeg) {
      Rat w = Rat(binomial(Int(k[0]), Int(tdeg))) * rat_pow(Rat(u[1]), k[0] - tdeg);
      if (w == 0) continue;
      ElimKey nk{u[0] + tdeg, u[1] + k[1], u[2] + k[2]};
      if (nk[0] > caps.max_j_degree)
        throw CapHit("inner-variable degree cap exceeded at " + std::to_string(nk[0]));
      out.add(nk, cs * RatFun::constant(cs.vars(), w));
    }
  }
  return out;
}

ElimOp elim_sub(ElimOp a, const ElimOp& b) {
  for (const auto& [k, c] : b.t) a.add(k, -c);
  return a;
}

ElimOp elim_reduce(ElimOp f, const std::vector<ElimOp>& basis, const ElimCaps& caps) {
  for (;;) {
    bool reduced = false;
    for (auto it = f.t.rbegin(); it != f.t.rend() && !reduced; ++it) {
      for (const auto& g : basis) {
        const auto& [glm, glc] = g.lead();
        if (!key_divides(glm, it->first)) continue;
        ElimKey u{it->first[0] - glm[0], it->first[1] - glm[1], it->first[2] - glm[2]};
        RatFun cu = it->second / glc.shift_var(0, u[2]);
        f = elim_sub(std::move(f), left_mul(u, cu, g, caps));
        reduced = true;
        break;
      }
    }
    if (!reduced) return f;
    if (f.t.size() > caps.max_terms)
      throw CapHit("term count cap exceeded during reduction");
  }
}

void make_monic(ElimOp& f) {
  RatFun inv = f.lead().second.inv();
  for (auto& [k, c] : f.t) c *= inv;
}

ElimOp elim_spoly(const ElimOp& f, const ElimOp& g, const ElimCaps& caps) {
  const auto& lf = f.lead().first;
  const auto& lg = g.lead().first;
  ElimKey L{std::max(lf[0], lg[0]), std::max(lf[1], lg[1]), std::max(lf[2], lg[2])};
  ElimKey uf{L[0] - lf[0], L[1] - lf[1], L[2] - lf[2]};
  ElimKey ug{L[0] - lg[0], L[1] - lg[1], L[2] - lg[2]};
  RatFun cf = f.lead().second.shift_var(0, uf[2]).inv();
  RatFun cg = g.lead().second.shift_var(0, ug[2]).inv();
  return elim_sub(left_mul(uf, cf, f, caps), left_mul(ug, cg, g, caps));
}

}  // namespace

std::optional<OreOperator> telescope_eliminate(const DFiniteDescription& D,
                                               const ElimCaps& caps,
                                               std::string* diagnostics) {
  const auto& alg = D.basis.algebra();
  if (alg.arity() != 2)
    throw std::invalid_argument("telescope_eliminate: bivariate description required");
  const std::vector<std::string> n_only{alg.vars[1]};

  // clear the coefficient denominators so each generator becomes polynomial
  // in j, then split off the j-powers into the monomial part
  std::vector<ElimOp> basis;
  for (const auto& g : D.basis.elements) {
    MPoly den = MPoly::constant(alg.vars, 1);
    for (const auto& [m, c] : g.terms()) den = poly_lcm(den, c.den());
    ElimOp e;
    for (const auto& [m, c] : g.terms()) {
      MPoly p = c.num() * poly_divexact(den, c.den());
      auto by_j = split_first_var(p, n_only);
      for (std::size_t a = 0; a < by_j.size(); ++a) {
        if (by_j[a].is_zero()) continue;
        e.add(ElimKey{static_cast<int>(a), m[0], m[1]}, RatFun(by_j[a]));
      }
    }
    if (e.is_zero()) continue;
    make_monic(e);
    basis.push_back(std::move(e));
  }
  if (basis.empty()) {
    if (diagnostics) *diagnostics = "empty annihilator";
    return std::nullopt;
  }

  try {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t k = i + 1; k < basis.size(); ++k) pairs.emplace_back(i, k);
    while (!pairs.empty()) {
      auto [i, k] = pairs.back();
      pairs.pop_back();
      ElimOp s = elim_reduce(elim_spoly(basis[i], basis[k], caps), basis, caps);
      if (s.is_zero()) continue;
      make_monic(s);
      if (basis.size() + 1 > caps.max_basis)
        throw CapHit("basis size cap exceeded at " + std::to_string(basis.size() + 1));
      for (std::size_t q = 0; q < basis.size(); ++q) pairs.emplace_back(q, basis.size());
      basis.push_back(std::move(s));
    }
  } catch (const CapHit& hit) {
    if (diagnostics) *diagnostics = hit.what();
    return std::nullopt;
  }

  // among the j-free elements prefer one whose principal part survives, with
  // the lowest outer order
  std::optional<OreOperator> best;
  int best_ord = 0;
  bool best_nonzero = false;
  for (const auto& e : basis) {
    bool j_free = true;
    for (const auto& [k, c] : e.t)
      if (k[0] != 0) { j_free = false; break; }
    if (!j_free) continue;
    OreOperator op(alg);
    for (const auto& [k, c] : e.t) op.add_term(ShiftMonomial{k[1], k[2]}, c.embed(alg.vars));
    bool nonzero = !delta_decompose(op).first.is_zero();
    int ord = 0;
    for (const auto& [m, c] : op.terms()) ord = std::max(ord, m[1]);
    if (!best || (nonzero && !best_nonzero) ||
        (nonzero == best_nonzero && ord < best_ord)) {
      best = std::move(op);
      best_ord = ord;
      best_nonzero = nonzero;
    }
  }
  if (!best && diagnostics) *diagnostics = "no element free of the inner variable was found";
  return best;
}

std::pair<OreOperator, OreOperator> delta_decompose(const OreOperator& E) {
  const auto& alg = E.algebra();
  if (alg.arity() != 2)
    throw std::invalid_argument("delta_decompose: bivariate operator required");
  OreOperator P(alg), Q(alg);
  for (const auto& [m, c] : E.terms()) {
    if (c.num().degree(0) != 0 || c.den().degree(0) != 0)
      throw std::invalid_argument("delta_decompose: coefficient depends on the inner variable");
    P.add_term(ShiftMonomial{0, m[1]}, c);
    // Sj^l - 1 = (Sj - 1)(Sj^{l-1} + ... + 1); coefficients in n commute past Sj
    for (int t = 0; t < m[0]; ++t) Q.add_term(ShiftMonomial{t, m[1]}, c);
  }
  return {std::move(P), std::move(Q)};
}

void write_certificate(std::ostream& out, const TelescoperCertificate& cert) {
  out << "telescoper " << cert.shape.str() << "\n";
  out << cert.P.str() << "\n";
  out << cert.Q.str() << "\n";
}

TelescoperCertificate read_certificate(std::istream& in, const OreAlgebra& alg) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_certificate: empty input");
  std::istringstream hs(line);
  std::string kw;
  hs >> kw;
  if (kw != "telescoper") throw std::runtime_error("read_certificate: missing header");
  TelescoperCertificate cert;
  std::string field;
  while (hs >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("read_certificate: malformed header field '" + field + "'");
    std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    if (key == "order") {
      cert.shape.order = std::stoi(val);
    } else if (key == "jdeg") {
      cert.shape.jdeg = std::stoi(val);
    } else if (key == "support") {
      cert.shape.q_support.clear();
      std::istringstream ss(val);
      std::string pair;
      while (std::getline(ss, pair, ';')) {
        auto comma = pair.find(',');
        if (comma == std::string::npos)
          throw std::runtime_error("read_certificate: malformed support pair '" + pair + "'");
        cert.shape.q_support.emplace_back(std::stoi(pair.substr(0, comma)),
                                          std::stoi(pair.substr(comma + 1)));
      }
    } else {
      throw std::runtime_error("read_certificate: unknown header field '" + key + "'");
    }
  }
  if (!std::getline(in, line)) throw std::runtime_error("read_certificate: missing principal part");
  cert.P = parse_operator(line, alg);
  if (!std::getline(in, line)) throw std::runtime_error("read_certificate: missing delta part");
  cert.Q = parse_operator(line, alg);
  return cert;
}

}  // namespace holo
