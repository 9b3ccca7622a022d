#include <holo/annihilator.hpp>

#include <holo/linalg.hpp>

#include <algorithm>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace holo {

bool Box::contains(const Point& p) const {
  if (p.size() != lo.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  return true;
}

Box Box::cube(std::size_t arity, long lo, long hi) {
  return Box{std::vector<long>(arity, lo), std::vector<long>(arity, hi)};
}

namespace {

// visit all points of the box in ascending lexicographic order
void for_each_point(const Box& box, const std::function<void(const Point&)>& fn) {
  Point p = box.lo;
  if (p.empty()) return;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (box.hi[i] < box.lo[i]) return;
  for (;;) {
    fn(p);
    std::size_t i = p.size();
    while (i-- > 0) {
      if (p[i] < box.hi[i]) { ++p[i]; break; }
      p[i] = box.lo[i];
      if (i == 0) return;
    }
  }
}

std::vector<Rat> rat_point(const Point& p) {
  std::vector<Rat> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i]);
  return r;
}

MPoly poly_lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("poly_lcm: zero input");
  return poly_normalize(poly_divexact(a * b, poly_gcd(a, b)));
}

}  // namespace

MPoly cleared_lead_coeff(const OreOperator& g, const TermOrder& order) {
  if (g.is_zero()) throw std::invalid_argument("cleared_lead_coeff: zero operator");
  MPoly den = MPoly::constant(g.lead_coeff(order).vars(), 1);
  for (const auto& [m, c] : g.terms()) den = poly_lcm(den, c.den());
  const RatFun& lc = g.lead_coeff(order);
  return poly_normalize(lc.num() * poly_divexact(den, lc.den()));
}

namespace {

// singular <=> all cleared leading coefficients vanish at the point
bool all_vanish(const std::vector<MPoly>& leads, const std::vector<Rat>& pt) {
  for (const auto& L : leads)
    if (L.evaluate(pt) != 0) return false;
  return true;
}

std::set<long> roots_in(const MPoly& univar, long lo, long hi) {
  std::set<long> out;
  if (univar.is_zero()) throw std::logic_error("roots_in: zero polynomial");
  if (univar.is_constant()) return out;
  for (long r : integer_roots(univar))
    if (r >= lo && r <= hi) out.insert(r);
  return out;
}

}  // namespace

std::set<Point> singular_points(const GroebnerBasis& G, const Box& region) {
  std::set<Point> out;
  if (G.elements.empty()) return out;
  const std::size_t d = G.algebra().arity();
  if (region.arity() != d) throw std::invalid_argument("singular_points: arity mismatch");
  std::vector<MPoly> leads;
  for (const auto& g : G.elements) {
    MPoly L = cleared_lead_coeff(g, G.order);
    if (L.is_constant()) return out;  // this recurrence always applies
    leads.push_back(L);
  }

  if (d == 1) {
    std::set<long> common = roots_in(leads[0], region.lo[0], region.hi[0]);
    for (std::size_t i = 1; i < leads.size(); ++i) {
      std::set<long> next;
      for (long r : common)
        if (leads[i].evaluate({Rat(r)}) == 0) next.insert(r);
      common = std::move(next);
    }
    for (long r : common) out.insert({r});
    return out;
  }

  // volume small enough: plain scan
  long volume = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < d; ++i) {
    long range = region.hi[i] - region.lo[i] + 1;
    if (range <= 0) return out;
    if (volume > 200000 / range) { overflow = true; break; }
    volume *= range;
  }
  if (!overflow) {
    for_each_point(region, [&](const Point& p) {
      if (all_vanish(leads, rat_point(p))) out.insert(p);
    });
    return out;
  }

  if (d != 2)
    throw std::runtime_error("singular_points: region too large for this arity");

  // scan the axis with the smaller range line by line
  std::size_t ax = (region.hi[0] - region.lo[0] <= region.hi[1] - region.lo[1]) ? 0 : 1;
  std::size_t other = 1 - ax;
  long span = region.hi[ax] - region.lo[ax];
  if (span > 20000)
    throw std::runtime_error("singular_points: region too large to scan");
  for (long v = region.lo[ax]; v <= region.hi[ax]; ++v) {
    std::optional<std::set<long>> common;  // constraints along the line
    bool whole_line = true;
    for (const auto& L : leads) {
      MPoly u = L.eval_partial(ax, Rat(v));
      if (u.is_zero()) continue;  // vanishes identically on this line
      whole_line = false;
      std::set<long> rs = roots_in(u, region.lo[other], region.hi[other]);
      if (!common) {
        common = rs;
      } else {
        std::set<long> inter;
        std::set_intersection(common->begin(), common->end(), rs.begin(), rs.end(),
                              std::inserter(inter, inter.begin()));
        common = std::move(inter);
      }
      if (common->empty()) break;
    }
    if (whole_line)
      throw std::runtime_error("singular_points: a whole line is singular in a large region");
    for (long w : *common) {
      Point p(2);
      p[ax] = v;
      p[other] = w;
      out.insert(p);
    }
  }
  return out;
}

SingularityCandidates singularity_candidates(const MPoly& lead, const Point& lo) {
  const std::size_t d = lead.vars().size();
  if (lo.size() != d) throw std::invalid_argument("singularity_candidates: arity mismatch");
  if (lead.is_zero()) throw std::invalid_argument("singularity_candidates: zero polynomial");
  SingularityCandidates out;
  out.case_lines.resize(d);
  if (d == 1) {
    if (!lead.is_constant())
      for (long r : integer_roots(lead))
        if (r >= lo[0]) out.points.insert({r});
    return out;
  }
  if (d != 2) throw std::invalid_argument("singularity_candidates: bivariate only");

  // content with respect to each variable gives whole case lines
  MPoly prim = lead;
  for (std::size_t v = 0; v < 2; ++v) {
    MPoly cont = poly_content(prim, v);  // polynomial in the other variable
    if (!cont.is_constant())
      for (long r : integer_roots(cont))
        if (r >= lo[1 - v]) out.case_lines[1 - v].insert(r);
    if (!cont.is_constant() || cont.lead_coeff() != 1) prim = poly_divexact(prim, cont);
  }
  if (prim.is_constant()) return out;

  // scan the primitive part line by line; its integer zeros thin out, so a
  // window of consecutive empty lines ends the scan
  const long window = prim.total_degree() + 2;
  long misses = 0;
  for (long n1 = lo[1]; misses < window; ++n1) {
    MPoly u = prim.eval_partial(1, Rat(n1));
    std::set<long> rs;
    if (u.is_zero()) {
      out.case_lines[1].insert(n1);
    } else if (!u.is_constant()) {
      for (long r : integer_roots(u))
        if (r >= lo[0]) rs.insert(r);
    }
    if (rs.empty()) {
      ++misses;
    } else {
      misses = 0;
      for (long r : rs) out.points.insert({r, n1});
    }
  }
  return out;
}

SequenceTable unroll(const DFiniteDescription& D, const Box& box) {
  const auto& G = D.basis;
  SequenceTable t(static_cast<int>(box.arity()));
  for (const auto& [p, v] : D.initial_values.values()) t.set(p, v);
  if (G.elements.empty()) return t;
  const auto lms = G.lead_monomials();

  bool changed = true;
  while (changed) {
    changed = false;
    for_each_point(box, [&](const Point& p) {
      if (t.has(p)) return;
      for (std::size_t i = 0; i < G.elements.size(); ++i) {
        const auto& g = G.elements[i];
        const auto& lm = lms[i];
        Point base(p.size());
        bool ok = true;
        for (std::size_t k = 0; k < p.size(); ++k) {
          base[k] = p[k] - lm[k];
          if (base[k] < box.lo[k]) { ok = false; break; }
        }
        if (!ok) continue;
        std::vector<Rat> pt = rat_point(base);
        Rat lead, rest = 0;
        try {
          lead = g.terms().at(lm).evaluate(pt);
          if (lead == 0) continue;
          for (const auto& [m, c] : g.terms()) {
            if (m == lm) continue;
            Point q(base.size());
            for (std::size_t k = 0; k < q.size(); ++k) q[k] = base[k] + m[k];
            if (!t.has(q)) { ok = false; break; }
            rest += c.evaluate(pt) * t.at(q);
          }
        } catch (const std::domain_error&) {
          continue;
        }
        if (!ok) continue;
        t.set(p, -rest / lead);
        changed = true;
        return;
      }
    });
  }
  return t;
}

namespace {

// coordinates of a reduced operator on the standard monomials
std::vector<RatFun> coords_on(const OreOperator& r, const std::vector<ShiftMonomial>& U,
                              const std::vector<std::string>& vars) {
  std::vector<RatFun> v(U.size(), RatFun::constant(vars, 0));
  for (const auto& [m, c] : r.terms()) {
    auto it = std::find(U.begin(), U.end(), m);
    if (it == U.end()) throw std::logic_error("coords_on: monomial outside the staircase");
    v[static_cast<std::size_t>(it - U.begin())] = c;
  }
  return v;
}

// solve sum c_i cols[i] = rhs over the rational-function field
std::optional<std::vector<RatFun>> solve_columns(const std::vector<std::vector<RatFun>>& cols,
                                                 const std::vector<RatFun>& rhs,
                                                 const std::vector<std::string>& vars) {
  const std::size_t s = cols.size();
  const RatFun zero = RatFun::constant(vars, 0);
  auto is_zero = [](const RatFun& x) { return x.is_zero(); };
  if (s == 0) {
    for (const auto& x : rhs)
      if (!x.is_zero()) return std::nullopt;
    return std::vector<RatFun>{};
  }
  const std::size_t rows = rhs.size();
  Matrix<RatFun> m(rows, s + 1, zero);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < s; ++j) m.at(i, j) = cols[j][i];
    m.at(i, s) = rhs[i];
  }
  auto ech = rref(m, is_zero);
  std::vector<RatFun> sol(s, zero);
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    if (ech.pivot_cols[r] == s) return std::nullopt;  // inconsistent
    sol[ech.pivot_cols[r]] = m.at(r, s);
  }
  return sol;
}

// memoized normal forms of S^alpha applied to a cyclic generator
struct QuotientAction {
  const GroebnerBasis& G;
  std::map<ShiftMonomial, OreOperator> cache;

  QuotientAction(const GroebnerBasis& g, OreOperator seed) : G(g) {
    cache[ShiftMonomial(g.algebra().arity(), 0)] = normal_form(std::move(seed), g);
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

std::vector<ShiftMonomial> monomials_of_degree(std::size_t arity, int deg) {
  std::vector<ShiftMonomial> out;
  ShiftMonomial cur(arity, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (i + 1 == arity) {
      cur[i] = rest;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= rest; ++e) {
      cur[i] = e;
      rec(i + 1, rest - e);
    }
  };
  rec(0, deg);
  return out;
}

// FGLM over a finite-dimensional module: enumerate monomials in ascending
// term order, retain those with independent images, and turn each dependence
// into a basis element of the annihilator
GroebnerBasis fglm_annihilator(
    const OreAlgebra& alg, std::size_t dim,
    const std::function<std::vector<RatFun>(const ShiftMonomial&)>& image) {
  TermOrder ord;  // degrevlex
  std::vector<ShiftMonomial> standards, found_lms;
  std::vector<std::vector<RatFun>> vecs;
  std::vector<OreOperator> relations;
  const RatFun one = RatFun::constant(alg.vars, 1);
  const int max_deg = static_cast<int>(alg.arity() * dim) + 3;

  for (int deg = 0;; ++deg) {
    auto level = monomials_of_degree(alg.arity(), deg);
    std::sort(level.begin(), level.end(),
              [&](const ShiftMonomial& a, const ShiftMonomial& b) { return ord.less(a, b); });
    bool any = false;
    for (const auto& a : level) {
      bool skip = false;
      for (const auto& lm : found_lms)
        if (mono_divides(lm, a)) { skip = true; break; }
      if (skip) continue;
      any = true;
      std::vector<RatFun> v = image(a);
      auto sol = solve_columns(vecs, v, alg.vars);
      if (sol) {
        OreOperator g(alg);
        g.add_term(a, one);
        for (std::size_t i = 0; i < standards.size(); ++i)
          g.add_term(standards[i], -(*sol)[i]);
        relations.push_back(std::move(g));
        found_lms.push_back(a);
      } else {
        standards.push_back(a);
        vecs.push_back(std::move(v));
      }
    }
    if (deg > 0 && !any) break;
    if (deg >= max_deg)
      throw std::runtime_error("closure: no finite annihilator within the degree bound");
  }
  return left_groebner_basis(std::move(relations), ord);
}

// build the description: initial values on the staircase and the singular
// points, pulled from a value oracle where it is defined
DFiniteDescription finish_description(
    GroebnerBasis basis, const std::function<std::optional<Rat>(const Point&)>& value_at,
    long search_box) {
  DFiniteDescription D;
  D.basis = std::move(basis);
  const std::size_t d = D.basis.algebra().arity();
  D.initial_values = SequenceTable(static_cast<int>(d));
  auto sc = staircase(D.basis);
  std::set<Point> needed;
  for (const auto& u : sc.under_the_stairs) {
    Point p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = u[i];
    needed.insert(p);
  }
  for (const auto& p : singular_points(D.basis, Box::cube(d, 0, search_box))) {
    D.exceptional_points.push_back(p);
    needed.insert(p);
  }
  for (const auto& p : needed)
    if (auto v = value_at(p)) D.initial_values.set(p, *v);
  return D;
}

std::size_t quotient_dim(const GroebnerBasis& G) {
  auto sc = staircase(G);
  if (!sc.dfinite) throw std::invalid_argument("closure: input is not d-finite");
  return sc.under_the_stairs.size();
}

}  // namespace

DFiniteDescription make_description(GroebnerBasis basis, const SequenceTable& values,
                                    long search_box) {
  return finish_description(std::move(basis),
                            [&](const Point& p) -> std::optional<Rat> {
                              if (values.has(p)) return values.at(p);
                              return std::nullopt;
                            },
                            search_box);
}

DFiniteDescription closure_apply_operator(const DFiniteDescription& D, const OreOperator& L,
                                          long value_box) {
  const auto& alg = D.basis.algebra();
  if (!(L.algebra() == alg)) throw std::invalid_argument("closure_apply_operator: algebra mismatch");
  auto sc = staircase(D.basis);
  if (!sc.dfinite) throw std::invalid_argument("closure: input is not d-finite");
  const auto& U = sc.under_the_stairs;

  QuotientAction act(D.basis, L);
  auto image = [&](const ShiftMonomial& a) { return coords_on(act.get(a), U, alg.vars); };
  GroebnerBasis out = fglm_annihilator(alg, U.size(), image);

  int max_shift = 0;
  for (const auto& [m, c] : L.terms())
    for (int e : m) max_shift = std::max(max_shift, e);
  SequenceTable tf = unroll(D, Box::cube(alg.arity(), 0, value_box + max_shift));
  return finish_description(std::move(out),
                            [&](const Point& p) -> std::optional<Rat> {
                              try {
                                return op_apply(L, tf, p);
                              } catch (const std::exception&) {
                                return std::nullopt;
                              }
                            },
                            value_box);
}

DFiniteDescription closure_sum(const DFiniteDescription& a, const DFiniteDescription& b,
                               long value_box) {
  const auto& alg = a.basis.algebra();
  if (!(b.basis.algebra() == alg)) throw std::invalid_argument("closure_sum: algebra mismatch");
  auto sa = staircase(a.basis), sb = staircase(b.basis);
  if (!sa.dfinite || !sb.dfinite) throw std::invalid_argument("closure: input is not d-finite");
  const auto& Ua = sa.under_the_stairs;
  const auto& Ub = sb.under_the_stairs;

  QuotientAction acta(a.basis, OreOperator::coefficient(alg, RatFun::constant(alg.vars, 1)));
  QuotientAction actb(b.basis, OreOperator::coefficient(alg, RatFun::constant(alg.vars, 1)));
  auto image = [&](const ShiftMonomial& m) {
    std::vector<RatFun> v = coords_on(acta.get(m), Ua, alg.vars);
    std::vector<RatFun> w = coords_on(actb.get(m), Ub, alg.vars);
    v.insert(v.end(), w.begin(), w.end());
    return v;
  };
  GroebnerBasis out = fglm_annihilator(alg, Ua.size() + Ub.size(), image);

  SequenceTable ta = unroll(a, Box::cube(alg.arity(), 0, value_box));
  SequenceTable tb = unroll(b, Box::cube(alg.arity(), 0, value_box));
  return finish_description(std::move(out),
                            [&](const Point& p) -> std::optional<Rat> {
                              if (ta.has(p) && tb.has(p)) return ta.at(p) + tb.at(p);
                              return std::nullopt;
                            },
                            value_box);
}

namespace {

MPoly drop_first_var(const MPoly& p, const std::vector<std::string>& new_vars) {
  MPoly q(new_vars);
  for (const auto& [e, c] : p.terms()) {
    if (e[0] != 0) throw std::logic_error("drop_first_var: variable still present");
    Exp e2(e.begin() + 1, e.end());
    q.add_term(e2, c);
  }
  return q;
}

}  // namespace

DFiniteDescription closure_substitute(const DFiniteDescription& D, long c, long value_box) {
  const auto& alg = D.basis.algebra();
  if (alg.arity() != 2) throw std::invalid_argument("closure_substitute: bivariate input required");
  auto sc = staircase(D.basis);
  if (!sc.dfinite) throw std::invalid_argument("closure: input is not d-finite");
  const auto& U = sc.under_the_stairs;

  OreAlgebra out_alg{{alg.vars[1]}};
  QuotientAction act(D.basis, OreOperator::coefficient(alg, RatFun::constant(alg.vars, 1)));
  auto substitute = [&](const RatFun& f) {
    RatFun g = f.subst_var(0, 1, c);  // var0 -> var1 + c
    return RatFun(drop_first_var(g.num(), out_alg.vars), drop_first_var(g.den(), out_alg.vars));
  };

  // S_n on the diagonal g(n) = f(n + c, n) acts as S_j S_n on f
  std::vector<ShiftMonomial> stds;
  std::vector<std::vector<RatFun>> vecs;
  OreOperator rel(out_alg);
  const RatFun one = RatFun::constant(out_alg.vars, 1);
  for (int k = 0;; ++k) {
    if (k > static_cast<int>(U.size()))
      throw std::logic_error("closure_substitute: no dependence within the dimension bound");
    auto cv = coords_on(act.get(ShiftMonomial{k, k}), U, alg.vars);
    std::vector<RatFun> v;
    v.reserve(cv.size());
    for (const auto& x : cv) v.push_back(substitute(x));
    auto sol = solve_columns(vecs, v, out_alg.vars);
    if (sol) {
      rel.add_term(ShiftMonomial{k}, one);
      for (std::size_t i = 0; i < stds.size(); ++i) rel.add_term(stds[i], -(*sol)[i]);
      break;
    }
    stds.push_back(ShiftMonomial{k});
    vecs.push_back(std::move(v));
  }
  GroebnerBasis out = left_groebner_basis({rel}, TermOrder{});

  SequenceTable tf = unroll(D, Box::cube(2, 0, value_box + std::max(c, 0L) + 1));
  return finish_description(std::move(out),
                            [&](const Point& p) -> std::optional<Rat> {
                              Point q{p[0] + c, p[0]};
                              if (q[0] >= 0 && tf.has(q)) return tf.at(q);
                              return std::nullopt;
                            },
                            value_box);
}

SequenceTable hypergeometric_table(const HypergeometricTerm& h, const Box& box) {
  const std::size_t d = box.arity();
  if (h.quotients.size() != d || h.base.size() != d)
    throw std::invalid_argument("hypergeometric_table: arity mismatch");
  SequenceTable t(static_cast<int>(d));
  if (box.contains(h.base)) t.set(h.base, h.base_value);
  bool changed = true;
  while (changed) {
    changed = false;
    for_each_point(box, [&](const Point& p) {
      for (std::size_t i = 0; i < d; ++i) {
        Point q = p;
        ++q[i];
        Rat ratio;
        try {
          ratio = h.quotients[i].evaluate(rat_point(p));
        } catch (const std::domain_error&) {
          continue;
        }
        if (t.has(p) && !t.has(q) && box.contains(q)) {
          t.set(q, t.at(p) * ratio);
          changed = true;
        } else if (!t.has(p) && t.has(q) && ratio != 0) {
          t.set(p, t.at(q) / ratio);
          changed = true;
        }
      }
    });
  }
  return t;
}

DFiniteDescription closure_product_hypergeometric(const DFiniteDescription& D,
                                                  const HypergeometricTerm& h,
                                                  long value_box) {
  const auto& alg = D.basis.algebra();
  if (h.quotients.size() != alg.arity())
    throw std::invalid_argument("closure_product_hypergeometric: arity mismatch");
  for (const auto& q : h.quotients)
    if (q.is_zero())
      throw std::invalid_argument("closure_product_hypergeometric: certificate vanishes");

  // H_a(x) = h(x+a)/h(x) accumulated certificate along a fixed path; twisting
  // each coefficient by 1/H_a turns an annihilator of f into one of f*h
  auto accumulated = [&](const ShiftMonomial& a) {
    RatFun H = RatFun::constant(alg.vars, 1);
    std::vector<long> off(alg.arity(), 0);
    for (std::size_t i = 0; i < alg.arity(); ++i)
      for (int t = 0; t < a[i]; ++t) {
        RatFun q = h.quotients[i];
        for (std::size_t v = 0; v < alg.arity(); ++v)
          if (off[v] != 0) q = q.shift_var(v, off[v]);
        H *= q;
        ++off[i];
      }
    return H;
  };

  std::vector<OreOperator> twisted;
  for (const auto& g : D.basis.elements) {
    OreOperator tg(alg);
    for (const auto& [m, c] : g.terms()) tg.add_term(m, c / accumulated(m));
    twisted.push_back(std::move(tg));
  }
  GroebnerBasis out = left_groebner_basis(std::move(twisted), D.basis.order);

  SequenceTable tf = unroll(D, Box::cube(alg.arity(), 0, value_box));
  SequenceTable th = hypergeometric_table(h, Box::cube(alg.arity(), 0, value_box));
  return finish_description(std::move(out),
                            [&](const Point& p) -> std::optional<Rat> {
                              if (tf.has(p) && th.has(p)) return tf.at(p) * th.at(p);
                              return std::nullopt;
                            },
                            value_box);
}

ProofReport prove_equal(const DFiniteDescription& L, const DFiniteDescription& R,
                        const Box& region) {
  const auto& alg = L.basis.algebra();
  if (!(R.basis.algebra() == alg)) throw std::invalid_argument("prove_equal: algebra mismatch");
  if (region.arity() != alg.arity()) throw std::invalid_argument("prove_equal: region arity mismatch");

  ProofReport rep;
  auto reduces = [](const GroebnerBasis& gens, const GroebnerBasis& by) {
    if (by.elements.empty()) return false;
    for (const auto& g : gens.elements)
      if (!normal_form(g, by).is_zero()) return false;
    return true;
  };
  const GroebnerBasis* common = nullptr;
  if (reduces(L.basis, R.basis)) {
    rep.reduced = true;
    rep.direction = "left-by-right";
    common = &L.basis;
  } else if (reduces(R.basis, L.basis)) {
    rep.reduced = true;
    rep.direction = "right-by-left";
    common = &R.basis;
  } else {
    rep.detail = "neither basis reduces to zero modulo the other";
    return rep;
  }

  auto sc = staircase(*common);
  if (!sc.dfinite) {
    rep.detail = "common description is not d-finite";
    return rep;
  }
  rep.singular = singular_points(*common, region);

  std::set<Point> pts;
  for (const auto& u : sc.under_the_stairs) {
    Point p = region.lo;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += u[i];
    if (region.contains(p)) pts.insert(p);
  }
  pts.insert(rep.singular.begin(), rep.singular.end());
  rep.compared.assign(pts.begin(), pts.end());

  // unroll both sides just far enough to cover the compared points
  Box vbox = region;
  int extent = 0;
  for (const auto& m : sc.lead_monomials)
    for (int e : m) extent = std::max(extent, e);
  for (std::size_t i = 0; i < vbox.hi.size(); ++i) {
    long top = region.lo[i];
    for (const auto& p : rep.compared) top = std::max(top, p[i]);
    vbox.hi[i] = std::min(region.hi[i], top + extent + 4);
  }
  SequenceTable tl = unroll(L, vbox);
  SequenceTable tr = unroll(R, vbox);

  bool all_defined = true;
  for (const auto& p : rep.compared) {
    if (!tl.has(p) || !tr.has(p)) {
      all_defined = false;
      rep.mismatches.push_back(p);
      continue;
    }
    if (tl.at(p) != tr.at(p)) rep.mismatches.push_back(p);
  }
  rep.proved = rep.reduced && all_defined && rep.mismatches.empty();
  if (rep.proved)
    rep.detail = "common annihilator found and all " + std::to_string(rep.compared.size()) +
                 " initial values agree";
  else if (!rep.mismatches.empty())
    rep.detail = all_defined ? "initial values disagree" : "initial values missing";
  return rep;
}

void write_description(std::ostream& out, const DFiniteDescription& D) {
  write_basis(out, D.basis);
  out << "values " << D.initial_values.values().size() << "\n";
  D.initial_values.write(out);
  out << "exceptional " << D.exceptional_points.size() << "\n";
  for (const auto& p : D.exceptional_points) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
    out << "\n";
  }
}

DFiniteDescription read_description(std::istream& in, const OreAlgebra& alg) {
  DFiniteDescription D;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_description: empty input");
  {
    std::istringstream hs(line);
    std::string kw, name;
    hs >> kw >> name;
    if (kw != "order") throw std::runtime_error("read_description: missing order header");
    if (name == "lex") D.basis.order.kind = TermOrder::kLex;
    else if (name == "degrevlex") D.basis.order.kind = TermOrder::kDegRevLex;
    else if (name == "blockelim") {
      D.basis.order.kind = TermOrder::kBlockElim;
      std::size_t idx;
      while (hs >> idx) D.basis.order.first_block.push_back(idx);
    } else {
      throw std::runtime_error("read_description: unknown order '" + name + "'");
    }
  }
  auto expect_count = [&](const std::string& kw) {
    if (!std::getline(in, line)) throw std::runtime_error("read_description: truncated input");
    std::istringstream hs(line);
    std::string got;
    std::size_t count = 0;
    hs >> got >> count;
    if (got != kw) throw std::runtime_error("read_description: expected '" + kw + "' header");
    return count;
  };
  // operators until the values header
  std::ostringstream ops;
  std::size_t nvalues = 0;
  for (;;) {
    if (!std::getline(in, line)) throw std::runtime_error("read_description: truncated input");
    std::istringstream hs(line);
    std::string kw;
    hs >> kw;
    if (kw == "values") {
      hs >> nvalues;
      break;
    }
    ops << line << "\n";
  }
  {
    std::istringstream os(ops.str());
    D.basis.elements = parse_operator_list(os, alg);
  }
  D.initial_values = SequenceTable(static_cast<int>(alg.arity()));
  for (std::size_t i = 0; i < nvalues; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("read_description: truncated values");
    std::istringstream vs(line);
    Point p(alg.arity());
    for (auto& x : p) vs >> x;
    std::string val;
    vs >> val;
    D.initial_values.set(p, parse_rat(val));
  }
  std::size_t nexc = expect_count("exceptional");
  for (std::size_t i = 0; i < nexc; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("read_description: truncated points");
    std::istringstream vs(line);
    Point p(alg.arity());
    for (auto& x : p) vs >> x;
    D.exceptional_points.push_back(p);
  }
  return D;
}

}  // namespace holo
