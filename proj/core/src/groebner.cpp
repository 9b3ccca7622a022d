#include <holo/groebner.hpp>

#include <holo/modint.hpp>

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace holo {

namespace {

OreOperator make_monic(const OreOperator& f, const TermOrder& order) {
  if (f.is_zero()) return f;
  return f.scaled(f.lead_coeff(order).inv());
}

// largest monomial of p divisible by some lm(g); returns basis index or -1
int find_reducer(const OreOperator& p, const std::vector<OreOperator>& basis,
                 const std::vector<ShiftMonomial>& lms, const TermOrder& order,
                 ShiftMonomial* which) {
  int best_i = -1;
  const ShiftMonomial* best_m = nullptr;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!mono_divides(lms[i], m)) continue;
      if (!best_m || order.less(*best_m, m)) {
        best_m = &m;
        best_i = static_cast<int>(i);
      }
      break;
    }
  }
  if (best_i >= 0) *which = *best_m;
  return best_i;
}

}  // namespace

std::vector<ShiftMonomial> GroebnerBasis::lead_monomials() const {
  std::vector<ShiftMonomial> r;
  r.reserve(elements.size());
  for (const auto& g : elements) r.push_back(g.lead_monomial(order));
  return r;
}

OreOperator normal_form(OreOperator p, const GroebnerBasis& G) {
  if (G.elements.empty()) return p;
  const auto lms = G.lead_monomials();
  ShiftMonomial m;
  int i;
  while (!p.is_zero() && (i = find_reducer(p, G.elements, lms, G.order, &m)) >= 0) {
    // g := (m / lm(g_i)) * g_i, then cancel the coefficient at m
    OreOperator g = G.elements[static_cast<std::size_t>(i)].shifted(mono_sub(m, lms[static_cast<std::size_t>(i)]));
    const RatFun& cp = p.terms().at(m);
    const RatFun& cg = g.terms().at(m);
    p -= g.scaled(cp / cg);
  }
  return p;
}

OreOperator insert_value(const OreOperator& p, const std::string& var, long n0) {
  int vi = -1;
  for (std::size_t i = 0; i < p.algebra().vars.size(); ++i)
    if (p.algebra().vars[i] == var) vi = static_cast<int>(i);
  if (vi < 0) throw std::invalid_argument("insert_value: unknown variable " + var);
  OreOperator r(p.algebra());
  for (const auto& [m, c] : p.terms()) {
    try {
      r.add_term(m, c.eval_partial(static_cast<std::size_t>(vi), Rat(n0)));
    } catch (const std::domain_error&) {
      throw UnluckyPoint("denominator vanishes at " + var + "=" + std::to_string(n0));
    }
  }
  return r;
}

OreOperator reduce_mod(const OreOperator& p, std::uint64_t prime) {
  OreOperator r(p.algebra());
  for (const auto& [m, c] : p.terms()) {
    // clear the coefficient to an integer-denominator form, then reduce
    MPoly den = poly_normalize(c.den());
    Rat scale = c.den().lead_coeff() / den.lead_coeff();
    MPoly num = c.num() * (1 / scale);
    MPoly num2(num.vars()), den2(den.vars());
    bool den_zero = true;
    for (const auto& [e, coef] : den.terms()) {
      Rat img(mod_image(coef, prime).residue());
      if (img != 0) { den2.add_term(e, img); den_zero = false; }
    }
    if (den_zero) throw UnluckyPoint("denominator vanishes mod prime");
    for (const auto& [e, coef] : num.terms()) {
      Rat img(mod_image(coef, prime).residue());
      if (img != 0) num2.add_term(e, img);
    }
    if (!num2.is_zero()) r.add_term(m, RatFun(num2, den2));
  }
  return r;
}

namespace {

OreOperator modular_nf_impl(const OreOperator& p_in, const GroebnerBasis& G,
                            const std::string& insert_var, long n0,
                            std::optional<std::uint64_t> prime, bool shift_before_h) {
  OreOperator p = insert_value(p_in, insert_var, n0);
  if (prime) p = reduce_mod(p, *prime);
  if (G.elements.empty()) return p;
  const auto lms = G.lead_monomials();
  ShiftMonomial m;
  int i;
  while (!p.is_zero() && (i = find_reducer(p, G.elements, lms, G.order, &m)) >= 0) {
    const OreOperator& gi = G.elements[static_cast<std::size_t>(i)];
    ShiftMonomial quot = mono_sub(m, lms[static_cast<std::size_t>(i)]);
    OreOperator g = shift_before_h
                        ? insert_value(gi.shifted(quot), insert_var, n0)
                        : insert_value(gi, insert_var, n0).shifted(quot);
    if (prime) g = reduce_mod(g, *prime);
    auto it = g.terms().find(m);
    if (it == g.terms().end() || it->second.is_zero())
      throw UnluckyPoint("leading coefficient vanishes under insertion");
    const RatFun cp = p.terms().at(m);
    p -= g.scaled(cp / it->second);
    if (prime) p = reduce_mod(p, *prime);
  }
  return p;
}

}  // namespace

OreOperator modular_normal_form(const OreOperator& p, const GroebnerBasis& G,
                                const std::string& insert_var, long n0,
                                std::optional<std::uint64_t> prime) {
  return modular_nf_impl(p, G, insert_var, n0, prime, /*shift_before_h=*/true);
}

OreOperator modular_normal_form_wrong_order(const OreOperator& p, const GroebnerBasis& G,
                                            const std::string& insert_var, long n0) {
  return modular_nf_impl(p, G, insert_var, n0, std::nullopt, /*shift_before_h=*/false);
}

OreOperator spolynomial(const OreOperator& f, const OreOperator& g, const TermOrder& order) {
  ShiftMonomial lf = f.lead_monomial(order), lg = g.lead_monomial(order);
  ShiftMonomial l = mono_lcm(lf, lg);
  OreOperator a = f.shifted(mono_sub(l, lf));
  OreOperator b = g.shifted(mono_sub(l, lg));
  return a.scaled(a.lead_coeff(order).inv()) - b.scaled(b.lead_coeff(order).inv());
}

GroebnerBasis left_groebner_basis(std::vector<OreOperator> gens, const TermOrder& order) {
  GroebnerBasis G;
  G.order = order;
  for (auto& g : gens)
    if (!g.is_zero()) G.elements.push_back(make_monic(g, order));
  if (G.elements.empty()) return G;

  // Buchberger with normal (smallest lcm) pair selection
  struct Pair { std::size_t i, j; ShiftMonomial lcm; };
  std::vector<Pair> pairs;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      pairs.push_back({i, k,
                       mono_lcm(G.elements[i].lead_monomial(order),
                                G.elements[k].lead_monomial(order))});
  };
  for (std::size_t k = 1; k < G.elements.size(); ++k) add_pairs(k);

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pairs.size(); ++i)
      if (order.less(pairs[i].lcm, pairs[best].lcm)) best = i;
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    OreOperator s = spolynomial(G.elements[pr.i], G.elements[pr.j], order);
    OreOperator r = normal_form(std::move(s), G);
    if (!r.is_zero()) {
      G.elements.push_back(make_monic(r, order));
      add_pairs(G.elements.size() - 1);
    }
  }

  // inter-reduce: drop elements whose lm is divisible by another's lm,
  // then fully reduce each element against the rest
  std::vector<OreOperator> minimal;
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    ShiftMonomial li = G.elements[i].lead_monomial(order);
    bool redundant = false;
    for (std::size_t j = 0; j < G.elements.size(); ++j) {
      if (i == j) continue;
      ShiftMonomial lj = G.elements[j].lead_monomial(order);
      if (mono_divides(lj, li) && (li != lj || j < i)) { redundant = true; break; }
    }
    if (!redundant) minimal.push_back(G.elements[i]);
  }
  GroebnerBasis R;
  R.order = order;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    GroebnerBasis others;
    others.order = order;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.elements.push_back(minimal[j]);
    OreOperator red = others.elements.empty() ? minimal[i] : normal_form(minimal[i], others);
    R.elements.push_back(make_monic(red, order));
  }
  std::sort(R.elements.begin(), R.elements.end(),
            [&](const OreOperator& a, const OreOperator& b) {
              return order.less(a.lead_monomial(order), b.lead_monomial(order));
            });
  return R;
}

Staircase staircase_of(const std::vector<ShiftMonomial>& lms, std::size_t arity) {
  Staircase s;
  s.lead_monomials = lms;
  if (lms.empty()) {
    s.dfinite = false;  // zero ideal: everything is under the stairs
    return s;
  }
  // finite iff each axis is cut off by a pure power
  std::vector<int> axis_bound(arity, -1);
  for (const auto& m : lms) {
    int nz = -1;
    bool pure = true;
    for (std::size_t i = 0; i < arity; ++i) {
      if (m[i] == 0) continue;
      if (nz >= 0) { pure = false; break; }
      nz = static_cast<int>(i);
    }
    if (nz < 0) {
      // constant leading monomial: whole algebra, empty staircase
      s.dfinite = true;
      s.under_the_stairs.clear();
      return s;
    }
    if (pure) {
      std::size_t i = static_cast<std::size_t>(nz);
      if (axis_bound[i] < 0 || m[i] < axis_bound[i]) axis_bound[i] = m[i];
    }
  }
  for (std::size_t i = 0; i < arity; ++i)
    if (axis_bound[i] < 0) {
      s.dfinite = false;
      return s;
    }
  s.dfinite = true;
  // enumerate the box and keep monomials not divisible by any lm
  ShiftMonomial cur(arity, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t d) {
    if (d == arity) {
      for (const auto& m : lms)
        if (mono_divides(m, cur)) return;
      s.under_the_stairs.push_back(cur);
      return;
    }
    for (int e = 0; e < axis_bound[d]; ++e) {
      cur[d] = e;
      rec(d + 1);
    }
    cur[d] = 0;
  };
  rec(0);
  return s;
}

Staircase staircase(const GroebnerBasis& G) {
  if (G.elements.empty()) return staircase_of({}, 0);
  return staircase_of(G.lead_monomials(), G.algebra().arity());
}

namespace {

std::string order_name(const TermOrder& o) {
  switch (o.kind) {
    case TermOrder::kLex: return "lex";
    case TermOrder::kDegRevLex: return "degrevlex";
    case TermOrder::kBlockElim: {
      std::string s = "blockelim";
      for (std::size_t i : o.first_block) s += " " + std::to_string(i);
      return s;
    }
  }
  return "degrevlex";
}

}  // namespace

void write_basis(std::ostream& out, const GroebnerBasis& G) {
  out << "order " << order_name(G.order) << "\n";
  for (const auto& g : G.elements) out << g.str() << "\n";
}

GroebnerBasis read_basis(std::istream& in, const OreAlgebra& alg) {
  GroebnerBasis G;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_basis: empty input");
  std::istringstream hs(line);
  std::string kw, name;
  hs >> kw >> name;
  if (kw != "order") throw std::runtime_error("read_basis: missing order header");
  if (name == "lex") G.order.kind = TermOrder::kLex;
  else if (name == "degrevlex") G.order.kind = TermOrder::kDegRevLex;
  else if (name == "blockelim") {
    G.order.kind = TermOrder::kBlockElim;
    std::size_t idx;
    while (hs >> idx) G.order.first_block.push_back(idx);
  } else {
    throw std::runtime_error("read_basis: unknown order '" + name + "'");
  }
  G.elements = parse_operator_list(in, alg);
  return G;
}

}  // namespace holo
