#include <holo/ore.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace holo {

int OreAlgebra::symbol_index(const std::string& sym) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (symbol(i) == sym) return static_cast<int>(i);
  return -1;
}

bool TermOrder::less(const ShiftMonomial& a, const ShiftMonomial& b) const {
  auto degrevlex_less = [](const ShiftMonomial& x, const ShiftMonomial& y) {
    int dx = mono_total_degree(x), dy = mono_total_degree(y);
    if (dx != dy) return dx < dy;
    // tie: last position where they differ, larger exponent there loses
    for (std::size_t i = x.size(); i-- > 0;)
      if (x[i] != y[i]) return x[i] > y[i];
    return false;
  };
  switch (kind) {
    case kLex: {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    }
    case kDegRevLex:
      return degrevlex_less(a, b);
    case kBlockElim: {
      int da = 0, db = 0;
      for (std::size_t i : first_block) { da += a[i]; db += b[i]; }
      if (da != db) return da < db;
      return degrevlex_less(a, b);
    }
  }
  return false;
}

OreOperator OreOperator::coefficient(const OreAlgebra& alg, const RatFun& c) {
  OreOperator p(alg);
  p.add_term(ShiftMonomial(alg.arity(), 0), c);
  return p;
}

OreOperator OreOperator::shift(const OreAlgebra& alg, std::size_t symbol_index, int power) {
  OreOperator p(alg);
  ShiftMonomial m(alg.arity(), 0);
  m[symbol_index] = power;
  p.add_term(m, RatFun::constant(alg.vars, 1));
  return p;
}

OreOperator OreOperator::monomial_op(const OreAlgebra& alg, const ShiftMonomial& m,
                                     const RatFun& c) {
  OreOperator p(alg);
  p.add_term(m, c);
  return p;
}

void OreOperator::add_term(const ShiftMonomial& m, const RatFun& c) {
  if (m.size() != alg_.arity())
    throw std::invalid_argument("OreOperator: monomial arity mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OreOperator OreOperator::operator-() const {
  OreOperator r(alg_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

OreOperator operator+(const OreOperator& a, const OreOperator& b) {
  if (!(a.alg_ == b.alg_)) throw std::invalid_argument("OreOperator: algebra mismatch");
  OreOperator r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

OreOperator operator-(const OreOperator& a, const OreOperator& b) {
  if (!(a.alg_ == b.alg_)) throw std::invalid_argument("OreOperator: algebra mismatch");
  OreOperator r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

OreOperator operator*(const OreOperator& a, const OreOperator& b) { return op_mul(a, b); }

OreOperator op_mul(const OreOperator& a, const OreOperator& b) {
  if (!(a.algebra() == b.algebra()))
    throw std::invalid_argument("op_mul: algebra mismatch");
  OreOperator r(a.algebra());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      // S^ma * cb = (cb shifted by ma) * S^ma
      RatFun c = cb;
      for (std::size_t i = 0; i < ma.size(); ++i)
        if (ma[i] != 0) c = c.shift_var(i, ma[i]);
      r.add_term(mono_add(ma, mb), ca * c);
    }
  return r;
}

OreOperator OreOperator::scaled(const RatFun& c) const {
  OreOperator r(alg_);
  if (c.is_zero()) return r;
  for (const auto& [m, coef] : terms_) r.terms_[m] = c * coef;
  return r;
}

OreOperator OreOperator::shifted(const ShiftMonomial& m) const {
  OreOperator r(alg_);
  for (const auto& [mm, coef] : terms_) {
    RatFun c = coef;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) c = c.shift_var(i, m[i]);
    r.terms_[mono_add(m, mm)] = c;
  }
  return r;
}

ShiftMonomial OreOperator::lead_monomial(const TermOrder& order) const {
  if (terms_.empty()) throw std::logic_error("OreOperator: zero operator has no lm");
  const ShiftMonomial* best = nullptr;
  for (const auto& [m, c] : terms_)
    if (!best || order.less(*best, m)) best = &m;
  return *best;
}

const RatFun& OreOperator::lead_coeff(const TermOrder& order) const {
  return terms_.at(lead_monomial(order));
}

OreOperator OreOperator::rename(const OreAlgebra& target,
                                const std::vector<std::size_t>& var_map,
                                const std::vector<long>& offsets) const {
  OreOperator r(target);
  for (const auto& [m, c] : terms_) {
    ShiftMonomial m2(target.arity(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) m2[var_map[i]] += m[i];
    // coefficient: rebuild each variable as target variable + offset
    RatFun c2 = RatFun::constant(target.vars, 0);
    // move through monomials of num and den separately
    auto conv = [&](const MPoly& p) {
      MPoly q(target.vars);
      for (const auto& [e, coef] : p.terms()) {
        MPoly t = MPoly::constant(target.vars, coef);
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (e[i] == 0) continue;
          MPoly x = MPoly::variable(target.vars, target.vars[var_map[i]]) +
                    MPoly::constant(target.vars, Rat(offsets[i]));
          t *= x.pow(e[i]);
        }
        q += t;
      }
      return q;
    };
    c2 = RatFun(conv(c.num()), conv(c.den()));
    r.add_term(m2, c2);
  }
  return r;
}

Rat op_apply(const OreOperator& a, const SequenceTable& f, const Point& at) {
  if (static_cast<int>(at.size()) != f.arity() || at.size() != a.algebra().arity())
    throw std::invalid_argument("op_apply: arity mismatch");
  std::vector<Rat> pt(at.size());
  for (std::size_t i = 0; i < at.size(); ++i) pt[i] = Rat(at[i]);
  Rat total = 0;
  for (const auto& [m, c] : a.terms()) {
    Point shifted = at;
    for (std::size_t i = 0; i < m.size(); ++i) shifted[i] += m[i];
    total += c.evaluate(pt) * f.at(shifted);
  }
  return total;
}

SequenceTable op_apply_table(const OreOperator& a, const SequenceTable& f) {
  SequenceTable out(f.arity());
  for (const auto& [p, v] : f.values()) {
    bool ok = true;
    for (const auto& [m, c] : a.terms()) {
      Point q = p;
      for (std::size_t i = 0; i < m.size(); ++i) q[i] += m[i];
      if (!f.has(q)) { ok = false; break; }
    }
    if (!ok) continue;
    try {
      out.set(p, op_apply(a, f, p));
    } catch (const std::domain_error&) {
      // singular coefficient at this point; leave it out
    }
  }
  return out;
}

std::string OreOperator::str() const {
  if (terms_.empty()) return "0";
  // canonical print: degrevlex-descending monomials
  TermOrder ord;
  std::vector<const std::pair<const ShiftMonomial, RatFun>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](auto* x, auto* y) { return ord.less(y->first, x->first); });
  std::ostringstream out;
  bool first = true;
  for (auto* t : ts) {
    bool is_first_term = first;
    std::string cs = t->second.str();
    if (!first) {
      // pull a leading minus out by negating the whole coefficient
      if (!cs.empty() && cs[0] == '-') {
        cs = (-t->second).str();
        out << " - ";
      } else {
        out << " + ";
      }
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < alg_.arity(); ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      if (any) mono << "*";
      mono << alg_.symbol(i);
      if (e > 1) mono << "^" << e;
      any = true;
    }
    bool needs_parens = cs.find_first_of("+- ") != std::string::npos && !(cs[0] == '(');
    if (!any) {
      out << (needs_parens && !is_first_term ? "(" + cs + ")" : cs);
    } else if (cs == "1") {
      out << mono.str();
    } else if (needs_parens) {
      out << "(" << cs << ")*" << mono.str();
    } else {
      out << cs << "*" << mono.str();
    }
  }
  return out.str();
}

}  // namespace holo
