#include <holo/mpoly.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace holo {

namespace {

void require_same_vars(const MPoly& a, const MPoly& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("MPoly: variable lists differ");
}

}  // namespace

MPoly MPoly::constant(std::vector<std::string> vars, const Rat& c) {
  MPoly p(std::move(vars));
  if (c != 0) p.terms_[Exp(p.vars_.size(), 0)] = c;
  return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, const std::string& name) {
  MPoly p(std::move(vars));
  auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
  if (it == p.vars_.end())
    throw std::invalid_argument("MPoly: unknown variable '" + name + "'");
  Exp e(p.vars_.size(), 0);
  e[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
  p.terms_[e] = 1;
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Exp& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("MPoly: not a constant");
  return terms_.begin()->second;
}

int MPoly::degree(std::size_t var_index) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var_index]);
  return d;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

void MPoly::add_term(const Exp& e, const Rat& c) {
  if (e.size() != vars_.size())
    throw std::invalid_argument("MPoly: exponent arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  require_same_vars(a, b);
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  require_same_vars(a, b);
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same_vars(a, b);
  MPoly r(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exp e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly operator*(const MPoly& a, const Rat& c) {
  MPoly r(a.vars_);
  if (c == 0) return r;
  for (const auto& [e, coef] : a.terms_) r.terms_[e] = coef * c;
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly r = constant(vars_, 1);
  MPoly b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rat MPoly::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != vars_.size())
    throw std::invalid_argument("MPoly::evaluate: arity mismatch");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= rat_pow(point[i], e[i]);
    total += t;
  }
  return total;
}

MPoly MPoly::eval_partial(std::size_t var_index, const Rat& value) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exp e2 = e;
    e2[var_index] = 0;
    r.add_term(e2, c * rat_pow(value, e[var_index]));
  }
  return r;
}

MPoly MPoly::shift_var(std::size_t var_index, long c) const {
  if (c == 0) return *this;
  MPoly x = variable(vars_, vars_[var_index]) + constant(vars_, Rat(c));
  MPoly r(vars_);
  for (const auto& [e, coef] : terms_) {
    Exp e2 = e;
    e2[var_index] = 0;
    MPoly t(vars_);
    t.add_term(e2, coef);
    r += t * x.pow(e[var_index]);
  }
  return r;
}

MPoly MPoly::subst_var(std::size_t var_index, std::size_t target_index, long c) const {
  MPoly x = variable(vars_, vars_[target_index]) + constant(vars_, Rat(c));
  MPoly r(vars_);
  for (const auto& [e, coef] : terms_) {
    Exp e2 = e;
    e2[var_index] = 0;
    MPoly t(vars_);
    t.add_term(e2, coef);
    r += t * x.pow(e[var_index]);
  }
  return r;
}

MPoly MPoly::embed(const std::vector<std::string>& vars) const {
  std::vector<int> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end())
      throw std::invalid_argument("MPoly::embed: missing variable " + vars_[i]);
    where[i] = static_cast<int>(it - vars.begin());
  }
  MPoly r(vars);
  for (const auto& [e, c] : terms_) {
    Exp e2(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e2[static_cast<std::size_t>(where[i])] = e[i];
    r.terms_[e2] = c;
  }
  return r;
}

const Exp& MPoly::lead_exp() const {
  if (terms_.empty()) throw std::logic_error("MPoly: zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rat& MPoly::lead_coeff() const {
  if (terms_.empty()) throw std::logic_error("MPoly: zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // highest term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    if (first) {
      if (c < 0) { out << "-"; c = -c; }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool any_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      int e = it->first[i];
      if (e == 0) continue;
      if (any_var) mono << "*";
      mono << vars_[i];
      if (e > 1) mono << "^" << e;
      any_var = true;
    }
    if (!any_var) {
      out << rat_str(c);
    } else if (c == 1) {
      out << mono.str();
    } else {
      out << rat_str(c) << "*" << mono.str();
    }
  }
  return out.str();
}

MPoly poly_normalize(const MPoly& p) {
  if (p.is_zero()) return p;
  // scale to integer-primitive with positive leading coefficient
  Int den_lcm = 1;
  for (const auto& [e, c] : p.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Int num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    Int n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rat scale = make_rat(den_lcm, num_gcd);
  if (p.lead_coeff() < 0) scale = -scale;
  return p * scale;
}

namespace {

// pseudo-remainder of a by b with respect to one variable
MPoly pseudo_rem(MPoly a, const MPoly& b, std::size_t v) {
  int db = b.degree(v);
  // b as coefficient polynomials in v
  auto coeff_of = [v](const MPoly& p, int k) {
    MPoly c(p.vars());
    for (const auto& [e, coef] : p.terms())
      if (e[v] == k) {
        Exp e2 = e;
        e2[v] = 0;
        c.add_term(e2, coef);
      }
    return c;
  };
  MPoly lcb = coeff_of(b, db);
  while (!a.is_zero() && a.degree(v) >= db) {
    int da = a.degree(v);
    MPoly lca = coeff_of(a, da);
    MPoly xpow = MPoly::variable(a.vars(), a.vars()[v]).pow(da - db);
    a = a * lcb - lca * xpow * b;
  }
  return a;
}

bool vars_used_above(const MPoly& p, std::size_t v) {
  return p.degree(v) > 0;
}

}  // namespace

MPoly poly_content(const MPoly& p, std::size_t v) {
  // gcd of the coefficients of p viewed as a polynomial in variable v
  std::map<int, MPoly> coeffs;
  for (const auto& [e, c] : p.terms()) {
    Exp e2 = e;
    int k = e[v];
    e2[v] = 0;
    auto it = coeffs.find(k);
    if (it == coeffs.end()) it = coeffs.emplace(k, MPoly(p.vars())).first;
    it->second.add_term(e2, c);
  }
  MPoly g(p.vars());
  for (const auto& [k, c] : coeffs) g = poly_gcd(g, c);
  return g;
}

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("poly_gcd: variable lists differ");
  if (a.is_zero()) return poly_normalize(b);
  if (b.is_zero()) return poly_normalize(a);

  // main variable: highest-index variable occurring in either argument
  int main = -1;
  for (int v = static_cast<int>(a.vars().size()) - 1; v >= 0; --v)
    if (vars_used_above(a, static_cast<std::size_t>(v)) ||
        vars_used_above(b, static_cast<std::size_t>(v))) {
      main = v;
      break;
    }
  if (main < 0) return MPoly::constant(a.vars(), 1);  // both constants

  std::size_t v = static_cast<std::size_t>(main);
  MPoly ca = poly_content(a, v), cb = poly_content(b, v);
  MPoly pa = poly_divexact(a, ca), pb = poly_divexact(b, cb);
  MPoly cg = poly_gcd(ca, cb);

  // primitive PRS on the primitive parts
  MPoly r0 = pa, r1 = pb;
  if (r0.degree(v) < r1.degree(v)) std::swap(r0, r1);
  while (!r1.is_zero()) {
    MPoly r2 = pseudo_rem(r0, r1, v);
    if (!r2.is_zero()) r2 = poly_divexact(r2, poly_content(r2, v));
    r0 = r1;
    r1 = r2;
  }
  if (r0.degree(v) == 0) return poly_normalize(cg);
  r0 = poly_divexact(r0, poly_content(r0, v));
  return poly_normalize(cg * r0);
}

MPoly poly_divexact(const MPoly& a, const MPoly& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("poly_divexact: variable lists differ");
  if (b.is_zero()) throw std::invalid_argument("poly_divexact: division by zero");
  MPoly rem = a;
  MPoly q(a.vars());
  const Exp& eb = b.lead_exp();
  const Rat& cb = b.lead_coeff();
  while (!rem.is_zero()) {
    const Exp& ea = rem.lead_exp();
    Exp eq(ea.size());
    for (std::size_t i = 0; i < ea.size(); ++i) {
      eq[i] = ea[i] - eb[i];
      if (eq[i] < 0) throw std::domain_error("poly_divexact: not divisible");
    }
    MPoly t(a.vars());
    t.add_term(eq, rem.lead_coeff() / cb);
    q += t;
    rem -= t * b;
  }
  return q;
}

namespace {

std::vector<Int> positive_divisors(const Int& n_in) {
  Int n = abs(n_in);
  std::vector<Int> divs;
  if (n == 0) return divs;
  std::vector<std::pair<Int, int>> fac;
  Int m = n;
  for (Int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      int e = 0;
      while (m % d == 0) { m /= d; ++e; }
      fac.emplace_back(d, e);
    }
    if (d > 2000000) {
      // remaining cofactor treated as prime-ish: good enough for root candidates
      break;
    }
  }
  if (m > 1) fac.emplace_back(m, 1);
  divs.push_back(1);
  for (const auto& [p, e] : fac) {
    std::size_t sz = divs.size();
    Int pe = 1;
    for (int k = 1; k <= e; ++k) {
      pe *= p;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pe);
    }
  }
  return divs;
}

}  // namespace

std::set<long> integer_roots(const MPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
  // locate the (single) active variable
  int v = -1;
  for (std::size_t i = 0; i < p.vars().size(); ++i)
    if (p.degree(i) > 0) {
      if (v >= 0) throw std::invalid_argument("integer_roots: polynomial not univariate");
      v = static_cast<int>(i);
    }
  std::set<long> roots;
  if (v < 0) return roots;  // nonzero constant: no roots
  std::size_t vv = static_cast<std::size_t>(v);

  // strip the power of the variable; 0 is a root iff there was one
  int low = p.degree(vv);
  for (const auto& [e, c] : p.terms()) low = std::min(low, e[vv]);
  MPoly q(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exp e2 = e;
    e2[vv] -= low;
    q.add_term(e2, c);
  }
  if (low > 0) roots.insert(0);

  q = poly_normalize(q);
  // trailing coefficient (v-degree 0 term); nonzero after stripping
  Rat trailing = 0;
  for (const auto& [e, c] : q.terms())
    if (e[vv] == 0) trailing = c;
  Int t = trailing.get_num();

  auto value_at = [&](long r) {
    std::vector<Rat> pt(p.vars().size(), 0);
    pt[vv] = Rat(r);
    return q.evaluate(pt);
  };
  for (const Int& d : positive_divisors(t)) {
    if (!d.fits_slong_p()) continue;
    long r = d.get_si();
    if (value_at(r) == 0) roots.insert(r);
    if (value_at(-r) == 0) roots.insert(-r);
  }
  return roots;
}

}  // namespace holo
