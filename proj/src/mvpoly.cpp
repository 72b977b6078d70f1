#include "ffgcd/mvpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ffgcd {

long total_degree(const Exponent& e) {
  long s = 0;
  for (int x : e) s += x;
  return s;
}

int grlex_cmp(const Exponent& a, const Exponent& b) {
  long da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

MvPoly::MvPoly(size_t arity, const K& c) : n_(arity) {
  if (!c.is_zero()) t_.emplace(Exponent(arity, 0), c);
}

MvPoly MvPoly::variable(size_t arity, size_t idx) {
  if (idx >= arity) throw std::invalid_argument("MvPoly::variable: index out of range");
  Exponent e(arity, 0);
  e[idx] = 1;
  return monomial(arity, e, K(1));
}

MvPoly MvPoly::monomial(size_t arity, const Exponent& e, const K& c) {
  if (e.size() != arity) throw std::invalid_argument("MvPoly::monomial: bad exponent arity");
  MvPoly p(arity);
  p.put(e, c);
  return p;
}

MvPoly MvPoly::from_terms(size_t arity, const std::vector<std::pair<Exponent, K>>& terms) {
  MvPoly p(arity);
  for (const auto& [e, c] : terms) {
    if (e.size() != arity) throw std::invalid_argument("MvPoly::from_terms: bad exponent arity");
    auto it = p.t_.find(e);
    if (it == p.t_.end())
      p.put(e, c);
    else {
      K s = it->second + c;
      p.t_.erase(it);
      p.put(e, s);
    }
  }
  return p;
}

void MvPoly::put(const Exponent& e, const K& c) {
  for (int x : e)
    if (x < 0) throw std::invalid_argument("MvPoly: negative exponent");
  if (!c.is_zero()) t_[e] = c;
}

bool MvPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && total_degree(t_.begin()->first) == 0);
}

K MvPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("MvPoly: not a constant");
  return t_.empty() ? K() : t_.begin()->second;
}

long MvPoly::degree() const {
  if (t_.empty()) return -1;
  return total_degree(t_.rbegin()->first);
}

long MvPoly::degree_in(size_t v) const {
  long d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, static_cast<long>(e[v]));
  return d;
}

const Exponent& MvPoly::leading_monomial() const {
  if (t_.empty()) throw std::domain_error("MvPoly: zero polynomial has no leading monomial");
  return t_.rbegin()->first;
}

const K& MvPoly::leading_coeff() const {
  if (t_.empty()) throw std::domain_error("MvPoly: zero polynomial has no leading coefficient");
  return t_.rbegin()->second;
}

K MvPoly::coeff(const Exponent& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? K() : it->second;
}

std::vector<K> MvPoly::coefficients() const {
  std::vector<K> out;
  out.reserve(t_.size());
  for (const auto& [e, c] : t_) out.push_back(c);
  return out;
}

std::vector<size_t> MvPoly::vars_present() const {
  std::vector<size_t> out;
  for (size_t v = 0; v < n_; ++v)
    for (const auto& [e, c] : t_)
      if (e[v] > 0) {
        out.push_back(v);
        break;
      }
  return out;
}

MvPoly MvPoly::operator-() const {
  MvPoly r(n_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

MvPoly MvPoly::operator+(const MvPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("MvPoly: arity mismatch");
  MvPoly r = *this;
  for (const auto& [e, c] : o.t_) {
    auto it = r.t_.find(e);
    if (it == r.t_.end())
      r.t_.emplace(e, c);
    else {
      it->second = it->second + c;
      if (it->second.is_zero()) r.t_.erase(it);
    }
  }
  return r;
}

MvPoly MvPoly::operator-(const MvPoly& o) const { return *this + (-o); }

MvPoly MvPoly::operator*(const MvPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("MvPoly: arity mismatch");
  MvPoly r(n_);
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      Exponent e(n_);
      for (size_t i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
      K c = c1 * c2;
      auto it = r.t_.find(e);
      if (it == r.t_.end()) {
        if (!c.is_zero()) r.t_.emplace(std::move(e), std::move(c));
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
  return r;
}

MvPoly MvPoly::scaled(const K& c) const {
  MvPoly r(n_);
  if (c.is_zero()) return r;
  for (const auto& [e, a] : t_) r.t_.emplace(e, a * c);
  return r;
}

MvPoly MvPoly::pow(unsigned e) const {
  MvPoly r(n_, K(1)), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

MvPoly MvPoly::derivative(size_t v) const {
  MvPoly r(n_);
  for (const auto& [e, c] : t_) {
    if (e[v] == 0) continue;
    Exponent d = e;
    d[v] -= 1;
    K nc = c * K(e[v]);
    auto it = r.t_.find(d);
    if (it == r.t_.end())
      r.t_.emplace(std::move(d), std::move(nc));
    else
      it->second = it->second + nc;
  }
  return r;
}

K MvPoly::eval(const std::vector<K>& xs) const {
  if (xs.size() != n_) throw std::invalid_argument("MvPoly::eval: arity mismatch");
  // power tables per variable
  std::vector<std::vector<K>> pw(n_);
  for (size_t v = 0; v < n_; ++v) {
    long d = degree_in(v);
    pw[v].reserve(static_cast<size_t>(d) + 1);
    pw[v].push_back(K(1));
    for (long k = 1; k <= d; ++k) pw[v].push_back(pw[v].back() * xs[v]);
  }
  K acc;
  for (const auto& [e, c] : t_) {
    K term = c;
    for (size_t v = 0; v < n_; ++v)
      if (e[v] > 0) term = term * pw[v][static_cast<size_t>(e[v])];
    acc = acc + term;
  }
  return acc;
}

MvPoly MvPoly::substitute(size_t v, const K& c) const {
  long d = degree_in(v);
  std::vector<K> pw;
  pw.push_back(K(1));
  for (long k = 1; k <= d; ++k) pw.push_back(pw.back() * c);
  MvPoly r(n_);
  for (const auto& [e, a] : t_) {
    Exponent ne = e;
    ne[v] = 0;
    K nc = a * pw[static_cast<size_t>(e[v])];
    if (nc.is_zero()) continue;
    auto it = r.t_.find(ne);
    if (it == r.t_.end())
      r.t_.emplace(std::move(ne), std::move(nc));
    else {
      it->second = it->second + nc;
      if (it->second.is_zero()) r.t_.erase(it);
    }
  }
  return r;
}

MvPoly MvPoly::drop_var(size_t v) const {
  MvPoly r(n_ - 1);
  for (const auto& [e, c] : t_) {
    if (e[v] != 0) throw std::domain_error("MvPoly::drop_var: variable still occurs");
    Exponent ne;
    ne.reserve(n_ - 1);
    for (size_t i = 0; i < n_; ++i)
      if (i != v) ne.push_back(e[i]);
    r.t_.emplace(std::move(ne), c);
  }
  return r;
}

MvPoly MvPoly::monic_normalized() const {
  if (t_.empty()) throw std::domain_error("MvPoly: cannot normalize zero");
  return scaled(leading_coeff().inverse());
}

std::string MvPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    const auto& [e, c] = *it;
    bool has_var = total_degree(e) > 0;
    bool unit = (c == K(1));
    if (!has_var || !unit) {
      if (c.is_constant() && !(c.constant_value() < 0))
        out << c.str();
      else
        out << "(" << c.str() << ")";
      if (has_var) out << "*";
    }
    bool firstv = true;
    for (size_t v = 0; v < n_; ++v) {
      if (e[v] == 0) continue;
      if (!firstv) out << "*";
      firstv = false;
      out << "x" << (v + 1);
      if (e[v] > 1) out << "^" << e[v];
    }
  }
  return out.str();
}

std::optional<MvPoly> divide_exact(const MvPoly& F, const MvPoly& G) {
  if (G.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (F.arity() != G.arity()) throw std::invalid_argument("divide_exact: arity mismatch");
  size_t n = F.arity();
  MvPoly R = F, Q(n);
  const Exponent& gl = G.leading_monomial();
  const K& gc = G.leading_coeff();
  while (!R.is_zero()) {
    const Exponent& rl = R.leading_monomial();
    Exponent qe(n);
    for (size_t i = 0; i < n; ++i) {
      qe[i] = rl[i] - gl[i];
      if (qe[i] < 0) return std::nullopt;
    }
    MvPoly term = MvPoly::monomial(n, qe, R.leading_coeff() / gc);
    Q = Q + term;
    R = R - term * G;
  }
  return Q;
}

namespace {

// F viewed as a polynomial in x_v with MvPoly coefficients (x_v cleared)
std::map<int, MvPoly> univariate_view(const MvPoly& F, size_t v) {
  std::map<int, MvPoly> out;
  for (const auto& [e, c] : F.terms()) {
    Exponent ne = e;
    int k = ne[v];
    ne[v] = 0;
    auto [it, fresh] = out.try_emplace(k, F.arity());
    it->second = it->second + MvPoly::monomial(F.arity(), ne, c);
  }
  return out;
}

MvPoly exact(const MvPoly& F, const MvPoly& G, const char* who) {
  auto q = divide_exact(F, G);
  if (!q) throw std::logic_error(std::string(who) + ": inexact division");
  return *q;
}

MvPoly content_in(const MvPoly& F, size_t v) {
  auto view = univariate_view(F, v);
  MvPoly c(F.arity());
  for (const auto& [k, coeffpoly] : view) c = c.is_zero() ? coeffpoly : mv_gcd(c, coeffpoly);
  return c.monic_normalized();
}

MvPoly leadcoeff_in(const MvPoly& F, size_t v) {
  auto view = univariate_view(F, v);
  return view.rbegin()->second;
}

// pseudo-remainder of F by G in the variable v
MvPoly prem(MvPoly F, const MvPoly& G, size_t v) {
  long dG = G.degree_in(v);
  MvPoly L = leadcoeff_in(G, v);
  while (!F.is_zero() && F.degree_in(v) >= dG) {
    long dF = F.degree_in(v);
    MvPoly lf = leadcoeff_in(F, v);
    Exponent shift(F.arity(), 0);
    shift[v] = static_cast<int>(dF - dG);
    F = F * L - G * lf * MvPoly::monomial(F.arity(), shift, K(1));
  }
  return F;
}

}  // namespace

namespace {

// specialization probe: when the other variables are pinned to points that
// keep both leading coefficients alive and the specialized pair is coprime,
// the primitive parts share no factor
bool primitive_parts_coprime_probe(const MvPoly& A, const MvPoly& B, size_t v) {
  size_t n = A.arity();
  for (long seed = 2; seed < 5; ++seed) {
    MvPoly a = A, b = B;
    long x = seed;
    for (size_t j = 0; j < n; ++j) {
      if (j == v) continue;
      a = a.substitute(j, K(Rat(x)));
      b = b.substitute(j, K(Rat(x)));
      x += 3;
    }
    if (a.degree_in(v) != A.degree_in(v) || b.degree_in(v) != B.degree_in(v)) continue;
    // univariate gcd over K in x_v
    std::map<int, K> av, bv;
    for (const auto& [e, c] : a.terms()) av[e[v]] = c;
    for (const auto& [e, c] : b.terms()) bv[e[v]] = c;
    auto to_vec = [](const std::map<int, K>& m, long deg) {
      std::vector<K> out(static_cast<size_t>(deg) + 1);
      for (const auto& [k, c] : m) out[static_cast<size_t>(k)] = c;
      return out;
    };
    std::vector<K> ar = to_vec(av, a.degree_in(v)), br = to_vec(bv, b.degree_in(v));
    // Euclid over the field K
    while (!br.empty()) {
      while (!ar.empty() && ar.back().is_zero()) ar.pop_back();
      while (!br.empty() && br.back().is_zero()) br.pop_back();
      if (br.empty()) break;
      if (ar.size() < br.size()) std::swap(ar, br);
      if (br.size() == 1) return true;  // specialized gcd is a unit
      K inv = br.back().inverse();
      while (ar.size() >= br.size()) {
        K c = ar.back() * inv;
        size_t shift = ar.size() - br.size();
        for (size_t i = 0; i < br.size(); ++i) ar[shift + i] = ar[shift + i] - c * br[i];
        while (!ar.empty() && ar.back().is_zero()) ar.pop_back();
        if (ar.empty()) break;
      }
      std::swap(ar, br);
    }
  }
  return false;  // inconclusive
}

}  // namespace

MvPoly mv_gcd(const MvPoly& F, const MvPoly& G) {
  if (F.arity() != G.arity()) throw std::invalid_argument("mv_gcd: arity mismatch");
  if (F.is_zero() && G.is_zero()) throw std::domain_error("mv_gcd: both zero");
  size_t n = F.arity();
  if (F.is_zero()) return G.monic_normalized();
  if (G.is_zero()) return F.monic_normalized();
  if (F.is_constant() || G.is_constant()) return MvPoly(n, K(1));
  auto vf = F.vars_present(), vg = G.vars_present();
  size_t v = std::min(vf.front(), vg.front());
  if (F.degree_in(v) == 0 || G.degree_in(v) == 0) {
    // v occurs in only one of them: gcd divides the content of that one
    const MvPoly& with = F.degree_in(v) > 0 ? F : G;
    const MvPoly& without = F.degree_in(v) > 0 ? G : F;
    return mv_gcd(content_in(with, v), without);
  }
  MvPoly cF = content_in(F, v), cG = content_in(G, v);
  MvPoly A = exact(F, cF, "mv_gcd"), B = exact(G, cG, "mv_gcd");
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  MvPoly result(n, K(1));
  if (n > 1 && primitive_parts_coprime_probe(A, B, v)) {
    // primitive parts proved coprime without running the remainder sequence
  } else {
    while (true) {
      MvPoly R = prem(A, B, v);
      if (R.is_zero()) {
        result = exact(B, content_in(B, v), "mv_gcd");
        break;
      }
      if (R.degree_in(v) == 0) break;  // coprime primitive parts
      A = std::move(B);
      B = exact(R, content_in(R, v), "mv_gcd");
    }
  }
  return (mv_gcd(cF, cG) * result).monic_normalized();
}

bool is_coprime(const MvPoly& F, const MvPoly& G) { return mv_gcd(F, G).is_constant(); }

long gauss_valuation(const MvPoly& F, const ClosedPoint& p) {
  if (F.is_zero()) throw std::domain_error("gauss_valuation: zero polynomial");
  bool first = true;
  long m = 0;
  for (const auto& [e, c] : F.terms()) {
    long v = *valuation(c, p);
    if (first || v < m) m = v;
    first = false;
  }
  return m;
}

long mv_height(const MvPoly& F) {
  if (F.is_zero()) throw std::domain_error("mv_height: zero polynomial");
  return projective_height(F.coefficients());
}

long mv_relevant_height(const MvPoly& F) {
  if (F.is_zero()) throw std::domain_error("mv_relevant_height: zero polynomial");
  std::vector<K> cs = F.coefficients();
  cs.insert(cs.begin(), K(1));
  return projective_height(cs);
}

std::vector<std::pair<MvPoly, int>> mv_squarefree_decomposition(const MvPoly& F) {
  if (F.is_zero()) throw std::domain_error("mv_squarefree_decomposition: zero polynomial");
  std::vector<std::pair<MvPoly, int>> out;
  MvPoly P = F.monic_normalized();
  if (P.is_constant()) return out;
  size_t v = P.vars_present().front();
  MvPoly c = content_in(P, v);
  MvPoly pp = exact(P, c, "mv_squarefree");
  out = mv_squarefree_decomposition(c);  // factors free of x_v
  if (!pp.is_constant()) {
    MvPoly d = pp.derivative(v);
    MvPoly g = mv_gcd(pp, d);
    MvPoly b = exact(pp, g, "mv_squarefree");
    MvPoly w = exact(d, g, "mv_squarefree");
    int i = 1;
    while (!b.is_constant()) {
      MvPoly z = w - b.derivative(v);
      MvPoly q = mv_gcd(b, z);
      if (!q.is_constant()) out.emplace_back(q, i);
      b = exact(b, q, "mv_squarefree");
      w = exact(z, q, "mv_squarefree");
      ++i;
    }
  }
  return out;
}

DthPowerFreeForm dth_power_free_decompose(const MvPoly& F, int d) {
  if (F.is_zero()) throw std::domain_error("dth_power_free_decompose: zero polynomial");
  if (d < 2) throw std::invalid_argument("dth_power_free_decompose: d must be >= 2");
  size_t n = F.arity();
  DthPowerFreeForm out{F.leading_coeff(), Exponent(n, 0), MvPoly(n, K(1)), MvPoly(n, K(1))};
  MvPoly body = F.monic_normalized();
  // largest monomial dividing every term
  Exponent mono(n, 0);
  for (size_t v = 0; v < n; ++v) {
    int mn = -1;
    for (const auto& [e, c] : body.terms()) mn = mn < 0 ? e[v] : std::min(mn, e[v]);
    mono[v] = std::max(mn, 0);
  }
  out.monomial = mono;
  body = exact(body, MvPoly::monomial(n, mono, K(1)), "dth_power_free_decompose");
  for (const auto& [q, e] : mv_squarefree_decomposition(body)) {
    if (e / d > 0) out.root = out.root * q.pow(static_cast<unsigned>(e / d));
    if (e % d > 0) out.residual = out.residual * q.pow(static_cast<unsigned>(e % d));
  }
  return out;
}

MvPoly FactoredForm::assemble(size_t arity) const {
  MvPoly r = MvPoly::monomial(arity, monomial, constant);
  for (const auto& [p, e] : factors) r = r * p.pow(static_cast<unsigned>(e));
  return r;
}

void FactoredForm::verify(size_t arity) const {
  if (constant.is_zero()) throw std::invalid_argument("FactoredForm: zero constant");
  if (monomial.size() != arity) throw std::invalid_argument("FactoredForm: bad monomial arity");
  for (const auto& [p, e] : factors) {
    if (e < 1) throw std::invalid_argument("FactoredForm: multiplicity < 1");
    if (p.is_constant()) throw std::invalid_argument("FactoredForm: constant factor");
    if (p.arity() != arity) throw std::invalid_argument("FactoredForm: factor arity mismatch");
  }
  for (size_t i = 0; i < factors.size(); ++i)
    for (size_t j = i + 1; j < factors.size(); ++j)
      if (!is_coprime(factors[i].first, factors[j].first))
        throw std::invalid_argument("FactoredForm: declared factors are not coprime");
}

bool certify_irreducible_deg_le2(const MvPoly& P) {
  if (P.is_zero() || P.is_constant()) return false;
  long deg = P.degree();
  if (deg > 2) throw std::invalid_argument("certify_irreducible_deg_le2: degree > 2");
  if (P.term_count() == 1) return deg == 1;  // bare monomial
  if (deg == 1) return true;
  size_t v = P.vars_present().front();
  auto view = univariate_view(P, v);
  if (P.degree_in(v) == 1) {
    if (!view.count(0)) return false;  // x_v divides P
    // A*x_v + B irreducible iff gcd(A, B) is a unit
    return is_coprime(view.at(1), view.at(0));
  }
  // a*x_v^2 + b*x_v + c with a in K*; reducible over kbar(t) iff b^2 - 4ac is a square
  MvPoly a = view.count(2) ? view.at(2) : MvPoly(P.arity());
  MvPoly b = view.count(1) ? view.at(1) : MvPoly(P.arity());
  MvPoly c = view.count(0) ? view.at(0) : MvPoly(P.arity());
  MvPoly disc = b * b - a * c * MvPoly(P.arity(), K(4));
  if (disc.is_zero()) return false;
  K lead = disc.leading_coeff();
  for (const auto& [q, e] : mv_squarefree_decomposition(disc))
    if (e % 2 != 0) return true;  // not a square: irreducible
  return !is_dth_power(lead, 2);
}

}  // namespace ffgcd
