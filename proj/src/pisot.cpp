#include "ffgcd/pisot.hpp"

#include <algorithm>
#include <map>

#include "ffgcd/heights.hpp"
#include "ffgcd/linalg.hpp"

namespace ffgcd {

ExpPoly::ExpPoly(std::vector<ExpTerm> terms) {
  for (auto& t : terms) {
    if (t.beta.is_zero()) throw std::invalid_argument("ExpPoly: zero root");
    if (t.B.is_zero()) continue;
    bool merged = false;
    for (auto& have : terms_)
      if (have.beta == t.beta) {
        have.B = have.B + t.B;
        merged = true;
        break;
      }
    if (!merged) terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const ExpTerm& t) { return t.B.is_zero(); });
}

ExpPoly ExpPoly::term(const KPoly& B, const K& beta) { return ExpPoly({ExpTerm{B, beta}}); }

ExpPoly ExpPoly::parse(const std::string& text) {
  std::vector<ExpTerm> terms;
  for (const auto& [B, beta] : parse_exp_pairs(text))
    terms.push_back(ExpTerm{KPoly::from_mvpoly(B, 0), beta});
  return ExpPoly(std::move(terms));
}

K ExpPoly::eval(long n) const {
  K acc;
  for (const auto& t : terms_) acc = acc + t.B.eval(K(Rat(n))) * t.beta.pow(n);
  return acc;
}

std::vector<K> ExpPoly::eval_range(long lo, long hi) const {
  std::vector<K> pw;
  pw.reserve(terms_.size());
  for (const auto& t : terms_) pw.push_back(t.beta.pow(lo));
  std::vector<K> out;
  for (long m = lo; m <= hi; ++m) {
    K acc;
    for (size_t i = 0; i < terms_.size(); ++i) acc = acc + terms_[i].B.eval(K(Rat(m))) * pw[i];
    out.push_back(acc);
    for (size_t i = 0; i < terms_.size(); ++i) pw[i] = pw[i] * terms_[i].beta;
  }
  return out;
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
  std::vector<ExpTerm> ts = terms_;
  ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
  return ExpPoly(std::move(ts));
}

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
  std::vector<ExpTerm> ts;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) ts.push_back(ExpTerm{a.B * b.B, a.beta * b.beta});
  return ExpPoly(std::move(ts));
}

ExpPoly ExpPoly::pow(unsigned e) const {
  ExpPoly r = ExpPoly::term(KPoly(K(1)), K(1));
  ExpPoly b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

ExpPoly ExpPoly::scaled(const K& c) const {
  std::vector<ExpTerm> ts;
  for (const auto& t : terms_) ts.push_back(ExpTerm{t.B.scaled(c), t.beta});
  return ExpPoly(std::move(ts));
}

std::string ExpPoly::str() const {
  if (terms_.empty()) return "(0 ; 1)";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ", ";
    out += "(" + terms_[i].B.str() + " ; " + terms_[i].beta.str() + ")";
  }
  return out;
}

namespace {

long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("exponent does not fit a long");
  return z.get_si();
}

K beta_power_product(const std::vector<K>& betas, const std::vector<Int>& exps) {
  K r(1);
  for (size_t i = 0; i < betas.size(); ++i) {
    long e = to_long(exps[i]);
    if (e != 0) r = r * betas[i].pow(e);
  }
  return r;
}

}  // namespace

GammaBasis gamma_basis(const ExpPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("gamma_basis: zero exponential polynomial");
  std::vector<K> betas;
  for (const auto& t : b.terms()) betas.push_back(t.beta);
  UnitTuple bt = UnitTuple::build(betas);
  HnfResult hnf = hnf_rows(bt.exponent_matrix);
  // zero rows of U form a basis of the relation lattice; each relation must
  // evaluate to exactly 1 or Gamma meets k* nontrivially
  for (size_t j = hnf.rank; j < hnf.U.size(); ++j) {
    K c = beta_power_product(betas, hnf.U[j]);
    if (c != K(1))
      throw GammaHypothesisError("Gamma meets k* in the nontrivial constant " + c.str(), c);
  }
  GammaBasis out;
  std::vector<K> us;
  for (size_t j = 0; j < hnf.rank; ++j) us.push_back(beta_power_product(betas, hnf.U[j]));
  out.basis = UnitTuple::build(us);
  for (size_t i = 0; i < betas.size(); ++i) {
    std::vector<Int> row(bt.exponent_matrix[i]);
    std::vector<Int> coords = hnf_coordinates(hnf, row);
    std::vector<long> e(coords.size());
    for (size_t j = 0; j < coords.size(); ++j) e[j] = to_long(coords[j]);
    if (out.basis.power_product(e) != betas[i])
      throw std::logic_error("gamma_basis: reconstruction failed");
    out.expr.push_back(std::move(e));
  }
  std::vector<ClosedPoint> pts = {ClosedPoint::infinity()};
  PlaceSet S(pts);
  for (const K& u : us)
    if (!u.is_constant()) S = S.united(support(u));
  out.support = S;
  return out;
}

LaurentModel laurent_model(const ExpPoly& b, long d) {
  if (d < 1) throw std::invalid_argument("laurent_model: d must be positive");
  LaurentModel lm;
  lm.d = d;
  lm.gb = gamma_basis(b);
  size_t n = lm.gb.basis.size();
  long minexp = 0;
  for (const auto& row : lm.gb.expr)
    for (long e : row) minexp = std::min(minexp, e);
  long h = minexp < 0 ? (-minexp + d - 1) / d : 0;
  lm.twist_h = static_cast<int>(h);
  MvPoly f(1 + n);
  const auto& terms = b.terms();
  for (size_t i = 0; i < terms.size(); ++i) {
    Exponent e(1 + n, 0);
    for (size_t j = 0; j < n; ++j) e[1 + j] = static_cast<int>(lm.gb.expr[i][j] + h * d);
    f = f + terms[i].B.to_mvpoly(1 + n, 0) * MvPoly::monomial(1 + n, e, K(1));
  }
  lm.f = f;
  // reconstruction: b(m) = f(m, u^m) (u_1...u_n)^{-hdm}, spot-checked
  K uprod(1);
  for (const K& u : lm.gb.basis.entries) uprod = uprod * u;
  std::vector<K> xs(1 + n, K(1));
  K twist(1);
  const K tw = uprod.pow(h * d);
  for (long m = 0; m <= 10; ++m) {
    xs[0] = K(Rat(m));
    if (lm.f.eval(xs) != b.eval(m) * twist)
      throw std::logic_error("laurent_model: reconstruction failed at m = " + std::to_string(m));
    for (size_t j = 0; j < n; ++j) xs[1 + j] = xs[1 + j] * lm.gb.basis.entries[j];
    twist = twist * tw;
  }
  return lm;
}

std::vector<long> dth_power_density(const ExpPoly& b, long d, long lo, long hi) {
  if (d < 2) throw std::invalid_argument("dth_power_density: d must be >= 2");
  std::vector<long> out;
  std::vector<K> vals = b.eval_range(lo, hi);
  for (long m = lo; m <= hi; ++m) {
    const K& v = vals[static_cast<size_t>(m - lo)];
    if (v.is_zero() || is_dth_power(v, d)) out.push_back(m);
  }
  return out;
}

SpecializationGuardReport coprime_specialization_guard(const MvPoly& Pi, const MvPoly& Pj,
                                                       const std::vector<long>& samples) {
  if (Pi.arity() != Pj.arity() || Pi.arity() < 1)
    throw std::invalid_argument("coprime_specialization_guard: bad arity");
  if (!is_coprime(Pi, Pj))
    throw std::invalid_argument("coprime_specialization_guard: inputs share a factor");
  SpecializationGuardReport rep;
  rep.sampled = samples;
  for (long m : samples) {
    MvPoly A = Pi.substitute(0, K(Rat(m)));
    MvPoly B = Pj.substitute(0, K(Rat(m)));
    bool ok;
    if (A.is_zero() || B.is_zero())
      ok = false;
    else if (A.is_constant() || B.is_constant())
      ok = true;
    else
      ok = is_coprime(A, B);
    if (!ok) rep.failing.push_back(m);
  }
  return rep;
}

namespace {

// content of f in the x-variables: monic gcd over K[x0] of the coefficients
KPoly x_content(const MvPoly& f) {
  std::map<std::vector<int>, std::vector<K>> groups;
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> xkey(e.begin() + 1, e.end());
    auto& v = groups[xkey];
    if (v.size() <= static_cast<size_t>(e[0])) v.resize(static_cast<size_t>(e[0]) + 1);
    v[static_cast<size_t>(e[0])] = c;
  }
  KPoly content;
  for (auto& [key, coeffs] : groups) {
    KPoly piece{std::vector<K>(coeffs)};
    content = content.is_zero() ? piece : kpoly_gcd(content, piece);
    if (content.is_constant()) break;
  }
  return content.is_zero() ? KPoly() : content.monic();
}

}  // namespace

PisotOutcome pisot_factor(const ExpPoly& b, long d, long m_cap) {
  if (d < 2) throw std::invalid_argument("pisot_factor: d must be >= 2");
  if (b.is_zero()) throw std::invalid_argument("pisot_factor: zero exponential polynomial");
  PisotOutcome out;
  LaurentModel lm = laurent_model(b, d);
  size_t n = lm.gb.basis.size();

  // f = Q(x0) x^i G^d P over K[x0][x]
  KPoly Qm = x_content(lm.f);
  MvPoly f2 = *divide_exact(lm.f, Qm.to_mvpoly(1 + n, 0));
  Exponent mono(1 + n, 0);
  for (size_t v = 1; v <= n; ++v) {
    int mn = -1;
    for (const auto& [e, c] : f2.terms()) mn = mn < 0 ? e[v] : std::min(mn, e[v]);
    mono[v] = std::max(mn, 0);
  }
  MvPoly f3 = *divide_exact(f2, MvPoly::monomial(1 + n, mono, K(1)));
  DthPowerFreeForm dpf = dth_power_free_decompose(f3, static_cast<int>(d));
  if (total_degree(dpf.monomial) != 0)
    throw std::logic_error("pisot_factor: unexpected monomial factor after extraction");

  // witnesses: nonzero b(m) that are d-th powers, scanned with early stop once
  // the threshold question is settled
  KPoly Q0(K(1)), Q1(K(1));
  for (const auto& [q, e] : kpoly_squarefree_decomposition(Qm)) {
    if (e % d > 0) Q0 = Q0 * q.pow(static_cast<unsigned>(e % d));
    if (e / d > 0) Q1 = Q1 * q.pow(static_cast<unsigned>(e / d));
  }
  long n0 = Q0.deg();
  long threshold = n0 >= 1 ? 11 * n0 - 3 : -1;  // 4 n max{g-1,0} + 11n - 3 at g = 0
  std::vector<long> witnesses;
  {
    std::vector<K> pw(b.terms().size(), K(1));
    long need = threshold >= 0 ? threshold + 1 : 4;
    for (long m = 0; m <= m_cap && static_cast<long>(witnesses.size()) < need; ++m) {
      K val;
      {
        K acc;
        const auto& ts = b.terms();
        for (size_t i = 0; i < ts.size(); ++i) acc = acc + ts[i].B.eval(K(Rat(m))) * pw[i];
        val = acc;
        for (size_t i = 0; i < ts.size(); ++i) pw[i] = pw[i] * ts[i].beta;
      }
      if (!val.is_zero() && is_dth_power(val, d)) witnesses.push_back(m);
    }
  }
  out.witness_count = static_cast<long>(witnesses.size());
  out.threshold = threshold;

  if (!dpf.residual.is_constant()) {
    out.status = PisotStatus::PatternViolated;
    out.residual = dpf.residual;
    out.message = "hypothesis pattern violated: non-d-th-power factor survives";
    return out;
  }
  if (threshold >= 0 && out.witness_count <= threshold) {
    out.status = PisotStatus::InsufficientWitnesses;
    out.q0 = Q0;
    out.message = "insufficient d-th-power witnesses: " + std::to_string(out.witness_count) +
                  " <= threshold " + std::to_string(threshold);
    return out;
  }
  bool q0_constant = true;
  for (const K& c : Q0.coeffs()) q0_constant = q0_constant && c.is_constant();
  if (!q0_constant) {
    out.status = PisotStatus::NonconstantQ0;
    out.q0 = Q0;
    out.message = "Q0 has nonconstant coefficients despite " + std::to_string(out.witness_count) +
                  " witnesses above the threshold " + std::to_string(threshold);
    return out;
  }

  PisotFactorization fac;
  {
    std::vector<Rat> rc(Q0.coeffs().size());
    for (size_t i = 0; i < rc.size(); ++i) rc[i] = Q0[static_cast<int>(i)].constant_value();
    fac.R = Poly(std::move(rc));
  }
  fac.Q1 = Q1;
  fac.G = dpf.root;
  fac.beta = dpf.constant;
  fac.d = d;
  fac.gb = lm.gb;
  fac.i_eff.assign(n, 0);
  for (size_t j = 0; j < n; ++j) fac.i_eff[j] = mono[1 + j] - lm.twist_h * d;
  fac.gamma1 = FormalRadical{d, fac.beta};
  fac.gamma2 = FormalRadical{d, lm.gb.basis.power_product(fac.i_eff)};
  fac.witnesses = witnesses;
  fac.threshold = threshold;

  // round trip: b(m) = R(m) beta u^{i_eff m} (Q1(m) G(m, u^m))^d exactly
  {
    K ubase = fac.gamma2.base;
    K upow(1);
    std::vector<K> xs(1 + n, K(1));
    for (long m = 0; m <= 10; ++m) {
      xs[0] = K(Rat(m));
      K a_part = fac.Q1.eval(K(Rat(m))) * fac.G.eval(xs);
      K rhs = K(fac.R.eval(Rat(m))) * fac.beta * upow * a_part.pow(d);
      if (b.eval(m) != rhs)
        throw std::logic_error("pisot_factor: round-trip identity failed at m = " +
                               std::to_string(m));
      upow = upow * ubase;
      for (size_t j = 0; j < n; ++j) xs[1 + j] = xs[1 + j] * lm.gb.basis.entries[j];
    }
  }

  // specialization guard at the first witnesses over the squarefree components
  {
    std::vector<long> samples(witnesses.begin(),
                              witnesses.begin() + std::min<size_t>(witnesses.size(), 4));
    auto comps = mv_squarefree_decomposition(f3);
    SpecializationGuardReport rep;
    rep.sampled = samples;
    for (size_t i = 0; i < comps.size(); ++i)
      for (size_t j = i + 1; j < comps.size(); ++j) {
        auto r = coprime_specialization_guard(comps[i].first, comps[j].first, samples);
        rep.failing.insert(rep.failing.end(), r.failing.begin(), r.failing.end());
      }
    std::sort(rep.failing.begin(), rep.failing.end());
    rep.failing.erase(std::unique(rep.failing.begin(), rep.failing.end()), rep.failing.end());
    fac.guard = rep;
  }

  out.status = PisotStatus::Ok;
  out.factorization = std::move(fac);
  out.message = "ok";
  return out;
}

}  // namespace ffgcd
