#include "ffgcd/derivation.hpp"

namespace ffgcd {

K derive(const K& f) { return f.derivative(); }

long local_valuation_of_derivative(const K& f, const ClosedPoint& p) {
  if (f.is_zero() || f.is_constant())
    throw std::invalid_argument("local_valuation_of_derivative: constant input");
  DerivationContext ctx;
  K df = f.derivative();
  long w = *valuation(df, p);
  long v = *valuation(f, p);
  long vdt = ctx.v_dpt(p);
  if (v != 0) {
    if (w != v - 1 - vdt)
      throw std::logic_error("local_valuation_of_derivative: order relation violated");
  } else {
    if (w < -vdt) throw std::logic_error("local_valuation_of_derivative: order bound violated");
  }
  return w;
}

MvPoly apply_Du(const MvPoly& F, const UnitTuple& u) {
  if (F.arity() != u.size()) throw std::invalid_argument("apply_Du: arity mismatch");
  std::vector<K> logd;  // u_j'/u_j
  logd.reserve(u.size());
  for (const K& uj : u.entries) {
    if (uj.is_zero()) throw std::invalid_argument("apply_Du: zero unit");
    logd.push_back(uj.derivative() / uj);
  }
  MvPoly out(F.arity());
  for (const auto& [e, a] : F.terms()) {
    // (a u^i)'/u^i = a' + a * sum_j i_j u_j'/u_j
    K c = a.derivative();
    for (size_t j = 0; j < u.size(); ++j)
      if (e[j] != 0) c = c + a * logd[j] * K(e[j]);
    if (!c.is_zero()) out = out + MvPoly::monomial(F.arity(), e, c);
  }
  return out;
}

MvPoly F_e_u(const FactoredForm& factors, const UnitTuple& u, size_t arity) {
  if (factors.factors.empty()) throw std::invalid_argument("F_e_u: no factors");
  MvPoly out(arity);
  for (size_t i = 0; i < factors.factors.size(); ++i) {
    MvPoly term = apply_Du(factors.factors[i].first, u).scaled(K(factors.factors[i].second));
    for (size_t j = 0; j < factors.factors.size(); ++j)
      if (j != i) term = term * factors.factors[j].first;
    out = out + term;
  }
  return out;
}

CoprimeCriterionResult coprime_criterion_irreducible(const MvPoly& P, const UnitTuple& u) {
  if (P.term_count() <= 1)
    throw std::invalid_argument("coprime_criterion_irreducible: monomial input");
  // a_i u^i for each support element
  std::vector<K> vals;
  vals.reserve(P.term_count());
  for (const auto& [e, a] : P.terms()) {
    std::vector<long> m(e.begin(), e.end());
    vals.push_back(a * u.power_product(m));
  }
  bool all_const = true;
  std::vector<K> witnesses;
  for (size_t i = 1; i < vals.size(); ++i) {
    K ratio = vals[i] / vals[0];
    if (!ratio.is_constant()) {
      all_const = false;
      break;
    }
    witnesses.push_back(ratio);
  }
  bool not_coprime = all_const;
  if (is_coprime(P, apply_Du(P, u)) == not_coprime)
    throw std::logic_error("coprime_criterion_irreducible: gcd cross-check disagrees");
  if (!not_coprime) witnesses.clear();
  return {!not_coprime, std::move(witnesses)};
}

Lemma31Report lemma31_pole_gcd(const K& eta, const PlaceSet& S, const FieldContext& ctx) {
  if (eta.is_zero() || eta.is_constant())
    throw std::invalid_argument("lemma31_pole_gcd: constant input");
  K d = eta.derivative();
  long lhs = gcd_counting(eta, d, S, GcdCountMode::OutsideS);
  long rhs = counting(eta, S, CountMode::WithMultiplicity) -
             counting(eta, S, CountMode::Truncated) - 3 * ctx.genus;
  return {lhs, rhs, lhs - rhs};
}

Lemma31Report lemma31_log_derivative(const std::vector<K>& etas, const PlaceSet& S,
                                     const FieldContext& ctx) {
  std::vector<K> coords = {K(1)};
  for (const K& e : etas) {
    if (!is_S_unit(e, S))
      throw std::invalid_argument("lemma31_log_derivative: entry is not an S-unit");
    coords.push_back(e.derivative() / e);
  }
  long lhs = projective_height(coords);
  long rhs = S.weighted_size() + 3 * ctx.genus;
  return {lhs, rhs, rhs - lhs};
}

}  // namespace ffgcd
