#ifndef FFGCD_DERIVATION_HPP
#define FFGCD_DERIVATION_HPP

#include "ffgcd/divlattice.hpp"
#include "ffgcd/mvpoly.hpp"

namespace ffgcd {

// The global derivation is d/dt; local derivatives d_p t have valuation 0 at
// every finite place and -2 at infinity (dt/d(1/t) = -t^2).
struct DerivationContext {
  FieldContext field;
  long v_dpt(const ClosedPoint& p) const { return p.is_infinity() ? -2 : 0; }
};

K derive(const K& f);

// v_p(f') for nonconstant f, with the two-case relation
//   v_p(f') = v_p(f) - 1 - v(d_p t)   when v_p(f) != 0
//   v_p(f') >= -v(d_p t)              when v_p(f) = 0
// asserted against the direct computation.
long local_valuation_of_derivative(const K& f, const ClosedPoint& p);

// D_u(F) = sum over terms of (a_i u^i)'/u^i x^i; arities must match
MvPoly apply_Du(const MvPoly& F, const UnitTuple& u);

// F_{e,u} = sum_i e_i D_u(P_i) prod_{j != i} P_j for declared factors
MvPoly F_e_u(const FactoredForm& factors, const UnitTuple& u, size_t arity);

struct CoprimeCriterionResult {
  bool coprime;
  // when not coprime: the constant values a_i u^i / a_j u^j against the first
  // support element
  std::vector<K> witnesses;
};

// For declared-irreducible non-monomial P: P and D_u(P) fail to be coprime
// exactly when all ratios a_i u^i / a_j u^j are constants. Cross-checked
// against mv_gcd.
CoprimeCriterionResult coprime_criterion_irreducible(const MvPoly& P, const UnitTuple& u);

struct Lemma31Report {
  long lhs;
  long rhs;
  long margin;  // lhs - rhs for part (a); rhs - lhs for part (b)
};

// part (a): N_{S,gcd}(eta, eta') >= N_S(eta) - Nbar_S(eta) - 3g
Lemma31Report lemma31_pole_gcd(const K& eta, const PlaceSet& S, const FieldContext& ctx = {});

// part (b): h(1, eta_1'/eta_1, ..., eta_l'/eta_l) <= |S| + 3g for S-units eta_i
Lemma31Report lemma31_log_derivative(const std::vector<K>& etas, const PlaceSet& S,
                                     const FieldContext& ctx = {});

}  // namespace ffgcd

#endif
