#ifndef FFGCD_PISOT_HPP
#define FFGCD_PISOT_HPP

#include <optional>
#include <string>

#include "ffgcd/divlattice.hpp"
#include "ffgcd/kpoly.hpp"
#include "ffgcd/mvpoly.hpp"
#include "ffgcd/parser.hpp"

namespace ffgcd {

struct ExpTerm {
  KPoly B;  // polynomial in the step variable over K
  K beta;   // nonzero root
};

// Exponential polynomial n |-> sum B_i(n) beta_i^n with pairwise-distinct
// roots and nonzero coefficient polynomials.
class ExpPoly {
 public:
  ExpPoly() = default;
  explicit ExpPoly(std::vector<ExpTerm> terms);
  static ExpPoly term(const KPoly& B, const K& beta);
  static ExpPoly parse(const std::string& text);

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  K eval(long n) const;
  // incremental evaluation over a contiguous range [lo, hi]
  std::vector<K> eval_range(long lo, long hi) const;

  ExpPoly operator+(const ExpPoly& o) const;
  ExpPoly operator*(const ExpPoly& o) const;
  ExpPoly pow(unsigned e) const;
  ExpPoly scaled(const K& c) const;

  std::string str() const;

 private:
  std::vector<ExpTerm> terms_;
};

struct GammaHypothesisError : std::runtime_error {
  GammaHypothesisError(const std::string& msg, K offending)
      : std::runtime_error(msg), offending(std::move(offending)) {}
  K offending;
};

struct GammaBasis {
  UnitTuple basis;                       // u_1, ..., u_n
  std::vector<std::vector<long>> expr;   // beta_i = prod_j u_j^{expr[i][j]}, exactly
  PlaceSet support;                      // S with every u_j in O_S^*
};

// Multiplicative basis of the group generated by the roots; asserts that the
// group meets k* only in 1, else throws GammaHypothesisError with the witness.
GammaBasis gamma_basis(const ExpPoly& b);

struct LaurentModel {
  MvPoly f;          // in x0 (the index) and x1..xn, no negative exponents
  int twist_h = 0;   // f was multiplied by (x1...xn)^{h d}
  long d = 0;
  GammaBasis gb;
  // b(m) = f(m, u^m) * (u_1...u_n)^{-h d m}
};

LaurentModel laurent_model(const ExpPoly& b, long d);

// all m in [lo, hi] with b(m) a d-th power in K (0 counts as 0^d)
std::vector<long> dth_power_density(const ExpPoly& b, long d, long lo, long hi);

struct FormalRadical {
  long d = 1;
  K base;  // gamma^d = base; never evaluated in an extension field
};

struct SpecializationGuardReport {
  std::vector<long> sampled;
  std::vector<long> failing;  // m where the specialized pair shares a factor
};

// Proposition-style runtime guard: P_i, P_j coprime in K[x0, x] stay coprime
// after x0 := m for all but finitely many m; lists the failing samples.
SpecializationGuardReport coprime_specialization_guard(const MvPoly& Pi, const MvPoly& Pj,
                                                       const std::vector<long>& samples);

struct PisotFactorization {
  Poly R;            // over k
  KPoly Q1;          // monic over K
  MvPoly G;          // in x0, x1..xn
  K beta;
  FormalRadical gamma1;        // gamma1^d = beta
  FormalRadical gamma2;        // gamma2^d = u^{i_eff}
  std::vector<long> i_eff;     // Laurent-corrected monomial exponent
  long d = 0;
  GammaBasis gb;
  std::vector<long> witnesses;
  long threshold = 0;
  SpecializationGuardReport guard;
  // b(m) = R(m) * (gamma1 gamma2^m Q1(m) G(m, u^m))^d for all m
};

enum class PisotStatus { Ok, InsufficientWitnesses, PatternViolated, NonconstantQ0 };

struct PisotOutcome {
  PisotStatus status = PisotStatus::Ok;
  std::string message;
  std::optional<PisotFactorization> factorization;
  // diagnostics for the failure modes
  MvPoly residual{0};
  KPoly q0;
  long witness_count = 0;
  long threshold = 0;
};

PisotOutcome pisot_factor(const ExpPoly& b, long d, long m_cap = 200);

}  // namespace ffgcd

#endif
