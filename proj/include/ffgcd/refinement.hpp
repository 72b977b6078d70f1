#ifndef FFGCD_REFINEMENT_HPP
#define FFGCD_REFINEMENT_HPP

#include <optional>
#include <string>

#include "ffgcd/derivation.hpp"
#include "ffgcd/divlattice.hpp"
#include "ffgcd/linalg.hpp"
#include "ffgcd/mvpoly.hpp"

namespace ffgcd {

long binom(long n, long k);

// all exponent vectors with |i| <= m, graded-lex ascending
std::vector<Exponent> monomials_up_to(size_t nvars, int m);

struct RefinementParams {
  int m = 0;
  int d = 0;
  int n = 0;
  long M = 0;       // 2 C(m+n-d, n) - C(m+n-2d, n)
  long Mprime = 0;  // C(m+n, n) - M
};

RefinementParams refinement_params(int n, int d, int m);

struct DimensionMismatch : std::runtime_error {
  DimensionMismatch(long expected, long computed)
      : std::runtime_error("ideal dimension mismatch: expected " + std::to_string(expected) +
                           ", computed " + std::to_string(computed)),
        expected(expected),
        computed(computed) {}
  long expected;
  long computed;
};

// Basis Phi of (F1, F2)_m made of shifted copies x^i F_j, together with the
// exact verification that dim_K (F1, F2)_m equals the M of the formula.
struct IdealBasis {
  RefinementParams params;
  MvPoly F1, F2;
  std::vector<std::pair<Exponent, int>> shifts;  // phi_l = x^i * F_{eps}, eps in {1,2}
  std::vector<MvPoly> phi;
  std::vector<Exponent> monomials;  // column order: |i| <= m, graded-lex ascending
  std::vector<Exponent> transversal;  // non-pivot monomials: a default quotient basis
  std::vector<std::vector<K>> phi_rows;
};

IdealBasis build_ideal_basis(const MvPoly& F1, const MvPoly& F2, int m);

// Greedy per-place monomial basis of K[x]_m / (F1, F2)_m maximizing v_p(g^i),
// ties broken toward the graded-lex least monomial.
struct PointBasis {
  ClosedPoint p = ClosedPoint::infinity();
  std::vector<Exponent> selected;    // I_p in selection order
  std::vector<Exponent> complement;  // i_p(1..M), graded-lex ascending
  std::vector<long> selected_val;    // v_p(g^i) over the selection
  std::vector<long> complement_val;
};

PointBasis build_point_basis(const IdealBasis& ib, const UnitTuple& g, const ClosedPoint& p);

// Linear forms L_{p,i} with L_{p,i}(Phi(x)) = c_p (x^{i_p(i)} + sum_j c_{p,i,j} x^{i_p,j})
struct LinearFormSystem {
  ClosedPoint p = ClosedPoint::infinity();
  K c_p;                            // det of the alpha matrix
  std::vector<std::vector<K>> b;    // M x M coefficients b_{p,i,l}
  std::vector<std::vector<K>> c_red;  // M x M' reduction coefficients c_{p,i,j}
};

LinearFormSystem build_linear_forms(const IdealBasis& ib, const PointBasis& pb);

// lambda_{L,p}(a) = v_p(L(a)) - v_p(a) - v_p(L); throws when L(a) = 0
long weil_function(const std::vector<K>& form_coeffs, const std::vector<K>& point,
                   const ClosedPoint& p);

// V(r) machinery: bases and dimensions of the spans of r-fold products
struct CoefficientSpace {
  std::vector<K> generators;
  std::vector<std::vector<K>> level_basis;  // level_basis[j-1] spans V(j)
  std::vector<long> dims;                   // dims[j-1] = d_j; d_0 = 1 by convention

  long dim(long r) const {
    if (r <= 0) return 1;
    if (r > static_cast<long>(dims.size()))
      throw std::out_of_range("CoefficientSpace::dim: level not computed");
    return dims[static_cast<size_t>(r) - 1];
  }
  const std::vector<K>& basis(long r) const {
    if (r < 1 || r > static_cast<long>(level_basis.size()))
      throw std::out_of_range("CoefficientSpace::basis: level not computed");
    return level_basis[static_cast<size_t>(r) - 1];
  }
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

CoefficientSpace coefficient_space(const std::vector<K>& elements, long r,
                                   long product_cap = 5000);

// y_1.. y_k linearly nondegenerate over span_Q(basis): no nontrivial relation
// sum a_i y_i = 0 with a_i in the span
bool nondegenerate_over(const std::vector<K>& space_basis, const std::vector<K>& ys,
                        long ambient_guard = 4000);

struct Check {
  std::string name;
  Rat lhs, rhs;
  Rat margin;  // oriented so that margin >= 0 means the inequality holds
  bool holds() const { return margin >= 0; }
};

struct KeyInequalityReport {
  RefinementParams params;
  int r = 1;
  std::string branch;  // "relation" | "gcd-bound" | "precondition-unmet"
  bool msmt_nondegenerate = false;
  bool thm_nondegenerate = false;
  std::optional<MultiplicativeRelation> relation;
  std::vector<Check> checks;           // named aggregate margins
  std::vector<Check> key_margins;      // key-inequality margin per (p, i)
  std::vector<Check> chain_violations; // support-restricted dominance failures (empty)
  std::string note;
};

// Full construction and both-sides evaluation at every place of S.
KeyInequalityReport key_inequality_check(const MvPoly& F1, const MvPoly& F2, const UnitTuple& g,
                                         const PlaceSet& S, int m, int r,
                                         const FieldContext& ctx = {}, long product_cap = 5000);

struct SPartReport {
  bool nondegenerate = false;
  std::string branch;  // "s-part-bound" | "precondition-unmet"
  long N = 0;
  long w = 1, u = 1;
  Rat lhs, rhs, margin;
  std::string note;
};

SPartReport s_part_check(const MvPoly& F, const UnitTuple& g, const PlaceSet& S, int r,
                         const FieldContext& ctx = {}, long product_cap = 5000);

}  // namespace ffgcd

#endif
