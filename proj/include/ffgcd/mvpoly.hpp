#ifndef FFGCD_MVPOLY_HPP
#define FFGCD_MVPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffgcd/heights.hpp"
#include "ffgcd/ratfunc.hpp"

namespace ffgcd {

using Exponent = std::vector<int>;

long total_degree(const Exponent& e);

// graded lexicographic with x1 > x2 > ...; returns <0, 0, >0
int grlex_cmp(const Exponent& a, const Exponent& b);

struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const { return grlex_cmp(a, b) < 0; }
};

// Sparse multivariate polynomial over K with a fixed variable count.
// "Monic" throughout means: the coefficient of the graded-lex greatest
// monomial is 1.
class MvPoly {
 public:
  using TermMap = std::map<Exponent, K, GrlexLess>;

  explicit MvPoly(size_t arity = 0) : n_(arity) {}
  MvPoly(size_t arity, const K& c);
  static MvPoly variable(size_t arity, size_t idx);
  static MvPoly monomial(size_t arity, const Exponent& e, const K& c);
  static MvPoly from_terms(size_t arity, const std::vector<std::pair<Exponent, K>>& terms);

  size_t arity() const { return n_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  K constant_value() const;
  size_t term_count() const { return t_.size(); }

  long degree() const;           // total degree; -1 for the zero polynomial
  long degree_in(size_t v) const;
  const Exponent& leading_monomial() const;  // graded-lex greatest
  const K& leading_coeff() const;
  K coeff(const Exponent& e) const;
  std::vector<K> coefficients() const;
  std::vector<size_t> vars_present() const;

  MvPoly operator-() const;
  MvPoly operator+(const MvPoly& o) const;
  MvPoly operator-(const MvPoly& o) const;
  MvPoly operator*(const MvPoly& o) const;
  MvPoly scaled(const K& c) const;
  MvPoly pow(unsigned e) const;
  bool operator==(const MvPoly& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const MvPoly& o) const { return !(*this == o); }

  MvPoly derivative(size_t v) const;
  K eval(const std::vector<K>& xs) const;
  // substitute x_v := c (arity preserved, exponent of x_v becomes 0)
  MvPoly substitute(size_t v, const K& c) const;
  // remove a variable that no longer occurs
  MvPoly drop_var(size_t v) const;
  MvPoly monic_normalized() const;

  std::string str() const;

 private:
  void put(const Exponent& e, const K& c);
  size_t n_;
  TermMap t_;
};

// exact division; nullopt when G does not divide F
std::optional<MvPoly> divide_exact(const MvPoly& F, const MvPoly& G);

// gcd up to K*, normalized monic; primitive-PRS in the lowest-index variable
// present, with content recursion
MvPoly mv_gcd(const MvPoly& F, const MvPoly& G);
bool is_coprime(const MvPoly& F, const MvPoly& G);

// Gauss valuation v_p(F) = min over coefficients
long gauss_valuation(const MvPoly& F, const ClosedPoint& p);
long mv_height(const MvPoly& F);           // h(F)  = sum -v_p(F)
long mv_relevant_height(const MvPoly& F);  // h~(F) = sum -min{0, v_p(F)}

// monic squarefree factors with multiplicities, pairwise coprime, exact
// reconstruction of a monic input
std::vector<std::pair<MvPoly, int>> mv_squarefree_decomposition(const MvPoly& F);

struct DthPowerFreeForm {
  K constant;        // a
  Exponent monomial; // i
  MvPoly root;       // G, monic
  MvPoly residual;   // P, monic, d-th power free, no monomial factor
  // F = a * x^i * G^d * P;  F expressible as a x^i G^d  iff  residual is 1
};

DthPowerFreeForm dth_power_free_decompose(const MvPoly& F, int d);

// declared-irreducible factorization with verified coprimality
struct FactoredForm {
  K constant;
  Exponent monomial;
  std::vector<std::pair<MvPoly, int>> factors;  // (P_i, e_i), e_i >= 1

  MvPoly assemble(size_t arity) const;
  void verify(size_t arity) const;  // pairwise coprime, multiplicities >= 1
};

// complete certificate for total degree <= 2 (primitive main-variable form;
// quadratic case via the discriminant-is-a-square test over kbar(t))
bool certify_irreducible_deg_le2(const MvPoly& P);

}  // namespace ffgcd

#endif
