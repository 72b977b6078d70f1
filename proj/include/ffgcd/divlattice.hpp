#ifndef FFGCD_DIVLATTICE_HPP
#define FFGCD_DIVLATTICE_HPP

#include <optional>

#include "ffgcd/heights.hpp"
#include "ffgcd/linalg.hpp"

namespace ffgcd {

// Pairwise-coprime monic polynomials over which every generating element
// factors as a constant times integer powers. Avoids irreducible
// factorization: gcd-free refinement is enough for exponent vectors.
struct CoprimeBasis {
  std::vector<Poly> elements;
};

CoprimeBasis refine_coprime_basis(const std::vector<K>& fs);

struct ExponentVector {
  std::vector<long> exponents;  // one per basis element
  long v_infinity;
  Rat constant;  // f = constant * prod b_j^{e_j}
};

// throws std::domain_error naming the residual when f is not supported on the basis
ExponentVector exponent_vector(const K& f, const CoprimeBasis& basis);

// Tuple of nonzero elements with cached divisor exponent vectors; rows of the
// exponent matrix are (basis exponents..., v_infinity).
struct UnitTuple {
  std::vector<K> entries;
  CoprimeBasis basis;
  std::vector<std::vector<Int>> exponent_matrix;
  std::vector<Rat> constants;

  static UnitTuple build(std::vector<K> entries);
  size_t size() const { return entries.size(); }
  // product of entries^m
  K power_product(const std::vector<long>& m) const;
};

struct MultiplicativeRelation {
  std::vector<long> exponents;
  long l1_norm;
  K witness;  // the constant value of prod g_i^{m_i}
};

// Minimal-l1 nonzero integer kernel vector of the exponent matrix with
// sum |m_i| <= l1_bound, if any; the witness is verified by evaluation.
std::optional<MultiplicativeRelation> find_relation(const UnitTuple& g, long l1_bound);

bool is_multiplicatively_independent_mod_k(const UnitTuple& g);

}  // namespace ffgcd

#endif
