#ifndef FFGCD_LINALG_HPP
#define FFGCD_LINALG_HPP

#include <span>
#include <vector>

#include "ffgcd/ratfunc.hpp"

namespace ffgcd {

// Row echelon accumulator over the rationals.
class QEchelon {
 public:
  // returns true when the row was independent and got inserted
  bool insert(std::vector<Rat> row);
  size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::vector<Rat>> rows_;
  std::vector<size_t> pivots_;
};

// Row echelon accumulator over K.
class KEchelon {
 public:
  bool insert(std::vector<K> row);
  // residual after elimination against the stored rows
  std::vector<K> reduce(std::vector<K> row) const;
  size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<K>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

 private:
  std::vector<std::vector<K>> rows_;
  std::vector<size_t> pivots_;
};

K k_det(std::vector<std::vector<K>> m);
// Gauss-Jordan inverse; throws std::domain_error on a singular matrix
std::vector<std::vector<K>> k_inverse(std::vector<std::vector<K>> m);

// K elements as Q-vectors after clearing by the lcm of their denominators
std::vector<std::vector<Rat>> elements_as_vectors(std::span<const K> elems);

// dimension over Q of the span of the given K elements
long q_dimension(const std::vector<K>& elems);
// greedy subset forming a Q-basis of the span
std::vector<K> q_span_basis(const std::vector<K>& elems);
bool q_in_span(const std::vector<K>& basis, const K& e);
// batch membership: every element of elems lies in span_Q(basis)
bool q_all_in_span(const std::vector<K>& basis, const std::vector<K>& elems);

// Primitive integer kernel basis of the row span: vectors m with
// sum_i m_i row_i = 0. Each basis vector carries a designated free index
// where every other basis vector vanishes; entry at that index is > 0.
struct KernelBasis {
  std::vector<std::vector<Int>> vectors;
  std::vector<size_t> free_index;
};
KernelBasis integer_row_kernel(const std::vector<std::vector<Int>>& rows);

// Row Hermite normal form with transform: U * A = H (U unimodular); the first
// `rank` rows of H are the nonzero ones.
struct HnfResult {
  std::vector<std::vector<Int>> H;
  std::vector<std::vector<Int>> U;
  size_t rank;
};
HnfResult hnf_rows(std::vector<std::vector<Int>> A);

// integer coordinates of v over the nonzero HNF rows; throws when v is not in
// the lattice they span
std::vector<Int> hnf_coordinates(const HnfResult& h, const std::vector<Int>& v);

}  // namespace ffgcd

#endif
