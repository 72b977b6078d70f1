#include "ffgcd/linalg.hpp"

#include <algorithm>

namespace ffgcd {

bool QEchelon::insert(std::vector<Rat> row) {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rat& x = row[pivots_[k]];
    if (x != 0) {
      Rat f = x;  // stored rows have pivot 1
      for (size_t j = 0; j < row.size(); ++j) row[j] -= f * rows_[k][j];
    }
  }
  size_t p = row.size();
  for (size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) {
      p = j;
      break;
    }
  if (p == row.size()) return false;
  Rat inv = 1 / row[p];
  for (auto& x : row) x *= inv;
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

bool KEchelon::insert(std::vector<K> row) {
  row = reduce(std::move(row));
  size_t p = row.size();
  for (size_t j = 0; j < row.size(); ++j)
    if (!row[j].is_zero()) {
      p = j;
      break;
    }
  if (p == row.size()) return false;
  K inv = row[p].inverse();
  for (auto& x : row) x = x * inv;
  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

std::vector<K> KEchelon::reduce(std::vector<K> row) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const K& x = row[pivots_[k]];
    if (!x.is_zero()) {
      K f = x;
      for (size_t j = 0; j < row.size(); ++j) row[j] = row[j] - f * rows_[k][j];
    }
  }
  return row;
}

K k_det(std::vector<std::vector<K>> m) {
  size_t n = m.size();
  K det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t r = c; r < n; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) return K();
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    K inv = m[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      K f = m[r][c] * inv;
      for (size_t j = c; j < n; ++j) m[r][j] = m[r][j] - f * m[c][j];
    }
  }
  return det;
}

std::vector<std::vector<K>> k_inverse(std::vector<std::vector<K>> m) {
  size_t n = m.size();
  std::vector<std::vector<K>> inv(n, std::vector<K>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = K(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t r = c; r < n; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) throw std::domain_error("k_inverse: singular matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    K s = m[c][c].inverse();
    for (size_t j = 0; j < n; ++j) {
      m[c][j] = m[c][j] * s;
      inv[c][j] = inv[c][j] * s;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      K f = m[r][c];
      for (size_t j = 0; j < n; ++j) {
        m[r][j] = m[r][j] - f * m[c][j];
        inv[r][j] = inv[r][j] - f * inv[c][j];
      }
    }
  }
  return inv;
}

std::vector<std::vector<Rat>> elements_as_vectors(std::span<const K> elems) {
  Poly D(Rat(1));
  for (const K& e : elems)
    if (!e.is_zero()) D = lcm(D, e.den());
  int maxdeg = 0;
  std::vector<Poly> cleared;
  cleared.reserve(elems.size());
  for (const K& e : elems) {
    Poly p = e.is_zero() ? Poly() : e.num() * (D / e.den());
    maxdeg = std::max(maxdeg, p.deg());
    cleared.push_back(std::move(p));
  }
  std::vector<std::vector<Rat>> out;
  out.reserve(elems.size());
  for (const Poly& p : cleared) {
    std::vector<Rat> row(static_cast<size_t>(maxdeg) + 1, Rat(0));
    for (int i = 0; i <= p.deg(); ++i) row[static_cast<size_t>(i)] = p[i];
    out.push_back(std::move(row));
  }
  return out;
}

long q_dimension(const std::vector<K>& elems) {
  QEchelon ech;
  for (auto& row : elements_as_vectors(elems)) ech.insert(std::move(row));
  return static_cast<long>(ech.rank());
}

std::vector<K> q_span_basis(const std::vector<K>& elems) {
  QEchelon ech;
  std::vector<K> basis;
  auto vecs = elements_as_vectors(elems);
  for (size_t i = 0; i < elems.size(); ++i)
    if (ech.insert(std::move(vecs[i]))) basis.push_back(elems[i]);
  return basis;
}

bool q_in_span(const std::vector<K>& basis, const K& e) { return q_all_in_span(basis, {e}); }

bool q_all_in_span(const std::vector<K>& basis, const std::vector<K>& elems) {
  std::vector<K> all = basis;
  all.insert(all.end(), elems.begin(), elems.end());
  auto vecs = elements_as_vectors(all);
  QEchelon ech;
  for (size_t i = 0; i < basis.size(); ++i) ech.insert(std::move(vecs[i]));
  for (size_t i = basis.size(); i < vecs.size(); ++i)
    if (ech.insert(std::move(vecs[i]))) return false;
  return true;
}

KernelBasis integer_row_kernel(const std::vector<std::vector<Int>>& rows) {
  KernelBasis out;
  size_t n = rows.size();
  if (n == 0) return out;
  size_t m = rows[0].size();
  // RREF of the transpose: unknowns are the row multipliers
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) a[j][i] = Rat(rows[i][j]);
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t piv = m;
    for (size_t i = r; i < m; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    Rat s = 1 / a[r][c];
    for (size_t j = 0; j < n; ++j) a[r][j] *= s;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[f] = 1;
    for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][f];
    Int den(1), num_gcd(0);
    for (const Rat& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Int> iv(n);
    for (size_t j = 0; j < n; ++j) {
      Rat scaled = v[j] * Rat(den);
      iv[j] = scaled.get_num();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), iv[j].get_mpz_t());
    }
    if (num_gcd > 1)
      for (auto& x : iv) x /= num_gcd;
    out.vectors.push_back(std::move(iv));
    out.free_index.push_back(f);
  }
  return out;
}

HnfResult hnf_rows(std::vector<std::vector<Int>> A) {
  size_t n = A.size();
  size_t m = n == 0 ? 0 : A[0].size();
  std::vector<std::vector<Int>> U(n, std::vector<Int>(n, Int(0)));
  for (size_t i = 0; i < n; ++i) U[i][i] = 1;
  auto row_sub = [&](size_t i, size_t r, const Int& q) {
    for (size_t j = 0; j < m; ++j) A[i][j] -= q * A[r][j];
    for (size_t j = 0; j < n; ++j) U[i][j] -= q * U[r][j];
  };
  size_t r = 0;
  for (size_t c = 0; c < m && r < n; ++c) {
    while (true) {
      size_t best = n;
      for (size_t i = r; i < n; ++i)
        if (A[i][c] != 0 && (best == n || abs(A[i][c]) < abs(A[best][c]))) best = i;
      if (best == n) break;
      std::swap(A[best], A[r]);
      std::swap(U[best], U[r]);
      bool more = false;
      for (size_t i = r + 1; i < n; ++i) {
        if (A[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), A[i][c].get_mpz_t(), A[r][c].get_mpz_t());
        row_sub(i, r, q);
        if (A[i][c] != 0) more = true;
      }
      if (!more) break;
    }
    if (A[r][c] == 0) continue;
    if (A[r][c] < 0) {
      for (auto& x : A[r]) x = -x;
      for (auto& x : U[r]) x = -x;
    }
    for (size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), A[i][c].get_mpz_t(), A[r][c].get_mpz_t());
      if (q != 0) row_sub(i, r, q);
    }
    ++r;
  }
  return {std::move(A), std::move(U), r};
}

std::vector<Int> hnf_coordinates(const HnfResult& h, const std::vector<Int>& v) {
  size_t m = v.size();
  std::vector<Int> coeffs(h.rank, Int(0));
  std::vector<Int> rem = v;
  for (size_t k = 0; k < h.rank; ++k) {
    size_t pc = m;
    for (size_t j = 0; j < m; ++j)
      if (h.H[k][j] != 0) {
        pc = j;
        break;
      }
    if (pc == m) break;
    if (rem[pc] % h.H[k][pc] != 0)
      throw std::domain_error("hnf_coordinates: vector outside the lattice");
    Int q = rem[pc] / h.H[k][pc];
    coeffs[k] = q;
    for (size_t j = 0; j < m; ++j) rem[j] -= q * h.H[k][j];
  }
  for (const Int& x : rem)
    if (x != 0) throw std::domain_error("hnf_coordinates: vector outside the lattice");
  return coeffs;
}

}  // namespace ffgcd
