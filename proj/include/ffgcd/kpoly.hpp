#ifndef FFGCD_KPOLY_HPP
#define FFGCD_KPOLY_HPP

#include <vector>

#include "ffgcd/mvpoly.hpp"
#include "ffgcd/ratfunc.hpp"

namespace ffgcd {

// Univariate polynomial in one symbol over K; K is a field, so this ring is
// Euclidean and Yun decomposition applies verbatim.
class KPoly {
 public:
  KPoly() = default;
  KPoly(const K& c) { if (!c.is_zero()) c_ = {c}; }
  explicit KPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static KPoly variable() { return KPoly(std::vector<K>{K(), K(1)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  const K& operator[](int i) const;
  const K& lead() const;
  const std::vector<K>& coeffs() const { return c_; }

  KPoly operator-() const;
  KPoly operator+(const KPoly& o) const;
  KPoly operator-(const KPoly& o) const;
  KPoly operator*(const KPoly& o) const;
  KPoly scaled(const K& s) const;
  bool operator==(const KPoly& o) const { return c_ == o.c_; }
  bool operator!=(const KPoly& o) const { return c_ != o.c_; }

  std::pair<KPoly, KPoly> divrem(const KPoly& d) const;
  KPoly operator/(const KPoly& o) const;  // exact
  KPoly pow(unsigned e) const;
  KPoly derivative() const;
  KPoly monic() const;
  K eval(const K& x) const;

  // conversion to/from a single-variable MvPoly slot
  static KPoly from_mvpoly(const MvPoly& p, size_t var);
  MvPoly to_mvpoly(size_t arity, size_t var) const;

  std::string str(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<K> c_;
};

KPoly kpoly_gcd(const KPoly& a, const KPoly& b);  // monic

// f = lead * prod q_i^i with monic squarefree pairwise-coprime q_i
std::vector<std::pair<KPoly, int>> kpoly_squarefree_decomposition(const KPoly& f);

}  // namespace ffgcd

#endif
