#ifndef FFGCD_POLY_HPP
#define FFGCD_POLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffgcd/rational.hpp"

namespace ffgcd {

// Dense univariate polynomial in t over the exact rationals.
// Invariant: coefficient vector has no trailing zeros; the zero polynomial is {}.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c) { if (c != 0) c_ = {c}; }
  Poly(long c) : Poly(Rat(c)) {}
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

  static Poly t() { return Poly({Rat(0), Rat(1)}); }
  // c * t^k
  static Poly monomial(const Rat& c, int k);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // degree of the zero polynomial is -1 by convention
  int deg() const { return static_cast<int>(c_.size()) - 1; }

  const Rat& operator[](int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lead() const;
  Rat constant_value() const { return c_.empty() ? Rat(0) : c_[0]; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  // exact division; throws if remainder is nonzero
  Poly operator/(const Poly& o) const;

  std::pair<Poly, Poly> divrem(const Poly& d) const;
  bool divides(const Poly& f) const;  // *this | f
  Poly pow(unsigned e) const;
  Poly derivative() const;
  Poly monic() const;
  Rat eval(const Rat& x) const;

  // strict total order (degree, then coefficients high to low); used for canonical sets
  int cmp(const Poly& o) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

Poly gcd(const Poly& a, const Poly& b);          // monic gcd
Poly lcm(const Poly& a, const Poly& b);

// Yun squarefree decomposition of a nonconstant polynomial:
// f = lead * prod_i q_i^i with the q_i monic, squarefree, pairwise coprime.
// Returns the list of (q_i, i) with nonconstant q_i only.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// product of the distinct monic irreducible factors
Poly squarefree_part(const Poly& f);

// smallest-|numerator| rational root, if one is found by the bounded search
std::optional<Rat> find_rational_root(const Poly& f);

// a monic rational quadratic factor of a rootless squarefree f (deg >= 4),
// found over the monic integer model; nullopt when none exists or the search
// is inconclusive
std::optional<Poly> find_quadratic_factor(const Poly& f);

// splits a monic squarefree polynomial into monic factors: complete
// irreducible factorization for pieces of degree <= 5; an inconclusive
// leftover of higher degree is returned whole
std::vector<Poly> factor_squarefree(const Poly& f);

}  // namespace ffgcd

#endif
