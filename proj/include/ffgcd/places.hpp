#ifndef FFGCD_PLACES_HPP
#define FFGCD_PLACES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ffgcd/ratfunc.hpp"

namespace ffgcd {

// A closed point of P^1 over the rationals: either the point at infinity or a
// monic irreducible polynomial in t (the Galois orbit of its roots). Its degree
// is the number of geometric points in the orbit.
class ClosedPoint {
 public:
  static ClosedPoint infinity() { return ClosedPoint(); }
  // monic irreducible minimal polynomial; scaled monic internally, rejected if
  // a reducibility witness is found
  static ClosedPoint finite(const Poly& minpoly);
  // t - a
  static ClosedPoint rational(const Rat& a) { return finite(Poly({-a, Rat(1)})); }

  bool is_infinity() const { return !minpoly_.has_value(); }
  const Poly& minpoly() const;
  int degree() const { return is_infinity() ? 1 : minpoly_->deg(); }

  bool operator==(const ClosedPoint& o) const;
  bool operator!=(const ClosedPoint& o) const { return !(*this == o); }
  bool operator<(const ClosedPoint& o) const;  // infinity first, then poly order

  std::string str() const;
  static ClosedPoint parse(const std::string& s);

 private:
  ClosedPoint() = default;
  std::optional<Poly> minpoly_;
};

// Finite set of closed points, kept sorted and duplicate-free.
class PlaceSet {
 public:
  PlaceSet() = default;
  explicit PlaceSet(std::vector<ClosedPoint> pts);

  const std::vector<ClosedPoint>& points() const { return pts_; }
  bool contains(const ClosedPoint& p) const;
  bool contains_infinity() const;
  // |S| = sum of degrees (a degree-e point counts e geometric points)
  long weighted_size() const;
  bool empty() const { return pts_.empty(); }

  PlaceSet with(const ClosedPoint& p) const;
  PlaceSet united(const PlaceSet& o) const;

  std::string str() const;

 private:
  std::vector<ClosedPoint> pts_;
};

// Genus and the separating element are fixed for K = k(t); genus is kept as an
// explicit parameter so every bound formula reads with g in place.
struct FieldContext {
  int genus = 0;
};

// Reducibility probe for monic rational polynomials: complete for deg <= 3
// (rational root test); deg 4..5 additionally search integer quadratic factors
// after the monic-integer substitution. Returns false only on a witness.
bool has_reducibility_witness(const Poly& monic);

}  // namespace ffgcd

#endif
