#include "ffgcd/places.hpp"

#include <algorithm>
#include <sstream>

namespace ffgcd {

bool has_reducibility_witness(const Poly& monic) {
  int n = monic.deg();
  if (n <= 1) return false;
  if (gcd(monic, monic.derivative()).deg() > 0) return true;  // repeated factor
  if (find_rational_root(monic)) return true;
  if (n >= 4 && find_quadratic_factor(monic)) return true;
  return false;
}

ClosedPoint ClosedPoint::finite(const Poly& minpoly) {
  if (minpoly.deg() < 1) throw std::invalid_argument("ClosedPoint: constant minimal polynomial");
  Poly m = minpoly.monic();
  if (has_reducibility_witness(m))
    throw std::invalid_argument("ClosedPoint: reducible minimal polynomial " + m.str());
  ClosedPoint p;
  p.minpoly_ = std::move(m);
  return p;
}

const Poly& ClosedPoint::minpoly() const {
  if (is_infinity()) throw std::domain_error("ClosedPoint: infinity has no minimal polynomial");
  return *minpoly_;
}

bool ClosedPoint::operator==(const ClosedPoint& o) const {
  if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
  return *minpoly_ == *o.minpoly_;
}

bool ClosedPoint::operator<(const ClosedPoint& o) const {
  if (is_infinity() != o.is_infinity()) return is_infinity();
  if (is_infinity()) return false;
  return minpoly_->cmp(*o.minpoly_) < 0;
}

std::string ClosedPoint::str() const { return is_infinity() ? "inf" : minpoly_->str(); }

PlaceSet::PlaceSet(std::vector<ClosedPoint> pts) : pts_(std::move(pts)) {
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool PlaceSet::contains(const ClosedPoint& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

bool PlaceSet::contains_infinity() const { return !pts_.empty() && pts_.front().is_infinity(); }

long PlaceSet::weighted_size() const {
  long s = 0;
  for (const auto& p : pts_) s += p.degree();
  return s;
}

PlaceSet PlaceSet::with(const ClosedPoint& p) const {
  auto v = pts_;
  v.push_back(p);
  return PlaceSet(std::move(v));
}

PlaceSet PlaceSet::united(const PlaceSet& o) const {
  auto v = pts_;
  v.insert(v.end(), o.pts_.begin(), o.pts_.end());
  return PlaceSet(std::move(v));
}

std::string PlaceSet::str() const {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < pts_.size(); ++i) {
    if (i) out << ", ";
    out << pts_[i].str();
  }
  out << "}";
  return out.str();
}

}  // namespace ffgcd
