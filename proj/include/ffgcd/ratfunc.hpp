#ifndef FFGCD_RATFUNC_HPP
#define FFGCD_RATFUNC_HPP

#include <string>

#include "ffgcd/poly.hpp"

namespace ffgcd {

// Element of K = k(t) as a reduced fraction num/den with den monic and
// gcd(num, den) = 1. The zero element is 0/1. Immutable after construction.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rat(1)) {}
  RationalFunction(const Rat& c) : num_(c), den_(Rat(1)) {}
  RationalFunction(long c) : num_(Rat(c)), den_(Rat(1)) {}
  RationalFunction(const Poly& p) : num_(p), den_(Rat(1)) {}
  RationalFunction(const Poly& num, const Poly& den);

  static RationalFunction t() { return RationalFunction(Poly::t()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rat constant_value() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction inverse() const;
  RationalFunction pow(long e) const;
  // quotient-rule derivative d/dt, reduced
  RationalFunction derivative() const;

  // v_infty = deg den - deg num; requires a nonzero element
  int v_infinity() const;

  int cmp(const RationalFunction& o) const;
  std::string str(const std::string& var = "t") const;

 private:
  Poly num_, den_;
};

using K = RationalFunction;

}  // namespace ffgcd

#endif
