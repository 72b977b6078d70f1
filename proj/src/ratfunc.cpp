#include "ffgcd/ratfunc.hpp"

namespace ffgcd {

RationalFunction::RationalFunction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = gcd(num, den);
  Poly n = num / g, d = den / g;
  Rat dl = d.lead();
  num_ = n * (Rat(1) / dl);
  den_ = d * (Rat(1) / dl);
}

Rat RationalFunction::constant_value() const {
  if (!is_constant()) throw std::domain_error("RationalFunction: not a constant");
  return num_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e == 0) return RationalFunction(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("RationalFunction: zero to negative power");
    return RationalFunction();
  }
  RationalFunction b = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  // num and den stay coprime under powering, no re-reduction needed
  RationalFunction r;
  r.num_ = b.num_.pow(static_cast<unsigned>(n));
  r.den_ = b.den_.pow(static_cast<unsigned>(n));
  return r;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

int RationalFunction::v_infinity() const {
  if (is_zero()) throw std::domain_error("v_infinity: zero element");
  return den_.deg() - num_.deg();
}

int RationalFunction::cmp(const RationalFunction& o) const {
  int s = num_.cmp(o.num_);
  if (s != 0) return s;
  return den_.cmp(o.den_);
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_.is_one()) {
    if (num_.deg() <= 0) return num_.str(var);
    return "(" + num_.str(var) + ")";
  }
  std::string n = num_.deg() <= 0 && !(num_.constant_value() < 0) ? num_.str(var)
                                                                  : "(" + num_.str(var) + ")";
  std::string d = den_.deg() <= 0 ? den_.str(var) : "(" + den_.str(var) + ")";
  return n + "/" + d;
}

}  // namespace ffgcd
