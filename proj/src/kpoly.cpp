#include "ffgcd/kpoly.hpp"

#include <sstream>

namespace ffgcd {

void KPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const K& KPoly::operator[](int i) const {
  static const K zero;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(i)];
}

const K& KPoly::lead() const {
  if (c_.empty()) throw std::domain_error("KPoly::lead: zero polynomial");
  return c_.back();
}

KPoly KPoly::operator-() const {
  std::vector<K> v(c_);
  for (auto& x : v) x = -x;
  return KPoly(std::move(v));
}

KPoly KPoly::operator+(const KPoly& o) const {
  std::vector<K> v(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] + o.c_[i];
  return KPoly(std::move(v));
}

KPoly KPoly::operator-(const KPoly& o) const { return *this + (-o); }

KPoly KPoly::operator*(const KPoly& o) const {
  if (c_.empty() || o.c_.empty()) return KPoly();
  std::vector<K> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
  return KPoly(std::move(v));
}

KPoly KPoly::scaled(const K& s) const {
  if (s.is_zero()) return KPoly();
  std::vector<K> v(c_);
  for (auto& x : v) x = x * s;
  return KPoly(std::move(v));
}

std::pair<KPoly, KPoly> KPoly::divrem(const KPoly& d) const {
  if (d.is_zero()) throw std::domain_error("KPoly::divrem: division by zero");
  KPoly r = *this;
  if (r.deg() < d.deg()) return {KPoly(), r};
  std::vector<K> q(static_cast<size_t>(r.deg() - d.deg()) + 1);
  K dl = d.lead().inverse();
  while (!r.is_zero() && r.deg() >= d.deg()) {
    int k = r.deg() - d.deg();
    K c = r.lead() * dl;
    q[static_cast<size_t>(k)] = c;
    std::vector<K> sub(static_cast<size_t>(k), K());
    sub.push_back(c);
    r = r - KPoly(std::move(sub)) * d;
  }
  return {KPoly(std::move(q)), r};
}

KPoly KPoly::operator/(const KPoly& o) const {
  auto [q, r] = divrem(o);
  if (!r.is_zero()) throw std::domain_error("KPoly: inexact division");
  return q;
}

KPoly KPoly::pow(unsigned e) const {
  KPoly r(K(1)), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

KPoly KPoly::derivative() const {
  if (c_.size() <= 1) return KPoly();
  std::vector<K> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * K(static_cast<long>(i));
  return KPoly(std::move(v));
}

KPoly KPoly::monic() const {
  if (is_zero()) throw std::domain_error("KPoly::monic: zero polynomial");
  return scaled(lead().inverse());
}

K KPoly::eval(const K& x) const {
  K r;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

KPoly KPoly::from_mvpoly(const MvPoly& p, size_t var) {
  std::vector<K> v(static_cast<size_t>(p.degree_in(var)) + 1);
  for (const auto& [e, c] : p.terms()) {
    for (size_t j = 0; j < e.size(); ++j)
      if (j != var && e[j] != 0)
        throw std::invalid_argument("KPoly::from_mvpoly: extra variable present");
    v[static_cast<size_t>(e[var])] = c;
  }
  return KPoly(std::move(v));
}

MvPoly KPoly::to_mvpoly(size_t arity, size_t var) const {
  MvPoly out(arity);
  Exponent e(arity, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    e[var] = static_cast<int>(i);
    out = out + MvPoly::monomial(arity, e, c_[i]);
  }
  return out;
}

std::string KPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    const K& c = (*this)[i];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    bool unit = (c == K(1)) && i > 0;
    if (!unit) {
      if (c.is_constant() && !(c.constant_value() < 0))
        out << c.str();
      else
        out << "(" << c.str() << ")";
      if (i > 0) out << "*";
    }
    if (i > 0) {
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

KPoly kpoly_gcd(const KPoly& a, const KPoly& b) {
  KPoly x = a, y = b;
  while (!y.is_zero()) {
    KPoly r = x.divrem(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

std::vector<std::pair<KPoly, int>> kpoly_squarefree_decomposition(const KPoly& f) {
  if (f.is_zero()) throw std::domain_error("kpoly_squarefree_decomposition: zero polynomial");
  std::vector<std::pair<KPoly, int>> out;
  if (f.is_constant()) return out;
  KPoly p = f.monic();
  KPoly d = p.derivative();
  KPoly a = kpoly_gcd(p, d);
  KPoly b = p / a;
  KPoly c = d / a;
  int i = 1;
  while (b.deg() > 0) {
    KPoly w = c - b.derivative();
    KPoly q = kpoly_gcd(b, w);
    if (q.deg() > 0) out.emplace_back(q.monic(), i);
    b = b / q;
    c = w / q;
    ++i;
  }
  return out;
}

}  // namespace ffgcd
