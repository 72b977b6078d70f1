#include "ffgcd/poly.hpp"

#include <sstream>

namespace ffgcd {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Rat& c, int k) {
  if (c == 0) return Poly();
  std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
  v.back() = c;
  return Poly(std::move(v));
}

const Rat& Poly::operator[](int i) const {
  static const Rat zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(i)];
}

const Rat& Poly::lead() const {
  if (c_.empty()) throw std::domain_error("Poly::lead: zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  std::vector<Rat> v(c_);
  for (auto& x : v) x = -x;
  return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& s) const {
  if (s == 0) return Poly();
  std::vector<Rat> v(c_);
  for (auto& x : v) x *= s;
  return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("Poly::divrem: division by zero");
  Poly r = *this;
  if (r.deg() < d.deg()) return {Poly(), r};
  std::vector<Rat> q(static_cast<size_t>(r.deg() - d.deg()) + 1, Rat(0));
  const Rat& dl = d.lead();
  while (!r.is_zero() && r.deg() >= d.deg()) {
    int k = r.deg() - d.deg();
    Rat c = r.lead() / dl;
    q[static_cast<size_t>(k)] = c;
    r = r - d * Poly::monomial(c, k);
  }
  return {Poly(std::move(q)), r};
}

Poly Poly::operator/(const Poly& o) const {
  auto [q, r] = divrem(o);
  if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
  return q;
}

bool Poly::divides(const Poly& f) const {
  if (is_zero()) return f.is_zero();
  return f.divrem(*this).second.is_zero();
}

Poly Poly::pow(unsigned e) const {
  Poly r(Rat(1)), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("Poly::monic: zero polynomial");
  return *this * (Rat(1) / lead());
}

Rat Poly::eval(const Rat& x) const {
  Rat r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

int Poly::cmp(const Poly& o) const {
  if (deg() != o.deg()) return deg() < o.deg() ? -1 : 1;
  for (int i = deg(); i >= 0; --i) {
    int s = ::cmp((*this)[i], o[i]);
    if (s != 0) return s;
  }
  return 0;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    const Rat& c = (*this)[i];
    if (c == 0) continue;
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (i == 0) {
      out << a.get_str();
    } else {
      if (!unit) out << a.get_str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

namespace {

// integer model and content for the primitive PRS
std::vector<Int> to_integer_poly(const Poly& f) {
  Int den = 1;
  for (int i = 0; i <= f.deg(); ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), f[i].get_den_mpz_t());
  std::vector<Int> v(static_cast<size_t>(f.deg()) + 1);
  for (int i = 0; i <= f.deg(); ++i) {
    Rat c = f[i] * Rat(den);
    v[static_cast<size_t>(i)] = c.get_num();
  }
  return v;
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (Int& c : v) c /= g;
}

// pseudo-remainder of two primitive integer polynomials
std::vector<Int> int_prem(std::vector<Int> r, const std::vector<Int>& d) {
  const Int& lead = d.back();
  while (r.size() >= d.size()) {
    Int c = r.back();
    size_t shift = r.size() - d.size();
    for (Int& x : r) x *= lead;
    for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
  }
  return r;
}

constexpr uint64_t kGcdPrime = 2305843009213693951ULL;  // 2^61 - 1

uint64_t mulmod(uint64_t a, uint64_t b) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % kGcdPrime);
}

uint64_t powmod(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<uint64_t> reduce_mod(const std::vector<Int>& v) {
  std::vector<uint64_t> out(v.size());
  Int p(static_cast<unsigned long>(kGcdPrime));
  for (size_t i = 0; i < v.size(); ++i) {
    Int m = v[i] % p;
    if (m < 0) m += p;
    out[i] = m.get_ui();
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// gcd degree in Z/p; a degree-0 answer certifies coprimality over Q whenever
// p divides neither input's leading coefficient
long modp_gcd_degree(std::vector<uint64_t> a, std::vector<uint64_t> b) {
  while (!b.empty()) {
    uint64_t inv = powmod(b.back(), kGcdPrime - 2);
    while (a.size() >= b.size()) {
      uint64_t c = mulmod(a.back(), inv);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        uint64_t s = mulmod(c, b[i]);
        a[shift + i] = a[shift + i] >= s ? a[shift + i] - s : a[shift + i] + kGcdPrime - s;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(Rat(1));
  if (std::min(a.deg(), b.deg()) <= 8) {
    // plain Euclid wins at small degrees
    Poly x = a, y = b;
    while (!y.is_zero()) {
      Poly r = x.divrem(y).second;
      x = std::move(y);
      y = std::move(r);
    }
    return x.monic();
  }
  // primitive PRS over the integers keeps coefficient growth in check
  std::vector<Int> x = to_integer_poly(a), y = to_integer_poly(b);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  {
    auto xm = reduce_mod(x), ym = reduce_mod(y);
    if (xm.size() == x.size() || ym.size() == y.size())  // a leading coefficient survived
      if (!xm.empty() && !ym.empty() && modp_gcd_degree(xm, ym) == 0) return Poly(Rat(1));
  }
  while (true) {
    std::vector<Int> r = int_prem(x, y);
    if (r.empty()) break;
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
    if (y.size() == 1) return Poly(Rat(1));
  }
  std::vector<Rat> coeffs(y.size());
  for (size_t i = 0; i < y.size(); ++i) coeffs[i] = Rat(y[i]);
  return Poly(std::move(coeffs)).monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return ((a * b) / gcd(a, b)).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (f.is_constant()) return out;
  // Yun's algorithm over a field of characteristic zero
  Poly p = f.monic();
  Poly d = p.derivative();
  Poly a = gcd(p, d);
  Poly b = p / a;
  Poly c = d / a;
  int i = 1;
  while (b.deg() > 0) {
    Poly w = c - b.derivative();
    Poly q = gcd(b, w);
    if (q.deg() > 0) out.emplace_back(q.monic(), i);
    b = b / q;
    c = w / q;
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& f) {
  Poly r(Rat(1));
  for (const auto& [q, e] : squarefree_decomposition(f)) r = r * q;
  return r;
}

namespace {

// divisors of |n| by trial division; empty when |n| resists factoring below the bound
std::vector<Int> small_divisors(const Int& n) {
  Int a = abs(n);
  if (a == 0) return {};
  std::vector<std::pair<Int, int>> fac;
  Int d = 2;
  const long kBound = 100000;
  while (d * d <= a && d <= kBound) {
    if (a % d == 0) {
      int e = 0;
      while (a % d == 0) {
        a /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (a > 1) {
    if (a > Int(kBound) * kBound) return {};
    fac.emplace_back(a, 1);
  }
  std::vector<Int> divs = {Int(1)};
  for (const auto& [p, e] : fac) {
    size_t m = divs.size();
    Int pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < m; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

// g(y) = c^n f(y/c) with integer coefficients, monic when f is; returns (g, c)
std::pair<std::vector<Int>, Int> monic_integer_model(const Poly& f) {
  Int c = 1;
  for (int i = 0; i <= f.deg(); ++i) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), f[i].get_den_mpz_t());
  int n = f.deg();
  std::vector<Int> g(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Rat ci = f[i] * rat_pow(Rat(c), n - i);
    g[static_cast<size_t>(i)] = ci.get_num();
  }
  return {g, c};
}

Int eval_int(const std::vector<Int>& g, const Int& x) {
  Int v = 0;
  for (size_t i = g.size(); i-- > 0;) v = v * x + g[i];
  return v;
}

}  // namespace

std::optional<Rat> find_rational_root(const Poly& f) {
  if (f.deg() < 1) return std::nullopt;
  auto [g, c] = monic_integer_model(f.monic());
  if (g[0] == 0) return Rat(0);
  for (const Int& d : small_divisors(g[0])) {
    if (eval_int(g, d) == 0) return Rat(d) / Rat(c);
    if (eval_int(g, -d) == 0) return Rat(-d) / Rat(c);
  }
  return std::nullopt;
}

namespace {

std::optional<Int> integer_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Poly> find_quadratic_factor(const Poly& f) {
  int n = f.deg();
  if (n != 4 && n != 5) return std::nullopt;
  auto [g, c] = monic_integer_model(f.monic());
  if (g[0] == 0) return std::nullopt;  // has the root 0, handled elsewhere
  auto qdivs = small_divisors(g[0]);
  if (qdivs.empty()) return std::nullopt;
  auto back = [&](const Int& p, const Int& q) {
    // y = c t:  y^2 + p y + q  ->  t^2 + (p/c) t + q/c^2
    return Poly({Rat(q) / (Rat(c) * Rat(c)), Rat(p) / Rat(c), Rat(1)});
  };
  for (const Int& qd : qdivs) {
    for (int sq = -1; sq <= 1; sq += 2) {
      Int q = sq * qd;
      if (n == 4) {
        // (y^2+py+q)(y^2+ry+s): p+r and pr are determined up to the solvable quadratic
        Int s = g[0] / q;
        Int prodpr = g[2] - q - s;
        auto rt = integer_sqrt(g[3] * g[3] - 4 * prodpr);
        if (!rt) continue;
        for (int sgn = -1; sgn <= 1; sgn += 2) {
          Int two_p = g[3] + sgn * (*rt);
          if (two_p % 2 != 0) continue;
          Int p = two_p / 2, r = g[3] - p;
          if (p * s + q * r == g[1]) return back(p, q);
        }
      } else {
        // (y^2+py+q)(y^3+ay^2+by+c3) with qc3 = g0 reduces to a quadratic in p
        Int c3 = g[0] / q;
        // q p^2 + (c3 - q g4) p + (q g3 - q^2 - g1) = 0
        Int A = q, B = c3 - q * g[4], C = q * g[3] - q * q - g[1];
        auto rt = integer_sqrt(B * B - 4 * A * C);
        if (!rt) continue;
        for (int sgn = -1; sgn <= 1; sgn += 2) {
          Int num = -B + sgn * (*rt);
          if (num % (2 * A) != 0) continue;
          Int p = num / (2 * A);
          Poly cand = back(p, q);
          if (cand.divides(f.monic())) return cand;
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Poly> factor_squarefree(const Poly& f) {
  std::vector<Poly> out;
  Poly r = f.monic();
  while (r.deg() >= 1) {
    if (auto root = find_rational_root(r)) {
      Poly lin({-*root, Rat(1)});
      out.push_back(lin);
      r = r / lin;
      continue;
    }
    if (r.deg() <= 3) {  // rootless degree 2 or 3: irreducible
      out.push_back(r);
      break;
    }
    if (auto quad = find_quadratic_factor(r)) {
      out.push_back(*quad);
      r = r / *quad;
      continue;
    }
    out.push_back(r);  // deg >= 6 could still be 3+3; accepted whole
    break;
  }
  return out;
}

}  // namespace ffgcd

