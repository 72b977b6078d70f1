#include "ffgcd/heights.hpp"

#include <algorithm>

namespace ffgcd {

namespace {

// primitive integer coefficient vector; valuations at finite places are
// invariant under the scaling
std::vector<Int> primitive_integer_model(const Poly& f) {
  Int den = 1;
  for (int i = 0; i <= f.deg(); ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), f[i].get_den_mpz_t());
  std::vector<Int> v(static_cast<size_t>(f.deg()) + 1);
  Int content = 0;
  for (int i = 0; i <= f.deg(); ++i) {
    Rat c = f[i] * Rat(den);
    v[static_cast<size_t>(i)] = c.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v[static_cast<size_t>(i)].get_mpz_t());
  }
  if (content > 1)
    for (Int& c : v) c /= content;
  return v;
}

// exact-division count of a primitive integer polynomial by another; by Gauss
// divisibility over Q coincides with divisibility over Z
long int_division_count(std::vector<Int> r, const std::vector<Int>& m) {
  long count = 0;
  while (r.size() >= m.size()) {
    std::vector<Int> q(r.size() - m.size() + 1);
    bool exact = true;
    std::vector<Int> work = r;
    for (size_t k = q.size(); k-- > 0 && exact;) {
      Int& top = work[k + m.size() - 1];
      if (top % m.back() != 0) {
        exact = false;
        break;
      }
      Int c = top / m.back();
      q[k] = c;
      if (c != 0)
        for (size_t i = 0; i < m.size(); ++i) work[k + i] -= c * m[i];
    }
    if (!exact) break;
    for (size_t i = 0; i + q.size() < work.size() + 1 && exact; ++i)
      if (i < m.size() - 1 && work[i] != 0) exact = false;
    if (!exact) break;
    ++count;
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (q.empty()) break;
    r = std::move(q);
  }
  return count;
}

}  // namespace

long poly_valuation(const Poly& f, const ClosedPoint& p) {
  if (f.is_zero()) throw std::domain_error("poly_valuation: zero polynomial");
  if (p.is_infinity()) throw std::domain_error("poly_valuation: finite place expected");
  if (f.deg() < p.minpoly().deg()) return 0;
  return int_division_count(primitive_integer_model(f), primitive_integer_model(p.minpoly()));
}

std::optional<long> valuation(const K& f, const ClosedPoint& p) {
  if (f.is_zero()) return std::nullopt;
  if (p.is_infinity()) return f.v_infinity();
  return poly_valuation(f.num(), p) - poly_valuation(f.den(), p);
}

long v_zero(const K& f, const ClosedPoint& p) {
  auto v = valuation(f, p);
  if (!v) throw std::domain_error("v_zero: zero element");
  return std::max(0L, *v);
}

long v_pole(const K& f, const ClosedPoint& p) {
  auto v = valuation(f, p);
  if (!v) throw std::domain_error("v_pole: zero element");
  return std::max(0L, -*v);
}

long v_zero_trunc(const K& f, const ClosedPoint& p) { return std::min(1L, v_zero(f, p)); }

long height(const K& f) {
  if (f.is_zero()) throw std::domain_error("height: zero element");
  return std::max(f.num().deg(), f.den().deg());
}

long projective_height(std::span<const K> fs) {
  // bring to a common denominator; then
  //   h = max_i deg n_i - deg gcd(n_i),  including the place at infinity
  bool any = false;
  Poly D(Rat(1));
  for (const K& f : fs) {
    if (f.is_zero()) continue;
    any = true;
    D = lcm(D, f.den());
  }
  if (!any) throw std::invalid_argument("projective_height: all coordinates zero");
  Poly g;
  int maxdeg = -1;
  for (const K& f : fs) {
    if (f.is_zero()) continue;
    Poly n = f.num() * (D / f.den());
    maxdeg = std::max(maxdeg, n.deg());
    g = g.is_zero() ? n : gcd(g, n);
  }
  return maxdeg - gcd(g, g).deg();  // g already monic-normalized by gcd
}

long projective_height(const std::vector<K>& fs) {
  return projective_height(std::span<const K>(fs.data(), fs.size()));
}

long counting(const K& f, const PlaceSet& S, CountMode mode) {
  if (f.is_zero()) throw std::domain_error("counting: zero element");
  long total;
  if (mode == CountMode::WithMultiplicity) {
    total = f.num().deg() + std::max(0, f.den().deg() - f.num().deg());
  } else {
    long fin = f.num().is_constant() ? 0 : squarefree_part(f.num()).deg();
    total = fin + (f.den().deg() > f.num().deg() ? 1 : 0);
  }
  for (const auto& p : S.points()) {
    long v = mode == CountMode::WithMultiplicity ? v_zero(f, p) : v_zero_trunc(f, p);
    total -= v * p.degree();
  }
  return total;
}

long gcd_counting(const K& f, const K& g, const PlaceSet& S, GcdCountMode mode) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("gcd_counting: zero element");
  long total = 0;
  if (!f.num().is_constant() && !g.num().is_constant()) total += gcd(f.num(), g.num()).deg();
  total += std::min(std::max(0, f.den().deg() - f.num().deg()),
                    std::max(0, g.den().deg() - g.num().deg()));
  if (mode == GcdCountMode::OutsideS)
    for (const auto& p : S.points()) total -= std::min(v_zero(f, p), v_zero(g, p)) * p.degree();
  return total;
}

namespace {

// a polynomial is fully supported on S iff the degree-weighted valuations at
// the finite members of S exhaust its degree
bool supported_on(const Poly& f, const PlaceSet& S) {
  if (f.is_constant()) return true;
  long total = 0;
  for (const auto& p : S.points()) {
    if (p.is_infinity()) continue;
    total += poly_valuation(f, p) * p.degree();
    if (total == f.deg()) return true;
  }
  return total == f.deg();
}

}  // namespace

bool is_S_unit(const K& f, const PlaceSet& S) {
  if (f.is_zero()) return false;
  if (!supported_on(f.num(), S)) return false;
  if (!supported_on(f.den(), S)) return false;
  return S.contains_infinity() || f.num().deg() == f.den().deg();
}

bool is_S_integer(const K& f, const PlaceSet& S) {
  if (f.is_zero()) return true;
  if (!supported_on(f.den(), S)) return false;
  return S.contains_infinity() || f.num().deg() <= f.den().deg();
}

bool is_dth_power(const K& f, long d) {
  if (f.is_zero()) throw std::domain_error("is_dth_power: zero element");
  if (d < 1) throw std::invalid_argument("is_dth_power: d must be positive");
  if (d == 1 || f.is_constant()) return true;
  // over algebraically closed constants, f is a d-th power iff d | v_p(f) at
  // every finite place; the value at infinity follows from degree zero of the
  // principal divisor.  Yun decomposition reads the multiplicities off without
  // factoring into irreducibles.
  for (const Poly* part : {&f.num(), &f.den()}) {
    if (part->is_constant()) continue;
    for (const auto& [q, e] : squarefree_decomposition(*part))
      if (e % d != 0) return false;
  }
  return true;
}

PlaceSet support(const K& f) {
  if (f.is_zero()) throw std::domain_error("support: zero element");
  std::vector<ClosedPoint> pts;
  for (const Poly* part : {&f.num(), &f.den()}) {
    if (part->is_constant()) continue;
    for (const auto& [q, e] : squarefree_decomposition(*part))
      for (const Poly& irr : factor_squarefree(q)) pts.push_back(ClosedPoint::finite(irr));
  }
  if (f.num().deg() != f.den().deg()) pts.push_back(ClosedPoint::infinity());
  return PlaceSet(std::move(pts));
}

std::vector<std::pair<Poly, long>> divisor_components(const K& f) {
  if (f.is_zero()) throw std::domain_error("divisor_components: zero element");
  std::vector<std::pair<Poly, long>> out;
  if (!f.num().is_constant())
    for (const auto& [q, e] : squarefree_decomposition(f.num())) out.emplace_back(q, e);
  if (!f.den().is_constant())
    for (const auto& [q, e] : squarefree_decomposition(f.den())) out.emplace_back(q, -e);
  return out;
}

}  // namespace ffgcd
