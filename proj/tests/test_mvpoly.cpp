#include "doctest.h"
#include "ffgcd/derivation.hpp"
#include "ffgcd/mvpoly.hpp"
#include "ffgcd/parser.hpp"
#include "test_util.hpp"

using namespace ffgcd;
using testutil::Rng;

namespace {
K el(const std::string& s) { return parse_element(s); }
MvPoly mv(const std::string& s, size_t n) { return parse_mvpoly(s, n); }

MvPoly random_sparse(Rng& rng, size_t n, int maxdeg, int terms, int coeffdeg = 2) {
  MvPoly F(n);
  for (int k = 0; k < terms; ++k) {
    Exponent e(n, 0);
    for (size_t j = 0; j < n; ++j) e[j] = static_cast<int>(rng.range(0, maxdeg));
    F = F + MvPoly::monomial(n, e, testutil::random_ratfunc(rng, coeffdeg, 3));
  }
  return F;
}
}  // namespace

TEST_CASE("graded lex order") {
  CHECK(grlex_cmp({2, 0}, {1, 1}) > 0);
  CHECK(grlex_cmp({1, 1}, {0, 2}) > 0);
  CHECK(grlex_cmp({0, 2}, {1, 0}) > 0);  // degree dominates
  CHECK(grlex_cmp({1, 0}, {1, 0}) == 0);
  MvPoly F = mv("x1*x2 + x2^2 + x1^3", 2);
  CHECK(F.leading_monomial() == Exponent{3, 0});
}

TEST_CASE("gauss valuation and the two heights") {
  MvPoly F = mv("t*x1 + (t^2)*x2", 2);
  CHECK(gauss_valuation(F, parse_place("t")) == 1);
  CHECK(gauss_valuation(F, parse_place("inf")) == -2);
  CHECK(mv_height(F) == 1);
  CHECK(mv_relevant_height(F) == 2);
  MvPoly G = mv("3*x1 + 2*x2^2 - 1", 2);
  CHECK(mv_height(G) == 0);
  CHECK(mv_relevant_height(G) == 0);
}

TEST_CASE("Gauss lemma h(FG) = h(F) + h(G) on random pairs") {
  Rng rng(51);
  for (int it = 0; it < 500; ++it) {
    size_t n = static_cast<size_t>(rng.range(1, 3));
    MvPoly F = random_sparse(rng, n, 2, 3);
    MvPoly G = random_sparse(rng, n, 2, 3);
    if (F.is_zero() || G.is_zero()) continue;
    CHECK(mv_height(F * G) == mv_height(F) + mv_height(G));
  }
}

TEST_CASE("relevant height dominates coefficient heights") {
  Rng rng(52);
  for (int it = 0; it < 200; ++it) {
    size_t n = 2;
    MvPoly F = random_sparse(rng, n, 2, 3);
    if (F.is_zero()) continue;
    long ht = mv_relevant_height(F);
    for (const K& a : F.coefficients()) {
      CHECK(height(a) <= ht);
      CHECK(mv_relevant_height(F.scaled(a.inverse())) == mv_height(F.scaled(a.inverse())));
      CHECK(mv_height(F) <= ht);
    }
  }
}

TEST_CASE("multivariate gcd") {
  CHECK(is_coprime(mv("x1 - 1", 2), mv("x2 - 1", 2)));
  MvPoly g = mv_gcd(mv("(x1+x2)^2", 2), mv("(x1+x2)*x1", 2));
  CHECK(g == mv("x1+x2", 2));
  MvPoly a = mv("x1^2 - t^2", 1), b = mv("x1 - t", 1);
  CHECK(mv_gcd(a, b) == mv("x1 - t", 1));
}

TEST_CASE("gcd of constructed products") {
  Rng rng(53);
  for (int it = 0; it < 60; ++it) {
    size_t n = 2;
    MvPoly c = random_sparse(rng, n, 1, 2, 1);
    MvPoly a = random_sparse(rng, n, 1, 2, 1);
    MvPoly b = random_sparse(rng, n, 1, 2, 1);
    if (c.is_zero() || a.is_zero() || b.is_zero() || c.is_constant()) continue;
    MvPoly g = mv_gcd(a * c, b * c);
    CHECK(divide_exact(g, c.monic_normalized()).has_value());
    CHECK(divide_exact(a * c, g).has_value());
    CHECK(divide_exact(b * c, g).has_value());
  }
}

TEST_CASE("d-th power free decomposition") {
  // spec worked example
  MvPoly F = mv("t*x1^3*x2*(x1+x2)^2", 2);
  auto d = dth_power_free_decompose(F, 2);
  CHECK(d.constant == el("t"));
  CHECK(d.monomial == Exponent{3, 1});
  CHECK(d.root == mv("x1+x2", 2));
  CHECK(d.residual == MvPoly(2, K(1)));

  MvPoly sf = mv("x1^2 + x2 + t", 2);  // squarefree, no monomial factor
  auto d2 = dth_power_free_decompose(sf.scaled(el("t")), 2);
  CHECK(d2.constant == el("t"));
  CHECK(d2.monomial == Exponent{0, 0});
  CHECK(d2.root == MvPoly(2, K(1)));
  CHECK(d2.residual == sf);

  auto d3 = dth_power_free_decompose(mv("x1", 2), 2);
  CHECK(d3.constant == K(1));
  CHECK(d3.monomial == Exponent{1, 0});
  CHECK(d3.root == MvPoly(2, K(1)));
  CHECK(d3.residual == MvPoly(2, K(1)));
}

TEST_CASE("decomposition round-trips and residual is d-th power free") {
  Rng rng(54);
  for (int it = 0; it < 40; ++it) {
    size_t n = static_cast<size_t>(rng.range(1, 2));
    MvPoly A = random_sparse(rng, n, 1, 2, 1);
    MvPoly B = random_sparse(rng, n, 1, 2, 1);
    if (A.is_zero() || B.is_zero() || A.is_constant() || B.is_constant()) continue;
    int d = static_cast<int>(rng.range(2, 3));
    Exponent mono(n, 0);
    mono[0] = static_cast<int>(rng.range(0, 2));
    MvPoly F = MvPoly::monomial(n, mono, testutil::random_ratfunc(rng, 1, 2)) *
               A.pow(static_cast<unsigned>(d)) * B;
    if (F.is_zero()) continue;
    auto form = dth_power_free_decompose(F, d);
    MvPoly rec = MvPoly::monomial(n, form.monomial, form.constant) *
                 form.root.pow(static_cast<unsigned>(d)) * form.residual;
    CHECK(rec == F);
    // P has no d-th power factor and no monomial factor
    if (!form.residual.is_constant()) {
      for (const auto& [q, e] : mv_squarefree_decomposition(form.residual)) CHECK(e < d);
      for (size_t v = 0; v < n; ++v) {
        bool all_positive = true;
        for (const auto& [e, c] : form.residual.terms())
          if (e[v] == 0) all_positive = false;
        CHECK_FALSE(all_positive);
      }
    }
  }
}

TEST_CASE("squarefree test via derivative gcds matches decomposition") {
  Rng rng(55);
  for (int it = 0; it < 40; ++it) {
    MvPoly A = random_sparse(rng, 2, 1, 2, 1);
    if (A.is_zero() || A.is_constant()) continue;
    MvPoly F = A * A;
    bool has_square = false;
    for (const auto& [q, e] : mv_squarefree_decomposition(F))
      if (e >= 2) has_square = true;
    CHECK(has_square);
    // gcd(F, dF/dx_j) is nonconstant for some j
    bool witness = false;
    for (size_t v = 0; v < 2; ++v) {
      MvPoly d = F.derivative(v);
      if (!d.is_zero() && !mv_gcd(F, d).is_constant()) witness = true;
    }
    CHECK(witness);
  }
}

TEST_CASE("irreducibility certificates") {
  CHECK(certify_irreducible_deg_le2(mv("x1 + x2", 2)));
  CHECK(certify_irreducible_deg_le2(mv("x1*x2 + t", 2)));
  CHECK(certify_irreducible_deg_le2(mv("x1^2 + t", 1)));
  CHECK_FALSE(certify_irreducible_deg_le2(mv("x1^2 - t^2", 1)));    // splits
  CHECK_FALSE(certify_irreducible_deg_le2(mv("x1^2 - 2", 1)));      // sqrt(2) is in kbar
  CHECK_FALSE(certify_irreducible_deg_le2(mv("x1*x2", 2)));         // monomial
  CHECK_FALSE(certify_irreducible_deg_le2(mv("x1^2 + x1*x2", 2)));  // x1 divides
  CHECK_FALSE(certify_irreducible_deg_le2(mv("(x1+x2)^2", 2)));     // square
  CHECK(certify_irreducible_deg_le2(mv("x1^2 + x2^2", 2)) ==
        false);  // (x1+ix2)(x1-ix2) over kbar
  CHECK(certify_irreducible_deg_le2(mv("x1^2 - t*x2^2", 2)));
}

TEST_CASE("F_{e,u} identity via the factored derivative") {
  Rng rng(56);
  auto u = UnitTuple::build({el("t"), el("t+1")});
  // single factor, e = 1
  {
    FactoredForm ff{K(1), {0, 0}, {{mv("x1 + x2", 2), 1}}};
    CHECK(F_e_u(ff, u, 2) == apply_Du(mv("x1+x2", 2), u));
  }
  // F = P^2
  {
    MvPoly P = mv("x1 + x2", 2);
    FactoredForm ff{K(1), {0, 0}, {{P, 2}}};
    MvPoly feu = F_e_u(ff, u, 2);
    CHECK(feu == apply_Du(P, u).scaled(K(2)));
    CHECK(apply_Du(P * P, u) == P * feu);
  }
  // two distinct linear factors
  {
    MvPoly P1 = mv("x1 + x2", 2), P2 = mv("x1 - x2", 2);
    FactoredForm ff{K(1), {0, 0}, {{P1, 1}, {P2, 1}}};
    CHECK(F_e_u(ff, u, 2) == apply_Du(P1, u) * P2 + P1 * apply_Du(P2, u));
  }
  // eq-style identity D_u(F) = (prod P_i^{e_i-1}) F_{e,u} on random factored forms
  for (int it = 0; it < 30; ++it) {
    MvPoly P1 = mv("x1 + x2", 2), P2 = mv("x1 - x2", 2);
    int e1 = static_cast<int>(rng.range(1, 3)), e2 = static_cast<int>(rng.range(1, 3));
    FactoredForm ff{testutil::random_ratfunc(rng, 1, 2), {0, 0}, {{P1, e1}, {P2, e2}}};
    if (ff.constant.is_zero()) continue;
    ff.verify(2);
    MvPoly F = P1.pow(static_cast<unsigned>(e1)) * P2.pow(static_cast<unsigned>(e2));
    MvPoly lhs = apply_Du(F, u);
    MvPoly rhs = P1.pow(static_cast<unsigned>(e1 - 1)) * P2.pow(static_cast<unsigned>(e2 - 1)) *
                 F_e_u(FactoredForm{K(1), {0, 0}, {{P1, e1}, {P2, e2}}}, u, 2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("factored-derivative dichotomy on random factored forms") {
  Rng rng(57);
  auto el2 = [](const char* s) { return parse_element(s); };
  std::vector<MvPoly> pool = {mv("x1 + x2", 2), mv("x1 - x2", 2), mv("x1 + t*x2", 2),
                              mv("x1*x2 + 1", 2)};
  int done = 0;
  while (done < 60) {
    std::vector<std::pair<MvPoly, int>> factors;
    for (size_t j = 0; j < pool.size(); ++j)
      if (rng.range(0, 2) == 0) factors.emplace_back(pool[j], 1);
    if (factors.empty()) continue;
    // mix independent and dependent tuples
    std::vector<K> us;
    if (rng.range(0, 1)) {
      K v = el2("t").pow(rng.range(1, 2));
      us = {v, v * K(Rat(rng.range(2, 3)))};
    } else {
      us = {el2("t").pow(rng.range(1, 2)), el2("t+1").pow(rng.range(1, 2))};
    }
    auto u = UnitTuple::build(us);
    MvPoly Fbar(2, K(1));
    bool const_coeffs = true;
    for (const auto& [P, e] : factors) {
      Fbar = Fbar * P;
      for (const K& c : P.coefficients()) const_coeffs = const_coeffs && c.is_constant();
    }
    FactoredForm ff{K(1), {0, 0}, factors};
    MvPoly feu = F_e_u(ff, u, 2);
    ++done;
    bool coprime = !feu.is_zero() && is_coprime(Fbar, feu);
    if (!coprime) {
      // the dichotomy guarantees a power product of height <= h(Fbar) with
      // l1 <= 2 deg Fbar; with constant coefficients it is an exact constant
      long bound = 2 * Fbar.degree();
      long best = -1;
      for (long m1 = -bound; m1 <= bound; ++m1)
        for (long m2 = -bound; m2 <= bound; ++m2) {
          if ((m1 == 0 && m2 == 0) || std::abs(m1) + std::abs(m2) > bound) continue;
          long h = height(u.power_product({m1, m2}));
          if (best < 0 || h < best) best = h;
        }
      REQUIRE(best >= 0);
      CHECK(best <= mv_height(Fbar));
      if (const_coeffs) {
        auto rel = find_relation(u, bound);
        REQUIRE(rel.has_value());
        CHECK(height(rel->witness) == 0);
      }
    }
  }
}

TEST_CASE("factored-derivative dichotomy on dependent units") {
  // u with a multiplicative relation makes some F_{e,u} share a factor with F
  auto u = UnitTuple::build({el("t"), el("3*t")});
  MvPoly P = mv("x1 + x2", 2);
  FactoredForm ff{K(1), {0, 0}, {{P, 1}}};
  MvPoly feu = F_e_u(ff, u, 2);
  MvPoly F = P;
  if (!feu.is_zero()) {
    bool shares = !is_coprime(F, feu);
    CHECK(shares);
  }
  auto rel = find_relation(u, 2 * static_cast<long>(F.degree()));
  REQUIRE(rel.has_value());
  CHECK(height(rel->witness) == 0);
  // h(u^m) <= h(F) as the dichotomy requires
  CHECK(height(u.power_product(rel->exponents)) <= mv_height(F));
}
