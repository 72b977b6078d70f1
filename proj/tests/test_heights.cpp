#include "doctest.h"
#include "ffgcd/heights.hpp"
#include "ffgcd/parser.hpp"
#include "test_util.hpp"

using namespace ffgcd;
using testutil::Rng;

namespace {

ClosedPoint pt(const std::string& s) { return parse_place(s); }
K el(const std::string& s) { return parse_element(s); }

// oracle: pole count from the divisor components, degree-weighted
long height_via_divisor(const K& f) {
  long h = 0;
  for (const auto& [q, e] : divisor_components(f))
    if (e < 0) h += -e * q.deg();
  int vinf = f.v_infinity();
  if (vinf < 0) h += -vinf;
  return h;
}

// oracle: degree of the principal divisor, via exponent data + infinity
long divisor_degree(const K& f) {
  long d = 0;
  for (const auto& [q, e] : divisor_components(f)) d += e * q.deg();
  return d + f.v_infinity();
}

}  // namespace

TEST_CASE("valuation at finite and infinite places") {
  K f = el("t^2/(t+1)");
  CHECK(*valuation(f, pt("t")) == 2);
  CHECK(*valuation(f, pt("inf")) == -1);
  CHECK(*valuation(K(1), pt("t")) == 0);
  CHECK(*valuation(K(1), pt("inf")) == 0);
  CHECK_FALSE(valuation(K(), pt("t")).has_value());  // v(0) = +infinity
  CHECK(*valuation(el("(t^2+1)^3/(t-2)"), pt("t^2+1")) == 3);
}

TEST_CASE("height") {
  CHECK(height(el("(t^3+1)/(t-2)")) == 3);
  CHECK(height(K(5)) == 0);
  CHECK(height(el("(t^2+1)/(t^2+2)")) == 2);
  CHECK_THROWS_AS(height(K()), std::domain_error);
}

TEST_CASE("height agrees with the valuation route on random elements") {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    K f = testutil::random_ratfunc(rng);
    CHECK(height(f) == height_via_divisor(f));
  }
}

TEST_CASE("divisor degree zero on random elements") {
  Rng rng(22);
  for (int i = 0; i < 1000; ++i) {
    K f = testutil::random_ratfunc(rng);
    CHECK(divisor_degree(f) == 0);
  }
}

TEST_CASE("height laws") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    K f = testutil::random_ratfunc(rng);
    K g = testutil::random_ratfunc(rng);
    CHECK(height(f * g) <= height(f) + height(g));
    CHECK(height(f.pow(3)) == 3 * height(f));
    CHECK(height(f.inverse()) == height(f));
  }
}

TEST_CASE("projective height") {
  CHECK(projective_height({K(1), K::t()}) == 1);
  CHECK(projective_height({K::t(), K::t()}) == 0);
  CHECK(projective_height({el("t^2"), el("1/(t+1)")}) == 3);
  CHECK(projective_height({K(), K::t()}) == 0);  // scales to (0, 1)
  CHECK(projective_height({K(), K(1), K::t()}) == 1);
  CHECK_THROWS_AS(projective_height({K(), K()}), std::invalid_argument);
  // scaling invariance
  Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    K a = testutil::random_ratfunc(rng), b = testutil::random_ratfunc(rng);
    K c = testutil::random_ratfunc(rng);
    CHECK(projective_height({a, b}) == projective_height({a * c, b * c}));
  }
}

TEST_CASE("counting functions") {
  PlaceSet Sinf({pt("inf")});
  K f = el("t^3*(t-1)");
  CHECK(counting(f, Sinf, CountMode::WithMultiplicity) == 4);
  CHECK(counting(f, Sinf, CountMode::Truncated) == 2);
  PlaceSet S2({pt("t"), pt("inf")});
  CHECK(counting(el("t^3"), S2, CountMode::WithMultiplicity) == 0);
  // degree-2 point: truncation contributes min(1, v) per geometric point
  PlaceSet empty;
  K g = el("(t^2+1)^2");
  CHECK(counting(g, empty, CountMode::WithMultiplicity) == 4);
  CHECK(counting(g, empty, CountMode::Truncated) == 2);
  // zeros at infinity count too
  CHECK(counting(el("1/t"), empty, CountMode::WithMultiplicity) == 1);
}

TEST_CASE("gcd counting") {
  PlaceSet Sinf({pt("inf")});
  CHECK(gcd_counting(el("t^2*(t-1)"), el("t^3"), Sinf, GcdCountMode::OutsideS) == 2);
  CHECK(gcd_counting(el("t+1"), el("t+2"), Sinf, GcdCountMode::OutsideS) == 0);
  CHECK(gcd_counting(el("t^2/(t+1)"), el("t^3*(t+1)"), PlaceSet(), GcdCountMode::AllPlaces) == 2);
  // h_gcd = N_{S,gcd} + the S-part, for random assembled pairs
  Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    K f = testutil::random_ratfunc(rng), g = testutil::random_ratfunc(rng);
    PlaceSet S({pt("t"), pt("t+1"), pt("inf")});
    long s_part = 0;
    for (const auto& p : S.points()) s_part += std::min(v_zero(f, p), v_zero(g, p)) * p.degree();
    CHECK(gcd_counting(f, g, PlaceSet(), GcdCountMode::AllPlaces) ==
          gcd_counting(f, g, S, GcdCountMode::OutsideS) + s_part);
  }
}

TEST_CASE("S-units and S-integers") {
  PlaceSet S({pt("t"), pt("t+1"), pt("inf")});
  CHECK(is_S_unit(el("t/(t+1)"), S));
  CHECK_FALSE(is_S_unit(el("t-2"), PlaceSet({pt("t"), pt("inf")})));
  CHECK(is_S_unit(K(5), PlaceSet()));
  CHECK(is_S_integer(el("t^2+3"), PlaceSet({pt("inf")})));
  CHECK_FALSE(is_S_integer(el("1/t"), PlaceSet({pt("inf")})));
  CHECK_FALSE(is_S_unit(K(), S));
}

namespace {

// brute-force oracle: full factorization over the known pool
bool dth_power_oracle(const std::vector<int>& num_exps, const std::vector<int>& den_exps, long d) {
  for (int e : num_exps)
    if (e % d != 0) return false;
  for (int e : den_exps)
    if (e % d != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("is_dth_power") {
  CHECK(is_dth_power(el("t^2/(t+1)^2"), 2));
  CHECK_FALSE(is_dth_power(el("t^2*(t+1)"), 2));
  CHECK(is_dth_power(el("7*t^4"), 2));  // constants are d-th powers in kbar
  CHECK(is_dth_power(el("t^6"), 3));
  CHECK(is_dth_power(K(3), 5));

  // oracle agreement on 300 elements assembled from known irreducible factors
  Rng rng(26);
  auto pool = testutil::irreducible_pool();
  int checked = 0;
  while (checked < 300) {
    std::vector<int> ne(pool.size(), 0), de(pool.size(), 0);
    Poly num(Rat(rng.range(1, 9))), den(Rat(1));
    for (size_t j = 0; j < pool.size(); ++j) {
      long r = rng.range(0, 5);
      if (r <= 1) continue;
      int e = static_cast<int>(rng.range(1, 6));
      if (r <= 3) {
        ne[j] = e;
        num = num * pool[j].pow(static_cast<unsigned>(e));
      } else {
        de[j] = e;
        den = den * pool[j].pow(static_cast<unsigned>(e));
      }
    }
    K f(num, den);
    if (f.is_constant()) continue;
    ++checked;
    for (long d : {2L, 3L, 4L}) CHECK(is_dth_power(f, d) == dth_power_oracle(ne, de, d));
  }
}

TEST_CASE("support recovers the assembled places") {
  K f = el("t^2*(t^2+1)/(t-1)");
  PlaceSet s = support(f);
  CHECK(s.contains(pt("t")));
  CHECK(s.contains(pt("t^2+1")));
  CHECK(s.contains(pt("t-1")));
  CHECK(s.contains_infinity());
  CHECK(s.weighted_size() == 5);
}
