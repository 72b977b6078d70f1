#include "doctest.h"
#include "ffgcd/parser.hpp"
#include "ffgcd/refinement.hpp"
#include "test_util.hpp"

using namespace ffgcd;

namespace {
K el(const std::string& s) { return parse_element(s); }
MvPoly mv(const std::string& s, size_t n) { return parse_mvpoly(s, n); }
ClosedPoint pt(const std::string& s) { return parse_place(s); }
}  // namespace

TEST_CASE("refinement parameter formulas") {
  auto p1 = refinement_params(2, 1, 2);
  CHECK(p1.M == 5);
  CHECK(p1.Mprime == 1);
  auto p2 = refinement_params(2, 2, 4);
  CHECK(p2.M == 11);
  CHECK(p2.Mprime == 4);
  for (int m = 2; m <= 8; ++m) CHECK(refinement_params(2, 1, m).Mprime == 1);
  for (int m = 4; m <= 8; ++m) CHECK(refinement_params(2, 2, m).Mprime == 4);
}

TEST_CASE("ideal basis construction and dimension verification") {
  MvPoly F1 = mv("x1 - 1", 2), F2 = mv("x2 - 1", 2);
  IdealBasis ib = build_ideal_basis(F1, F2, 2);
  CHECK(ib.phi.size() == 5);
  CHECK(ib.monomials.size() == 6);
  CHECK_THROWS_AS(build_ideal_basis(F1, F2, 1), std::invalid_argument);  // m < 2d
  CHECK_THROWS_AS(build_ideal_basis(mv("x1 - 1", 2), mv("(x1-1)*(x2-1)", 2), 4),
                  std::invalid_argument);  // degrees differ
  CHECK_THROWS_AS(build_ideal_basis(mv("2*x1 - 1", 2), mv("x2 - 1", 2), 2),
                  std::invalid_argument);  // not monic
  CHECK_THROWS_AS(build_ideal_basis(mv("x1*(x2-1)", 2), mv("x2 - 1", 2).pow(2), 4),
                  std::invalid_argument);  // share a factor
  // same-degree conics with all intersections affine
  IdealBasis conics = build_ideal_basis(mv("x1^2 + x2^2 - 1", 2), mv("x1^2 - x2", 2), 4);
  CHECK(conics.params.M == 11);
  CHECK(conics.phi.size() == 11);
  // shift rank equals the formula for random coprime monic same-degree pairs
  testutil::Rng rng(61);
  int done = 0;
  while (done < 15) {
    std::vector<std::pair<Exponent, K>> t1, t2;
    for (int k = 0; k < 3; ++k) {
      Exponent e = {static_cast<int>(rng.range(0, 1)), static_cast<int>(rng.range(0, 1))};
      t1.emplace_back(e, K(Rat(rng.range(-3, 3))));
      Exponent f = {static_cast<int>(rng.range(0, 1)), static_cast<int>(rng.range(0, 1))};
      t2.emplace_back(f, K(Rat(rng.range(-3, 3))));
    }
    MvPoly A = MvPoly::from_terms(2, t1), B = MvPoly::from_terms(2, t2);
    if (A.is_zero() || B.is_zero() || A.degree() != 1 || B.degree() != 1) continue;
    A = A.monic_normalized();
    B = B.monic_normalized();
    if (!is_coprime(A, B)) continue;
    ++done;
    int m = static_cast<int>(rng.range(2, 4));
    IdealBasis ib2 = build_ideal_basis(A, B, m);  // throws DimensionMismatch on failure
    CHECK(static_cast<long>(ib2.phi.size()) == ib2.params.M);
  }
}

TEST_CASE("point basis greedy selection") {
  MvPoly F1 = mv("x1 - 1", 2), F2 = mv("x2 - 1", 2);
  IdealBasis ib = build_ideal_basis(F1, F2, 2);
  auto g = UnitTuple::build({el("t"), el("t+1")});
  PointBasis pb = build_point_basis(ib, g, pt("t"));
  REQUIRE(pb.selected.size() == 1);
  CHECK(pb.selected[0] == Exponent{2, 0});  // maximizes v_p(g^i) = i1
  CHECK(pb.selected_val[0] == 2);
  CHECK(pb.complement.size() == 5);
  // all-zero valuations: tie broken toward the graded-lex least monomial
  PointBasis pb0 = build_point_basis(ib, g, pt("t-5"));
  CHECK(pb0.selected[0] == Exponent{0, 0});
}

TEST_CASE("linear forms recover ideal membership of reduced monomials") {
  MvPoly F1 = mv("x1 - 1", 2), F2 = mv("x2 - 1", 2);
  IdealBasis ib = build_ideal_basis(F1, F2, 2);
  auto g = UnitTuple::build({el("t"), el("t+1")});
  PointBasis pb = build_point_basis(ib, g, pt("t"));
  LinearFormSystem sys = build_linear_forms(ib, pb);
  CHECK_FALSE(sys.c_p.is_zero());
  // x^{i_p(i)} + sum_j c_{p,i,j} x^{i_p,j} lies in (F1, F2)_m: reduce against
  // the phi row space and expect zero
  KEchelon ech;
  std::map<Exponent, size_t, GrlexLess> col;
  for (size_t i = 0; i < ib.monomials.size(); ++i) col[ib.monomials[i]] = i;
  for (const auto& row : ib.phi_rows) ech.insert(row);
  for (size_t i = 0; i < pb.complement.size(); ++i) {
    std::vector<K> row(ib.monomials.size());
    row[col.at(pb.complement[i])] = K(1);
    for (size_t j = 0; j < pb.selected.size(); ++j) row[col.at(pb.selected[j])] = sys.c_red[i][j];
    auto residual = ech.reduce(row);
    bool zero = true;
    for (const K& x : residual) zero = zero && x.is_zero();
    CHECK(zero);
  }
}

TEST_CASE("weil function") {
  CHECK(weil_function({K(1), K(-1)}, {el("t"), K(1)}, pt("t-1")) == 1);
  CHECK(weil_function({K(1), K()}, {K(1), el("t")}, pt("t")) == 0);
  // scaling the point or the form leaves lambda unchanged
  std::vector<K> L = {el("t"), K(1)};
  std::vector<K> a = {el("t+2"), el("1/(t-1)")};
  K c = el("(t-3)/(t+5)");
  for (const char* s : {"t", "t-1", "inf"}) {
    long base = weil_function(L, a, pt(s));
    CHECK(weil_function(L, {a[0] * c, a[1] * c}, pt(s)) == base);
    CHECK(weil_function({L[0] * c, L[1] * c}, a, pt(s)) == base);
  }
  CHECK_THROWS_AS(weil_function({K(1), K(-1)}, {el("t"), el("t")}, pt("t")), std::domain_error);
}

TEST_CASE("coefficient space dimensions") {
  auto cs1 = coefficient_space({K(2), K(Rat(1, 3))}, 3);
  CHECK(cs1.dim(1) == 1);
  CHECK(cs1.dim(3) == 1);
  auto cs2 = coefficient_space({K(1), K::t()}, 2);
  CHECK(cs2.dim(1) == 2);
  CHECK(cs2.dim(2) == 3);
  auto cs3 = coefficient_space({el("t"), el("t+1")}, 2);
  CHECK(cs3.dim(2) == 3);
  CHECK(cs3.dim(0) == 1);
  // monotone
  auto cs4 = coefficient_space({el("t"), el("t^2+1")}, 4);
  for (long j = 1; j <= 4; ++j) CHECK(cs4.dim(j) >= cs4.dim(j - 1));
  CHECK_THROWS_AS(coefficient_space({el("t"), el("t+1"), el("t-1"), el("t+2")}, 40, 100),
                  CapExceeded);
}

TEST_CASE("key inequality check on the worked instance") {
  MvPoly F1 = mv("x1 - 1", 2), F2 = mv("x2 - 1", 2);
  auto g = UnitTuple::build({el("t"), el("t+1")});
  PlaceSet S = parse_places("t, t+1, t-1, t+2, inf");
  auto rep = key_inequality_check(F1, F2, g, S, 2, 1);
  CHECK(rep.params.M == 5);
  for (const auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.holds());
  }
  for (const auto& c : rep.key_margins) {
    INFO(c.name);
    CHECK(c.holds());
  }
  CHECK_FALSE(rep.relation.has_value());
  // 1, t, t+1 are dependent over Q, so the theorem branch is not asserted here
  CHECK_FALSE(rep.thm_nondegenerate);
  CHECK(rep.branch == "precondition-unmet");
}

TEST_CASE("key inequality check asserts the theorem on a nondegenerate instance") {
  MvPoly F1 = mv("x1 - 1", 2), F2 = mv("x2 - 1", 2);
  auto g = UnitTuple::build({el("t^2"), el("(t+1)^3")});
  PlaceSet S = parse_places("t, t+1, inf");
  auto rep = key_inequality_check(F1, F2, g, S, 2, 1);
  CHECK(rep.thm_nondegenerate);
  CHECK(rep.msmt_nondegenerate);
  CHECK(rep.branch == "gcd-bound");
  for (const auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.holds());
  }
  bool saw_msmt = false, saw_63 = false;
  for (const auto& c : rep.checks) {
    saw_msmt = saw_msmt || c.name == "msmt";
    saw_63 = saw_63 || c.name == "main-gcd-bound";
  }
  CHECK(saw_msmt);
  CHECK(saw_63);
}

TEST_CASE("key inequality check on a dependent tuple still runs") {
  MvPoly F1 = mv("x1 - 1", 2), F2 = mv("x2 - 1", 2);
  auto g = UnitTuple::build({el("t"), el("t^2")});
  PlaceSet S = parse_places("t, inf");
  auto rep = key_inequality_check(F1, F2, g, S, 2, 1);
  CHECK(rep.relation.has_value());
  CHECK(rep.branch == "relation");
  for (const auto& c : rep.key_margins) CHECK(c.holds());
}

TEST_CASE("s-part check") {
  // the worked instance: {1, t, t+1} is degenerate over V_F(r), so the branch
  // reports the unmet precondition while both sides still satisfy the bound
  auto g = UnitTuple::build({el("t"), el("t+1")});
  PlaceSet S = parse_places("t, t+1, inf");
  auto rep = s_part_check(mv("x1 + x2 + 1", 2), g, S, 1);
  CHECK(rep.margin >= 0);
  CHECK_FALSE(rep.nondegenerate);
  CHECK(rep.branch == "precondition-unmet");

  auto g2 = UnitTuple::build({el("t^2"), el("t+1")});
  auto rep2 = s_part_check(mv("x1 + x2 + 1", 2), g2, S, 1);
  CHECK(rep2.nondegenerate);
  CHECK(rep2.branch == "s-part-bound");
  CHECK(rep2.margin >= 0);
  CHECK(rep2.w == 1);  // constant coefficients
  CHECK(rep2.u == 1);

  // degenerate g
  auto g3 = UnitTuple::build({el("t"), el("t")});
  auto rep3 = s_part_check(mv("x1 + x2 + 1", 2), g3, S, 1);
  CHECK_FALSE(rep3.nondegenerate);
  CHECK(rep3.branch == "precondition-unmet");

  CHECK_THROWS_AS(s_part_check(mv("x1 + x2", 2), g, S, 1), std::invalid_argument);  // F(0)=0
}
