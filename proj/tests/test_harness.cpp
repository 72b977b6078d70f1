#include "doctest.h"
#include "ffgcd/harness.hpp"
#include "ffgcd/parser.hpp"

using namespace ffgcd;

namespace {
K el(const std::string& s) { return parse_element(s); }
MvPoly mv(const std::string& s, size_t n) { return parse_mvpoly(s, n); }
}  // namespace

TEST_CASE("brownawell-masser verdicts") {
  auto sharp = verify_brownawell_masser({el("t"), el("1-t")}, parse_places("t, t-1, inf"));
  CHECK(sharp.branch == "pass");
  CHECK(sharp.margin == 0);

  auto subsum = verify_brownawell_masser({el("t"), el("-t"), el("1")}, parse_places("t, inf"));
  CHECK(subsum.branch == "relation");

  auto sq = verify_brownawell_masser({el("t^2"), el("1-t^2")},
                                     parse_places("t, t-1, t+1, inf"));
  CHECK(sq.branch == "pass");
  CHECK(sq.margin >= 0);

  CHECK_THROWS_AS(verify_brownawell_masser({el("t"), el("t")}, parse_places("t, inf")),
                  std::invalid_argument);
  // non-S-unit goes to precondition-unmet
  auto unmet = verify_brownawell_masser({el("t"), el("1-t")}, parse_places("t, inf"));
  CHECK(unmet.branch == "precondition-unmet");
}

TEST_CASE("green verdicts") {
  // n = 2 with constant ratio: above the threshold the ratios must be constant
  std::vector<K> fs = {el("3*t"), el("t")};
  std::vector<K> as = {el("1"), el("-9")};  // 3^2 t^2 - 9 t^2 = 0 at ell = 2
  auto v = verify_green(as, fs, 2);
  CHECK(v.branch == "pass");
  // all-constant f at any admissible ell
  auto v2 = verify_green({el("1"), el("-8")}, {el("2"), el("1")}, 3);
  CHECK(v2.branch == "pass");
  // nonconstant ratio below the threshold
  auto v3 = verify_green({el("1"), el("-t^2")}, {el("t"), el("1")}, 2);
  CHECK(v3.branch == "precondition-unmet");
  CHECK_THROWS_AS(verify_green({el("1"), el("1")}, {el("t"), el("t")}, 2),
                  std::invalid_argument);  // sum is not zero
}

TEST_CASE("prop33 verdicts") {
  auto u = UnitTuple::build({el("t"), el("t+1")});
  PlaceSet S = parse_places("t, t+1, inf");
  auto v = verify_prop33(mv("x1^2 + x2^2", 2), u, S);
  CHECK(v.branch == "pass");
  CHECK(v.margin >= 0);
  auto v2 = verify_prop33(mv("3*x1 + 2*x2", 2), u, S);
  CHECK(v2.branch == "pass");
  CHECK(v2.lhs <= Rat(S.weighted_size()));  // pure log-derivative coefficients
  CHECK_THROWS_AS(verify_prop33(mv("5", 2), u, S), std::invalid_argument);
}

TEST_CASE("lemma36 verdicts") {
  InstanceSpec caps;
  // difference of squares: u = (t^2, (t+1)^2 - t^2), F(u) = (t+1)^2
  std::vector<K> us = {el("t^2"), el("2*t+1")};
  PlaceSet S = parse_places("t, t+1/2, inf");
  FactoredForm ff{K(1), {0, 0}, {{mv("x1 + x2", 2), 1}}};
  auto u = UnitTuple::build(us);
  auto v = verify_lemma36(ff, u, S, 2, Rat(2), caps);
  CHECK((v.branch == "pass" || v.branch == "relation"));
  // generous epsilon makes the first disjunct trivial
  auto v10 = verify_lemma36(ff, u, S, 2, Rat(10), caps);
  CHECK(v10.branch == "pass");
  CHECK(v10.payload["disjunct"] == 1);
  // F(u) not a d-th power is rejected
  auto bad = UnitTuple::build({el("t"), el("t+1")});
  CHECK_THROWS_AS(verify_lemma36(ff, bad, parse_places("t, t+1, inf"), 2, Rat(2), caps),
                  std::invalid_argument);
}

TEST_CASE("thm15 trichotomy") {
  InstanceSpec caps;
  MvPoly F = mv("x1 - 1", 2), G = mv("x2 - 1", 2);
  // dependent tuple: relation branch
  auto rel = verify_thm15(F, G, UnitTuple::build({el("t"), el("t^2")}),
                          parse_places("t, inf"), Rat(2), caps);
  CHECK(rel.branch == "relation");
  // tall independent tuple: both statements asserted
  auto tall = verify_thm15(F, G,
                           UnitTuple::build({el("t").pow(200), el("t+1").pow(201)}),
                           parse_places("t, t+1, inf"), Rat(2), caps);
  CHECK(tall.branch == "pass");
  CHECK(tall.payload.contains("h_gcd"));
  // both vanish at the origin: the h_gcd side is skipped
  MvPoly F0 = mv("x1", 2), G0 = mv("x2", 2);
  auto v0 = verify_thm15(F0, G0,
                         UnitTuple::build({el("t").pow(200), el("t+1").pow(201)}),
                         parse_places("t, t+1, inf"), Rat(2), caps);
  CHECK_FALSE(v0.payload.contains("h_gcd"));
  CHECK_THROWS_AS(verify_thm15(mv("x1", 2), mv("x1*x2", 2), UnitTuple::build({el("t"), el("t")}),
                               parse_places("t, inf"), Rat(2), caps),
                  std::invalid_argument);  // not coprime
}

TEST_CASE("thm16 and thm17") {
  InstanceSpec caps;
  MvPoly F = mv("x1 - 1", 2), G = mv("x2 - 1", 2);
  auto rel = verify_thm16(F, G, UnitTuple::build({el("t"), el("t^2")}),
                          parse_places("t, inf"), Rat(8), caps);
  CHECK(rel.branch == "relation");
  CHECK(rel.payload["relation"] == Json::array({2, -1}));
  auto small = verify_thm16(F, G, UnitTuple::build({el("t"), el("t+1")}),
                            parse_places("t, t+1, inf"), Rat(8), caps);
  CHECK(small.branch == "precondition-unmet");
  CHECK_THROWS_AS(verify_thm16(mv("t*x1 - 1", 2), G, UnitTuple::build({el("t"), el("t+1")}),
                               parse_places("t, t+1, inf"), Rat(8), caps),
                  std::invalid_argument);  // coefficients not in k

  auto t17 = verify_thm17(F, G, UnitTuple::build({el("t"), el("t+1")}), 40, Rat(8), caps);
  CHECK((t17.branch == "pass" || t17.branch == "precondition-unmet"));
  if (t17.branch == "pass") CHECK(t17.margin >= 0);
}

TEST_CASE("suite determinism") {
  InstanceSpec spec;
  spec.suite = "brownawell";
  spec.seed = 7;
  spec.count = 25;
  auto a = run_suite(spec);
  auto b = run_suite(spec);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.findings == 0);
  spec.seed = 8;
  auto c = run_suite(spec);
  CHECK(a.report.dump() != c.report.dump());
}

TEST_CASE("csv rendering") {
  InstanceSpec spec;
  spec.suite = "ailon";
  spec.ell_min = 1;
  spec.ell_max = 5;
  auto r = run_suite(spec);
  std::string csv = report_to_csv(r.report);
  CHECK(csv.rfind("id,statement,branch", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows
}

TEST_CASE("unknown suite is rejected") {
  InstanceSpec spec;
  spec.suite = "nope";
  CHECK_THROWS_AS(run_suite(spec), std::invalid_argument);
}
