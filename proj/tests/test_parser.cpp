#include "doctest.h"
#include "ffgcd/parser.hpp"

using namespace ffgcd;

TEST_CASE("element grammar") {
  CHECK(parse_element("(t^2+1)/(t-2)") == K(parse_element("t^2+1").num(), parse_element("t-2").num()));
  CHECK(parse_element("3/4") == K(Rat(3, 4)));
  CHECK(parse_element("t^-2") == K::t().pow(-2));
  CHECK(parse_element("-t + t") == K());
  CHECK(parse_element("2*t/(1+t) - t/(t+1)") == K::t() / (K::t() + K(1)));
  CHECK_THROWS_AS(parse_element("t +"), ParseError);
  CHECK_THROWS_AS(parse_element("x1"), ParseError);
  CHECK_THROWS_AS(parse_element("1/(t-t)"), ParseError);
}

TEST_CASE("round trip through str()") {
  for (const char* s : {"(t^3 - 2*t + 5)/(t^2+1)", "-7/3", "t", "(t+1)/t"}) {
    K v = parse_element(s);
    CHECK(parse_element(v.str()) == v);
  }
}

TEST_CASE("polynomial grammar") {
  MvPoly F = parse_mvpoly("(t^2+1)*x1^2*x2 + (1/(t-2))*x2", 2);
  CHECK(F.arity() == 2);
  CHECK(F.term_count() == 2);
  CHECK(F.coeff({2, 1}) == parse_element("t^2+1"));
  CHECK(F.coeff({0, 1}) == parse_element("1/(t-2)"));
  CHECK(F.degree() == 3);
  CHECK(parse_mvpoly(F.str(), 2) == F);
  CHECK_THROWS_AS(parse_mvpoly("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_mvpoly("1/x1", 2), ParseError);
  CHECK_THROWS_AS(parse_mvpoly("x1^-1", 2), ParseError);
  // evaluation
  MvPoly G = parse_mvpoly("x1^2 - x2", 2);
  CHECK(G.eval({K::t(), K::t() * K::t()}).is_zero());
}

TEST_CASE("places") {
  CHECK(parse_place("inf").is_infinity());
  CHECK(parse_place("t^2+1").degree() == 2);
  CHECK(parse_place("2*t+2") == parse_place("t+1"));  // scaled monic
  CHECK_THROWS(parse_place("t^2-1"));                 // reducible
  PlaceSet S = parse_places("t, t+1, inf");
  CHECK(S.weighted_size() == 3);
  CHECK(S.contains_infinity());
}

TEST_CASE("exponential polynomial pairs") {
  auto pairs = parse_exp_pairs("(T+t ; t^2), (1 ; t+1)");
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].first.degree_in(0) == 1);
  CHECK(pairs[0].second == parse_element("t^2"));
  CHECK(pairs[1].first.is_constant());
  CHECK_THROWS_AS(parse_exp_pairs("(T ; 0)"), ParseError);
}
