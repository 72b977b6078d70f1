#ifndef FFGCD_PARSER_HPP
#define FFGCD_PARSER_HPP

#include <string>
#include <utility>
#include <vector>

#include "ffgcd/mvpoly.hpp"
#include "ffgcd/places.hpp"

namespace ffgcd {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// K-element grammar: integer literals, `t`, `+ - * / ^`, parentheses.
K parse_element(const std::string& s);

// extends the element grammar with variables x1..xn
MvPoly parse_mvpoly(const std::string& s, size_t nvars);

// polynomial in the symbol `T` over K, returned with T as the only variable
MvPoly parse_T_poly(const std::string& s);

// `inf` or a monic irreducible polynomial in t
ClosedPoint parse_place(const std::string& s);

// comma-separated places
PlaceSet parse_places(const std::string& s);

// list of `(B ; beta)` pairs, comma-separated
std::vector<std::pair<MvPoly, K>> parse_exp_pairs(const std::string& s);

}  // namespace ffgcd

#endif
