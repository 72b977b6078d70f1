#ifndef FFGCD_HEIGHTS_HPP
#define FFGCD_HEIGHTS_HPP

#include <optional>
#include <span>
#include <vector>

#include "ffgcd/places.hpp"

namespace ffgcd {

enum class CountMode { WithMultiplicity, Truncated };  // N_S vs N-bar_S
enum class GcdCountMode { OutsideS, AllPlaces };       // N_{S,gcd} vs h_gcd

// ord_p(f); nullopt encodes +infinity (f = 0)
std::optional<long> valuation(const K& f, const ClosedPoint& p);

// exponent of p in a nonzero polynomial
long poly_valuation(const Poly& f, const ClosedPoint& p);

long v_zero(const K& f, const ClosedPoint& p);      // max{0, v_p}
long v_pole(const K& f, const ClosedPoint& p);      // -min{0, v_p}
long v_zero_trunc(const K& f, const ClosedPoint& p);

// pole count with multiplicity = max(deg num, deg den)
long height(const K& f);

// sum over all places of -min_i v_p(f_i), degree-weighted
long projective_height(std::span<const K> fs);
long projective_height(const std::vector<K>& fs);

// zeros of f outside S, with multiplicity (N_S) or truncated (N-bar_S)
long counting(const K& f, const PlaceSet& S, CountMode mode);

// sum of min{v_p^0(f), v_p^0(g)} outside S or over all places
long gcd_counting(const K& f, const K& g, const PlaceSet& S, GcdCountMode mode);

bool is_S_unit(const K& f, const PlaceSet& S);
bool is_S_integer(const K& f, const PlaceSet& S);

// true iff d divides every valuation of f (f a d-th power in kbar(t))
bool is_dth_power(const K& f, long d);

// the set of places where v_p(f) != 0, as closed points (degree > 3 factors of
// num/den would be accepted unverified; callers in this codebase only build
// elements from verified points)
PlaceSet support(const K& f);

// squarefree factors of num and den with signed multiplicities; factors are
// monic, pairwise coprime, not necessarily irreducible
std::vector<std::pair<Poly, long>> divisor_components(const K& f);

}  // namespace ffgcd

#endif
