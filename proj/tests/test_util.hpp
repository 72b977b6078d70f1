#ifndef FFGCD_TEST_UTIL_HPP
#define FFGCD_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

#include "ffgcd/parser.hpp"

namespace ffgcd::testutil {

// deterministic generator shared by the property tests (splitmix64)
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed) {}

  uint64_t next() {
    uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  uint64_t s_;
};

inline Poly random_poly(Rng& rng, int maxdeg, long box = 5) {
  std::vector<Rat> c(static_cast<size_t>(rng.range(0, maxdeg)) + 1);
  for (auto& x : c) x = Rat(rng.range(-box, box));
  Poly p{std::move(c)};
  return p;
}

inline Poly random_nonzero_poly(Rng& rng, int maxdeg, long box = 5) {
  while (true) {
    Poly p = random_poly(rng, maxdeg, box);
    if (!p.is_zero()) return p;
  }
}

inline K random_ratfunc(Rng& rng, int maxdeg = 4, long box = 5) {
  Poly num = random_nonzero_poly(rng, maxdeg, box);
  Poly den = random_nonzero_poly(rng, maxdeg, box);
  return K(num, den);
}

// small irreducible pool used to assemble elements with known factorization
inline std::vector<Poly> irreducible_pool() {
  using namespace std::string_literals;
  std::vector<Poly> out;
  for (const char* s : {"t", "t+1", "t-1", "t+2", "t-2", "t^2+1", "t^2+2", "t^2+t+1"})
    out.push_back(parse_element(s).num());
  return out;
}

}  // namespace ffgcd::testutil

#endif
