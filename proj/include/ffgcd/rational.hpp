#ifndef FFGCD_RATIONAL_HPP
#define FFGCD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffgcd {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("rat_pow: zero to negative power");
    return Rat(0);
  }
  Rat b = e < 0 ? Rat(1) / base : base;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat num, den;
  mpz_pow_ui(num.get_num_mpz_t(), b.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_num_mpz_t(), b.get_den_mpz_t(), n);
  num /= den;
  return num;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Parses "a" or "a/b"; throws on malformed input.
inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad literal '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace ffgcd

#endif
