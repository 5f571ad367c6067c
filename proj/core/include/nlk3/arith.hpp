#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals. No floating point appears anywhere in the library.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nlk3 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Least nonnegative residue of a modulo m, m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline bool is_even(const Int& a) { return (a & 1) == 0; }

// "p/q" in lowest terms; bare "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace nlk3
