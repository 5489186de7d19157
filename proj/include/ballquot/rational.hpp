#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ballquot {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(Int num, Int den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rat(num, den);
}

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// Largest integer <= x.
inline BigInt rfloor(const Rat& x) {
  BigInt q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

// Fractional part {x} in [0,1).
inline Rat rfrac(const Rat& x) { return x - Rat(rfloor(x)); }

inline Rat rabs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Canonical form: "p/q" in lowest terms, "/1" omitted.
std::string rat_str(const Rat& x);

// Accepts "p", "p/q", optional sign and surrounding whitespace.
Rat parse_rat(const std::string& text);

Int to_int(const Rat& x);  // throws if not an integer or out of Int range

}  // namespace ballquot
