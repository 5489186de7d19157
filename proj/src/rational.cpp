#include "ballquot/rational.hpp"

#include <cctype>
#include <limits>

namespace ballquot {

std::string rat_str(const Rat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) {
    s += '/';
    s += denominator(x).str();
  }
  return s;
}

Rat parse_rat(const std::string& text) {
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string t = text.substr(b, e - b);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(t));
    BigInt num(t.substr(0, slash));
    BigInt den(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: '" + t + "'");
  }
}

Int to_int(const Rat& x) {
  if (!is_integer(x)) throw std::domain_error("not an integer: " + rat_str(x));
  BigInt n = numerator(x);
  if (n > std::numeric_limits<Int>::max() || n < std::numeric_limits<Int>::min())
    throw std::domain_error("integer out of range: " + rat_str(x));
  return static_cast<Int>(n);
}

}  // namespace ballquot
