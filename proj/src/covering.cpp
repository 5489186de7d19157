#include "ballquot/covering.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ballquot/errors.hpp"

namespace ballquot {

CoveringType make_type(Int d, std::vector<Int> a) {
  if (d < 2) throw TypeReject(TypeReject::Reason::Degree, "degree must be >= 2");
  if (a.size() < 4)
    throw TypeReject(TypeReject::Reason::Arity, "need at least 4 branch points");
  Int g = d, sum = 0;
  for (Int x : a) {
    if (x <= 0 || x >= d)
      throw TypeReject(TypeReject::Reason::Range,
                       "branch exponents must satisfy 0 < a_i < d");
    g = std::gcd(g, x);
    sum += x;
  }
  if (g != 1)
    throw TypeReject(TypeReject::Reason::Gcd, "gcd(a_1,...,a_N,d) must be 1");
  if (sum % d != 0)
    throw TypeReject(TypeReject::Reason::Sum, "sum of exponents must be 0 mod d");
  return CoveringType{d, std::move(a)};
}

CoveringType parse_type(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  auto semi = t.find(';');
  if (semi == std::string::npos)
    throw TypeReject(TypeReject::Reason::Parse, "expected 'd;a1,a2,...'");
  auto num = [](const std::string& s) -> Int {
    size_t pos = 0;
    Int v;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw TypeReject(TypeReject::Reason::Parse, "bad integer '" + s + "'");
    }
    if (pos != s.size())
      throw TypeReject(TypeReject::Reason::Parse, "bad integer '" + s + "'");
    return v;
  };
  Int d = num(t.substr(0, semi));
  std::vector<Int> a;
  std::stringstream body(t.substr(semi + 1));
  std::string tok;
  while (std::getline(body, tok, ',')) a.push_back(num(tok));
  return make_type(d, std::move(a));
}

std::string type_str(const CoveringType& ct) {
  std::string s = std::to_string(ct.d) + ";";
  for (size_t i = 0; i < ct.a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ct.a[i]);
  }
  return s;
}

WeightVector weight_vector(const CoveringType& ct, Int k) {
  if (k < 1 || k >= ct.d)
    throw OutOfRange("character index k must lie in [1, d-1]");
  WeightVector w;
  w.k = k;
  Int m = ct.d / std::gcd(k, ct.d);
  w.sigma = 0;
  for (Int x : ct.a) {
    Rat mu = rat((k * x) % ct.d, ct.d);
    w.mu.push_back(mu);
    w.sigma += mu;
    if (x % m != 0) ++w.s;
  }
  // sum(a) = 0 mod d forces the exponent sum to be a whole number
  w.p = static_cast<int>(to_int(w.sigma)) - 1;
  w.q = w.s - 1 - static_cast<int>(to_int(w.sigma));
  return w;
}

const char* pair_kind_str(PairKind k) {
  switch (k) {
    case PairKind::UniformizingType: return "uniformizing";
    case PairKind::Unitary: return "unitary";
    case PairKind::Unsupported: return "unsupported";
  }
  return "?";
}

std::vector<ConjugatePair> conjugate_classes(const CoveringType& ct) {
  std::vector<ConjugatePair> out;
  int N = ct.n_points();
  for (Int k = 1; 2 * k <= ct.d; ++k) {
    if (std::gcd(k, ct.d) != 1) continue;
    ConjugatePair p;
    p.k_lo = k;
    p.k_hi = ct.d - k;
    Int slo = to_int(weight_vector(ct, p.k_lo).sigma);
    Int shi = p.k_hi == p.k_lo ? slo : to_int(weight_vector(ct, p.k_hi).sigma);
    if (slo == 2 || shi == 2) {
      p.kind = PairKind::UniformizingType;
      p.uniformizing_rep = slo == 2 ? p.k_lo : p.k_hi;
    } else if (slo == 1 || slo == N - 1) {
      p.kind = PairKind::Unitary;
    } else {
      p.kind = PairKind::Unsupported;
    }
    out.push_back(p);
  }
  return out;
}

Int genus(const CoveringType& ct) {
  Int gcd_sum = 0;
  for (Int x : ct.a) gcd_sum += std::gcd(x, ct.d);
  Rat g = rat((ct.n_points() - 2) * ct.d, 2) + 1 - rat(gcd_sum, 2);
  return to_int(g);  // integral by Riemann-Hurwitz
}

PrimitiveDims primitive_dimensions(const CoveringType& ct) {
  PrimitiveDims dims;
  int N = ct.n_points();
  for (const auto& p : conjugate_classes(ct)) {
    dims.dim_p += 2 * (N - 2);
    if (p.kind == PairKind::Unitary) dims.dim_u += 2 * (N - 2);
  }
  return dims;
}

bool is_arithmetic(const CoveringType& ct) {
  if (weight_vector(ct, 1).sigma != 2)
    throw PreconditionFailed("arithmeticity test requires sigma(1) = 2");
  for (const auto& p : conjugate_classes(ct)) {
    if (p.k_lo == 1) continue;
    if (p.kind != PairKind::Unitary) return false;
  }
  return true;
}

}  // namespace ballquot
