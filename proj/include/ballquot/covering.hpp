#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ballquot/rational.hpp"

namespace ballquot {

/* A cyclic covering type (d; a_1,...,a_N): the curve y^d = prod (x-x_i)^{a_i}
 * branched over N >= 4 points of the line. Valid iff d >= 2, 0 < a_i < d,
 * gcd(a_1,...,a_N,d) = 1 and sum a_i == 0 mod d. */
struct CoveringType {
  Int d = 0;
  std::vector<Int> a;

  int n_points() const { return static_cast<int>(a.size()); }
  // Complex dimension of the associated ball, N - 3.
  int ball_dim() const { return n_points() - 3; }
};

CoveringType make_type(Int d, std::vector<Int> a);

// Grammar: "d;a1,a2,...,aN", whitespace tolerated.
CoveringType parse_type(const std::string& text);
std::string type_str(const CoveringType& ct);

/* Eigenspace data of the k-th character: local exponents mu_i = {k a_i/d},
 * their sum sigma, the count s of branch points acting nontrivially, and the
 * Hodge signature (p,q) = (sigma-1, s-1-sigma). */
struct WeightVector {
  Int k = 1;
  std::vector<Rat> mu;
  Rat sigma;
  int s = 0;
  int p = 0, q = 0;
};

WeightVector weight_vector(const CoveringType& ct, Int k);

enum class PairKind { UniformizingType, Unitary, Unsupported };

// Galois-conjugate pair {k, d-k} of characters with gcd(k,d)=1.
struct ConjugatePair {
  Int k_lo = 0, k_hi = 0;  // k_lo <= k_hi; equal only for d = 2
  PairKind kind = PairKind::Unsupported;
  std::optional<Int> uniformizing_rep;  // member with sigma = 2, if any
};

const char* pair_kind_str(PairKind k);

std::vector<ConjugatePair> conjugate_classes(const CoveringType& ct);

Int genus(const CoveringType& ct);

struct PrimitiveDims {
  Int dim_p = 0;  // real dimension of the primitive part
  Int dim_u = 0;  // real dimension of its maximal unitary summand
};

PrimitiveDims primitive_dimensions(const CoveringType& ct);

// Requires sigma(1) = 2. True iff every conjugate pair beyond {1,d-1} is unitary.
bool is_arithmetic(const CoveringType& ct);

}  // namespace ballquot
