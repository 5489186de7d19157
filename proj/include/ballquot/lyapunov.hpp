#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ballquot/chow.hpp"
#include "ballquot/covering.hpp"

namespace ballquot {

/* Vanishing data of the k-th period map along an elliptic base pair {i,j}:
 * ell = kappa_ij * |1 - mu_i(k) - mu_j(k)|, a positive integer, and the
 * vanishing order n = ell - 1 when mu_i(k)+mu_j(k) < 1, n*ell - 1 above 1
 * (n the ball dimension). */
struct VanishingOrder {
  int i = 0, j = 0;
  Int ell = 0;
  Int order = 0;
  bool above_one = false;
};

// Requires gcd(k,d)=1, sigma(k)=2 and sigma(1)=2.
std::vector<VanishingOrder> vanishing_orders(const CoveringType& ct, Int k);

// D_k = sum order/kappa [L_ij] over elliptic base pairs, on the given model.
DivisorClass divisor_Dk(const CoveringType& ct, Int k, const Model& m);

/* K^orb = K + sum (1 - 1/kappa)[L_ij] over elliptic pairs + parabolic divisors
 * with coefficient 1 (where the model carries a class for them). */
DivisorClass orbifold_canonical(const CoveringType& ct, const Model& m);

// Top Lyapunov exponent 1 - D_k.(K^orb)^{n-1} / (K^orb)^n of the k-summand.
Rat lambda1(const CoveringType& ct, Int k);

/* Same exponent evaluated downstairs in the Sym(3)-quotient ring (models
 * B9/S3 and B7/S3 only); must agree with lambda1 exactly. */
Rat lambda1_via_quotient(const CoveringType& ct, Int k);

/* Normalized Chern ratios E^a.(K^orb)^b/(K^orb)^n for a+b = n, where
 * E = (K^orb - D_k)/(n+1). At k=1 these collapse to (n+1)^{-a}. */
std::map<std::pair<int, int>, Rat> cab_invariants(const CoveringType& ct, Int k);

struct SummandReport {
  ConjugatePair pair;
  std::optional<Rat> lambda;  // 1 on {1,d-1}; 0 on unitary; absent if unsupported
  std::optional<Rat> rel_euler;  // surfaces only
  std::map<std::pair<int, int>, Rat> cab;
};

struct SpectrumReport {
  std::vector<SummandReport> summands;
  std::vector<Rat> distinct_nonnegative;  // sorted descending, 0 included
  std::vector<Rat> relative_euler_set;    // surfaces: sorted descending; else empty
  bool maximally_degenerate = false;      // spectrum is {1, 0}
};

// Requires a lattice condition and a catalogued model.
SpectrumReport spectrum(const CoveringType& ct);

}  // namespace ballquot
