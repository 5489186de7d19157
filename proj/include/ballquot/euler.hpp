#pragma once

#include <vector>

#include "ballquot/chow.hpp"
#include "ballquot/covering.hpp"

namespace ballquot {

/* Orbifold Euler number of the weighted boundary pair for a quintuple mu with
 * sum 2: topological part, codimension-one terms over the surviving boundary,
 * triple points under contracted pairs, and ordinary double points. */
Rat orb_euler(const std::vector<Rat>& mu);

// R = sum_{mu_i+mu_j <= 1} (mu_i+mu_j) [L_ij] on the given surface model.
DivisorClass boundary_R(const std::vector<Rat>& mu, const Model& m);

struct EulerReport {
  Rat e_orb;
  Rat c1_sq;  // (K + R)^2, evaluated on B10 via blowdown pullback
  bool bmy_holds = false;  // 3 e_orb == c1_sq
};

// Requires N = 5 and sum(mu) = 2; valid for lattice and non-lattice weights.
EulerReport bmy_check(const std::vector<Rat>& mu);

/* Relative orbifold Euler number (K^orb - D_k)^2/(K^orb)^2 of the k-summand;
 * surfaces only. */
Rat relative_euler(const CoveringType& ct, Int k);

}  // namespace ballquot
