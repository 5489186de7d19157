#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ballquot/covering.hpp"
#include "ballquot/rational.hpp"

namespace ballquot {

/* Real trace field Q(cos 2pi/d) in conductor-canonical form: d = 2 mod 4 is
 * replaced by d/2 (the same field), so equality of fields is equality of
 * canonical_d. degree = phi(canonical_d)/2, with degree 1 for the rationals. */
struct TraceField {
  Int canonical_d = 0;
  Int degree = 0;
  bool operator==(const TraceField& o) const { return canonical_d == o.canonical_d; }
};

TraceField trace_field(const CoveringType& ct);

/* Commensurability invariants of a lattice type: lattices in one class share
 * the trace field, the primitive Lyapunov spectrum and (for surfaces) the
 * relative Euler set. Cocompactness is recorded but not part of equality:
 * it is determined by the invariants on all catalogued inputs. */
struct CommInvariant {
  TraceField field;
  std::vector<Rat> spectrum;        // distinct non-negative, descending
  std::vector<Rat> relative_euler;  // empty for threefolds
  bool cocompact = true;

  bool operator==(const CommInvariant& o) const {
    return field == o.field && spectrum == o.spectrum && relative_euler == o.relative_euler;
  }
};

CommInvariant invariants(const CoveringType& ct);

/* Groups the inputs by invariant equality; classes ordered by first member,
 * members in input order. known_edges (0-based index pairs) are verified to
 * land in a common class, else InconsistentKnownEdges. */
std::vector<std::vector<int>> partition(
    const std::vector<CoveringType>& types,
    const std::vector<std::pair<int, int>>* known_edges = nullptr);

}  // namespace ballquot
