#include "ballquot/classify.hpp"

#include <numeric>
#include <string>

#include "ballquot/conditions.hpp"
#include "ballquot/errors.hpp"
#include "ballquot/lyapunov.hpp"

namespace ballquot {

namespace {

Int euler_phi(Int n) {
  Int r = 0;
  for (Int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++r;
  return r;
}

}  // namespace

TraceField trace_field(const CoveringType& ct) {
  TraceField f;
  // d and d/2 generate the same real cyclotomic field when d = 2 mod 4
  f.canonical_d = ct.d % 4 == 2 ? ct.d / 2 : ct.d;
  f.degree = std::max<Int>(1, euler_phi(f.canonical_d) / 2);
  return f;
}

CommInvariant invariants(const CoveringType& ct) {
  CommInvariant inv;
  inv.field = trace_field(ct);
  SpectrumReport sp = spectrum(ct);
  inv.spectrum = sp.distinct_nonnegative;
  inv.relative_euler = sp.relative_euler_set;
  inv.cocompact = true;
  for (const auto& p : pair_profiles(weight_vector(ct, 1).mu))
    if (p.cls == PairClass::Parabolic) inv.cocompact = false;
  return inv;
}

std::vector<std::vector<int>> partition(
    const std::vector<CoveringType>& types,
    const std::vector<std::pair<int, int>>* known_edges) {
  std::vector<CommInvariant> inv;
  inv.reserve(types.size());
  for (const auto& ct : types) inv.push_back(invariants(ct));

  std::vector<std::vector<int>> classes;
  std::vector<int> class_of(types.size(), -1);
  for (size_t i = 0; i < types.size(); ++i) {
    for (size_t c = 0; c < classes.size(); ++c)
      if (inv[classes[c][0]] == inv[i]) {
        class_of[i] = static_cast<int>(c);
        break;
      }
    if (class_of[i] < 0) {
      class_of[i] = static_cast<int>(classes.size());
      classes.push_back({});
    }
    classes[class_of[i]].push_back(static_cast<int>(i));
  }

  if (known_edges) {
    for (auto [u, v] : *known_edges) {
      if (u < 0 || v < 0 || u >= static_cast<int>(types.size()) ||
          v >= static_cast<int>(types.size()))
        throw OutOfRange("known edge index out of range");
      if (class_of[u] != class_of[v])
        throw InconsistentKnownEdges(
            "declared commensurability of " + type_str(types[u]) + " and " +
            type_str(types[v]) + " contradicts the computed invariants");
    }
  }
  return classes;
}

}  // namespace ballquot
