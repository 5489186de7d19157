#include "ballquot/euler.hpp"

#include <vector>

#include "ballquot/conditions.hpp"
#include "ballquot/errors.hpp"
#include "ballquot/lyapunov.hpp"

namespace ballquot {

Rat orb_euler(const std::vector<Rat>& mu) {
  if (mu.size() != 5) throw UnsupportedDimension("Euler number formula is for quintuples");
  auto prof = pair_profiles(mu);
  auto cls = [&](int i, int j) -> const PairProfile& {
    for (const auto& p : prof)
      if (p.i == i + 1 && p.j == j + 1) return p;
    throw PreconditionFailed("pair not found");
  };

  int contracted = 0;
  Rat e = 0;
  for (const auto& p : prof) {
    if (p.cls == PairClass::Contracted) {
      ++contracted;
      // contracted pair becomes a triple point of the boundary
      e += (p.sum - 1) * (p.sum - 1) - 1;
    } else {
      e += p.sum;
    }
  }
  e += 7 - contracted;

  // ordinary double points: transverse crossings of surviving boundary curves
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int l = i + 1; l < 5; ++l)
        for (int m = l + 1; m < 5; ++m) {
          if (l == j || m == j) continue;
          const auto& a = cls(i, j);
          const auto& b = cls(l, m);
          if (a.cls == PairClass::Contracted || b.cls == PairClass::Contracted) continue;
          e += (1 - a.sum) * (1 - b.sum) - 1;
        }
  return e;
}

DivisorClass boundary_R(const std::vector<Rat>& mu, const Model& m) {
  DivisorClass R = m.zero();
  for (const auto& p : pair_profiles(mu)) {
    if (p.sum > 1 || !m.has_boundary(p.i, p.j)) continue;
    const DivisorClass& L = m.L(p.i, p.j);
    for (size_t t = 0; t < R.c.size(); ++t) R.c[t] += p.sum * L.c[t];
  }
  return R;
}

EulerReport bmy_check(const std::vector<Rat>& mu) {
  if (mu.size() != 5) throw UnsupportedDimension("Chern comparison is for quintuples");
  EulerReport rep;
  rep.e_orb = orb_euler(mu);

  std::vector<IndexPair> contracted;
  BoundaryCombo combo;
  combo.k_coeff = 1;
  for (const auto& p : pair_profiles(mu)) {
    if (p.cls == PairClass::Contracted)
      contracted.push_back({p.i, p.j});
    else
      combo.lij[{p.i, p.j}] = p.sum;
  }
  DivisorClass c1 = blowdown_pullback(contracted, combo);
  ModelId full;
  full.tag = ModelTag::B10;
  full.to_catalog = {0, 1, 2, 3, 4, 5};
  rep.c1_sq = top_product(build_model(full, 5), {c1, c1});
  rep.bmy_holds = 3 * rep.e_orb == rep.c1_sq;
  return rep;
}

Rat relative_euler(const CoveringType& ct, Int k) {
  ConditionReport rep = check_sigma_int(weight_vector(ct, 1).mu);
  Model m = build_model(select_model(rep, ct.n_points()), ct.n_points());
  if (m.dim != 2)
    throw UnsupportedDimension("relative Euler number is defined for surface summands");
  DivisorClass K = orbifold_canonical(ct, m);
  DivisorClass D = divisor_Dk(ct, k, m);
  DivisorClass KD = m.zero();
  for (size_t t = 0; t < KD.c.size(); ++t) KD.c[t] = K.c[t] - D.c[t];
  return top_product(m, {KD, KD}) / top_product(m, {K, K});
}

}  // namespace ballquot
