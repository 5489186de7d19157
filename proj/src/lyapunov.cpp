#include "ballquot/lyapunov.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ballquot/errors.hpp"
#include "ballquot/euler.hpp"

namespace ballquot {

std::vector<VanishingOrder> vanishing_orders(const CoveringType& ct, Int k) {
  if (std::gcd(k, ct.d) != 1)
    throw PreconditionFailed("k must be prime to the covering degree");
  WeightVector w1 = weight_vector(ct, 1);
  WeightVector wk = weight_vector(ct, k);
  if (w1.sigma != 2) throw BadWeightSum("base weight sum is not 2");
  if (wk.sigma != 2)
    throw NotUniformizingSignature("sigma(" + std::to_string(k) + ") = " +
                                   rat_str(wk.sigma) + ", need 2");
  int n_ball = ct.ball_dim();
  std::vector<VanishingOrder> out;
  for (const auto& p : pair_profiles(w1.mu)) {
    if (p.cls != PairClass::Elliptic) continue;
    Rat sk = wk.mu[p.i - 1] + wk.mu[p.j - 1];
    if (sk == 1)
      throw PreconditionFailed("conjugate weights develop a cusp on a finite pair");
    Rat ell_r = p.kappa * rabs(1 - sk);
    if (!is_integer(ell_r) || ell_r <= 0)
      throw PreconditionFailed("branch order times conjugate angle is not a positive "
                               "integer on pair {" + std::to_string(p.i) + "," +
                               std::to_string(p.j) + "}");
    VanishingOrder vo;
    vo.i = p.i;
    vo.j = p.j;
    vo.ell = to_int(ell_r);
    vo.above_one = sk > 1;
    vo.order = vo.above_one ? n_ball * vo.ell - 1 : vo.ell - 1;
    out.push_back(vo);
  }
  return out;
}

DivisorClass divisor_Dk(const CoveringType& ct, Int k, const Model& m) {
  auto prof = pair_profiles(weight_vector(ct, 1).mu);
  auto kappa_of = [&](int i, int j) {
    for (const auto& p : prof)
      if (p.i == i && p.j == j) return p.kappa;
    throw PreconditionFailed("pair not found");
  };
  DivisorClass D = m.zero();
  for (const auto& vo : vanishing_orders(ct, k)) {
    Rat c = Rat(vo.order) / kappa_of(vo.i, vo.j);
    const DivisorClass& L = m.L(vo.i, vo.j);
    for (size_t t = 0; t < D.c.size(); ++t) D.c[t] += c * L.c[t];
  }
  return D;
}

DivisorClass orbifold_canonical(const CoveringType& ct, const Model& m) {
  DivisorClass K = m.K;
  for (const auto& p : pair_profiles(weight_vector(ct, 1).mu)) {
    if (!m.has_boundary(p.i, p.j)) continue;
    Rat c;
    if (p.cls == PairClass::Elliptic)
      c = 1 - 1 / p.kappa;
    else if (p.cls == PairClass::Parabolic)
      c = 1;
    else
      continue;
    const DivisorClass& L = m.L(p.i, p.j);
    for (size_t t = 0; t < K.c.size(); ++t) K.c[t] += c * L.c[t];
  }
  return K;
}

Rat lambda1(const CoveringType& ct, Int k) {
  ConditionReport rep = check_sigma_int(weight_vector(ct, 1).mu);
  Model m = build_model(select_model(rep, ct.n_points()), ct.n_points());
  DivisorClass K = orbifold_canonical(ct, m);
  DivisorClass D = divisor_Dk(ct, k, m);
  std::vector<DivisorClass> num(m.dim, K), den(m.dim, K);
  num[0] = D;
  return 1 - top_product(m, num) / top_product(m, den);
}

namespace {

// Sym(3) orbit representative of a catalogued boundary pair, symmetric
// points sitting at catalog labels 1,2,3.
IndexPair orbit_rep(int pi, int pj) {
  auto norm = [](int x) { return x <= 3 ? 1 : x; };
  int a = norm(pi), b = norm(pj);
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 1) return {1, 2};
  return {a, b};
}

int orbit_size(IndexPair rep) {
  return (rep.first <= 3 || rep.second <= 3) ? 3 : 1;
}

}  // namespace

Rat lambda1_via_quotient(const CoveringType& ct, Int k) {
  ConditionReport rep = check_sigma_int(weight_vector(ct, 1).mu);
  if (rep.kind != ConditionReport::Kind::SigmaInt || rep.S.size() != 3)
    throw PreconditionFailed("quotient ring evaluation needs a three-point symmetric set");
  ModelId id = select_model(rep, ct.n_points());
  ModelTag qtag;
  std::vector<IndexPair> gens;
  if (id.tag == ModelTag::B9) {
    qtag = ModelTag::QuotB9Sigma3;
    gens = {{1, 4}, {1, 5}, {1, 2}};
  } else if (id.tag == ModelTag::B7) {
    qtag = ModelTag::QuotB7Sigma3;
    gens = {{1, 2}, {1, 4}, {4, 5}};
  } else {
    throw PreconditionFailed("no quotient ring catalogued for this surface model");
  }
  for (int s : rep.S)
    if (id.to_catalog[s] > 3)
      throw PreconditionFailed("symmetric set does not sit at catalog labels 1,2,3");

  Model qm = build_model(ModelId{qtag, {}, {}}, ct.n_points());
  DivisorClass Dq = qm.zero(), Kq = qm.K;

  std::map<IndexPair, Int> order_of;
  for (const auto& vo : vanishing_orders(ct, k)) order_of[{vo.i, vo.j}] = vo.order;

  for (const auto& p : pair_profiles(rep.mu)) {
    if (p.cls == PairClass::Contracted) continue;
    int pi = id.to_catalog[p.i], pj = id.to_catalog[p.j];
    if (pi > pj) std::swap(pi, pj);
    IndexPair r = orbit_rep(pi, pj);
    size_t gi = std::find(gens.begin(), gens.end(), r) - gens.begin();
    int orbit = orbit_size(r);
    if (p.cls == PairClass::Elliptic) {
      Rat n = Rat(order_of.at({p.i, p.j}));
      if (pi <= 3 && pj <= 3) {
        // pair inside the symmetric set: downstairs branch order doubles
        Dq.c[gi] += n / (2 * p.kappa) / 3;
        Kq.c[gi] += (1 - 1 / (2 * p.kappa)) / 3;
      } else {
        Dq.c[gi] += n / p.kappa / orbit;
        Kq.c[gi] += (1 - 1 / p.kappa) / orbit;
      }
    } else {
      Kq.c[gi] += Rat(1) / orbit;
    }
  }

  Rat lam = 1 - quotient_intersect(qm, Dq, Kq) / quotient_intersect(qm, Kq, Kq);
  Rat upstairs = lambda1(ct, k);
  if (lam != upstairs)
    throw ModelMismatch("quotient ring value " + rat_str(lam) +
                        " disagrees with the covering value " + rat_str(upstairs));
  return lam;
}

std::map<std::pair<int, int>, Rat> cab_invariants(const CoveringType& ct, Int k) {
  ConditionReport rep = check_sigma_int(weight_vector(ct, 1).mu);
  Model m = build_model(select_model(rep, ct.n_points()), ct.n_points());
  DivisorClass K = orbifold_canonical(ct, m);
  DivisorClass D = divisor_Dk(ct, k, m);
  int n = m.dim;
  DivisorClass E = m.zero();
  for (size_t t = 0; t < E.c.size(); ++t) E.c[t] = (K.c[t] - D.c[t]) / (n + 1);
  Rat den;
  {
    std::vector<DivisorClass> v(n, K);
    den = top_product(m, v);
  }
  std::map<std::pair<int, int>, Rat> out;
  for (int a = 0; a <= n; ++a) {
    std::vector<DivisorClass> v;
    for (int t = 0; t < a; ++t) v.push_back(E);
    for (int t = a; t < n; ++t) v.push_back(K);
    out[{a, n - a}] = top_product(m, v) / den;
  }
  return out;
}

SpectrumReport spectrum(const CoveringType& ct) {
  ConditionReport rep = check_sigma_int(weight_vector(ct, 1).mu);
  if (!rep.lattice())
    throw LatticeConditionFailed("neither integrality condition holds for " + type_str(ct));
  // fail early if the pair profile has no catalogued model
  build_model(select_model(rep, ct.n_points()), ct.n_points());

  SpectrumReport out;
  bool surface = ct.ball_dim() == 2;
  std::set<Rat> lams, rels;
  lams.insert(Rat(0));
  for (const ConjugatePair& cp : conjugate_classes(ct)) {
    SummandReport sr;
    sr.pair = cp;
    if (cp.kind == PairKind::UniformizingType) {
      Int rep_k = *cp.uniformizing_rep;
      sr.lambda = lambda1(ct, rep_k);
      sr.cab = cab_invariants(ct, rep_k);
      if (surface) sr.rel_euler = relative_euler(ct, rep_k);
    } else if (cp.kind == PairKind::Unitary) {
      sr.lambda = Rat(0);
    }
    if (sr.lambda) lams.insert(*sr.lambda);
    if (sr.rel_euler) rels.insert(*sr.rel_euler);
    out.summands.push_back(std::move(sr));
  }
  out.distinct_nonnegative.assign(lams.rbegin(), lams.rend());
  if (surface) out.relative_euler_set.assign(rels.rbegin(), rels.rend());
  out.maximally_degenerate =
      out.distinct_nonnegative == std::vector<Rat>{Rat(1), Rat(0)};
  return out;
}

}  // namespace ballquot
