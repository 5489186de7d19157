#include "ballquot/chow.hpp"

#include <algorithm>

#include "ballquot/errors.hpp"

namespace ballquot {

const char* model_tag_str(ModelTag t) {
  switch (t) {
    case ModelTag::B10: return "B10";
    case ModelTag::B9: return "B9";
    case ModelTag::B7: return "B7";
    case ModelTag::B14: return "B14";
    case ModelTag::QuotB9Sigma3: return "B9/S3";
    case ModelTag::QuotB7Sigma3: return "B7/S3";
  }
  return "?";
}

bool Model::has_boundary(int i, int j) const {
  if (i > j) std::swap(i, j);
  return boundary.count({i, j}) != 0;
}

const DivisorClass& Model::L(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = boundary.find({i, j});
  if (it == boundary.end())
    throw ModelMismatch("no boundary class L(" + std::to_string(i) + "," +
                        std::to_string(j) + ") on " + model_tag_str(id.tag));
  return it->second;
}

DivisorClass Model::zero() const {
  return {id.tag, std::vector<Rat>(basis.size(), Rat(0))};
}

ModelId select_model(const ConditionReport& rep, int n_points) {
  std::vector<IndexPair> con, par;
  for (const auto& p : rep.pairs) {
    if (p.cls == PairClass::Contracted) con.push_back({p.i, p.j});
    if (p.cls == PairClass::Parabolic) par.push_back({p.i, p.j});
  }
  ModelId id;
  id.to_catalog.assign(n_points + 1, 0);
  id.contracted = con;

  if (n_points == 5) {
    if (con.empty()) {
      id.tag = ModelTag::B10;
      for (int i = 1; i <= 5; ++i) id.to_catalog[i] = i;
      return id;
    }
    if (con.size() == 1) {
      id.tag = ModelTag::B9;
      auto [a, b] = con[0];
      id.to_catalog[a] = 4;
      id.to_catalog[b] = 5;
      int next = 1;
      for (int i = 1; i <= 5; ++i)
        if (i != a && i != b) id.to_catalog[i] = next++;
      return id;
    }
    if (con.size() == 3) {
      // must be a star: one point on all three contracted pairs
      int count[6] = {0};
      for (auto [a, b] : con) {
        ++count[a];
        ++count[b];
      }
      int center = 0;
      for (int i = 1; i <= 5; ++i)
        if (count[i] == 3) center = i;
      if (!center) throw UnsupportedProfile("three contracted pairs without a common point");
      id.tag = ModelTag::B7;
      id.to_catalog[center] = 5;
      int next = 1;
      for (int i = 1; i <= 5; ++i)
        if (count[i] == 1) id.to_catalog[i] = next++;
      for (int i = 1; i <= 5; ++i)
        if (count[i] == 0) id.to_catalog[i] = 4;
      return id;
    }
    throw UnsupportedProfile(std::to_string(con.size()) +
                             " contracted pairs: no catalogued surface model");
  }

  if (n_points == 6) {
    if (!con.empty() || par.size() != 1)
      throw UnsupportedProfile("threefold model needs exactly one cusp and no contractions");
    auto [p, q] = par[0];
    const auto& mu = rep.mu;
    Rat rest_w;
    bool first = true, equal = true;
    for (int i = 1; i <= 6; ++i) {
      if (i == p || i == q) continue;
      if (first) {
        rest_w = mu[i - 1];
        first = false;
      } else if (mu[i - 1] != rest_w) {
        equal = false;
      }
    }
    if (!equal)
      throw UnsupportedProfile("threefold model needs equal weights away from the cusp");
    id.tag = ModelTag::B14;
    int hi = mu[p - 1] >= mu[q - 1] ? p : q;
    int lo = hi == p ? q : p;
    id.to_catalog[hi] = 1;
    id.to_catalog[lo] = 2;
    int next = 3;
    for (int i = 1; i <= 6; ++i)
      if (i != p && i != q) id.to_catalog[i] = next++;
    return id;
  }

  throw UnsupportedDimension("no catalogued model for " + std::to_string(n_points) +
                             " branch points");
}

namespace {

std::vector<Rat> basis_vec(size_t n, std::initializer_list<std::pair<int, int>> entries) {
  std::vector<Rat> v(n, Rat(0));
  for (auto [i, c] : entries) v[i] = c;
  return v;
}

// catalog boundary classes keyed by catalog labels
std::map<IndexPair, std::vector<Rat>> catalog_boundary(ModelTag tag) {
  std::map<IndexPair, std::vector<Rat>> L;
  switch (tag) {
    case ModelTag::B10:
      // basis (h, e1..e4)
      for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
          std::vector<Rat> v = basis_vec(5, {{0, 1}});
          for (int x = 1; x <= 4; ++x)
            if (x != i && x != j) v[x] = -1;
          L[{i, j}] = v;
        }
      for (int i = 1; i <= 4; ++i) L[{i, 5}] = basis_vec(5, {{i, 1}});
      break;
    case ModelTag::B9:
      // basis (h, e1..e3); the pair {4,5} is contracted
      L[{1, 2}] = basis_vec(4, {{0, 1}, {3, -1}});
      L[{1, 3}] = basis_vec(4, {{0, 1}, {2, -1}});
      L[{2, 3}] = basis_vec(4, {{0, 1}, {1, -1}});
      for (int i = 1; i <= 3; ++i) {
        std::vector<Rat> v = basis_vec(4, {{0, 1}});
        for (int x = 1; x <= 3; ++x)
          if (x != i) v[x] = -1;
        L[{i, 4}] = v;
        L[{i, 5}] = basis_vec(4, {{i, 1}});
      }
      break;
    case ModelTag::B7:
      // basis (h, e); {1,5},{2,5},{3,5} are contracted
      for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) L[{i, j}] = basis_vec(2, {{0, 1}, {1, -1}});
        L[{i, 4}] = basis_vec(2, {{0, 1}});
      }
      L[{4, 5}] = basis_vec(2, {{1, 1}});
      break;
    case ModelTag::B14:
      // basis (h, e3..e6); the cusp {1,2} keeps no divisor class
      for (int j = 3; j <= 6; ++j) {
        L[{1, j}] = basis_vec(5, {{j - 2, 1}});
        std::vector<Rat> v = basis_vec(5, {{0, 1}});
        for (int x = 3; x <= 6; ++x) v[x - 2] = x == j ? 0 : -1;
        L[{2, j}] = v;
      }
      for (int j = 3; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k) {
          std::vector<Rat> v = basis_vec(5, {{0, 1}});
          for (int x = 3; x <= 6; ++x) v[x - 2] = (x == j || x == k) ? 0 : -1;
          L[{j, k}] = v;
        }
      break;
    default:
      break;
  }
  return L;
}

std::vector<std::vector<Rat>> diag_pairing(std::initializer_list<int> diag) {
  std::vector<std::vector<Rat>> M;
  size_t n = diag.size();
  size_t i = 0;
  for (int d : diag) {
    std::vector<Rat> row(n, Rat(0));
    row[i++] = d;
    M.push_back(std::move(row));
  }
  return M;
}

}  // namespace

Model build_model(const ModelId& id, int n_points) {
  Model m;
  m.id = id;
  switch (id.tag) {
    case ModelTag::B10:
      m.dim = 2;
      m.basis = {"h", "e1", "e2", "e3", "e4"};
      m.pairing = diag_pairing({1, -1, -1, -1, -1});
      m.K = {id.tag, basis_vec(5, {{0, -3}, {1, 1}, {2, 1}, {3, 1}, {4, 1}})};
      break;
    case ModelTag::B9:
      m.dim = 2;
      m.basis = {"h", "e1", "e2", "e3"};
      m.pairing = diag_pairing({1, -1, -1, -1});
      m.K = {id.tag, basis_vec(4, {{0, -3}, {1, 1}, {2, 1}, {3, 1}})};
      break;
    case ModelTag::B7:
      m.dim = 2;
      m.basis = {"h", "e"};
      m.pairing = diag_pairing({1, -1});
      m.K = {id.tag, basis_vec(2, {{0, -3}, {1, 1}})};
      break;
    case ModelTag::B14:
      m.dim = 3;
      m.basis = {"h", "e3", "e4", "e5", "e6"};
      m.cubes = {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)};
      m.K = {id.tag, basis_vec(5, {{0, -4}, {1, 2}, {2, 2}, {3, 2}, {4, 2}})};
      break;
    case ModelTag::QuotB9Sigma3:
      m.dim = 2;
      m.basis = {"[L14]", "[L15]", "[L12]"};
      m.pairing = {{rat(-1, 2), Rat(1), Rat(1)},
                   {Rat(1), rat(-1, 2), Rat(1)},
                   {Rat(1), Rat(1), Rat(4)}};
      m.K = {id.tag, {Rat(0), Rat(0), Rat(-1)}};
      return m;
    case ModelTag::QuotB7Sigma3:
      m.dim = 2;
      m.basis = {"[L12]", "[L14]", "[L45]"};
      m.pairing = {{Rat(0), Rat(3), Rat(1)},
                   {Rat(3), rat(3, 2), Rat(0)},
                   {Rat(1), Rat(0), rat(-1, 6)}};
      m.K = {id.tag, {rat(-2, 3), rat(-2, 3), Rat(0)}};
      return m;
  }

  if (static_cast<int>(id.to_catalog.size()) != n_points + 1)
    throw ModelMismatch("relabelling table does not cover all branch points");
  auto cat = catalog_boundary(id.tag);
  for (int i = 1; i <= n_points; ++i)
    for (int j = i + 1; j <= n_points; ++j) {
      int pi = id.to_catalog[i], pj = id.to_catalog[j];
      if (pi > pj) std::swap(pi, pj);
      auto it = cat.find({pi, pj});
      if (it != cat.end()) m.boundary[{i, j}] = {id.tag, it->second};
    }
  return m;
}

Rat top_product(const Model& m, const std::vector<DivisorClass>& classes) {
  if (static_cast<int>(classes.size()) != m.dim)
    throw PreconditionFailed("top product needs exactly " + std::to_string(m.dim) +
                             " classes");
  for (const auto& c : classes)
    if (c.model != m.id.tag || c.c.size() != m.basis.size())
      throw ModelMismatch("divisor class does not live on this model");
  size_t n = m.basis.size();
  Rat total = 0;
  if (m.dim == 2) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        total += classes[0].c[i] * m.pairing[i][j] * classes[1].c[j];
  } else {
    // all mixed triple products of distinct basis classes vanish
    for (size_t i = 0; i < n; ++i)
      total += classes[0].c[i] * classes[1].c[i] * classes[2].c[i] * m.cubes[i];
  }
  return total;
}

Rat quotient_intersect(const Model& m, const DivisorClass& a, const DivisorClass& b) {
  if (m.dim != 2) throw PreconditionFailed("pairing is for surface models");
  return top_product(m, {a, b});
}

DivisorClass blowdown_pullback(const std::vector<IndexPair>& contracted,
                               const BoundaryCombo& combo) {
  ModelId full;
  full.tag = ModelTag::B10;
  full.to_catalog = {0, 1, 2, 3, 4, 5};
  Model b10 = build_model(full, 5);

  auto norm = [](IndexPair p) {
    if (p.first > p.second) std::swap(p.first, p.second);
    return p;
  };
  std::vector<IndexPair> con;
  for (auto p : contracted) con.push_back(norm(p));

  DivisorClass out = b10.zero();
  auto axpy = [&](const DivisorClass& src, const Rat& c) {
    for (size_t t = 0; t < out.c.size(); ++t) out.c[t] += c * src.c[t];
  };

  // K of the contracted model pulls back to K - sum of exceptional curves.
  axpy(b10.K, combo.k_coeff);
  for (auto [a, b] : con) axpy(b10.L(a, b), -combo.k_coeff);

  for (const auto& [pr, c] : combo.lij) {
    auto [i, j] = norm(pr);
    if (std::find(con.begin(), con.end(), IndexPair{i, j}) != con.end())
      throw PreconditionFailed("combo assigns a coefficient to a contracted pair");
    axpy(b10.L(i, j), c);
    for (auto [a, b] : con)
      if (a != i && a != j && b != i && b != j) axpy(b10.L(a, b), c);
  }
  return out;
}

DivisorClass combo_on_model(const Model& m, const BoundaryCombo& combo) {
  DivisorClass out = m.zero();
  for (size_t t = 0; t < out.c.size(); ++t) out.c[t] = combo.k_coeff * m.K.c[t];
  for (const auto& [pr, c] : combo.lij) {
    if (c == 0) continue;
    const DivisorClass& L = m.L(pr.first, pr.second);
    for (size_t t = 0; t < out.c.size(); ++t) out.c[t] += c * L.c[t];
  }
  return out;
}

}  // namespace ballquot
