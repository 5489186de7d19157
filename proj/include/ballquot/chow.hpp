#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ballquot/conditions.hpp"
#include "ballquot/rational.hpp"

namespace ballquot {

using IndexPair = std::pair<int, int>;  // 1-based branch-point labels, i < j

/* Catalogued compactified models. The surfaces are blow-ups of the plane
 * (named by their count of boundary divisors), the threefold is the blow-up
 * of P^3 in the four coordinate points. Quot* are the Sym(3)-quotient rings
 * with their fixed generator bases. */
enum class ModelTag { B10, B9, B7, B14, QuotB9Sigma3, QuotB7Sigma3 };

const char* model_tag_str(ModelTag t);

struct ModelId {
  ModelTag tag = ModelTag::B10;
  /* to_catalog[i] = catalogued label of input point i (1-based; index 0 unused).
   * The catalogs fix conventions: B9 contracts {4,5}; B7 contracts {1,5},{2,5},
   * {3,5}; B14 has its cusp at {1,2}. Inputs are relabelled to match. */
  std::vector<int> to_catalog;
  std::vector<IndexPair> contracted;  // input labels
};

/* Picks the model for a pair profile: 0 contracted -> B10, 1 -> B9,
 * a 3-star -> B7; N=6 with one cusp, no contractions and four equal weights
 * away from the cusp -> B14. Anything else throws UnsupportedProfile. */
ModelId select_model(const ConditionReport& rep, int n_points);

struct DivisorClass {
  ModelTag model = ModelTag::B10;
  std::vector<Rat> c;  // coefficients in the model basis
};

struct Model {
  ModelId id;
  int dim = 2;  // complex dimension
  std::vector<std::string> basis;
  // dim 2: full symmetric pairing matrix on the basis.
  std::vector<std::vector<Rat>> pairing;
  // dim 3 (B14): cubes of the basis classes; all mixed triples vanish.
  std::vector<Rat> cubes;
  DivisorClass K;
  std::map<IndexPair, DivisorClass> boundary;  // keyed by input labels

  bool has_boundary(int i, int j) const;
  const DivisorClass& L(int i, int j) const;
  DivisorClass zero() const;
};

Model build_model(const ModelId& id, int n_points);

// Top intersection number; `classes` must have exactly `dim` entries.
Rat top_product(const Model& m, const std::vector<DivisorClass>& classes);

// Pairing of two classes of a quotient model (or any surface model).
Rat quotient_intersect(const Model& m, const DivisorClass& a, const DivisorClass& b);

/* A formal combination c_K * K + sum c_ij [L_ij] of the canonical class and
 * the surviving boundary divisors of a contracted surface model. */
struct BoundaryCombo {
  Rat k_coeff;
  std::map<IndexPair, Rat> lij;
};

/* Total transform on B10 of a combo living on the model with the given
 * contracted pairs: K picks up -[L_ab] for each contracted {a,b}, and each
 * [L_ij] picks up the contracted [L_ab] it meets (disjoint labels).
 * Intersection numbers are preserved. */
DivisorClass blowdown_pullback(const std::vector<IndexPair>& contracted,
                               const BoundaryCombo& combo);

// Assembles the same combo directly in the model's basis.
DivisorClass combo_on_model(const Model& m, const BoundaryCombo& combo);

}  // namespace ballquot
