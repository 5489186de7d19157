#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ballquot/classify.hpp"
#include "ballquot/conditions.hpp"
#include "ballquot/covering.hpp"
#include "ballquot/dataset.hpp"
#include "ballquot/euler.hpp"
#include "ballquot/lyapunov.hpp"

namespace ballquot {

struct ConjugateEntry {
  Int k = 1;  // uniformizing member if present, else smaller member
  std::vector<Rat> mu;
  int p = 0, q = 0;
  PairKind kind = PairKind::Unsupported;
  std::optional<Rat> lambda;
};

/* Everything computable for one input type. `ok` means the full lattice
 * analysis succeeded; otherwise `note` says what stopped (weight sum != 2,
 * no lattice condition, uncatalogued model, unsupported dimension) and the
 * partial fields remain filled. */
struct AnalysisRecord {
  CoveringType ct;
  bool valid = false;
  bool ok = false;
  std::string note;
  std::string condition = "none";  // "INT" | "SigmaINT" | "none"
  std::vector<int> S;
  std::string model;  // "" when no model applies; quotient tag for SigmaINT
  std::vector<ConjugateEntry> conjugates;
  std::vector<Rat> spectrum;        // empty when not computed
  std::vector<Rat> relative_euler;  // surfaces only
  std::optional<EulerReport> euler;
  std::optional<TraceField> field;
  std::optional<bool> arithmetic;
  Int genus = 0;
  PrimitiveDims dims;
};

AnalysisRecord analyze(const CoveringType& ct);

std::string to_json(const AnalysisRecord& rec);
AnalysisRecord record_from_json(const std::string& text);  // round-trip of to_json

// Model tag string combining the surface tag with the Sym(S) quotient.
std::string model_label(const ConditionReport& cond, ModelTag tag);

struct TableCell {
  int row = 0;
  std::string column;
  std::string expected, actual;
};

/* Recomputes one dataset row from scratch and diffs every published column.
 * Empty result = exact match. */
std::vector<TableCell> diff_row(const DatasetRow& row);

}  // namespace ballquot
