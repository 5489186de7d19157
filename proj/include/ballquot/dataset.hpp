#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ballquot/covering.hpp"
#include "ballquot/rational.hpp"

namespace ballquot {

/* One row of the builtin table of non-arithmetic ball-quotient types: the
 * covering type plus its published invariants, used as regression truth. */
struct DatasetRow {
  int index = 0;
  CoveringType ct;
  std::string condition;  // "INT" | "SigmaINT"
  std::string model;      // e.g. "B9/S3"
  std::vector<std::pair<int, int>> parabolic;
  Int genus = 0;
  Int dim_p = 0;
  Int dim_u = 0;
  std::vector<Rat> spectrum;
  std::vector<Rat> relative_euler;  // empty for the threefold
  std::optional<int> comm_to;       // 1-based partner row
};

// Compiled-in default location of the canonical data file.
std::string default_data_path();

std::vector<DatasetRow> load_dataset(const std::string& path);
const std::vector<DatasetRow>& builtin_dataset();  // loads default path once

}  // namespace ballquot
