#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ballquot/covering.hpp"
#include "ballquot/rational.hpp"

namespace ballquot {

enum class PairClass { Elliptic, Parabolic, Contracted };

/* One unordered pair {i,j} of branch points (1-based labels), classified by
 * mu_i + mu_j: < 1 elliptic with branch order kappa = (1-mu_i-mu_j)^{-1},
 * = 1 parabolic (cusp), > 1 contracted in the stable model. */
struct PairProfile {
  int i = 0, j = 0;
  Rat sum;
  PairClass cls = PairClass::Elliptic;
  Rat kappa;  // defined for elliptic pairs only
  bool in_S = false;
};

const char* pair_class_str(PairClass c);

// Requires sum(mu) == 2; throws BadWeightSum otherwise.
std::vector<PairProfile> pair_profiles(const std::vector<Rat>& mu);

// (INT): every elliptic kappa is an integer.
bool check_int(const std::vector<Rat>& mu);

struct ConditionReport {
  enum class Kind { Int, SigmaInt, None };
  Kind kind = Kind::None;
  std::vector<int> S;                   // chosen set, 1-based labels; empty for INT
  std::vector<std::vector<int>> all_S;  // every satisfying S (size >= 2)
  std::vector<PairProfile> pairs;
  std::vector<Rat> mu;

  bool lattice() const { return kind != Kind::None; }
};

/* (Sigma-INT): relaxes integrality to half-integers on pairs within a set S of
 * equal weights. Checks (INT) first; otherwise searches candidate S among
 * equal-weight classes and their subsets, largest first, and reports the first
 * satisfying set. Every satisfying S is recorded in all_S. */
ConditionReport check_sigma_int(const std::vector<Rat>& mu);

std::string condition_str(const ConditionReport& rep);

struct TypeRecord {
  CoveringType ct;
  ConditionReport cond;
  bool arithmetic = false;
};

/* All valid types with d <= max_d, sum(a) == 2d, a non-decreasing, matching
 * the filter. Deterministic lexicographic order in (d, a). */
enum class TypeFilter { Int, SigmaInt, NonArithmetic };
std::vector<TypeRecord> enumerate_types(Int max_d, int n_points, TypeFilter filter);

}  // namespace ballquot
