#pragma once

// Seeded weight-quintuple sampler shared by the property tests and the
// acceptance suite. Mirrors the CLI's bmy sampler: every tenth draw carries
// an exact cusp pair, two in ten push a pair above 1, the rest are plain
// normalized draws.

#include <random>
#include <vector>

#include "ballquot/rational.hpp"

inline std::vector<ballquot::Rat> sample_quintuple(std::mt19937_64& rng, int trial) {
  using ballquot::Int;
  using ballquot::Rat;
  using ballquot::rat;
  auto unit = [&](Int lo, Int hi) {
    std::uniform_int_distribution<Int> pick(lo, hi);
    return pick(rng);
  };
  int mode = trial % 10;
  if (mode == 0) {
    Int m = unit(7, 60), n = unit(1, m - 1);
    Rat mu1 = rat(n, m);
    Int x3 = unit(1, 50), x4 = unit(1, 50), x5 = unit(1, 50);
    Rat t = rat(x3 + x4 + x5);
    return {mu1, 1 - mu1, rat(x3) / t, rat(x4) / t, rat(x5) / t};
  }
  if (mode <= 2) {
    Int m1 = unit(8, 40), n1 = unit(1, m1 - 1);
    Int m2 = unit(8, 40), n2 = unit(1, m2 - 1);
    Rat mu1 = rat(m1 + n1, 2 * m1), mu2 = rat(m2 + n2, 2 * m2);
    Rat rest = 2 - mu1 - mu2;
    Int x3 = unit(1, 50), x4 = unit(1, 50), x5 = unit(1, 50);
    Rat t = rat(x3 + x4 + x5);
    return {mu1, mu2, rest * x3 / t, rest * x4 / t, rest * x5 / t};
  }
  for (;;) {
    Int x[5], sum = 0;
    for (auto& v : x) {
      v = unit(1, 100);
      sum += v;
    }
    bool ok = true;
    for (Int v : x)
      if (2 * v >= sum) ok = false;
    if (!ok) continue;
    std::vector<Rat> mu;
    for (Int v : x) mu.push_back(rat(2 * v, sum));
    return mu;
  }
}
