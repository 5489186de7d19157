#include "ballquot/conditions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ballquot/errors.hpp"

namespace ballquot {

const char* pair_class_str(PairClass c) {
  switch (c) {
    case PairClass::Elliptic: return "elliptic";
    case PairClass::Parabolic: return "parabolic";
    case PairClass::Contracted: return "contracted";
  }
  return "?";
}

std::vector<PairProfile> pair_profiles(const std::vector<Rat>& mu) {
  Rat total = 0;
  for (const Rat& m : mu) total += m;
  if (total != 2)
    throw BadWeightSum("weight sum is " + rat_str(total) + ", need 2");
  std::vector<PairProfile> out;
  int N = static_cast<int>(mu.size());
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      PairProfile p;
      p.i = i + 1;
      p.j = j + 1;
      p.sum = mu[i] + mu[j];
      if (p.sum < 1) {
        p.cls = PairClass::Elliptic;
        p.kappa = 1 / (1 - p.sum);
      } else {
        p.cls = p.sum == 1 ? PairClass::Parabolic : PairClass::Contracted;
      }
      out.push_back(p);
    }
  return out;
}

bool check_int(const std::vector<Rat>& mu) {
  for (const auto& p : pair_profiles(mu))
    if (p.cls == PairClass::Elliptic && !is_integer(p.kappa)) return false;
  return true;
}

namespace {

bool sigma_int_holds(const std::vector<PairProfile>& pairs, const std::vector<int>& S) {
  auto in_S = [&](int i) { return std::find(S.begin(), S.end(), i) != S.end(); };
  for (const auto& p : pairs) {
    if (p.cls != PairClass::Elliptic) continue;
    if (in_S(p.i) && in_S(p.j)) {
      if (!is_integer(2 * p.kappa)) return false;
    } else {
      if (!is_integer(p.kappa)) return false;
    }
  }
  return true;
}

}  // namespace

ConditionReport check_sigma_int(const std::vector<Rat>& mu) {
  ConditionReport rep;
  rep.mu = mu;
  rep.pairs = pair_profiles(mu);

  bool plain_int = true;
  for (const auto& p : rep.pairs)
    if (p.cls == PairClass::Elliptic && !is_integer(p.kappa)) plain_int = false;

  // Candidate sets: subsets of equal-weight classes, largest first, then by
  // lexicographic order of members.
  std::map<Rat, std::vector<int>> classes;
  for (size_t i = 0; i < mu.size(); ++i) classes[mu[i]].push_back(static_cast<int>(i) + 1);
  std::vector<std::vector<int>> candidates;
  for (const auto& [w, members] : classes) {
    int n = static_cast<int>(members.size());
    if (n < 2) continue;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> S;
      for (int b = 0; b < n; ++b)
        if (mask & (1u << b)) S.push_back(members[b]);
      if (S.size() >= 2) candidates.push_back(std::move(S));
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  for (auto& S : candidates)
    if (sigma_int_holds(rep.pairs, S)) rep.all_S.push_back(S);

  if (plain_int) {
    rep.kind = ConditionReport::Kind::Int;
  } else if (!rep.all_S.empty()) {
    rep.kind = ConditionReport::Kind::SigmaInt;
    rep.S = rep.all_S.front();
    for (auto& p : rep.pairs)
      p.in_S = std::find(rep.S.begin(), rep.S.end(), p.i) != rep.S.end() &&
               std::find(rep.S.begin(), rep.S.end(), p.j) != rep.S.end();
  } else {
    rep.kind = ConditionReport::Kind::None;
  }
  return rep;
}

std::string condition_str(const ConditionReport& rep) {
  switch (rep.kind) {
    case ConditionReport::Kind::Int: return "INT";
    case ConditionReport::Kind::SigmaInt: return "SigmaINT";
    case ConditionReport::Kind::None: return "none";
  }
  return "?";
}

std::vector<TypeRecord> enumerate_types(Int max_d, int n_points, TypeFilter filter) {
  if (n_points < 4) throw OutOfRange("need at least 4 points");
  if (max_d > 2000) throw OutOfRange("max_d too large for an exhaustive sweep");
  std::vector<TypeRecord> out;
  std::vector<Int> a(n_points);
  for (Int d = 2; d <= max_d; ++d) {
    // non-decreasing exponent tuples with sum 2d
    auto rec = [&](auto&& self, int pos, Int lo, Int remaining) -> void {
      int left = n_points - pos;
      if (left == 0) {
        if (remaining != 0) return;
        Int g = d;
        for (Int x : a) g = std::gcd(g, x);
        if (g != 1) return;
        CoveringType ct{d, a};
        ConditionReport cond = check_sigma_int(weight_vector(ct, 1).mu);
        bool keep = false;
        switch (filter) {
          case TypeFilter::Int:
            keep = cond.kind == ConditionReport::Kind::Int;
            break;
          case TypeFilter::SigmaInt:
            keep = cond.lattice();
            break;
          case TypeFilter::NonArithmetic:
            keep = cond.lattice() && !is_arithmetic(ct);
            break;
        }
        if (keep) {
          bool arith = is_arithmetic(ct);
          out.push_back({std::move(ct), std::move(cond), arith});
        }
        return;
      }
      for (Int x = lo; x < d; ++x) {
        if (x * left > remaining) break;
        if (remaining - x > (d - 1) * (left - 1)) continue;
        a[pos] = x;
        self(self, pos + 1, x, remaining - x);
      }
    };
    rec(rec, 0, 1, 2 * d);
  }
  return out;
}

}  // namespace ballquot
