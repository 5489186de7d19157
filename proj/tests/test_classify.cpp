#include <doctest.h>

#include "ballquot/classify.hpp"
#include "ballquot/dataset.hpp"
#include "ballquot/errors.hpp"

using namespace ballquot;

TEST_CASE("trace fields in conductor-canonical form") {
  auto field = [](const char* t) { return trace_field(parse_type(t)); };
  CHECK(field("12;3,3,3,7,8").canonical_d == 12);
  CHECK(field("12;3,3,3,7,8").degree == 2);
  CHECK(field("15;4,6,6,6,8").canonical_d == 15);
  CHECK(field("15;4,6,6,6,8").degree == 4);
  // d = 2 mod 4 names the same cyclotomic field as d/2
  CHECK(field("18;2,7,7,7,13").canonical_d == 9);
  CHECK(field("18;2,7,7,7,13").degree == 3);
  CHECK(field("30;5,5,5,22,23") == field("15;4,6,6,6,8"));
  CHECK(field("42;7,7,7,29,34").canonical_d == 21);
  CHECK(field("42;7,7,7,29,34").degree == 6);
  CHECK(field("3;1,1,1,1,2").degree == 1);
}

TEST_CASE("invariant equality") {
  const auto& rows = builtin_dataset();
  CHECK(invariants(rows[7].ct) == invariants(rows[8].ct));    // 20;5,5,5,11,14 ~ 20;6,6,9,9,10
  CHECK_FALSE(invariants(rows[7].ct) == invariants(rows[9].ct));
  CHECK_FALSE(invariants(rows[0].ct) == invariants(rows[1].ct));  // same field, spectra differ
  CHECK(invariants(rows[4].ct) == invariants(rows[12].ct));   // d=15 vs d=30, same field
}

TEST_CASE("cocompactness is recorded from the cusps") {
  const auto& rows = builtin_dataset();
  for (const auto& row : rows)
    CHECK(invariants(row.ct).cocompact == row.parabolic.empty());
}

TEST_CASE("partition of the builtin table") {
  const auto& rows = builtin_dataset();
  std::vector<CoveringType> types;
  std::vector<std::pair<int, int>> edges;
  for (const auto& row : rows) {
    types.push_back(row.ct);
    if (row.comm_to && *row.comm_to > row.index)
      edges.emplace_back(row.index - 1, *row.comm_to - 1);
  }
  auto classes = partition(types, &edges);
  std::vector<std::vector<int>> want = {{0, 3}, {1},      {2},      {4, 12}, {5, 6},
                                        {7, 8}, {9},      {10, 11}, {13, 14}, {15}};
  CHECK(classes == want);
  // cocompactness never separates members the invariants put together
  for (const auto& cls : classes)
    for (int i : cls)
      CHECK(invariants(types[i]).cocompact == invariants(types[cls[0]]).cocompact);
}

TEST_CASE("known edges are validated") {
  const auto& rows = builtin_dataset();
  std::vector<CoveringType> types = {rows[0].ct, rows[1].ct, rows[3].ct};
  std::vector<std::pair<int, int>> good = {{0, 2}};
  CHECK(partition(types, &good).size() == 2);
  std::vector<std::pair<int, int>> bad = {{0, 1}};
  CHECK_THROWS_AS(partition(types, &bad), InconsistentKnownEdges);
  std::vector<std::pair<int, int>> oob = {{0, 7}};
  CHECK_THROWS_AS(partition(types, &oob), OutOfRange);
}
