#include <doctest.h>

#include <numeric>

#include "ballquot/covering.hpp"
#include "ballquot/dataset.hpp"
#include "ballquot/errors.hpp"

using namespace ballquot;

TEST_CASE("type validation names the violated condition") {
  CHECK_NOTHROW(make_type(12, {3, 3, 5, 6, 7}));
  auto reason = [](Int d, std::vector<Int> a) {
    try {
      make_type(d, std::move(a));
    } catch (const TypeReject& ex) {
      return ex.reason;
    }
    return TypeReject::Reason::Parse;
  };
  CHECK(reason(1, {1, 1, 1, 1}) == TypeReject::Reason::Degree);
  CHECK(reason(4, {1, 1, 2}) == TypeReject::Reason::Arity);
  CHECK(reason(4, {0, 1, 1, 2}) == TypeReject::Reason::Range);
  CHECK(reason(4, {1, 1, 1, 5}) == TypeReject::Reason::Range);
  CHECK(reason(4, {2, 2, 2, 2}) == TypeReject::Reason::Gcd);
  CHECK(reason(12, {3, 3, 5, 6, 8}) == TypeReject::Reason::Sum);
}

TEST_CASE("type strings parse with whitespace and parens") {
  CoveringType ct = parse_type(" 12 ; 3, 3, 5, 6, 7 ");
  CHECK(ct.d == 12);
  CHECK(ct.a == std::vector<Int>{3, 3, 5, 6, 7});
  CHECK(parse_type("(15;4,6,6,6,8)").d == 15);
  CHECK(type_str(ct) == "12;3,3,5,6,7");
  CHECK_THROWS_AS(parse_type("12:3,3,5,6,7"), TypeReject);
  CHECK_THROWS_AS(parse_type("12;3,3,x,6,7"), TypeReject);
}

TEST_CASE("weight vectors carry exponents and signature") {
  CoveringType ct = parse_type("12;3,3,5,6,7");
  WeightVector w1 = weight_vector(ct, 1);
  CHECK(w1.mu == std::vector<Rat>{rat(1, 4), rat(1, 4), rat(5, 12), rat(1, 2), rat(7, 12)});
  CHECK(w1.sigma == 2);
  CHECK(w1.s == 5);
  CHECK(w1.p == 1);
  CHECK(w1.q == 2);

  WeightVector w5 = weight_vector(ct, 5);
  CHECK(w5.mu == std::vector<Rat>{rat(1, 4), rat(1, 4), rat(1, 12), rat(1, 2), rat(11, 12)});
  CHECK(w5.sigma == 2);

  // k not coprime to d: branch points with d | k*a drop out of s
  WeightVector w4 = weight_vector(ct, 4);
  CHECK(w4.s == 2);  // only a=5 and a=7 survive mod 3

  CHECK_THROWS_AS(weight_vector(ct, 0), OutOfRange);
  CHECK_THROWS_AS(weight_vector(ct, 12), OutOfRange);
}

TEST_CASE("conjugate weights sum to N") {
  for (const auto& row : builtin_dataset()) {
    const CoveringType& ct = row.ct;
    for (Int k = 1; k < ct.d; ++k) {
      if (std::gcd(k, ct.d) != 1) continue;
      Rat s = weight_vector(ct, k).sigma + weight_vector(ct, ct.d - k).sigma;
      CHECK(s == ct.n_points());
    }
  }
}

TEST_CASE("genus matches the table and the eigenspace count") {
  for (const auto& row : builtin_dataset()) {
    CHECK(genus(row.ct) == row.genus);
    // 2g = sum over characters of (s(k) - 2)
    Int twog = 0;
    for (Int k = 1; k < row.ct.d; ++k) twog += weight_vector(row.ct, k).s - 2;
    CHECK(twog == 2 * row.genus);
  }
}

TEST_CASE("conjugate classes split into kinds") {
  CoveringType ct = parse_type("15;4,6,6,6,8");
  auto pairs = conjugate_classes(ct);
  REQUIRE(pairs.size() == 4);
  int unif = 0, unitary = 0;
  for (const auto& p : pairs) {
    if (p.kind == PairKind::UniformizingType) {
      ++unif;
      CHECK(weight_vector(ct, *p.uniformizing_rep).sigma == 2);
    }
    if (p.kind == PairKind::Unitary) ++unitary;
  }
  CHECK(unif == 3);
  CHECK(unitary == 1);
  CHECK(pairs[0].k_lo == 1);
  CHECK(pairs[0].k_hi == 14);
  CHECK(pairs[0].uniformizing_rep == 1);
}

TEST_CASE("primitive dimensions match the table") {
  for (const auto& row : builtin_dataset()) {
    PrimitiveDims dims = primitive_dimensions(row.ct);
    CHECK(dims.dim_p == row.dim_p);
    CHECK(dims.dim_u == row.dim_u);
  }
}

TEST_CASE("arithmeticity flags") {
  CHECK(is_arithmetic(parse_type("3;1,1,1,1,2")));
  for (const auto& row : builtin_dataset()) CHECK_FALSE(is_arithmetic(row.ct));
  CHECK_THROWS_AS(is_arithmetic(parse_type("5;1,1,1,1,1")), PreconditionFailed);
}
