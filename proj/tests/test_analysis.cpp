#include <doctest.h>

#include <nlohmann/json.hpp>

#include "ballquot/analysis.hpp"
#include "ballquot/dataset.hpp"
#include "ballquot/errors.hpp"

using namespace ballquot;

TEST_CASE("full analysis reproduces every table row") {
  for (const auto& row : builtin_dataset()) {
    AnalysisRecord rec = analyze(row.ct);
    CHECK(rec.valid);
    CHECK(rec.ok);
    CHECK(rec.note.empty());
    CHECK(rec.condition == row.condition);
    CHECK(rec.model == row.model);
    CHECK(rec.genus == row.genus);
    CHECK(rec.dims.dim_p == row.dim_p);
    CHECK(rec.dims.dim_u == row.dim_u);
    CHECK(rec.spectrum == row.spectrum);
    CHECK(rec.relative_euler == row.relative_euler);
    CHECK(rec.arithmetic == false);
    if (row.ct.ball_dim() == 2) {
      REQUIRE(rec.euler.has_value());
      CHECK(rec.euler->bmy_holds);
    }
    for (const auto& e : rec.conjugates)
      if (e.kind == PairKind::UniformizingType) CHECK(e.lambda.has_value());
  }
}

TEST_CASE("partial analysis keeps what it can") {
  // no ball structure: the weights of the first character sum to 1
  AnalysisRecord flat = analyze(parse_type("5;1,1,1,1,1"));
  CHECK(flat.valid);
  CHECK_FALSE(flat.ok);
  CHECK(flat.note == "weight sum 1 differs from 2: no ball structure");
  CHECK(flat.genus == 6);

  // ball structure but no integrality condition
  AnalysisRecord free_type = analyze(parse_type("7;1,1,2,4,6"));
  CHECK_FALSE(free_type.ok);
  CHECK(free_type.note == "neither integrality condition holds: no lattice");
  CHECK(free_type.condition == "none");
  REQUIRE(free_type.euler.has_value());  // Euler data needs no lattice
  CHECK(free_type.euler->bmy_holds);
  CHECK(free_type.spectrum.empty());

  // lattice with an uncatalogued stable model
  AnalysisRecord unc = analyze(parse_type("12;3,3,5,5,8"));
  CHECK_FALSE(unc.ok);
  CHECK(unc.note.find("contract") != std::string::npos);
  CHECK(unc.condition == "INT");
  CHECK(unc.arithmetic == true);

  AnalysisRecord arith = analyze(parse_type("3;1,1,1,1,2"));
  CHECK(arith.ok);
  CHECK(arith.arithmetic == true);
  CHECK(arith.spectrum == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("json serialization round trips") {
  for (const auto& row : builtin_dataset()) {
    AnalysisRecord rec = analyze(row.ct);
    std::string text = to_json(rec);
    AnalysisRecord back = record_from_json(text);
    CHECK(back.ok == rec.ok);
    CHECK(type_str(back.ct) == type_str(rec.ct));
    CHECK(back.condition == rec.condition);
    CHECK(back.S == rec.S);
    CHECK(back.model == rec.model);
    CHECK(back.spectrum == rec.spectrum);
    CHECK(back.relative_euler == rec.relative_euler);
    CHECK(back.genus == rec.genus);
    CHECK(back.field->canonical_d == rec.field->canonical_d);
    REQUIRE(back.conjugates.size() == rec.conjugates.size());
    for (size_t i = 0; i < rec.conjugates.size(); ++i) {
      CHECK(back.conjugates[i].k == rec.conjugates[i].k);
      CHECK(back.conjugates[i].lambda == rec.conjugates[i].lambda);
      CHECK(back.conjugates[i].mu == rec.conjugates[i].mu);
    }
    if (rec.euler) {
      REQUIRE(back.euler.has_value());
      CHECK(back.euler->e_orb == rec.euler->e_orb);
      CHECK(back.euler->c1_sq == rec.euler->c1_sq);
    }
  }
}

TEST_CASE("json shape") {
  AnalysisRecord rec = analyze(parse_type("12;3,3,5,6,7"));
  auto j = nlohmann::json::parse(to_json(rec));
  CHECK(j.at("input") == "12;3,3,5,6,7");
  CHECK(j.at("condition").at("kind") == "INT");
  CHECK(j.at("condition").at("S").empty());
  CHECK(j.at("model") == "B9");
  CHECK(j.at("spectrum") == nlohmann::json({"1", "5/17", "0"}));
  CHECK(j.at("relative_euler") == nlohmann::json({"1", "1/17"}));
  CHECK(j.at("euler").at("e_orb") == "17/48");
  CHECK(j.at("euler").at("c1_sq") == "17/16");
  CHECK(j.at("euler").at("bmy") == true);
  CHECK(j.at("trace_field").at("canonical_d") == 12);
  CHECK(j.at("trace_field").at("degree") == 2);
  REQUIRE(j.at("conjugates").is_array());
  CHECK(j.at("conjugates").size() == 2);
  CHECK(j.at("conjugates")[0].at("k") == 1);
  CHECK(j.at("conjugates")[0].at("lambda") == "1");
  CHECK(j.at("conjugates")[0].at("signature") == nlohmann::json({1, 2}));

  // non-lattice records null out what was not computed
  auto j2 = nlohmann::json::parse(to_json(analyze(parse_type("7;1,1,2,4,6"))));
  CHECK(j2.at("spectrum").is_null());
  CHECK(j2.at("model").is_null());
  CHECK_FALSE(j2.at("euler").is_null());

  // threefold records have no surface Euler block
  auto j3 = nlohmann::json::parse(to_json(analyze(parse_type("12;7,5,3,3,3,3"))));
  CHECK(j3.at("relative_euler").is_null());
  CHECK(j3.at("euler").is_null());
}

TEST_CASE("row diffs are empty on the published table") {
  for (const auto& row : builtin_dataset()) {
    auto cells = diff_row(row);
    for (const auto& c : cells) {
      CAPTURE(c.column);
      CAPTURE(c.expected);
      CAPTURE(c.actual);
    }
    CHECK(cells.empty());
  }
}

TEST_CASE("row diffs catch a perturbed value") {
  DatasetRow row = builtin_dataset()[0];
  row.genus = 13;
  auto cells = diff_row(row);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].column == "genus");
  CHECK(cells[0].expected == "13");
  CHECK(cells[0].actual == "12");
}
