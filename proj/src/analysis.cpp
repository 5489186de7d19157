#include "ballquot/analysis.hpp"

#include <json.hpp>
#include <sstream>

#include "ballquot/errors.hpp"

namespace ballquot {

using nlohmann::json;

std::string model_label(const ConditionReport& cond, ModelTag tag) {
  std::string label = model_tag_str(tag);
  if (cond.kind == ConditionReport::Kind::SigmaInt)
    label += "/S" + std::to_string(cond.S.size());
  return label;
}

AnalysisRecord analyze(const CoveringType& ct) {
  AnalysisRecord rec;
  rec.ct = ct;
  rec.valid = true;
  rec.genus = genus(ct);
  rec.dims = primitive_dimensions(ct);
  rec.field = trace_field(ct);

  for (const auto& cp : conjugate_classes(ct)) {
    ConjugateEntry e;
    e.k = cp.uniformizing_rep ? *cp.uniformizing_rep : cp.k_lo;
    WeightVector w = weight_vector(ct, e.k);
    e.mu = w.mu;
    e.p = w.p;
    e.q = w.q;
    e.kind = cp.kind;
    rec.conjugates.push_back(std::move(e));
  }

  WeightVector w1 = weight_vector(ct, 1);
  if (w1.sigma != 2) {
    rec.note = "weight sum " + rat_str(w1.sigma) + " differs from 2: no ball structure";
    return rec;
  }
  rec.arithmetic = is_arithmetic(ct);

  ConditionReport cond = check_sigma_int(w1.mu);
  rec.condition = condition_str(cond);
  rec.S = cond.S;

  if (ct.n_points() == 5) rec.euler = bmy_check(w1.mu);

  if (!cond.lattice()) {
    rec.note = "neither integrality condition holds: no lattice";
    return rec;
  }

  ModelId id;
  try {
    id = select_model(cond, ct.n_points());
  } catch (const Error& ex) {
    rec.note = ex.what();
    return rec;
  }
  rec.model = model_label(cond, id.tag);

  SpectrumReport sp = spectrum(ct);
  rec.spectrum = sp.distinct_nonnegative;
  rec.relative_euler = sp.relative_euler_set;
  for (size_t i = 0; i < sp.summands.size(); ++i)
    if (sp.summands[i].lambda) rec.conjugates[i].lambda = *sp.summands[i].lambda;

  rec.ok = true;
  return rec;
}

namespace {

json rat_array(const std::vector<Rat>& v) {
  json arr = json::array();
  for (const Rat& x : v) arr.push_back(rat_str(x));
  return arr;
}

std::vector<Rat> rats_from(const json& arr) {
  std::vector<Rat> out;
  for (const auto& x : arr) out.push_back(parse_rat(x.get<std::string>()));
  return out;
}

}  // namespace

std::string to_json(const AnalysisRecord& rec) {
  json j;
  j["input"] = type_str(rec.ct);
  j["condition"] = {{"kind", rec.condition}, {"S", rec.S}};
  json conj = json::array();
  for (const auto& e : rec.conjugates) {
    json c;
    c["k"] = e.k;
    c["mu"] = rat_array(e.mu);
    c["signature"] = {e.p, e.q};
    c["lambda"] = e.lambda ? json(rat_str(*e.lambda)) : json(nullptr);
    conj.push_back(std::move(c));
  }
  j["conjugates"] = std::move(conj);
  j["spectrum"] = rec.ok ? rat_array(rec.spectrum) : json(nullptr);
  j["relative_euler"] = rec.ok && rec.ct.ball_dim() == 2 ? rat_array(rec.relative_euler)
                                                         : json(nullptr);
  if (rec.euler) {
    j["euler"] = {{"e_orb", rat_str(rec.euler->e_orb)},
                  {"c1_sq", rat_str(rec.euler->c1_sq)},
                  {"bmy", rec.euler->bmy_holds}};
  } else {
    j["euler"] = nullptr;
  }
  j["trace_field"] = {{"canonical_d", rec.field ? rec.field->canonical_d : 0},
                      {"degree", rec.field ? rec.field->degree : 0}};
  j["model"] = rec.model.empty() ? json(nullptr) : json(rec.model);
  return j.dump(2);
}

AnalysisRecord record_from_json(const std::string& text) {
  json j = json::parse(text);
  CoveringType ct = parse_type(j.at("input").get<std::string>());

  AnalysisRecord rec;
  rec.ct = ct;
  rec.valid = true;
  rec.genus = genus(ct);
  rec.dims = primitive_dimensions(ct);
  rec.field = trace_field(ct);
  if (weight_vector(ct, 1).sigma == 2) rec.arithmetic = is_arithmetic(ct);

  rec.condition = j.at("condition").at("kind").get<std::string>();
  rec.S = j.at("condition").at("S").get<std::vector<int>>();
  if (!j.at("model").is_null()) rec.model = j.at("model").get<std::string>();

  for (const auto& c : j.at("conjugates")) {
    ConjugateEntry e;
    e.k = c.at("k").get<Int>();
    e.mu = rats_from(c.at("mu"));
    e.p = c.at("signature")[0].get<int>();
    e.q = c.at("signature")[1].get<int>();
    Rat sigma = 0;
    for (const Rat& m : e.mu) sigma += m;
    if (sigma == 2)
      e.kind = PairKind::UniformizingType;
    else if (sigma == 1 || sigma == ct.n_points() - 1)
      e.kind = PairKind::Unitary;
    else
      e.kind = PairKind::Unsupported;
    if (!c.at("lambda").is_null()) e.lambda = parse_rat(c.at("lambda").get<std::string>());
    rec.conjugates.push_back(std::move(e));
  }

  if (!j.at("spectrum").is_null()) {
    rec.ok = true;
    rec.spectrum = rats_from(j.at("spectrum"));
  } else {
    rec.note = "record carries no spectrum";
  }
  if (!j.at("relative_euler").is_null()) rec.relative_euler = rats_from(j.at("relative_euler"));
  if (!j.at("euler").is_null()) {
    EulerReport er;
    er.e_orb = parse_rat(j.at("euler").at("e_orb").get<std::string>());
    er.c1_sq = parse_rat(j.at("euler").at("c1_sq").get<std::string>());
    er.bmy_holds = j.at("euler").at("bmy").get<bool>();
    rec.euler = er;
  }
  return rec;
}

std::vector<TableCell> diff_row(const DatasetRow& row) {
  std::vector<TableCell> diffs;
  auto cell = [&](const std::string& col, const std::string& want, const std::string& got) {
    if (want != got) diffs.push_back({row.index, col, want, got});
  };
  auto joined = [](const std::vector<Rat>& v) {
    if (v.empty()) return std::string("-");
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += rat_str(v[i]);
    }
    return s;
  };

  WeightVector w1 = weight_vector(row.ct, 1);
  ConditionReport cond = check_sigma_int(w1.mu);
  cell("condition", row.condition, condition_str(cond));

  std::string model_got = "?";
  try {
    model_got = model_label(cond, select_model(cond, row.ct.n_points()).tag);
  } catch (const Error& ex) {
    model_got = ex.what();
  }
  cell("model", row.model, model_got);

  std::string par_want = "-", par_got;
  if (!row.parabolic.empty()) {
    par_want.clear();
    for (auto [i, j] : row.parabolic) {
      if (!par_want.empty()) par_want += ',';
      par_want += "L" + std::to_string(i) + std::to_string(j);
    }
  }
  for (const auto& p : pair_profiles(w1.mu))
    if (p.cls == PairClass::Parabolic) {
      if (!par_got.empty()) par_got += ',';
      par_got += "L" + std::to_string(p.i) + std::to_string(p.j);
    }
  if (par_got.empty()) par_got = "-";
  cell("parabolic", par_want, par_got);

  cell("genus", std::to_string(row.genus), std::to_string(genus(row.ct)));
  PrimitiveDims dims = primitive_dimensions(row.ct);
  cell("dimP", std::to_string(row.dim_p), std::to_string(dims.dim_p));
  cell("dimU", std::to_string(row.dim_u), std::to_string(dims.dim_u));

  try {
    SpectrumReport sp = spectrum(row.ct);
    cell("spectrum", joined(row.spectrum), joined(sp.distinct_nonnegative));
    cell("relEuler", joined(row.relative_euler), joined(sp.relative_euler_set));
  } catch (const Error& ex) {
    cell("spectrum", joined(row.spectrum), ex.what());
  }
  return diffs;
}

}  // namespace ballquot
