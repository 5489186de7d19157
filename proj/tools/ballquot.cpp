// ballquot: exact invariants of cyclic-covering ball-quotient types.
//
// Subcommands: analyze a single type, reproduce the builtin regression table,
// enumerate types by degree, run the Chern-equality sampler, and partition
// inputs into commensurability classes. All arithmetic is exact; rationals
// print as p/q.

#include <CLI11.hpp>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "ballquot/analysis.hpp"
#include "ballquot/errors.hpp"

using namespace ballquot;
using nlohmann::json;

namespace {

std::string joined(const std::vector<Rat>& v, const char* empty = "-") {
  if (v.empty()) return empty;
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += rat_str(v[i]);
  }
  return s;
}

std::string joined_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string mu_str(const std::vector<Rat>& mu) {
  std::string s = "(";
  for (size_t i = 0; i < mu.size(); ++i) {
    if (i) s += ',';
    s += rat_str(mu[i]);
  }
  return s + ")";
}

int cmd_analyze(const std::string& type_text, const std::string& format) {
  CoveringType ct;
  try {
    ct = parse_type(type_text);
  } catch (const TypeReject& ex) {
    std::cerr << "invalid type '" << type_text << "': " << ex.what() << "\n";
    return 2;
  }
  AnalysisRecord rec = analyze(ct);

  if (format == "json") {
    std::cout << to_json(rec) << "\n";
  } else if (format == "csv") {
    std::cout << "input,condition,S,model,genus,dimP,dimU,spectrum,relEuler,"
                 "canonical_d,degree,arithmetic\n";
    std::cout << type_str(rec.ct) << ',' << rec.condition << ','
              << (rec.S.empty() ? "-" : joined_ints(rec.S)) << ','
              << (rec.model.empty() ? "-" : rec.model) << ',' << rec.genus << ','
              << rec.dims.dim_p << ',' << rec.dims.dim_u << ','
              << (rec.ok ? joined(rec.spectrum) : "-") << ','
              << (rec.ok ? joined(rec.relative_euler) : "-") << ','
              << rec.field->canonical_d << ',' << rec.field->degree << ','
              << (rec.arithmetic ? (*rec.arithmetic ? "yes" : "no") : "-") << "\n";
  } else {
    std::cout << "type        " << type_str(rec.ct) << "\n";
    std::cout << "condition   " << rec.condition;
    if (!rec.S.empty()) std::cout << "  S={" << joined_ints(rec.S) << "}";
    std::cout << "\n";
    if (!rec.model.empty()) std::cout << "model       " << rec.model << "\n";
    std::cout << "genus       " << rec.genus << "\n";
    std::cout << "dim (P,U)   (" << rec.dims.dim_p << "," << rec.dims.dim_u << ")\n";
    std::cout << "trace field Q(cos 2pi/" << rec.field->canonical_d << "), degree "
              << rec.field->degree << "\n";
    if (rec.arithmetic)
      std::cout << "arithmetic  " << (*rec.arithmetic ? "yes" : "no") << "\n";
    std::cout << "conjugates\n";
    for (const auto& e : rec.conjugates) {
      std::cout << "  k=" << e.k << "  mu=" << mu_str(e.mu) << "  sig=(" << e.p << ","
                << e.q << ")  " << pair_kind_str(e.kind);
      if (e.lambda) std::cout << "  lambda=" << rat_str(*e.lambda);
      std::cout << "\n";
    }
    if (rec.ok) {
      std::cout << "spectrum    {" << joined(rec.spectrum) << "}\n";
      if (ct.ball_dim() == 2)
        std::cout << "rel euler   {" << joined(rec.relative_euler) << "}\n";
    }
    if (rec.euler) {
      std::cout << "euler       e_orb=" << rat_str(rec.euler->e_orb)
                << "  c1^2=" << rat_str(rec.euler->c1_sq) << "  3e=c1^2 "
                << (rec.euler->bmy_holds ? "holds" : "FAILS") << "\n";
    }
    if (!rec.ok) std::cout << "note        " << rec.note << "\n";
  }
  return rec.ok ? 0 : 3;
}

int cmd_table(const std::string& format, const std::string& data_path,
              const std::string& perturb) {
  std::vector<DatasetRow> rows = load_dataset(data_path);

  if (!perturb.empty()) {
    // test hook: corrupt one expected cell to exercise the diff report
    auto colon = perturb.find(':');
    if (colon == std::string::npos) throw Error("--perturb wants ROW:COLUMN");
    int idx = std::stoi(perturb.substr(0, colon));
    std::string col = perturb.substr(colon + 1);
    for (auto& r : rows) {
      if (r.index != idx) continue;
      if (col == "genus") r.genus += 1;
      else if (col == "dimP") r.dim_p += 1;
      else if (col == "dimU") r.dim_u += 1;
      else if (col == "condition") r.condition += "?";
      else if (col == "model") r.model += "?";
      else if (col == "spectrum") r.spectrum.push_back(rat(9, 7));
      else if (col == "relEuler") r.relative_euler.push_back(rat(9, 7));
      else throw Error("--perturb column must name a recomputed cell");
    }
  }

  std::vector<TableCell> diffs;
  for (const auto& r : rows) {
    auto d = diff_row(r);
    diffs.insert(diffs.end(), d.begin(), d.end());
  }
  // commensurability partners named by the table must share all invariants
  for (const auto& r : rows) {
    if (!r.comm_to) continue;
    const DatasetRow& partner = rows[*r.comm_to - 1];
    if (!(invariants(r.ct) == invariants(partner.ct)))
      diffs.push_back({r.index, "commTo", "class of row " + std::to_string(*r.comm_to),
                       "different invariants"});
  }

  int matched = static_cast<int>(rows.size());
  {
    std::set<int> bad;
    for (const auto& c : diffs) bad.insert(c.row);
    matched -= static_cast<int>(bad.size());
  }

  if (format == "json") {
    json j;
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back(json::parse(to_json(analyze(r.ct))));
    j["diffs"] = json::array();
    for (const auto& c : diffs)
      j["diffs"].push_back({{"row", c.row},
                            {"column", c.column},
                            {"expected", c.expected},
                            {"actual", c.actual}});
    j["matched"] = matched;
    j["total"] = rows.size();
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "row,type,condition,model,genus,dimP,dimU,spectrum,relEuler,commTo,"
                 "status\n";
    for (const auto& r : rows) {
      bool ok = true;
      for (const auto& c : diffs)
        if (c.row == r.index) ok = false;
      std::cout << r.index << ',' << type_str(r.ct) << ',' << r.condition << ','
                << r.model << ',' << r.genus << ',' << r.dim_p << ',' << r.dim_u << ",\""
                << joined(r.spectrum) << "\",\"" << joined(r.relative_euler) << "\","
                << (r.comm_to ? std::to_string(*r.comm_to) : "-") << ','
                << (ok ? "ok" : "MISMATCH") << "\n";
    }
  } else {
    std::printf("%-3s %-16s %-8s %-7s %-4s %-5s %-4s %-18s %-14s %s\n", "row", "type",
                "cond", "model", "g", "dimP", "dimU", "spectrum", "relEuler", "commTo");
    for (const auto& r : rows) {
      std::string comm = r.comm_to ? std::to_string(*r.comm_to) : "-";
      std::printf("%-3d %-16s %-8s %-7s %-4lld %-5lld %-4lld %-18s %-14s %s\n", r.index,
                  type_str(r.ct).c_str(), r.condition.c_str(), r.model.c_str(), r.genus,
                  r.dim_p, r.dim_u, joined(r.spectrum).c_str(),
                  joined(r.relative_euler).c_str(), comm.c_str());
    }
    std::cout << matched << "/" << rows.size() << " rows match\n";
  }
  for (const auto& c : diffs)
    std::cerr << "mismatch row " << c.row << " column " << c.column << ": expected "
              << c.expected << ", recomputed " << c.actual << "\n";
  return diffs.empty() ? 0 : 1;
}

int cmd_enumerate(Int max_d, int n_points, const std::string& filter,
                  const std::string& format) {
  TypeFilter tf;
  if (filter == "int") tf = TypeFilter::Int;
  else if (filter == "sigmaint") tf = TypeFilter::SigmaInt;
  else if (filter == "nonarithmetic") tf = TypeFilter::NonArithmetic;
  else throw Error("filter must be int, sigmaint or nonarithmetic");
  std::vector<TypeRecord> recs = enumerate_types(max_d, n_points, tf);

  if (format == "json") {
    json j = json::array();
    for (const auto& r : recs)
      j.push_back({{"type", type_str(r.ct)},
                   {"condition", condition_str(r.cond)},
                   {"S", r.cond.S},
                   {"arithmetic", r.arithmetic}});
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "type,condition,S,arithmetic\n";
    for (const auto& r : recs)
      std::cout << type_str(r.ct) << ',' << condition_str(r.cond) << ','
                << (r.cond.S.empty() ? "-" : joined_ints(r.cond.S)) << ','
                << (r.arithmetic ? "yes" : "no") << "\n";
  } else {
    for (const auto& r : recs) {
      std::cout << type_str(r.ct) << "  " << condition_str(r.cond);
      if (!r.cond.S.empty()) std::cout << " S={" << joined_ints(r.cond.S) << "}";
      std::cout << "  " << (r.arithmetic ? "arithmetic" : "non-arithmetic") << "\n";
    }
    std::cout << recs.size() << " types\n";
  }
  return 0;
}

// Seeded quintuple generator for the Chern-equality sampler. Every tenth draw
// carries an exact cusp pair, two in ten push a pair above 1 so the contracted
// branch is exercised; the rest are plain normalized draws.
std::vector<Rat> random_quintuple(std::mt19937_64& rng, int trial) {
  auto unit = [&](Int lo, Int hi) {
    std::uniform_int_distribution<Int> pick(lo, hi);
    return pick(rng);
  };
  int mode = trial % 10;
  if (mode == 0) {
    // mu1 + mu2 = 1 exactly; the last three normalized to sum 1
    Int m = unit(7, 60), n = unit(1, m - 1);
    Rat mu1 = rat(n, m);
    Int x3 = unit(1, 50), x4 = unit(1, 50), x5 = unit(1, 50);
    Rat t = rat(x3 + x4 + x5);
    return {mu1, 1 - mu1, rat(x3) / t, rat(x4) / t, rat(x5) / t};
  }
  if (mode <= 2) {
    // two weights above 1/2: the pair {1,2} lands above 1
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
      if (2 * v >= sum) ok = false;  // each weight must stay below 1
    if (!ok) continue;
    std::vector<Rat> mu;
    for (Int v : x) mu.push_back(rat(2 * v, sum));
    return mu;
  }
}

int cmd_bmy(int trials, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  int pass = 0, with_contracted = 0, with_parabolic = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Rat> mu = random_quintuple(rng, t);
    EulerReport rep = bmy_check(mu);
    bool con = false, par = false;
    for (const auto& p : pair_profiles(mu)) {
      if (p.cls == PairClass::Contracted) con = true;
      if (p.cls == PairClass::Parabolic) par = true;
    }
    with_contracted += con;
    with_parabolic += par;
    if (rep.bmy_holds) {
      ++pass;
    } else {
      std::cerr << "equality fails for mu=" << mu_str(mu) << ": 3e="
                << rat_str(3 * rep.e_orb) << " c1^2=" << rat_str(rep.c1_sq) << "\n";
    }
  }
  std::cout << pass << "/" << trials << " pass (contracted in " << with_contracted
            << ", cusps in " << with_parabolic << ")\n";
  return pass == trials ? 0 : 1;
}

int cmd_classify(const std::string& file, const std::string& data_path,
                 const std::string& format) {
  std::vector<CoveringType> types;
  std::vector<std::string> labels;
  int parse_errors = 0;
  std::vector<std::pair<int, int>> edges;
  const std::vector<std::pair<int, int>>* edges_ptr = nullptr;

  if (file.empty()) {
    // builtin: the fifteen surface rows; partner columns double as a check
    std::vector<DatasetRow> rows = load_dataset(data_path);
    for (const auto& r : rows) {
      if (r.ct.n_points() != 5) continue;
      types.push_back(r.ct);
      labels.push_back(std::to_string(r.index));
      if (r.comm_to && *r.comm_to > r.index)
        edges.push_back({r.index - 1, *r.comm_to - 1});
    }
    edges_ptr = &edges;
  } else {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (blank) continue;
      try {
        types.push_back(parse_type(line));
        labels.push_back(std::to_string(types.size()));
      } catch (const TypeReject& ex) {
        std::cerr << file << ":" << lineno << ": " << ex.what() << "\n";
        ++parse_errors;
      }
    }
  }

  std::vector<std::vector<int>> classes = partition(types, edges_ptr);

  if (format == "json") {
    json j;
    j["classes"] = json::array();
    for (const auto& cls : classes) {
      CommInvariant inv = invariants(types[cls[0]]);
      json members = json::array();
      for (int i : cls) members.push_back(labels[i]);
      j["classes"].push_back({{"members", members},
                              {"canonical_d", inv.field.canonical_d},
                              {"degree", inv.field.degree},
                              {"spectrum", joined(inv.spectrum)},
                              {"relative_euler", joined(inv.relative_euler)},
                              {"cocompact", inv.cocompact}});
    }
    j["count"] = classes.size();
    j["parse_errors"] = parse_errors;
    std::cout << j.dump(2) << "\n";
  } else {
    for (size_t c = 0; c < classes.size(); ++c) {
      CommInvariant inv = invariants(types[classes[c][0]]);
      std::cout << "class " << c + 1 << ": {";
      for (size_t i = 0; i < classes[c].size(); ++i) {
        if (i) std::cout << ",";
        std::cout << labels[classes[c][i]];
      }
      std::cout << "}  Q(cos 2pi/" << inv.field.canonical_d << ") deg "
                << inv.field.degree << "  spectrum {" << joined(inv.spectrum) << "}";
      if (!inv.relative_euler.empty())
        std::cout << "  rel euler {" << joined(inv.relative_euler) << "}";
      std::cout << (inv.cocompact ? "  cocompact" : "  with cusps") << "\n";
    }
    std::cout << classes.size() << " classes";
    if (parse_errors) std::cout << " (" << parse_errors << " lines skipped)";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lyapunov spectra and commensurability invariants of "
               "cyclic-covering ball quotients"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  std::string type_text;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "full invariant computation for one type 'd;a1,a2,...'");
  analyze_cmd->add_option("type", type_text, "covering type, e.g. 12;3,3,5,6,7")
      ->required();

  std::string data_path = default_data_path();
  std::string perturb;
  auto* table_cmd =
      app.add_subcommand("table", "recompute the builtin table and diff every cell");
  table_cmd->add_option("--data", data_path, "override the builtin data file");
  table_cmd->add_option("--perturb", perturb)->group("");  // test hook, hidden

  Int max_d = 12;
  int n_points = 5;
  std::string filter = "nonarithmetic";
  auto* enum_cmd = app.add_subcommand("enumerate", "list types by degree and condition");
  enum_cmd->add_option("--max-d", max_d, "largest covering degree");
  enum_cmd->add_option("--n-points", n_points, "number of branch points");
  enum_cmd->add_option("--filter", filter, "int | sigmaint | nonarithmetic")
      ->check(CLI::IsMember({"int", "sigmaint", "nonarithmetic"}));

  int trials = 200;
  unsigned long long seed = 1;
  auto* bmy_cmd = app.add_subcommand(
      "bmy", "sample random weight quintuples and verify 3*e_orb = c1^2");
  bmy_cmd->add_option("--trials", trials, "number of samples")
      ->check(CLI::Range(1, 1000000));
  bmy_cmd->add_option("--seed", seed, "RNG seed");

  std::string class_file;
  auto* classify_cmd = app.add_subcommand(
      "classify", "group types into commensurability classes (builtin or file)");
  classify_cmd->add_option("--input", class_file, "file with one type per line");
  classify_cmd->add_option("--data", data_path, "override the builtin data file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return cmd_analyze(type_text, format);
    if (*table_cmd) return cmd_table(format, data_path, perturb);
    if (*enum_cmd) return cmd_enumerate(max_d, n_points, filter, format);
    if (*bmy_cmd) return cmd_bmy(trials, seed);
    if (*classify_cmd) return cmd_classify(class_file, data_path, format);
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
