#include "ballquot/dataset.hpp"

#include <fstream>
#include <sstream>

#include "ballquot/errors.hpp"

namespace ballquot {

#ifndef BALLQUOT_DATA_FILE
#define BALLQUOT_DATA_FILE "data/nonarithmetic_types.txt"
#endif

std::string default_data_path() { return BALLQUOT_DATA_FILE; }

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Rat> rat_list(const std::string& s) {
  std::vector<Rat> out;
  if (s == "-") return out;
  for (const auto& t : split(s, ',')) out.push_back(parse_rat(t));
  return out;
}

}  // namespace

std::vector<DatasetRow> load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open data file " + path);
  std::vector<DatasetRow> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string tok;
    std::vector<std::string> f;
    while (ss >> tok) f.push_back(tok);
    if (f.empty()) continue;
    if (f.size() != 12)
      throw DatasetError(path + ":" + std::to_string(lineno) + ": expected 12 columns, got " +
                         std::to_string(f.size()));
    try {
      DatasetRow r;
      r.index = std::stoi(f[0]);
      Int d = std::stoll(f[1]);
      std::vector<Int> a;
      for (const auto& t : split(f[2], ',')) a.push_back(std::stoll(t));
      r.ct = make_type(d, std::move(a));
      r.condition = f[3];
      if (r.condition != "INT" && r.condition != "SigmaINT")
        throw DatasetError("unknown condition " + r.condition);
      r.model = f[4];
      if (f[5] != "-")
        for (const auto& t : split(f[5], ',')) {
          if (t.size() != 3 || t[0] != 'L' || !isdigit(t[1]) || !isdigit(t[2]))
            throw DatasetError("bad cusp pair " + t);
          r.parabolic.push_back({t[1] - '0', t[2] - '0'});
        }
      r.genus = std::stoll(f[6]);
      r.dim_p = std::stoll(f[7]);
      r.dim_u = std::stoll(f[8]);
      r.spectrum = rat_list(f[9]);
      r.relative_euler = rat_list(f[10]);
      if (f[11] != "-") r.comm_to = std::stoi(f[11]);
      rows.push_back(std::move(r));
    } catch (const DatasetError&) {
      throw;
    } catch (const std::exception& ex) {
      throw DatasetError(path + ":" + std::to_string(lineno) + ": " + ex.what());
    }
  }
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].index != static_cast<int>(i) + 1)
      throw DatasetError(path + ": row indices must be consecutive from 1");
  for (const auto& r : rows)
    if (r.comm_to && (*r.comm_to < 1 || *r.comm_to > static_cast<int>(rows.size())))
      throw DatasetError(path + ": commTo out of range in row " + std::to_string(r.index));
  return rows;
}

const std::vector<DatasetRow>& builtin_dataset() {
  static const std::vector<DatasetRow> rows = load_dataset(default_data_path());
  return rows;
}

}  // namespace ballquot
