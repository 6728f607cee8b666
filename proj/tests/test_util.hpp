#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfo::testing {

inline std::string data_path(const std::string& name) { return std::string(CFO_TEST_DATA_DIR) + "/" + name; }

/// Tab-separated rows, skipping blank lines, '#' comments and (optionally)
/// the first line.
inline std::vector<std::vector<std::string>> read_tsv(const std::string& name, bool skip_header = false) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing test data " + name);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first && skip_header) {
      first = false;
      continue;
    }
    first = false;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, '\t')) cols.push_back(c);
    rows.push_back(std::move(cols));
  }
  return rows;
}

inline std::vector<double> split_doubles(const std::string& s, char sep = ';') {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string c;
  while (std::getline(ss, c, sep)) out.push_back(std::stod(c));
  return out;
}

}  // namespace cfo::testing
