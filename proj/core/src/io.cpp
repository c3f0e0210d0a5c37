#include "kled/io.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace kled {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<Observation> read_observations_rows(std::istream& in) {
  std::vector<Observation> out;
  std::string line;
  long row = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++row;
    std::string cell = trim(line);
    if (cell.empty()) continue;
    if (first_content && (cell == "b" || cell == "\"b\"")) {
      first_content = false;
      continue;
    }
    first_content = false;
    char* end = nullptr;
    double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0') {
      throw std::runtime_error("row " + std::to_string(row) + ": cannot parse '" + cell + "'");
    }
    out.push_back({row, v});
  }
  return out;
}

std::vector<double> read_observations_csv(std::istream& in) {
  std::vector<double> out;
  for (const auto& obs : read_observations_rows(in)) out.push_back(obs.value);
  return out;
}

std::vector<double> read_observations_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_observations_csv(in);
}

}  // namespace kled
