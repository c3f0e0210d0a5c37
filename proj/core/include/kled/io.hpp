#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kled/extended_real.hpp"

namespace kled {

struct Observation {
  long row = 0;  // 1-based line number in the source file
  double value = 0.0;
};

// Reads a single numeric column; an optional header row "b" is skipped.
// Parse errors report the 1-based row number.
std::vector<Observation> read_observations_rows(std::istream& in);
std::vector<double> read_observations_csv(std::istream& in);
std::vector<double> read_observations_csv(const std::string& path);

}  // namespace kled
