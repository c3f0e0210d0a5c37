#pragma once

#include <string>
#include <vector>

namespace kled {

// Region selector for the dual positive/negative domains that appear when
// the exponent is in R_e. Positive means the data (mean-side) domain lies in
// the nonnegative half line.
enum class Branch { Positive, Negative };

enum class IntervalKind {
  All,             // R
  NonNeg,          // R+   = [0, inf)
  Pos,             // R++  = (0, inf)
  NonPos,          // R-   = (-inf, 0]
  Neg,             // R--  = (-inf, 0)
  BelowThreshold,  // (-inf, c), open
  Empty,
};

// One of the canonical effective domains. Interior/closure/boundary are
// derivable; equality is structural.
struct DomainInterval {
  IntervalKind kind = IntervalKind::All;
  double threshold = 0.0;  // BelowThreshold only

  static DomainInterval all() { return {IntervalKind::All}; }
  static DomainInterval non_neg() { return {IntervalKind::NonNeg}; }
  static DomainInterval pos() { return {IntervalKind::Pos}; }
  static DomainInterval non_pos() { return {IntervalKind::NonPos}; }
  static DomainInterval neg() { return {IntervalKind::Neg}; }
  static DomainInterval below(double c) { return {IntervalKind::BelowThreshold, c}; }
  static DomainInterval empty() { return {IntervalKind::Empty}; }

  bool contains(double x) const;
  bool interior_contains(double x) const;
  DomainInterval interior() const;
  bool is_open() const;
  std::vector<double> finite_boundary_points() const;

  double lower() const;  // -inf or 0
  double upper() const;  // +inf, 0, or threshold

  std::string str() const;

  bool operator==(const DomainInterval& o) const {
    if (kind != o.kind) return false;
    if (kind == IntervalKind::BelowThreshold) return threshold == o.threshold;
    return true;
  }
};

}  // namespace kled
