#include "kled/domain.hpp"

#include <limits>

#include "kled/extended_real.hpp"

namespace kled {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool DomainInterval::contains(double x) const {
  switch (kind) {
    case IntervalKind::All: return true;
    case IntervalKind::NonNeg: return x >= 0;
    case IntervalKind::Pos: return x > 0;
    case IntervalKind::NonPos: return x <= 0;
    case IntervalKind::Neg: return x < 0;
    case IntervalKind::BelowThreshold: return x < threshold;
    case IntervalKind::Empty: return false;
  }
  return false;
}

bool DomainInterval::interior_contains(double x) const { return interior().contains(x); }

DomainInterval DomainInterval::interior() const {
  switch (kind) {
    case IntervalKind::NonNeg: return pos();
    case IntervalKind::NonPos: return neg();
    default: return *this;
  }
}

bool DomainInterval::is_open() const {
  return kind != IntervalKind::NonNeg && kind != IntervalKind::NonPos;
}

std::vector<double> DomainInterval::finite_boundary_points() const {
  switch (kind) {
    case IntervalKind::All:
    case IntervalKind::Empty: return {};
    case IntervalKind::BelowThreshold: return {threshold};
    default: return {0.0};
  }
}

double DomainInterval::lower() const {
  switch (kind) {
    case IntervalKind::NonNeg:
    case IntervalKind::Pos: return 0.0;
    case IntervalKind::Empty: return kInf;
    default: return -kInf;
  }
}

double DomainInterval::upper() const {
  switch (kind) {
    case IntervalKind::NonPos:
    case IntervalKind::Neg: return 0.0;
    case IntervalKind::BelowThreshold: return threshold;
    case IntervalKind::Empty: return -kInf;
    default: return kInf;
  }
}

std::string DomainInterval::str() const {
  switch (kind) {
    case IntervalKind::All: return "R";
    case IntervalKind::NonNeg: return "R+";
    case IntervalKind::Pos: return "R++";
    case IntervalKind::NonPos: return "R-";
    case IntervalKind::Neg: return "R--";
    case IntervalKind::BelowThreshold: return "(-inf, " + format_real(threshold) + ")";
    case IntervalKind::Empty: return "(empty)";
  }
  return "?";
}

}  // namespace kled
