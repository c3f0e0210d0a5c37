#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace kled {

// Fixed 17-significant-digit decimal formatting; infinities serialize as
// "+inf"/"-inf" so boundary solutions survive a text round trip.
inline std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Real line extended with +/-infinity; the codomain of boundary maximum
// likelihood solutions.
class ExtendedReal {
 public:
  ExtendedReal() = default;
  ExtendedReal(double v) : v_(v) {}  // NOLINT: implicit by design

  static ExtendedReal pos_inf() { return {std::numeric_limits<double>::infinity()}; }
  static ExtendedReal neg_inf() { return {-std::numeric_limits<double>::infinity()}; }

  bool finite() const { return std::isfinite(v_); }
  bool is_pos_inf() const { return std::isinf(v_) && v_ > 0; }
  bool is_neg_inf() const { return std::isinf(v_) && v_ < 0; }
  double value() const { return v_; }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ == b.v_; }
  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) { return a.v_ <= b.v_; }

  std::string str() const { return format_real(v_); }

 private:
  double v_ = 0.0;
};

}  // namespace kled
