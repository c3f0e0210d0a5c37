#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kled/errors.hpp"

namespace kled {

/**
 * Exact rational p/q, always reduced, q > 0.
 *
 * Exponents are kept exact end-to-end because the parity class of a
 * rational exponent (even/odd numerator over odd denominator vs. even
 * denominator) changes domain decisions discontinuously; floating-point
 * equality is never used for those branches.
 */
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);
  static Rational integer(long long n) { return {n, 1}; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }
  bool negative() const { return num < 0; }

  Rational operator-() const { return {-num, den}; }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational reciprocal() const;

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this == o || *this < o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  std::string str() const;  // "p/q", or "p" when q == 1
};

// Three-way partition of the reals: R_e = {2k/(2l+1)}, R_o = {(2k+1)/(2l+1)},
// R_x = everything else (even denominator in lowest terms, or not rational).
enum class ParityClass { Even, Odd, Other };

ParityClass classify(const Rational& r);
const char* parity_name(ParityClass c);

/**
 * Exponent value with its parity class.
 *
 * `exact` is true when the value is an exact rational (constructed from one,
 * or recovered from a decimal within tolerance). Inexact exponents are
 * always class Other and only admit positive bases.
 */
struct Exponent {
  Rational rat{0, 1};
  ParityClass cls = ParityClass::Even;
  double value = 0.0;
  bool exact = true;

  bool is(long long n) const { return exact && rat == Rational::integer(n); }
  bool is_even() const { return cls == ParityClass::Even; }

  // Derived exponents preserve exactness; on inexact inputs they fall back
  // to double arithmetic with class Other.
  Exponent minus_int(long long k) const;     // this - k
  Exponent sub_from_int(long long k) const;  // k - this
  Exponent reciprocal() const;
  Exponent div(const Exponent& o) const;

  std::string str() const;
};

Exponent exponent_from(const Rational& r);
Exponent exponent_from(long long n);

struct ClassifiedFloat {
  Rational rat;      // best rational found (approximation when !within_tolerance)
  ParityClass cls;   // Other when no rational within tolerance
  bool within_tolerance;
};

// Smallest-denominator rational within `tolerance` of v (Stern-Brocot /
// continued-fraction search, denominator capped). Beyond the cap the value is
// treated as R_x.
ClassifiedFloat classify_float(double v, double tolerance = 1e-9, long long max_den = 999);

Exponent exponent_from_double(double v, double tolerance = 1e-9, long long max_den = 999);

// Accepts "p/q" or a decimal literal (routed through classify_float).
Exponent parse_exponent(std::string_view text, double tolerance = 1e-9, long long max_den = 999);

// Smallest-denominator rational in [lo, hi]; nullopt when it would need a
// denominator above max_den.
std::optional<Rational> best_rational_in_interval(double lo, double hi, long long max_den);

/**
 * Sign-correct real power with a rational exponent.
 *
 * Even: |x|^r, Odd: sign(x)|x|^r, Other: ordinary positive-base power.
 * Throws DomainError on a negative base with class Other and on 0^r, r < 0.
 */
double signed_power(double x, const Rational& r, ParityClass cls);
double signed_power(double x, const Exponent& e);

}  // namespace kled
