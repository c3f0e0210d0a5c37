#include "kled/rational.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>

namespace kled {

namespace {

long long checked_ll(__int128 v, const char* what) {
  if (v > static_cast<__int128>(9223372036854775807LL) ||
      v < -static_cast<__int128>(9223372036854775807LL)) {
    throw InvalidParams(std::string("rational overflow in ") + what);
  }
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw InvalidParams("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    den = 1;
    return;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  num /= g;
  den /= g;
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
  __int128 d = static_cast<__int128>(den) * o.den;
  return {checked_ll(n, "add"), checked_ll(d, "add")};
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  __int128 n = static_cast<__int128>(num) * o.num;
  __int128 d = static_cast<__int128>(den) * o.den;
  return {checked_ll(n, "mul"), checked_ll(d, "mul")};
}

Rational Rational::operator/(const Rational& o) const { return *this * o.reciprocal(); }

Rational Rational::reciprocal() const {
  if (num == 0) throw DomainError("reciprocal of zero");
  return {den, num};
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

ParityClass classify(const Rational& r) {
  if (r.den % 2 == 0) return ParityClass::Other;
  long long n = r.num < 0 ? -r.num : r.num;
  return n % 2 == 0 ? ParityClass::Even : ParityClass::Odd;
}

const char* parity_name(ParityClass c) {
  switch (c) {
    case ParityClass::Even: return "R_e";
    case ParityClass::Odd: return "R_o";
    case ParityClass::Other: return "R_x";
  }
  return "?";
}

Exponent exponent_from(const Rational& r) {
  return Exponent{r, classify(r), r.to_double(), true};
}

Exponent exponent_from(long long n) { return exponent_from(Rational::integer(n)); }

Exponent Exponent::minus_int(long long k) const {
  if (!exact) return Exponent{rat, ParityClass::Other, value - static_cast<double>(k), false};
  return exponent_from(rat - Rational::integer(k));
}

Exponent Exponent::sub_from_int(long long k) const {
  if (!exact) return Exponent{rat, ParityClass::Other, static_cast<double>(k) - value, false};
  return exponent_from(Rational::integer(k) - rat);
}

Exponent Exponent::reciprocal() const {
  if (!exact) {
    if (value == 0.0) throw DomainError("reciprocal of zero exponent");
    return Exponent{rat, ParityClass::Other, 1.0 / value, false};
  }
  return exponent_from(rat.reciprocal());
}

Exponent Exponent::div(const Exponent& o) const {
  if (!exact || !o.exact) {
    if (o.value == 0.0) throw DomainError("exponent division by zero");
    return Exponent{rat, ParityClass::Other, value / o.value, false};
  }
  return exponent_from(rat / o.rat);
}

std::string Exponent::str() const {
  if (exact) return rat.str() + " (" + parity_name(cls) + ")";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return std::string(buf) + " (" + parity_name(cls) + ", inexact)";
}

namespace {

// Smallest-denominator rational in [lo, hi] via the continued-fraction walk.
std::optional<Rational> best_in(double lo, double hi, long long max_den, int depth) {
  if (depth > 64) return std::nullopt;
  double c = std::ceil(lo);
  if (c <= hi) {
    if (std::abs(c) > 9e17) return std::nullopt;
    return Rational::integer(static_cast<long long>(c));
  }
  double a = std::floor(lo);
  if (std::abs(a) > 9e17) return std::nullopt;
  auto tail = best_in(1.0 / (hi - a), 1.0 / (lo - a), max_den, depth + 1);
  if (!tail) return std::nullopt;
  // a + 1/tail
  Rational inv = tail->reciprocal();
  Rational out = Rational::integer(static_cast<long long>(a)) + inv;
  if (out.den > max_den) return std::nullopt;
  return out;
}

}  // namespace

std::optional<Rational> best_rational_in_interval(double lo, double hi, long long max_den) {
  if (lo > hi) std::swap(lo, hi);
  return best_in(lo, hi, max_den, 0);
}

ClassifiedFloat classify_float(double v, double tolerance, long long max_den) {
  if (tolerance <= 0) throw InvalidParams("classify_float requires tolerance > 0");
  auto r = best_rational_in_interval(v - tolerance, v + tolerance, max_den);
  if (r) return {*r, classify(*r), true};
  // Best-effort convergent for reporting; classified as R_x.
  auto coarse = best_rational_in_interval(v - 1.0 / (2.0 * max_den * max_den),
                                          v + 1.0 / (2.0 * max_den * max_den), max_den);
  Rational fallback = coarse ? *coarse : Rational::integer(static_cast<long long>(std::llround(v)));
  return {fallback, ParityClass::Other, false};
}

Exponent exponent_from_double(double v, double tolerance, long long max_den) {
  ClassifiedFloat cf = classify_float(v, tolerance, max_den);
  if (cf.within_tolerance) return exponent_from(cf.rat);
  return Exponent{cf.rat, ParityClass::Other, v, false};
}

Exponent parse_exponent(std::string_view text, double tolerance, long long max_den) {
  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    char* end = nullptr;
    long long p = std::strtoll(s.c_str(), &end, 10);
    if (end != s.c_str() + slash) throw InvalidParams("cannot parse rational: " + s);
    long long q = std::strtoll(s.c_str() + slash + 1, &end, 10);
    if (*end != '\0' || q == 0) throw InvalidParams("cannot parse rational: " + s);
    return exponent_from(Rational(p, q));
  }
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw InvalidParams("cannot parse number: " + s);
  return exponent_from_double(v, tolerance, max_den);
}

double signed_power(double x, const Rational& r, ParityClass cls) {
  double p = r.to_double();
  if (x == 0.0) {
    if (p > 0) return 0.0;
    if (p == 0) return 1.0;
    throw DomainError("zero base with negative exponent");
  }
  if (x > 0) return std::pow(x, p);
  switch (cls) {
    case ParityClass::Even: return std::pow(-x, p);
    case ParityClass::Odd: return -std::pow(-x, p);
    case ParityClass::Other:
      throw DomainError("negative base requires an R_e or R_o exponent");
  }
  return 0.0;  // unreachable
}

double signed_power(double x, const Exponent& e) {
  if (e.exact) return signed_power(x, e.rat, e.cls);
  if (x == 0.0) {
    if (e.value > 0) return 0.0;
    if (e.value == 0) return 1.0;
    throw DomainError("zero base with negative exponent");
  }
  if (x < 0) throw DomainError("negative base requires an exact R_e or R_o exponent");
  return std::pow(x, e.value);
}

}  // namespace kled
