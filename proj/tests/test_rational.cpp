#include <doctest.h>

#include <cmath>
#include <random>

#include "kled/rational.hpp"

using namespace kled;

TEST_CASE("reduction and representation") {
  Rational r(4, -6);
  CHECK(r.num == -2);
  CHECK(r.den == 3);
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(16, 9).str() == "16/9");
  CHECK(Rational(5, 1).str() == "5");
  CHECK_THROWS_AS(Rational(1, 0), InvalidParams);
}

TEST_CASE("parity classification") {
  CHECK(classify(Rational(2, 1)) == ParityClass::Even);
  CHECK(classify(Rational(16, 9)) == ParityClass::Even);
  CHECK(classify(Rational(3, 5)) == ParityClass::Odd);
  CHECK(classify(Rational(1, 2)) == ParityClass::Other);
  CHECK(classify(Rational(3, 2)) == ParityClass::Other);
  CHECK(classify(Rational(0, 1)) == ParityClass::Even);
  CHECK(classify(Rational(-8, 3)) == ParityClass::Even);
  CHECK(classify(Rational(-1, 1)) == ParityClass::Odd);
}

TEST_CASE("classification partitions the reduced rationals") {
  // every reduced p/q falls in exactly one class, decided by parities
  for (long long p = -12; p <= 12; ++p) {
    for (long long q = 1; q <= 11; ++q) {
      Rational r(p, q);
      ParityClass c = classify(r);
      bool den_odd = r.den % 2 == 1;
      bool num_even = (r.num % 2) == 0;
      if (!den_odd) CHECK(c == ParityClass::Other);
      else if (num_even) CHECK(c == ParityClass::Even);
      else CHECK(c == ParityClass::Odd);
    }
  }
}

TEST_CASE("classify_float recovers small-denominator rationals") {
  auto cf = classify_float(1.7777777778, 1e-9);
  CHECK(cf.within_tolerance);
  CHECK(cf.rat == Rational(16, 9));
  CHECK(cf.cls == ParityClass::Even);

  auto two = classify_float(2.0, 1e-9);
  CHECK(two.rat == Rational(2, 1));
  CHECK(two.cls == ParityClass::Even);

  auto irr = classify_float(1.4142135, 1e-12);
  CHECK_FALSE(irr.within_tolerance);
  CHECK(irr.cls == ParityClass::Other);

  auto half = classify_float(0.5, 1e-9);
  CHECK(half.rat == Rational(1, 2));
  CHECK(half.cls == ParityClass::Other);
}

TEST_CASE("classify_float returns the smallest admissible denominator") {
  // 0.334 is within 1e-2 of 1/3, and no denominator-1 or -2 rational is closer
  auto cf = classify_float(0.334, 1e-2);
  CHECK(cf.rat == Rational(1, 3));
}

TEST_CASE("exponent parsing") {
  Exponent e = parse_exponent("16/9");
  CHECK(e.exact);
  CHECK(e.rat == Rational(16, 9));
  CHECK(parse_exponent("1.5").rat == Rational(3, 2));
  CHECK(parse_exponent("-0.1").rat == Rational(-1, 10));
  CHECK_THROWS_AS(parse_exponent("x"), InvalidParams);
  CHECK_THROWS_AS(parse_exponent("1/0"), InvalidParams);
}

TEST_CASE("signed powers follow the sign rules") {
  CHECK(signed_power(-8.0, Rational(2, 3), ParityClass::Even) == doctest::Approx(4.0));
  CHECK(signed_power(-8.0, Rational(1, 3), ParityClass::Odd) == doctest::Approx(-2.0));
  CHECK_THROWS_AS(signed_power(-1.0, Rational(1, 2), ParityClass::Other), DomainError);
  CHECK_THROWS_AS(signed_power(0.0, Rational(-1, 2), ParityClass::Other), DomainError);
  CHECK(signed_power(0.0, Rational(1, 2), ParityClass::Other) == 0.0);
  CHECK(signed_power(3.0, Rational(0, 1), ParityClass::Even) == 1.0);
}

TEST_CASE("signed power properties on a grid") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xs(0.1, 8.0);
  for (int i = 0; i < 200; ++i) {
    double x = xs(rng);
    // even powers are nonnegative and sign-blind
    CHECK(signed_power(-x, Rational(2, 5), ParityClass::Even) ==
          doctest::Approx(signed_power(x, Rational(2, 5), ParityClass::Even)));
    // odd powers are odd functions
    CHECK(signed_power(-x, Rational(3, 5), ParityClass::Odd) ==
          doctest::Approx(-signed_power(x, Rational(3, 5), ParityClass::Odd)));
    // composition with the reciprocal exponent inverts (odd/odd case)
    double y = signed_power(-x, Rational(3, 5), ParityClass::Odd);
    CHECK(signed_power(y, Rational(5, 3), ParityClass::Odd) == doctest::Approx(-x));
    // even case recovers |x|
    double z = signed_power(-x, Rational(2, 3), ParityClass::Even);
    CHECK(signed_power(z, Rational(3, 2), ParityClass::Other) == doctest::Approx(x));
  }
}

TEST_CASE("derived exponents keep exact arithmetic") {
  Exponent b = parse_exponent("16/9");
  CHECK(b.minus_int(1).rat == Rational(7, 9));
  CHECK(b.minus_int(1).reciprocal().rat == Rational(9, 7));
  CHECK(b.div(b.minus_int(1)).rat == Rational(16, 7));
  CHECK(b.sub_from_int(2).rat == Rational(2, 9));
  CHECK(classify(b.minus_int(1).rat) == ParityClass::Odd);
}
