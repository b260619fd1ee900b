#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "dg2/scalar.hpp"

using dg2::Rational;
using dg2::Scalar;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(dg2::parse_rational("3/20") == Rational(3, 20));
  CHECK(dg2::parse_rational("-6/4") == Rational(-3, 2));
  CHECK(dg2::parse_rational("7") == Rational(7));
  CHECK(dg2::parse_rational("-0.125") == Rational(-1, 8));
  CHECK_THROWS_AS(dg2::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(dg2::parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(dg2::parse_rational(""), std::invalid_argument);
}

TEST_CASE("format_rational always shows a denominator") {
  CHECK(dg2::format_rational(Rational(3, 20)) == "3/20");
  CHECK(dg2::format_rational(Rational(1)) == "1/1");
  CHECK(dg2::format_rational(Rational(-2, 4)) == "-1/2");
}

TEST_CASE("sqrt lands in the square-free extension") {
  Scalar s = Scalar::sqrt(Rational(1, 5));
  CHECK(s.radicand() == 5);
  CHECK(s.rational_part() == 0);
  CHECK(s.irrational_part() == Rational(1, 5));
  CHECK(s * s == Scalar(Rational(1, 5)));

  CHECK(Scalar::sqrt(Rational(9, 4)) == Scalar(Rational(3, 2)));
  CHECK(Scalar::sqrt(Rational(12)).radicand() == 3);
  CHECK(Scalar::sqrt(Rational(0)).is_zero());
  CHECK_THROWS(Scalar::sqrt(Rational(-1)));
}

TEST_CASE("cube of 1/sqrt(5) is sqrt(5)/25") {
  Scalar t = Scalar::sqrt(Rational(5)).inverse();
  CHECK(t * t * t == Scalar(0, Rational(1, 25), 5));
}

TEST_CASE("mixing extensions throws") {
  Scalar a = Scalar::sqrt(Rational(2));
  Scalar b = Scalar::sqrt(Rational(3));
  CHECK_THROWS_AS(a + b, dg2::ExtensionMismatch);
  CHECK_THROWS_AS(a * b, dg2::ExtensionMismatch);
  CHECK_NOTHROW(a + Scalar(1));
}

TEST_CASE("rational results collapse to canonical form") {
  Scalar a = Scalar::sqrt(Rational(3));
  Scalar z = a - a;
  CHECK(z.is_rational());
  CHECK(z == Scalar(0));
  CHECK((a * a).is_rational());
  CHECK((a * a).as_rational() == 3);
  CHECK_THROWS(a.as_rational());
}

TEST_CASE("sign, norm and conjugate") {
  Scalar x(Rational(1), Rational(-1), 2);  // 1 - sqrt2 < 0
  CHECK(x.sign() == -1);
  CHECK(x.norm() == Rational(-1));
  CHECK(x * x.conjugate() == Scalar(x.norm()));
  Scalar y(Rational(3), Rational(-2), 2);  // 3 - 2 sqrt2 > 0
  CHECK(y.sign() == 1);
  CHECK(Scalar(0).sign() == 0);
}

TEST_CASE("to_string renders the sqrt term") {
  CHECK(Scalar(Rational(3, 4)).to_string() == "3/4");
  CHECK(Scalar::sqrt(Rational(3)).to_string() == "sqrt(3)");
}

TEST_CASE("field axioms against floating point on random elements of Q(sqrt 5)") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  auto draw = [&] { return Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 5); };
  for (int i = 0; i < 200; ++i) {
    Scalar a = draw();
    Scalar b = draw();
    Scalar c = draw();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + -a).is_zero());
    double fa = a.to_double();
    double fb = b.to_double();
    CHECK(std::abs((a * b).to_double() - fa * fb) <= 1e-12 * (1 + std::abs(fa * fb)));
    if (!b.is_zero()) {
      CHECK(b * b.inverse() == Scalar(1));
      CHECK((a / b).sign() == (fa / fb > 0 ? 1 : (fa / fb < 0 ? -1 : 0)));
    }
  }
}
