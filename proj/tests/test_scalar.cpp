#include <doctest.h>

#include "flagah/scalar.hpp"

using namespace flagah;

namespace {

Scalar sq(long num, long den, long m) { return Scalar::radical(Rational(num, den), m); }

}  // namespace

TEST_CASE("like terms merge") {
  const Scalar a = sq(1, 2, 3);
  CHECK(a + a == sq(1, 1, 3));
  CHECK((a + a).str() == "sqrt(3)");
}

TEST_CASE("additive inverse cancels structurally") {
  const Scalar a = sq(1, 1, 2);
  CHECK((a + (-a)).is_zero());
  CHECK((a - a).terms().empty());
}

TEST_CASE("distinct radicands are kept") {
  const Scalar v = Scalar(1) + sq(1, 1, 2);
  REQUIRE(v.terms().size() == 2);
  CHECK(v.terms()[0].first == 1);
  CHECK(v.terms()[1].first == 2);
  CHECK(v.str() == "1+sqrt(2)");
}

TEST_CASE("radicand collapse and recombination") {
  CHECK(sq(1, 1, 2) * sq(1, 1, 2) == Scalar(2));
  CHECK(sq(1, 1, 2) * sq(1, 1, 3) == sq(1, 1, 6));
  // sqrt(6)*sqrt(10) = sqrt(60) = 2 sqrt(15)
  CHECK(sq(1, 1, 6) * sq(1, 1, 10) == sq(2, 1, 15));
}

TEST_CASE("sqrt_rational") {
  CHECK(Scalar::sqrt_rational(Rational(4)) == Scalar(2));
  CHECK(Scalar::sqrt_rational(Rational(1, 2)) == sq(1, 2, 2));
  CHECK(Scalar::sqrt_rational(Rational(8, 3)) == sq(2, 3, 6));
  CHECK_THROWS_AS(Scalar::sqrt_rational(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(Scalar::sqrt_rational(Rational(-3, 7)), std::domain_error);
}

TEST_CASE("sqrt squares back to its argument, randomized") {
  DetRng rng(20240901);
  for (int k = 0; k < 1000; ++k) {
    const Rational q = rng.positive_rational(50);
    const Scalar r = Scalar::sqrt_rational(q);
    CHECK(r * r == Scalar(q));
  }
}

TEST_CASE("field axioms on random values") {
  DetRng rng(7);
  auto random_scalar = [&rng]() {
    Scalar s;
    const int terms = static_cast<int>(rng.uniform(1, 3));
    const long radicands[] = {1, 2, 3, 5, 6, 10};
    for (int t = 0; t < terms; ++t) {
      const long m = radicands[rng.uniform(0, 5)];
      const long num = rng.uniform(-9, 9);
      const long den = rng.uniform(1, 9);
      s += Scalar::radical(Rational(num, den), m);
    }
    return s;
  };
  for (int k = 0; k < 300; ++k) {
    const Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Scalar() == a);
    CHECK(a * Scalar(1) == a);
  }
}

TEST_CASE("single-term reciprocal") {
  const Scalar a = sq(3, 4, 5);  // (3/4) sqrt(5)
  CHECK(a * a.reciprocal() == Scalar(1));
  const Scalar multi = Scalar(1) + sq(1, 1, 2);
  CHECK_THROWS_AS(multi.reciprocal(), std::domain_error);
  CHECK_THROWS_AS(Scalar().reciprocal(), std::domain_error);
}

TEST_CASE("zero is structural") {
  Scalar s = sq(2, 3, 7);
  s -= sq(2, 3, 7);
  CHECK(s.is_zero());
  CHECK(s == Scalar());
  CHECK(s.str() == "0");
}

TEST_CASE("rendering") {
  CHECK(sq(-1, 2, 3).str() == "-1/2*sqrt(3)");
  CHECK((Scalar(Rational(3, 2)) + sq(-1, 3, 6)).str() == "3/2-1/3*sqrt(6)");
  CHECK(Scalar(Rational(-5)).str() == "-5");
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/2") == Rational(-2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("complex arithmetic and conjugation") {
  const CScalar z(Scalar(1), sq(1, 1, 2));  // 1 + i sqrt(2)
  CHECK(z * z.conj() == CScalar(Scalar(3)));
  CHECK((z * z.reciprocal()) == CScalar(1));
  CHECK(CScalar::i() * CScalar::i() == CScalar(-1));
  const CScalar w = CScalar(Scalar(2)) - CScalar::i();
  CHECK((z * w).conj() == z.conj() * w.conj());
}

TEST_CASE("approx is display-only but sane") {
  const Scalar a = sq(1, 1, 2);
  CHECK(a.approx() == doctest::Approx(1.41421356).epsilon(1e-6));
}
