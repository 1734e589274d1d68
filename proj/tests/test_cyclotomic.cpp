#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "isocert/cyclotomic.hpp"
#include "isocert/errors.hpp"
#include "isocert/rational.hpp"

using namespace isocert;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(1, -2).numerator() == -1);
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
  CHECK(Rational(6, 3).as_integer() == 2);
  CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(3, 4) == Rational(2, 3));
  CHECK(-Rational(3, 7) == Rational(-3, 7));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  Rational acc(1, 6);
  acc += Rational(1, 3);
  acc *= Rational(4);
  CHECK(acc == Rational(2));
}

TEST_CASE("rational overflow is an error, not a wraparound") {
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), OverflowError);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), OverflowError);
  CHECK_THROWS_AS(Rational(1, INT64_MIN), OverflowError);
  CHECK_THROWS_AS(Rational(INT64_MIN, 3), OverflowError);
  // comparison cross-multiplies, so it is also checked
  CHECK_THROWS_AS(Rational(INT64_MAX, 2) < Rational(INT64_MAX, 3), OverflowError);
}

TEST_CASE("rational strings round-trip") {
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational(-1, 2).to_string() == "-1/2");
  CHECK(Rational(10, 4).to_string() == "5/2");
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("3/-4") == Rational(-3, 4));
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("cyclotomic polynomials match the classical values") {
  using P = std::vector<std::int64_t>;
  CHECK(cyclotomic_polynomial(1) == P{-1, 1});
  CHECK(cyclotomic_polynomial(2) == P{1, 1});
  CHECK(cyclotomic_polynomial(3) == P{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == P{1, 0, 1});
  CHECK(cyclotomic_polynomial(5) == P{1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == P{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == P{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(9) == P{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == P{1, 0, -1, 0, 1});
  // the first conductor whose polynomial has a coefficient outside {-1,0,1}
  CHECK(cyclotomic_polynomial(105)[7] == -2);
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("roots of unity satisfy their defining identities") {
  CHECK(CyclotomicNumber::root_of_unity(1, 0) == CyclotomicNumber(Rational(1)));
  CHECK(CyclotomicNumber::root_of_unity(2, 1).rational_value() == Rational(-1));

  const CyclotomicNumber i = CyclotomicNumber::root_of_unity(4, 1);
  CHECK(i * i == CyclotomicNumber(Rational(-1)));
  CHECK_FALSE(i.is_rational());
  CHECK_THROWS_AS(i.rational_value(), std::domain_error);

  const CyclotomicNumber w = CyclotomicNumber::root_of_unity(3, 1);
  CHECK(w * w * w == CyclotomicNumber(Rational(1)));
  CHECK((w * w + w + CyclotomicNumber(Rational(1))).is_zero());

  for (std::uint64_t e = 2; e <= 12; ++e) {
    CyclotomicNumber sum;
    for (std::uint64_t k = 0; k < e; ++k) sum += CyclotomicNumber::root_of_unity(e, k);
    CHECK(sum.is_zero());
  }

  // exponent wraps around the conductor
  CHECK(CyclotomicNumber::root_of_unity(4, 5) == CyclotomicNumber::root_of_unity(4, 1));
  CHECK(CyclotomicNumber::from_polynomial(4, {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}) ==
        CyclotomicNumber(Rational(1)));
  CHECK_THROWS_AS(CyclotomicNumber::root_of_unity(0, 0), std::invalid_argument);
}

TEST_CASE("values agree across conductor contexts") {
  const CyclotomicNumber w3 = CyclotomicNumber::root_of_unity(3, 1);
  CHECK(w3.lifted(6).conductor() == 6);
  CHECK(w3.lifted(6) == w3);
  CHECK(w3.lifted(12) == w3.lifted(6).lifted(12));
  CHECK_THROWS_AS(w3.lifted(5), std::invalid_argument);

  CHECK(CyclotomicNumber::root_of_unity(6, 2) == w3);
  CHECK(CyclotomicNumber::root_of_unity(6, 1) == -(w3 * w3));
  CHECK(w3 * CyclotomicNumber::root_of_unity(4, 1) == CyclotomicNumber::root_of_unity(12, 7));
  CHECK((CyclotomicNumber::root_of_unity(2, 1) + CyclotomicNumber(Rational(1))).is_zero());
  CHECK(CyclotomicNumber(Rational(3)) == CyclotomicNumber::from_polynomial(12, {Rational(3)}));
}

TEST_CASE("galois maps permute the roots and fix the rationals") {
  const CyclotomicNumber z5 = CyclotomicNumber::root_of_unity(5, 1);
  CHECK(z5.galois(2) == CyclotomicNumber::root_of_unity(5, 2));
  CHECK(z5.galois(2).galois(3) == CyclotomicNumber::root_of_unity(5, 6 % 5));
  CHECK_THROWS_AS(CyclotomicNumber::root_of_unity(4, 1).galois(2), std::invalid_argument);

  const CyclotomicNumber z8 = CyclotomicNumber::root_of_unity(8, 1);
  CHECK(z8 * z8.conjugate() == CyclotomicNumber(Rational(1)));
  CHECK((CyclotomicNumber::root_of_unity(3, 1) + CyclotomicNumber::root_of_unity(3, 1).conjugate())
            .rational_value() == Rational(-1));
  const CyclotomicNumber half(Rational(1, 2));
  CHECK(half.conjugate() == half);
}

TEST_CASE("integrality means integer coordinates") {
  CHECK(CyclotomicNumber::root_of_unity(8, 3).is_integral());
  CHECK(CyclotomicNumber::from_polynomial(3, {Rational(1), Rational(2)}).is_integral());
  CHECK_FALSE(CyclotomicNumber(Rational(1, 2)).is_integral());
  CHECK_FALSE(CyclotomicNumber::from_polynomial(4, {Rational(1, 2), Rational(1)}).is_integral());
}

TEST_CASE("cyclotomic strings are context-dependent but value-faithful") {
  CHECK(CyclotomicNumber(Rational(-1)).to_string() == "-1");
  CHECK(CyclotomicNumber::root_of_unity(2, 1).to_string() == "-1");
  CHECK(CyclotomicNumber::root_of_unity(4, 1).to_string() == "cyc(4)[0,1]");
  CHECK((CyclotomicNumber::root_of_unity(4, 1) + CyclotomicNumber(Rational(1))).to_string() == "cyc(4)[1,1]");
  CHECK(CyclotomicNumber::from_polynomial(4, {Rational(1, 2), Rational(1)}).to_string() == "cyc(4)[1/2,1]");

  // the same value renders differently in different contexts
  const CyclotomicNumber w3 = CyclotomicNumber::root_of_unity(3, 1);
  CHECK(w3.to_string() == "cyc(3)[0,1]");
  CHECK(w3.lifted(6).to_string() == "cyc(6)[-1,1]");
  CHECK((w3 * w3).lifted(6).to_string() == "cyc(6)[0,-1]");

  for (const CyclotomicNumber& x : {CyclotomicNumber::root_of_unity(4, 1),
                                    CyclotomicNumber::root_of_unity(8, 5),
                                    CyclotomicNumber::from_polynomial(12, {Rational(1, 3), Rational(-2), Rational(5)}),
                                    CyclotomicNumber(Rational(-7, 3)), CyclotomicNumber(Rational(0))}) {
    const CyclotomicNumber back = CyclotomicNumber::parse(x.to_string());
    CHECK(back == x);
  }
}

TEST_CASE("cyclotomic parsing rejects malformed text") {
  CHECK(CyclotomicNumber::parse("2/3") == CyclotomicNumber(Rational(2, 3)));
  CHECK(CyclotomicNumber::parse("-5") == CyclotomicNumber(Rational(-5)));
  CHECK(CyclotomicNumber::parse("cyc(6)[-1,1]") == CyclotomicNumber::root_of_unity(3, 1));
  CHECK_THROWS_AS(CyclotomicNumber::parse("cyc(6)[1]"), ParseError);
  CHECK_THROWS_AS(CyclotomicNumber::parse("cyc(6)[1,2,3]"), ParseError);
  CHECK_THROWS_AS(CyclotomicNumber::parse("cyc(0)[1]"), ParseError);
  CHECK_THROWS_AS(CyclotomicNumber::parse("cyc(x)[1]"), ParseError);
  CHECK_THROWS_AS(CyclotomicNumber::parse("cyc(4)(0,1)"), ParseError);
  CHECK_THROWS_AS(CyclotomicNumber::parse("cyc(4)[0,1"), ParseError);
  CHECK_THROWS_AS(CyclotomicNumber::parse("cyc(-2)[1]"), ParseError);
}
