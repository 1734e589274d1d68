#pragma once

// Exact cyclotomic arithmetic in the power basis {1, z, ..., z^(phi(e)-1)} of
// the e-th cyclotomic field, with coordinates reduced modulo the e-th
// cyclotomic polynomial. The conductor e is a context, so equal values render
// identically only within one context; rational values always render as plain
// rationals, independent of context.

#include <cstdint>
#include <string>
#include <vector>

#include "isocert/rational.hpp"

namespace isocert {

// coefficients of the e-th cyclotomic polynomial, constant term first
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t e);

class CyclotomicNumber {
 public:
  CyclotomicNumber() : CyclotomicNumber(Rational(0)) {}
  explicit CyclotomicNumber(Rational value);

  // z_e^k
  static CyclotomicNumber root_of_unity(std::uint64_t e, std::uint64_t k);

  // sum of coeffs[j] * z_e^j, any polynomial length
  static CyclotomicNumber from_polynomial(std::uint64_t e, std::vector<Rational> coeffs);

  std::uint64_t conductor() const { return e_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;  // all non-constant coordinates vanish
  Rational rational_value() const;
  bool is_integral() const;  // all coordinates are integers

  // image under z -> z^a, gcd(a, e) = 1
  CyclotomicNumber galois(std::uint64_t a) const;
  CyclotomicNumber conjugate() const { return galois(e_ == 1 ? 1 : e_ - 1); }

  // rewrites the value in the conductor-E context, e | E
  CyclotomicNumber lifted(std::uint64_t E) const;

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

  // equality of values, regardless of context
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  // `cyc(e)[c0,c1,...]`, or the plain rational form when the value is one
  std::string to_string() const;
  static CyclotomicNumber parse(const std::string& text);

 private:
  CyclotomicNumber(std::uint64_t e, std::vector<Rational> coeffs) : e_(e), coeffs_(std::move(coeffs)) {}

  std::uint64_t e_ = 1;
  std::vector<Rational> coeffs_;  // length phi(e)
};

}  // namespace isocert
