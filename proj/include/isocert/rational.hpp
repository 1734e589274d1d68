#pragma once

// Exact rationals on top of checked 64-bit arithmetic. The library never
// needs big integers, but it must fail loudly instead of wrapping around.

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "isocert/errors.hpp"

namespace isocert {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace detail

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  std::int64_t as_integer() const {
    if (!is_integer()) throw std::domain_error("rational " + to_string() + " is not an integer");
    return num_;
  }

  Rational operator-() const { return Rational(detail::checked_mul(num_, -1), den_, already_reduced{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t bs = b.den_ / g;
    return Rational(detail::checked_add(detail::checked_mul(a.num_, bs), detail::checked_mul(b.num_, a.den_ / g)),
                    detail::checked_mul(a.den_, bs));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    return Rational(detail::checked_mul(a.num_ / g1, b.num_ / g2),
                    detail::checked_mul(a.den_ / g2, b.den_ / g1), already_reduced{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // a/b <=> c/d reduces to ad <=> cb with positive denominators
    return detail::checked_mul(a.num_, b.den_) <=> detail::checked_mul(b.num_, a.den_);
  }

  std::string to_string() const {
    return is_integer() ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  // accepts the to_string forms: an integer or num/den
  static Rational parse(const std::string& text) {
    const std::size_t slash = text.find('/');
    auto read = [&text](std::size_t from, std::size_t to) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + from, text.data() + to, v);
      if (ec != std::errc{} || ptr != text.data() + to) throw ParseError("bad rational '" + text + "'");
      return v;
    };
    if (slash == std::string::npos) return Rational(read(0, text.size()));
    return Rational(read(0, slash), read(slash + 1, text.size()));
  }

 private:
  struct already_reduced {};
  Rational(std::int64_t num, std::int64_t den, already_reduced) : num_(num), den_(den) {}

  void normalize() {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (num_ == INT64_MIN || den_ == INT64_MIN) throw OverflowError("rational component out of range");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace isocert
