#include "isocert/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "isocert/errors.hpp"
#include "isocert/numtheory.hpp"

namespace isocert {

namespace {

// exact division of integer polynomials, used only where the quotient is
// known to be integral (x^n - 1 divided by a product of cyclotomics)
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  std::vector<std::int64_t> quotient(num.size() - den.size() + 1, 0);
  for (std::size_t k = quotient.size(); k-- > 0;) {
    const std::int64_t lead = num[k + den.size() - 1];
    if (lead % den.back() != 0) throw std::logic_error("non-exact polynomial division");
    const std::int64_t q = lead / den.back();
    quotient[k] = q;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[k + j] = detail::checked_add(num[k + j], detail::checked_mul(-q, den[j]));
  }
  for (std::int64_t c : num)
    if (c != 0) throw std::logic_error("non-exact polynomial division");
  return quotient;
}

std::mutex cyclotomic_mutex;

// reduces a rational polynomial modulo the monic e-th cyclotomic polynomial
// and truncates to the phi(e) basis coordinates
std::vector<Rational> reduce_mod(std::vector<Rational> poly, std::uint64_t e) {
  const std::vector<std::int64_t>& phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    const Rational lead = poly[k];
    if (lead.is_zero()) continue;
    poly[k] = Rational(0);
    for (std::size_t j = 0; j < deg; ++j) poly[k - deg + j] -= lead * Rational(phi[j]);
  }
  poly.resize(deg, Rational(0));
  return poly;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t e) {
  if (e == 0) throw std::invalid_argument("conductor must be positive");
  std::lock_guard<std::mutex> lock(cyclotomic_mutex);
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  // peel x^d - 1 = product of cyclotomics over divisors, smallest divisor
  // first, so every factor needed is already cached
  for (std::uint64_t d : sorted_divisors(e)) {
    if (cache.count(d)) continue;
    std::vector<std::int64_t> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (std::uint64_t inner : sorted_divisors(d)) {
      if (inner == d) break;
      poly = divide_exact(std::move(poly), cache.at(inner));
    }
    cache.emplace(d, std::move(poly));
  }
  return cache.at(e);
}

CyclotomicNumber::CyclotomicNumber(Rational value) : e_(1), coeffs_{std::move(value)} {}

CyclotomicNumber CyclotomicNumber::root_of_unity(std::uint64_t e, std::uint64_t k) {
  if (e == 0) throw std::invalid_argument("conductor must be positive");
  std::vector<Rational> poly(e, Rational(0));
  poly[k % e] = Rational(1);
  return CyclotomicNumber(e, reduce_mod(std::move(poly), e));
}

CyclotomicNumber CyclotomicNumber::from_polynomial(std::uint64_t e, std::vector<Rational> coeffs) {
  if (e == 0) throw std::invalid_argument("conductor must be positive");
  std::vector<Rational> poly(e, Rational(0));
  for (std::size_t j = 0; j < coeffs.size(); ++j) poly[j % e] += coeffs[j];
  return CyclotomicNumber(e, reduce_mod(std::move(poly), e));
}

bool CyclotomicNumber::is_zero() const {
  for (const Rational& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (!coeffs_[j].is_zero()) return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value " + to_string() + " is not rational");
  return coeffs_[0];
}

bool CyclotomicNumber::is_integral() const {
  for (const Rational& c : coeffs_)
    if (!c.is_integer()) return false;
  return true;
}

CyclotomicNumber CyclotomicNumber::galois(std::uint64_t a) const {
  a %= e_;
  if (std::gcd(a, e_) != 1) throw std::invalid_argument("galois exponent must be a unit modulo the conductor");
  std::vector<Rational> poly(e_, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[(j * a) % e_] += coeffs_[j];
  return CyclotomicNumber(e_, reduce_mod(std::move(poly), e_));
}

CyclotomicNumber CyclotomicNumber::lifted(std::uint64_t E) const {
  if (E == e_) return *this;
  if (E % e_ != 0) throw std::invalid_argument("conductor lift must be to a multiple");
  const std::uint64_t step = E / e_;
  std::vector<Rational> poly(E, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] += coeffs_[j];
  return CyclotomicNumber(E, reduce_mod(std::move(poly), E));
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const std::uint64_t E = std::lcm(a.e_, b.e_);
  CyclotomicNumber x = a.lifted(E), y = b.lifted(E);
  for (std::size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] += y.coeffs_[j];
  return x;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const std::uint64_t E = std::lcm(a.e_, b.e_);
  const CyclotomicNumber x = a.lifted(E), y = b.lifted(E);
  std::vector<Rational> poly(2 * x.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) poly[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return CyclotomicNumber(E, reduce_mod(std::move(poly), E));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.e_ == b.e_) return a.coeffs_ == b.coeffs_;
  const std::uint64_t E = std::lcm(a.e_, b.e_);
  return a.lifted(E).coeffs_ == b.lifted(E).coeffs_;
}

std::string CyclotomicNumber::to_string() const {
  if (is_rational()) return coeffs_[0].to_string();
  std::string out = "cyc(" + std::to_string(e_) + ")[";
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ',';
    out += coeffs_[j].to_string();
  }
  out += ']';
  return out;
}

CyclotomicNumber CyclotomicNumber::parse(const std::string& text) {
  if (text.rfind("cyc(", 0) != 0) return CyclotomicNumber(Rational::parse(text));
  const std::size_t close = text.find(')');
  if (close == std::string::npos || close + 1 >= text.size() || text[close + 1] != '[' || text.back() != ']')
    throw ParseError("bad cyclotomic '" + text + "'");
  std::uint64_t e = 0;
  {
    const Rational r = Rational::parse(text.substr(4, close - 4));
    if (!r.is_integer() || r.numerator() <= 0) throw ParseError("bad conductor in '" + text + "'");
    e = static_cast<std::uint64_t>(r.numerator());
  }
  std::vector<Rational> coeffs;
  std::size_t pos = close + 2;
  while (pos < text.size() - 1) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos || comma > text.size() - 1) comma = text.size() - 1;
    coeffs.push_back(Rational::parse(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (coeffs.size() != cyclotomic_polynomial(e).size() - 1)
    throw ParseError("wrong coordinate count in '" + text + "'");
  return CyclotomicNumber(e, std::move(coeffs));
}

}  // namespace isocert
