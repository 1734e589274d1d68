#pragma once

#include <cstdint>
#include <vector>

namespace isocert {

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  std::uint64_t value = 1;  // prime^exponent
};

inline std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back(PrimePower{n, 1, n});
  return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = 1;
  for (const PrimePower& pp : factorize(n)) phi *= pp.value / pp.prime * (pp.prime - 1);
  return phi;
}

inline std::vector<std::uint64_t> sorted_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace isocert
