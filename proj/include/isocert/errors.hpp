#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace isocert {

// Hard ceiling for the expensive enumerative operations (subgroup lattices,
// isomorphism search, character tables). Callers can raise it explicitly.
inline constexpr std::uint64_t kDefaultMaxOrder = 1000;

struct Limits {
  std::uint64_t max_order = kDefaultMaxOrder;
};

// An operation was asked to enumerate past the configured order bound.
class ScaleLimitError : public std::runtime_error {
 public:
  explicit ScaleLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed permutation text, group file, catalog id or certificate.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Exact integer arithmetic left the 64-bit range. Desk-scale inputs never
// trigger this; it exists so overflow surfaces as an error, not a wrong value.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isocert
