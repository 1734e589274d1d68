#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace isocert {

// Permutation of {0, ..., degree-1} stored as its image vector. Text I/O uses
// 1-based cycle notation; everything in memory is 0-based. Composition reads
// left to right: (a * b) means "apply a, then b".
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int degree);
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  int smallest_moved_point() const;  // -1 when identity
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation power(std::int64_t n) const;
  std::uint64_t order() const;

  bool operator==(const Permutation&) const = default;
  // canonical element ordering: lexicographic on image vectors
  auto operator<=>(const Permutation&) const = default;

  // "(1,2,3)(4,5)" with cycles sorted by smallest member, fixed points
  // omitted, identity rendered as "()"
  std::string cycle_string() const;
  static Permutation parse_cycles(const std::string& text, int degree);

  std::size_t hash() const;

 private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace isocert
