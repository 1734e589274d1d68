#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "isocert/perm.hpp"

namespace isocert {

struct ConjugacyClass {
  Permutation representative;         // lexicographically minimal member
  std::vector<Permutation> elements;  // sorted
  std::uint64_t element_order = 1;
  std::size_t size() const { return elements.size(); }
};

// One level of a stabilizer chain: base point, the strong generators that fix
// all earlier base points, and the fundamental orbit with coset
// representatives (base ^ transversal[i] == orbit[i]).
struct ChainLevel {
  int base_point = 0;
  std::vector<Permutation> generators;
  std::vector<int> orbit;
  std::vector<Permutation> transversal;
  std::vector<int> position;  // point -> index into orbit, -1 outside

  const Permutation* coset_rep(int point) const {
    int idx = position[point];
    return idx < 0 ? nullptr : &transversal[idx];
  }
};

// Finite permutation group, immutable after construction. Copies share the
// underlying data, so passing groups by value is cheap. The stabilizer chain
// (deterministic: base points are smallest moved points, in input generator
// order) is built eagerly; the element list and conjugacy classes are
// computed on first use and cached.
class PermutationGroup {
 public:
  PermutationGroup();  // trivial group of degree 1
  static PermutationGroup trivial(int degree);
  static PermutationGroup from_generators(int degree, std::vector<Permutation> generators);

  int degree() const;
  const std::vector<Permutation>& generators() const;
  std::uint64_t order() const;  // product of fundamental orbit sizes
  const std::vector<ChainLevel>& chain() const;
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  // all elements in canonical (lexicographic) order; desk scale only
  const std::vector<Permutation>& elements() const;

  // classes sorted by representative; representatives are class minima
  const std::vector<ConjugacyClass>& conjugacy_classes() const;
  std::size_t class_index_of(const Permutation& g) const;  // throws on non-members
  std::uint64_t exponent() const;                          // lcm of element orders

  bool shares_storage(const PermutationGroup& other) const { return impl_ == other.impl_; }
  // same degree and identical element sets
  bool same_realization(const PermutationGroup& other) const;

 private:
  struct Impl;
  explicit PermutationGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// A subgroup remembered together with its ambient group. The subgroup itself
// is materialized as a PermutationGroup of the same degree, so all group
// machinery (order, classes, membership) applies to it directly.
class SubgroupHandle {
 public:
  SubgroupHandle(PermutationGroup ambient, std::vector<Permutation> generators);

  const PermutationGroup& ambient() const { return ambient_; }
  const PermutationGroup& group() const { return self_; }
  const std::vector<Permutation>& generators() const { return self_.generators(); }
  std::uint64_t order() const { return self_.order(); }
  bool contains(const Permutation& g) const { return self_.contains(g); }
  bool same_subgroup(const SubgroupHandle& other) const { return self_.same_realization(other.self_); }

 private:
  PermutationGroup ambient_;
  PermutationGroup self_;
};

}  // namespace isocert
