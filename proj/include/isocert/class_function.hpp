#pragma once

// Class functions: one cyclotomic value per conjugacy class of a fixed
// domain group, in the canonical class order. Characters are class functions
// whose integrality the consuming operations check where they rely on it.

#include <cstdint>
#include <vector>

#include "isocert/cyclotomic.hpp"
#include "isocert/perm_group.hpp"

namespace isocert {

class ClassFunction {
 public:
  ClassFunction(PermutationGroup domain, std::vector<CyclotomicNumber> values);

  const PermutationGroup& domain() const { return domain_; }
  const std::vector<CyclotomicNumber>& values() const { return values_; }
  const CyclotomicNumber& at_class(std::size_t index) const { return values_.at(index); }
  const CyclotomicNumber& at(const Permutation& g) const { return values_[domain_.class_index_of(g)]; }

  bool is_integral() const;

 private:
  PermutationGroup domain_;
  std::vector<CyclotomicNumber> values_;
};

ClassFunction trivial_character(const PermutationGroup& G);

// the value at the identity class, for genuine characters
std::uint64_t character_degree(const ClassFunction& chi);

// class function on H.group() whose value at h is chi's value on the ambient
// class of h
ClassFunction restrict_to(const ClassFunction& chi, const SubgroupHandle& H);

// (1/|G|) sum of chi * conjugate(psi) over the common domain; the result must
// come out rational, anything else is rejected
Rational inner_product(const ClassFunction& chi, const ClassFunction& psi);

// <chi restricted to H, trivial>, the dimension of the H-fixed subspace;
// rejects inputs that fail to produce a nonnegative integer
std::uint64_t fixed_subspace_dim(const ClassFunction& chi, const SubgroupHandle& H);

}  // namespace isocert
