#pragma once

// Exact complex character tables via the modular method: split the class
// algebra over a prime field with enough roots of unity, read off degrees
// and modular character values, then lift to cyclotomics by summing the
// eigenvalue multiplicities of each class representative.

#include <cstdint>
#include <string>
#include <vector>

#include "isocert/class_function.hpp"
#include "isocert/errors.hpp"
#include "isocert/perm_group.hpp"

namespace isocert {

struct CharacterTable {
  PermutationGroup group;
  std::uint64_t exponent = 1;              // conductor context of all values
  std::vector<ClassFunction> irreducibles; // canonically ordered
};

// rows ordered by (degree, then class-by-class comparison of rendered
// values, shorter strings first); the ordering certificates rely on
bool character_row_less(const ClassFunction& a, const ClassFunction& b);

CharacterTable character_table(const PermutationGroup& G, const Limits& limits = {});

}  // namespace isocert
