#pragma once

// Per-prime engine for fusion-stable effective characters: compute how the
// ambient group fuses the conjugacy classes of a Sylow p-subgroup, test
// characters against the fusion and fixed-point conditions, and search for
// the smallest character satisfying both.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isocert/character_table.hpp"
#include "isocert/class_function.hpp"
#include "isocert/errors.hpp"
#include "isocert/perm_group.hpp"

namespace isocert {

// conjugacy classes of the Sylow subgroup, grouped into blocks whose
// representatives are conjugate in the ambient group; blocks hold class
// indices of sylow.group(), each block sorted, blocks ordered by first entry
struct FusionPartition {
  SubgroupHandle sylow;
  std::vector<std::vector<std::size_t>> blocks;
};

// the handle form accepts any Sylow p-subgroup of G, not just the canonical
// one, so conjugation invariance can be exercised directly
FusionPartition fusion_partition(const PermutationGroup& G, const SubgroupHandle& sylow);
FusionPartition fusion_partition(const PermutationGroup& G, std::uint64_t p);

// true iff chi is constant on every fusion block; chi must live on the
// partition's Sylow subgroup
bool is_fusion_stable(const ClassFunction& chi, const FusionPartition& fp);

struct EffectiveSearchSpec {
  PermutationGroup group;
  std::uint64_t prime = 2;
  std::uint64_t dimension_bound = 1;
  int target_rank = 0;  // largest rank of an elementary abelian p-subgroup
};

// validates that p is a prime dividing |G| and the bound is positive; the
// bound defaults to the Sylow subgroup's order, the regular character's
// dimension
EffectiveSearchSpec effective_search_spec(const PermutationGroup& G, std::uint64_t p,
                                          std::optional<std::uint64_t> bound = std::nullopt);

struct EffectivenessReport {
  bool effective = false;
  std::string violation;  // empty when effective, otherwise the failed condition
};

// chi is p-effective when it is fusion-stable and has no fixed vectors on any
// elementary abelian subgroup of the largest rank; chi's domain must be a
// Sylow p-subgroup of spec.group
EffectivenessReport is_p_effective(const ClassFunction& chi, const EffectiveSearchSpec& spec);

struct EffectiveCharacter {
  ClassFunction character;
  std::vector<std::uint64_t> multiplicities;  // over the Sylow table's irreducibles
  std::uint64_t dimension = 0;
};

struct EffectiveSearchResult {
  std::optional<EffectiveCharacter> solution;
  bool bound_reached = false;  // no solution and the dimension bound was exhausted
};

// smallest-dimension solution within the bound, ties broken by
// lexicographically minimal multiplicities; deterministic
EffectiveSearchResult search_p_effective(const EffectiveSearchSpec& spec);
EffectiveSearchResult search_p_effective(const EffectiveSearchSpec& spec, const SubgroupHandle& sylow);

}  // namespace isocert
