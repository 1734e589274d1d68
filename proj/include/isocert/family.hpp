#pragma once

// A family picks one fusion-stable Sylow character per prime and spreads it
// over every prime-power subgroup by conjugating the subgroup into the chosen
// Sylow subgroup. The spreading is checked, not trusted: verify_compatibility
// replays the transport along every conjugation available at this scale.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isocert/class_function.hpp"
#include "isocert/effective.hpp"
#include "isocert/perm_group.hpp"

namespace isocert {

struct SylowFamilyEntry {
  SubgroupHandle sylow;
  ClassFunction character;                    // fusion stable, degree equal to the family dimension
  std::vector<std::uint64_t> multiplicities;  // over the Sylow table's irreducibles
};

// one entry per prime dividing the group order, all scaled to a common
// dimension
struct SylowFamily {
  PermutationGroup group;
  std::uint64_t dimension = 0;
  std::map<std::uint64_t, SylowFamilyEntry> entries;
};

// scales the per-prime characters to the lcm of their degrees; rejects input
// that misses a prime divisor, brings a foreign prime, or is not fusion
// stable, and asserts that scaling changed neither fusion stability nor
// effectiveness
SylowFamily assemble_family(const PermutationGroup& G,
                            const std::map<std::uint64_t, EffectiveCharacter>& per_prime);

struct TransportedCharacter {
  ClassFunction character;  // on H.group(); the value at x is the Sylow character at g x g^-1
  Permutation conjugator;   // first g in canonical order taking H into the Sylow subgroup
  std::uint64_t prime = 2;  // which family entry the values came from
};

// the class function a prime-power subgroup inherits from the family; the
// trivial subgroup reads from the smallest prime and is constant at the
// family dimension
TransportedCharacter subgroup_character(const SylowFamily& fam, const SubgroupHandle& H);

// the family spread over one representative per conjugacy class of
// prime-power subgroups, the trivial subgroup first, then ascending by
// (order, element list)
struct CompatibleFamily {
  SylowFamily base;
  std::vector<SubgroupHandle> subgroups;
  std::vector<TransportedCharacter> characters;  // aligned with subgroups
};

CompatibleFamily compatible_family(const SylowFamily& fam);

struct CompatibilityReport {
  bool compatible = true;
  std::string counterexample;  // empty when compatible
};

// exhaustive replay: every stored character must be a genuine character of
// the right degree, agree with the transport under every admissible
// conjugator, and pull back consistently along every conjugation between
// prime-power subgroups, conjugates of the representatives included
CompatibilityReport verify_compatibility(const CompatibleFamily& cf);

}  // namespace isocert
