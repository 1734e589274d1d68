#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isocert/errors.hpp"
#include "isocert/perm_group.hpp"

namespace isocert {

// first conjugating element in canonical order with g * x * g^-1 == y
std::optional<Permutation> conjugating_element(const PermutationGroup& G, const Permutation& x, const Permutation& y);
bool is_conjugate(const PermutationGroup& G, const Permutation& x, const Permutation& y);

SubgroupHandle full_subgroup(const PermutationGroup& G);
SubgroupHandle trivial_subgroup(const PermutationGroup& G);

// deterministic small generating set for a subgroup given by its element list
std::vector<Permutation> reduce_generators(int degree, const std::vector<Permutation>& elements);

SubgroupHandle normalizer(const PermutationGroup& G, const SubgroupHandle& H);
SubgroupHandle centralizer(const PermutationGroup& G, const Permutation& x);
SubgroupHandle centralizer(const PermutationGroup& G, const SubgroupHandle& H);
bool is_normal(const PermutationGroup& G, const SubgroupHandle& H);

// smallest normal subgroup of G containing the given elements
SubgroupHandle normal_closure(const PermutationGroup& G, const std::vector<Permutation>& seed);
SubgroupHandle derived_subgroup(const PermutationGroup& G);
bool is_perfect(const PermutationGroup& G);

// first g in canonical order with g * A * g^-1 == B, if any
std::optional<Permutation> subgroup_conjugator(const PermutationGroup& G, const SubgroupHandle& A,
                                               const SubgroupHandle& B);

// one representative per conjugacy class of subgroups, sorted by (order,
// element list); built by cyclic extensions over perfect seeds
std::vector<SubgroupHandle> subgroups_up_to_conjugacy(const PermutationGroup& G, const Limits& limits = {});

// N_G(K)/K realized by the right-coset action of N_G(K) on the cosets of K
PermutationGroup section_group(const PermutationGroup& G, const SubgroupHandle& K);

struct IsoWitness {
  std::vector<Permutation> domain_generators;
  std::vector<Permutation> images;
};

std::optional<IsoWitness> isomorphism(const PermutationGroup& G, const PermutationGroup& H, const Limits& limits = {});
bool is_isomorphic(const PermutationGroup& G, const PermutationGroup& H, const Limits& limits = {});

// checks that mapping the generators to the claimed images extends to an
// isomorphism; used to validate stored witnesses
bool check_isomorphism_witness(const PermutationGroup& G, const PermutationGroup& H, const IsoWitness& witness);

}  // namespace isocert
