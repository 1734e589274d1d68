#pragma once

// p-local structure: Sylow subgroups, elementary abelian subgroups and rank,
// the Qd(p) groups, and the p'-involvement decision they feed into.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "isocert/errors.hpp"
#include "isocert/group_algorithms.hpp"
#include "isocert/numtheory.hpp"
#include "isocert/perm_group.hpp"

namespace isocert {

std::vector<PrimePower> prime_decomposition(const PermutationGroup& G);

// deterministic Sylow p-subgroup, grown one prime step at a time inside
// successive normalizers; returns the trivial subgroup when p does not
// divide the order
SubgroupHandle sylow_subgroup(const PermutationGroup& G, std::uint64_t p);

struct RankedElementaryAbelian {
  SubgroupHandle subgroup;
  int rank;  // log_p of the order
};

// every elementary abelian p-subgroup up to conjugacy in G, found inside a
// Sylow p-subgroup and merged across G-conjugacy; sorted by (rank, elements)
std::vector<RankedElementaryAbelian> elementary_abelians(const PermutationGroup& G, std::uint64_t p);

struct RankProfile {
  std::map<std::uint64_t, int> per_prime;               // p -> largest k with (Z/p)^k <= G
  std::map<std::uint64_t, SubgroupHandle> witnesses;    // p -> a subgroup realizing that rank
  int rank = 0;                                         // max over primes dividing the order
};

RankProfile rank_profile(const PermutationGroup& G);

// (Z/p x Z/p) : SL_2(p) as the affine group of the plane over F_p, acting on
// its p^2 points; order p^3(p^2-1)
PermutationGroup qd_group(std::uint64_t p, const Limits& limits = {});

struct QdWitness {
  std::uint64_t prime = 0;
  SubgroupHandle k;              // subgroup of order prime to p
  PermutationGroup section;      // N_G(K)/K (the group itself when K is trivial)
  SubgroupHandle qd_copy;        // subgroup of the section isomorphic to Qd(p)
  IsoWitness embedding;          // generator images realizing qd_group(p) -> qd_copy
};

std::optional<QdWitness> p_prime_involves_qd(const PermutationGroup& G, std::uint64_t p, const Limits& limits = {});

struct QdPrimeReport {
  std::uint64_t prime = 0;
  bool pruned_by_order = false;  // |Qd(p)| exceeds |G|, so no section can contain it
  std::optional<QdWitness> witness;
};

struct QdFreeReport {
  bool qd_free = true;
  std::vector<QdPrimeReport> per_prime;  // odd primes dividing the order, ascending
};

QdFreeReport is_qd_free(const PermutationGroup& G, const Limits& limits = {});

}  // namespace isocert
