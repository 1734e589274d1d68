#include "isocert/effective.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "isocert/group_algorithms.hpp"
#include "isocert/numtheory.hpp"
#include "isocert/pstructure.hpp"

namespace isocert {

namespace {

std::uint64_t p_part(std::uint64_t order, std::uint64_t p) {
  std::uint64_t part = 1;
  while (order % p == 0) {
    order /= p;
    part *= p;
  }
  return part;
}

// the prime a Sylow handle belongs to, with the handle checked for being a
// full Sylow subgroup of the ambient group
std::uint64_t sylow_prime_of(const PermutationGroup& G, const SubgroupHandle& sylow) {
  if (!sylow.ambient().same_realization(G))
    throw std::invalid_argument("Sylow handle belongs to a different ambient group");
  const auto factors = factorize(sylow.order());
  if (factors.size() != 1) throw std::invalid_argument("subgroup order is not a prime power");
  const std::uint64_t p = factors.front().prime;
  if (sylow.order() != p_part(G.order(), p))
    throw std::invalid_argument("subgroup is not a full Sylow subgroup");
  return p;
}

// elementary abelian subgroups of the top rank, the ones whose fixed spaces
// must vanish
std::vector<SubgroupHandle> maximal_elementary_abelians(const PermutationGroup& P, std::uint64_t p,
                                                        int target_rank) {
  std::vector<SubgroupHandle> out;
  for (RankedElementaryAbelian& entry : elementary_abelians(P, p))
    if (entry.rank == target_rank) out.push_back(std::move(entry.subgroup));
  return out;
}

}  // namespace

FusionPartition fusion_partition(const PermutationGroup& G, const SubgroupHandle& sylow) {
  sylow_prime_of(G, sylow);
  const auto& classes = sylow.group().conjugacy_classes();

  std::vector<std::size_t> root(classes.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&root](std::size_t i) {
    while (root[i] != i) i = root[i] = root[root[i]];
    return i;
  };
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (find(i) == find(j)) continue;
      if (is_conjugate(G, classes[i].representative, classes[j].representative)) root[find(j)] = find(i);
    }

  std::vector<std::vector<std::size_t>> blocks(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) blocks[find(i)].push_back(i);
  std::erase_if(blocks, [](const std::vector<std::size_t>& b) { return b.empty(); });
  std::sort(blocks.begin(), blocks.end());
  return FusionPartition{sylow, std::move(blocks)};
}

FusionPartition fusion_partition(const PermutationGroup& G, std::uint64_t p) {
  return fusion_partition(G, sylow_subgroup(G, p));
}

bool is_fusion_stable(const ClassFunction& chi, const FusionPartition& fp) {
  if (!chi.domain().same_realization(fp.sylow.group()))
    throw std::invalid_argument("character does not live on the partition's Sylow subgroup");
  for (const std::vector<std::size_t>& block : fp.blocks)
    for (std::size_t k = 1; k < block.size(); ++k)
      if (!(chi.at_class(block[k]) == chi.at_class(block[0]))) return false;
  return true;
}

EffectiveSearchSpec effective_search_spec(const PermutationGroup& G, std::uint64_t p,
                                          std::optional<std::uint64_t> bound) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (G.order() % p != 0) throw std::invalid_argument("p does not divide the group order");
  const std::uint64_t effective_bound = bound.value_or(p_part(G.order(), p));
  if (effective_bound < 1) throw std::invalid_argument("dimension bound must be positive");
  return EffectiveSearchSpec{G, p, effective_bound, rank_profile(G).per_prime.at(p)};
}

EffectivenessReport is_p_effective(const ClassFunction& chi, const EffectiveSearchSpec& spec) {
  const SubgroupHandle sylow(spec.group, chi.domain().generators());
  if (sylow_prime_of(spec.group, sylow) != spec.prime)
    throw std::invalid_argument("character domain is a Sylow subgroup for a different prime");
  const FusionPartition fp = fusion_partition(spec.group, sylow);
  if (!is_fusion_stable(chi, fp)) return {false, "not constant on a fusion block"};
  for (const SubgroupHandle& E : maximal_elementary_abelians(chi.domain(), spec.prime, spec.target_rank)) {
    const std::uint64_t dim = fixed_subspace_dim(chi, E);
    if (dim != 0)
      return {false, "fixed subspace of dimension " + std::to_string(dim) +
                         " on a maximal elementary abelian subgroup"};
  }
  return {true, ""};
}

EffectiveSearchResult search_p_effective(const EffectiveSearchSpec& spec, const SubgroupHandle& sylow) {
  if (sylow_prime_of(spec.group, sylow) != spec.prime)
    throw std::invalid_argument("Sylow handle belongs to a different prime");
  const FusionPartition fp = fusion_partition(spec.group, sylow);
  const PermutationGroup& P = fp.sylow.group();
  const CharacterTable table = character_table(P);
  const std::size_t r = table.irreducibles.size();

  // an irreducible with a fixed vector on some maximal elementary abelian can
  // never appear: fixed dimensions are nonnegative and must sum to zero
  std::vector<std::uint64_t> degree(r);
  std::vector<bool> allowed(r, true);
  const auto tops = maximal_elementary_abelians(P, spec.prime, spec.target_rank);
  for (std::size_t c = 0; c < r; ++c) {
    degree[c] = character_degree(table.irreducibles[c]);
    for (const SubgroupHandle& E : tops)
      if (fixed_subspace_dim(table.irreducibles[c], E) != 0) {
        allowed[c] = false;
        break;
      }
  }

  // feasible[c][k]: irreducibles c.. can realize dimension exactly k
  const std::size_t bound = spec.dimension_bound;
  std::vector<std::vector<char>> feasible(r + 1, std::vector<char>(bound + 1, 0));
  feasible[r][0] = 1;
  for (std::size_t c = r; c-- > 0;)
    for (std::size_t k = 0; k <= bound; ++k)
      feasible[c][k] =
          feasible[c + 1][k] || (allowed[c] && k >= degree[c] && feasible[c][k - degree[c]]);

  const std::size_t num_classes = P.conjugacy_classes().size();
  std::vector<std::uint64_t> mult(r, 0);
  std::vector<CyclotomicNumber> values(num_classes);
  std::optional<EffectiveCharacter> found;

  // multiplicities assigned in row order, each ascending from zero, so the
  // first complete assignment is the lexicographically smallest one
  auto assign = [&](auto&& self, std::size_t c, std::uint64_t remaining) -> bool {
    if (c == r) {
      if (remaining != 0) return false;
      ClassFunction candidate(P, values);
      if (!is_fusion_stable(candidate, fp)) return false;
      std::uint64_t dim = 0;
      for (std::size_t i = 0; i < r; ++i) dim += mult[i] * degree[i];
      found = EffectiveCharacter{std::move(candidate), mult, dim};
      return true;
    }
    if (!feasible[c][remaining]) return false;
    const std::uint64_t top = allowed[c] ? remaining / degree[c] : 0;
    for (std::uint64_t m = 0; m <= top; ++m) {
      mult[c] = m;
      if (m > 0)
        for (std::size_t i = 0; i < num_classes; ++i) values[i] += table.irreducibles[c].at_class(i);
      if (self(self, c + 1, remaining - m * degree[c])) return true;
    }
    for (std::uint64_t m = 0; m < top; ++m)
      for (std::size_t i = 0; i < num_classes; ++i) values[i] = values[i] - table.irreducibles[c].at_class(i);
    mult[c] = 0;
    return false;
  };

  for (std::uint64_t n = 1; n <= bound; ++n) {
    std::fill(mult.begin(), mult.end(), 0);
    std::fill(values.begin(), values.end(), CyclotomicNumber());
    if (assign(assign, 0, n)) return {std::move(found), false};
  }
  return {std::nullopt, true};
}

EffectiveSearchResult search_p_effective(const EffectiveSearchSpec& spec) {
  return search_p_effective(spec, sylow_subgroup(spec.group, spec.prime));
}

}  // namespace isocert
