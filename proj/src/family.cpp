#include "isocert/family.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "isocert/character_table.hpp"
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

ClassFunction scaled_by(const ClassFunction& chi, std::uint64_t k) {
  const CyclotomicNumber factor{Rational(static_cast<std::int64_t>(k))};
  std::vector<CyclotomicNumber> values;
  values.reserve(chi.values().size());
  for (const CyclotomicNumber& v : chi.values()) values.push_back(v * factor);
  return ClassFunction(chi.domain(), std::move(values));
}

std::string generator_list(const SubgroupHandle& H) {
  std::string out = "<";
  for (std::size_t i = 0; i < H.generators().size(); ++i) {
    if (i > 0) out += ", ";
    out += H.generators()[i].cycle_string();
  }
  return out + ">";
}

// the multiplicity vector is part of the serialized family, so it has to
// reproduce the character it claims to describe
void check_decomposition(const SylowFamilyEntry& entry, std::uint64_t prime) {
  const CharacterTable table = character_table(entry.sylow.group());
  if (entry.multiplicities.size() != table.irreducibles.size())
    throw std::invalid_argument("multiplicity vector for prime " + std::to_string(prime) +
                                " does not match the Sylow character table");
  std::vector<CyclotomicNumber> sum(entry.character.values().size());
  for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
    const CyclotomicNumber m{Rational(static_cast<std::int64_t>(entry.multiplicities[i]))};
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += m * table.irreducibles[i].at_class(c);
  }
  for (std::size_t c = 0; c < sum.size(); ++c)
    if (!(sum[c] == entry.character.at_class(c)))
      throw std::invalid_argument("multiplicities for prime " + std::to_string(prime) +
                                  " do not add up to the stored character");
}

}  // namespace

SylowFamily assemble_family(const PermutationGroup& G,
                            const std::map<std::uint64_t, EffectiveCharacter>& per_prime) {
  std::string missing;
  for (const PrimePower& pp : prime_decomposition(G))
    if (!per_prime.count(pp.prime)) missing += (missing.empty() ? "" : ", ") + std::to_string(pp.prime);
  if (!missing.empty()) throw std::invalid_argument("family input is missing primes " + missing);
  for (const auto& [p, ec] : per_prime)
    if (G.order() % p != 0)
      throw std::invalid_argument("family input has an entry for prime " + std::to_string(p) +
                                  ", which does not divide the group order");

  std::uint64_t n = 1;
  for (const auto& [p, ec] : per_prime) {
    if (ec.dimension == 0 || ec.dimension != character_degree(ec.character))
      throw std::invalid_argument("declared dimension for prime " + std::to_string(p) +
                                  " does not match the character degree");
    n = std::lcm(n, ec.dimension);
  }

  SylowFamily fam{G, n, {}};
  for (const auto& [p, ec] : per_prime) {
    SubgroupHandle sylow(G, ec.character.domain().generators());
    if (sylow.order() != p_part(G.order(), p))
      throw std::invalid_argument("character for prime " + std::to_string(p) +
                                  " does not live on a Sylow subgroup");
    const FusionPartition fp = fusion_partition(G, sylow);
    if (!is_fusion_stable(ec.character, fp))
      throw std::invalid_argument("character for prime " + std::to_string(p) + " is not fusion stable");

    const std::uint64_t k = n / ec.dimension;
    std::vector<std::uint64_t> mults = ec.multiplicities;
    for (std::uint64_t& m : mults) m *= k;
    SylowFamilyEntry entry{sylow, scaled_by(ec.character, k), std::move(mults)};
    check_decomposition(entry, p);

    // scaling by a positive integer multiplies every fixed-space dimension by
    // the same integer and keeps block values equal, so neither verdict may
    // move
    if (!is_fusion_stable(entry.character, fp))
      throw std::logic_error("scaling broke fusion stability for prime " + std::to_string(p));
    const EffectiveSearchSpec spec = effective_search_spec(G, p);
    if (is_p_effective(ec.character, spec).effective != is_p_effective(entry.character, spec).effective)
      throw std::logic_error("scaling changed the effectiveness verdict for prime " + std::to_string(p));

    fam.entries.emplace(p, std::move(entry));
  }
  return fam;
}

TransportedCharacter subgroup_character(const SylowFamily& fam, const SubgroupHandle& H) {
  if (fam.entries.empty()) throw std::invalid_argument("family has no entries");
  if (!H.ambient().same_realization(fam.group))
    throw std::invalid_argument("subgroup belongs to a different ambient group");

  std::uint64_t p = 0;
  if (H.order() == 1) {
    p = fam.entries.begin()->first;
  } else {
    const auto factors = factorize(H.order());
    if (factors.size() != 1)
      throw std::invalid_argument("subgroup order " + std::to_string(H.order()) + " is not a prime power");
    p = factors.front().prime;
  }
  const auto it = fam.entries.find(p);
  if (it == fam.entries.end())
    throw std::invalid_argument("family has no entry for prime " + std::to_string(p));
  const SylowFamilyEntry& entry = it->second;

  // Sylow's theorem provides a conjugate of H inside the Sylow subgroup;
  // taking the first one in canonical order makes the choice reproducible
  for (const Permutation& g : fam.group.elements()) {
    const Permutation ginv = g.inverse();
    bool maps_in = true;
    for (const Permutation& x : H.generators())
      if (!entry.sylow.contains(g * x * ginv)) {
        maps_in = false;
        break;
      }
    if (!maps_in) continue;

    std::vector<CyclotomicNumber> values;
    values.reserve(H.group().conjugacy_classes().size());
    for (const ConjugacyClass& cls : H.group().conjugacy_classes())
      values.push_back(entry.character.at(g * cls.representative * ginv));
    TransportedCharacter out{ClassFunction(H.group(), std::move(values)), g, p};
    if (character_degree(out.character) != fam.dimension)
      throw std::logic_error("transported character has the wrong degree");
    return out;
  }
  throw std::logic_error("no conjugator takes the subgroup into the Sylow subgroup");
}

CompatibleFamily compatible_family(const SylowFamily& fam) {
  if (fam.entries.empty()) throw std::invalid_argument("family has no entries");
  CompatibleFamily cf{fam, {}, {}};
  for (SubgroupHandle& H : subgroups_up_to_conjugacy(fam.group)) {
    const std::uint64_t order = H.order();
    if (order > 1 && factorize(order).size() != 1) continue;
    cf.characters.push_back(subgroup_character(fam, H));
    cf.subgroups.push_back(std::move(H));
  }
  return cf;
}

namespace {

struct SpreadSubgroup {
  SubgroupHandle handle;
  ClassFunction character;
  std::unordered_set<Permutation, PermHash> members;
};

std::string value_mismatch(const std::string& what, const Permutation& x, const CyclotomicNumber& lhs,
                           const CyclotomicNumber& rhs) {
  return what + " changes the value at " + x.cycle_string() + ": " + lhs.to_string() + " vs " + rhs.to_string();
}

}  // namespace

CompatibilityReport verify_compatibility(const CompatibleFamily& cf) {
  if (cf.subgroups.size() != cf.characters.size() || cf.subgroups.empty())
    throw std::invalid_argument("family assignments are not aligned with the subgroup list");
  const PermutationGroup& G = cf.base.group;
  const std::uint64_t n = cf.base.dimension;

  for (std::size_t i = 0; i < cf.subgroups.size(); ++i) {
    const SubgroupHandle& H = cf.subgroups[i];
    const TransportedCharacter& stored = cf.characters[i];
    if (character_degree(stored.character) != n)
      return {false, "character on " + generator_list(H) + " has degree " +
                         std::to_string(character_degree(stored.character)) + ", the family dimension is " +
                         std::to_string(n)};

    // a transported character is a restriction of a genuine character along
    // an injective homomorphism, so its irreducible multiplicities must be
    // nonnegative integers
    if (H.order() > 1) {
      for (const ClassFunction& irr : character_table(H.group()).irreducibles) {
        const Rational m = inner_product(stored.character, irr);
        if (!m.is_integer() || m.numerator() < 0)
          return {false, "character on " + generator_list(H) + " is not a genuine character: multiplicity " +
                             m.to_string() + " on an irreducible"};
      }
    }

    // every conjugator into the Sylow subgroup has to induce the same class
    // function, or the transport is not well defined
    const auto entry = cf.base.entries.find(stored.prime);
    if (entry == cf.base.entries.end())
      throw std::invalid_argument("stored character refers to a prime outside the family");
    for (const Permutation& g : G.elements()) {
      const Permutation ginv = g.inverse();
      bool maps_in = true;
      for (const Permutation& x : H.generators())
        if (!entry->second.sylow.contains(g * x * ginv)) {
          maps_in = false;
          break;
        }
      if (!maps_in) continue;
      for (std::size_t c = 0; c < H.group().conjugacy_classes().size(); ++c) {
        const Permutation& rep = H.group().conjugacy_classes()[c].representative;
        const CyclotomicNumber& expected = entry->second.character.at(g * rep * ginv);
        if (!(expected == stored.character.at_class(c)))
          return {false, value_mismatch("conjugator " + g.cycle_string() + " on " + generator_list(H) +
                                            " (stored transport used " + stored.conjugator.cycle_string() + ")",
                                        rep, expected, stored.character.at_class(c))};
      }
    }
  }

  // spread each representative over its full conjugacy class, so the pair
  // check below sees every prime-power subgroup this group has
  std::vector<SpreadSubgroup> spread;
  std::set<std::vector<Permutation>> seen;
  for (const SubgroupHandle& H : cf.subgroups) {
    for (const Permutation& g : G.elements()) {
      const Permutation ginv = g.inverse();
      std::vector<Permutation> conjugate;
      conjugate.reserve(H.group().elements().size());
      for (const Permutation& x : H.group().elements()) conjugate.push_back(g * x * ginv);
      std::sort(conjugate.begin(), conjugate.end());
      if (!seen.insert(conjugate).second) continue;
      SubgroupHandle moved(G, reduce_generators(G.degree(), conjugate));
      ClassFunction transported = subgroup_character(cf.base, moved).character;
      std::unordered_set<Permutation, PermHash> members(conjugate.begin(), conjugate.end());
      spread.push_back({std::move(moved), std::move(transported), std::move(members)});
    }
  }

  for (const SpreadSubgroup& target : spread) {
    for (const SpreadSubgroup& source : spread) {
      if (source.handle.order() != target.handle.order()) continue;
      for (const Permutation& g : G.elements()) {
        const Permutation ginv = g.inverse();
        bool maps_onto = true;
        for (const Permutation& x : source.handle.generators())
          if (!target.members.count(g * x * ginv)) {
            maps_onto = false;
            break;
          }
        if (!maps_onto) continue;
        // equal orders turn containment into equality, so g carries source
        // onto target and the two class functions must agree through it
        for (std::size_t c = 0; c < source.handle.group().conjugacy_classes().size(); ++c) {
          const Permutation& rep = source.handle.group().conjugacy_classes()[c].representative;
          const CyclotomicNumber& lhs = target.character.at(g * rep * ginv);
          if (!(lhs == source.character.at_class(c)))
            return {false, value_mismatch("transport along " + g.cycle_string() + " from " +
                                              generator_list(source.handle) + " to " + generator_list(target.handle),
                                          rep, lhs, source.character.at_class(c))};
        }
      }
    }
  }
  return {true, ""};
}

}  // namespace isocert
