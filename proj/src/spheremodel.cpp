#include "isocert/spheremodel.hpp"

#include <numeric>
#include <stdexcept>

#include "isocert/group_algorithms.hpp"
#include "isocert/numtheory.hpp"
#include "isocert/pstructure.hpp"

namespace isocert {

namespace {

void check_alignment(const CompatibleFamily& cf) {
  if (cf.subgroups.empty() || cf.subgroups.size() != cf.characters.size())
    throw std::invalid_argument("family assignments are not aligned with the subgroup list");
}

std::uint64_t fixed_dim_at(const SubgroupHandle& H, const ClassFunction& transported) {
  return fixed_subspace_dim(transported, full_subgroup(H.group()));
}

// the q-part of g: the power of g generating the Sylow q-subgroup of <g>
Permutation prime_part(const Permutation& g, std::uint64_t q) {
  const std::uint64_t ord = g.order();
  std::uint64_t q_power = 1;
  std::uint64_t rest = ord;
  while (rest % q == 0) {
    rest /= q;
    q_power *= q;
  }
  // g^(rest * u) with rest * u = 1 mod q_power kills the coprime part and
  // leaves the q-part untouched
  std::uint64_t u = 1;
  while (rest * u % q_power != 1) ++u;
  return g.power(static_cast<std::int64_t>(rest * u));
}

}  // namespace

DimensionFunction dimension_function(const CompatibleFamily& cf, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("join multiplier must be positive");
  check_alignment(cf);
  DimensionFunction out{k, 2 * k * cf.base.dimension - 1, {}};
  for (std::size_t i = 0; i < cf.subgroups.size(); ++i) {
    const SubgroupHandle& H = cf.subgroups[i];
    const std::uint64_t d = fixed_dim_at(H, cf.characters[i].character);
    DimensionEntry entry{H, d, rank_profile(H.group()).rank, std::nullopt};
    if (d > 0) entry.sphere_dim = 2 * k * d - 1;
    out.entries.push_back(std::move(entry));
  }
  return out;
}

IsotropyReport verify_rank_one_isotropy(const CompatibleFamily& cf) {
  check_alignment(cf);
  for (std::size_t i = 0; i < cf.subgroups.size(); ++i) {
    const SubgroupHandle& H = cf.subgroups[i];
    if (rank_profile(H.group()).rank < 2) continue;
    if (fixed_dim_at(H, cf.characters[i].character) > 0) return {false, H};
  }
  return {true, std::nullopt};
}

EulerReport euler_fixed_check(const CompatibleFamily& cf, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("join multiplier must be positive");
  check_alignment(cf);
  const PermutationGroup& G = cf.base.group;
  EulerReport report;
  for (const ConjugacyClass& cls : G.conjugacy_classes()) {
    if (cls.element_order == 1) continue;
    const auto factors = factorize(cls.element_order);
    if (factors.size() == 1) {
      // a cyclic prime-power subgroup: its fixed set is an odd sphere or
      // empty, and both have Euler characteristic zero; computing the
      // dimension exercises the transport
      const SubgroupHandle H(G, {cls.representative});
      fixed_dim_at(H, subgroup_character(cf.base, H).character);
      continue;
    }

    // composite order: the fixed set lies inside the fixed set of every
    // prime part, so one empty part certifies emptiness
    bool some_part_empty = false;
    std::string dims;
    for (const PrimePower& pp : factors) {
      const Permutation part = prime_part(cls.representative, pp.prime);
      const SubgroupHandle H(G, {part});
      const std::uint64_t d = fixed_dim_at(H, subgroup_character(cf.base, H).character);
      if (d == 0) some_part_empty = true;
      dims += (dims.empty() ? "" : ", ") + std::to_string(pp.prime) + " -> " +
              (d == 0 ? "empty" : "S^" + std::to_string(2 * k * d - 1));
    }
    report.notes.push_back("element " + cls.representative.cycle_string() + " of order " +
                           std::to_string(cls.element_order) + ": prime-part fixed sets " + dims +
                           (some_part_empty ? "; fixed set empty" : "; emptiness not certified"));
    if (!some_part_empty) report.empty_certified = false;
  }
  return report;
}

ClassFunction rational_euler_class(const ClassFunction& chi, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("join multiplier must be positive");
  if (character_degree(chi) == 0) throw std::invalid_argument("character has degree zero");
  // bottom and top homology of the odd sphere are both trivial modules, so
  // the alternating sum is trivial minus trivial
  const ClassFunction bottom = trivial_character(chi.domain());
  std::vector<CyclotomicNumber> values;
  values.reserve(bottom.values().size());
  for (const CyclotomicNumber& v : bottom.values()) values.push_back(v - v);
  return ClassFunction(chi.domain(), std::move(values));
}

namespace {

void check_context(const ObstructionGroup& ctx, const ObstructionValue& v) {
  if (v.coords.size() != ctx.invariant_factors.size())
    throw std::invalid_argument("obstruction value does not match the group's invariant factors");
  for (std::uint64_t f : ctx.invariant_factors)
    if (f == 0) throw std::invalid_argument("invariant factors must be positive");
}

}  // namespace

ObstructionValue reduce(const ObstructionGroup& ctx, ObstructionValue v) {
  check_context(ctx, v);
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    const std::int64_t f = static_cast<std::int64_t>(ctx.invariant_factors[i]);
    v.coords[i] = ((v.coords[i] % f) + f) % f;
  }
  return v;
}

bool is_zero(const ObstructionGroup& ctx, const ObstructionValue& v) {
  const ObstructionValue r = reduce(ctx, v);
  for (std::int64_t c : r.coords)
    if (c != 0) return false;
  return true;
}

std::uint64_t additive_order(const ObstructionGroup& ctx, const ObstructionValue& v) {
  const ObstructionValue r = reduce(ctx, v);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    const std::uint64_t f = ctx.invariant_factors[i];
    const std::uint64_t c = static_cast<std::uint64_t>(r.coords[i]);
    order = std::lcm(order, f / std::gcd(f, c == 0 ? f : c));
  }
  return order;
}

JoinSymbol join_sigma(const ObstructionGroup& ctx, const JoinSymbol& a, const JoinSymbol& b) {
  check_context(ctx, a.value);
  check_context(ctx, b.value);
  if (a.dim == 0 || b.dim == 0) throw std::invalid_argument("dimension parameter must be positive");
  const std::int64_t sign_a = b.dim % 2 == 0 ? 1 : -1;
  const std::int64_t sign_b = a.dim % 2 == 0 ? 1 : -1;
  ObstructionValue value;
  value.coords.reserve(a.value.coords.size());
  for (std::size_t i = 0; i < a.value.coords.size(); ++i)
    value.coords.push_back(sign_a * a.value.coords[i] + sign_b * b.value.coords[i]);
  return JoinSymbol{reduce(ctx, std::move(value)), a.dim + b.dim};
}

JoinExponentResult join_exponent(const ObstructionGroup& ctx, const ObstructionValue& sigma,
                                 std::uint64_t m) {
  if (m == 0 || m % 2 != 0)
    throw std::invalid_argument("self-joins are only supported at even dimension parameters");
  const JoinSymbol step{reduce(ctx, sigma), m};
  JoinExponentResult out;
  out.trace.push_back(step.value);
  JoinSymbol acc = step;
  while (!is_zero(ctx, acc.value)) {
    acc = join_sigma(ctx, acc, step);
    out.trace.push_back(acc.value);
  }
  out.exponent = out.trace.size();
  return out;
}

JoinExponentResult join_exponent(std::uint64_t order, std::uint64_t m) {
  if (order == 0) throw std::invalid_argument("the order of an obstruction is a positive integer");
  const ObstructionGroup cyclic{{order}};
  return join_exponent(cyclic, ObstructionValue{{order == 1 ? 0 : 1}}, m);
}

}  // namespace isocert
