#include "isocert/pstructure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace {

// p^3(p^2-1) without overflow; nullopt stands for "too large to matter"
std::optional<std::uint64_t> qd_order_of(std::uint64_t p) {
  std::uint64_t p2 = 0, p3 = 0, order = 0;
  if (__builtin_mul_overflow(p, p, &p2) || __builtin_mul_overflow(p2, p, &p3) ||
      __builtin_mul_overflow(p3, p2 - 1, &order))
    return std::nullopt;
  return order;
}

}  // namespace

namespace isocert {

std::vector<PrimePower> prime_decomposition(const PermutationGroup& G) { return factorize(G.order()); }

SubgroupHandle sylow_subgroup(const PermutationGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup needs a prime");
  std::uint64_t target = 1;
  for (std::uint64_t n = G.order(); n % p == 0; n /= p) target *= p;

  std::vector<Permutation> gens;
  PermutationGroup P = PermutationGroup::trivial(G.degree());
  while (P.order() < target) {
    // P is a proper subgroup of some Sylow p-subgroup, so its normalizer
    // contains a coset of order p; the first such element in canonical
    // order keeps the construction reproducible
    SubgroupHandle N = normalizer(G, SubgroupHandle(G, gens));
    bool extended = false;
    for (const Permutation& g : N.group().elements()) {
      if (P.contains(g) || !P.contains(g.power(static_cast<std::int64_t>(p)))) continue;
      gens.push_back(g);
      P = PermutationGroup::from_generators(G.degree(), gens);
      extended = true;
      break;
    }
    if (!extended) throw std::logic_error("sylow growth step found no extending element");
  }
  return SubgroupHandle(G, std::move(gens));
}

std::vector<RankedElementaryAbelian> elementary_abelians(const PermutationGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("elementary_abelians needs a prime");
  SubgroupHandle P = sylow_subgroup(G, p);

  // all order-p elements of the Sylow subgroup, the only extension material
  std::vector<Permutation> candidates;
  for (const Permutation& x : P.group().elements())
    if (x.order() == p) candidates.push_back(x);

  std::vector<RankedElementaryAbelian> out;
  out.push_back({trivial_subgroup(G), 0});

  // grow rank by rank inside P; every elementary abelian p-subgroup of G is
  // conjugate into P, so merging G-conjugates of what is found here covers
  // every class
  std::vector<SubgroupHandle> level = {trivial_subgroup(G)};
  int rank = 0;
  while (!level.empty()) {
    ++rank;
    std::vector<SubgroupHandle> next;
    std::set<std::vector<Permutation>> seen;
    for (const SubgroupHandle& E : level) {
      for (const Permutation& x : candidates) {
        if (E.contains(x)) continue;
        bool commutes = true;
        for (const Permutation& e : E.generators())
          if (!(x * e == e * x)) {
            commutes = false;
            break;
          }
        if (!commutes) continue;
        std::vector<Permutation> gens = E.generators();
        gens.push_back(x);
        SubgroupHandle K(G, std::move(gens));
        if (!seen.insert(K.group().elements()).second) continue;
        bool fresh = true;
        for (const SubgroupHandle& other : next)
          if (subgroup_conjugator(G, other, K)) {
            fresh = false;
            break;
          }
        if (fresh) next.push_back(std::move(K));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const SubgroupHandle& a, const SubgroupHandle& b) { return a.group().elements() < b.group().elements(); });
    for (const SubgroupHandle& E : next) out.push_back({E, rank});
    level = std::move(next);
  }
  return out;
}

RankProfile rank_profile(const PermutationGroup& G) {
  RankProfile profile;
  for (const PrimePower& pp : prime_decomposition(G)) {
    auto classes = elementary_abelians(G, pp.prime);
    const int top = classes.back().rank;
    auto best = std::find_if(classes.begin(), classes.end(),
                             [top](const RankedElementaryAbelian& e) { return e.rank == top; });
    profile.per_prime[pp.prime] = top;
    profile.witnesses.emplace(pp.prime, best->subgroup);
    profile.rank = std::max(profile.rank, top);
  }
  return profile;
}

PermutationGroup qd_group(std::uint64_t p, const Limits& limits) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("qd_group needs an odd prime");
  const std::optional<std::uint64_t> order = qd_order_of(p);
  if (!order || *order > limits.max_order)
    throw ScaleLimitError("qd_group(" + std::to_string(p) + ") exceeds the scale limit of " +
                          std::to_string(limits.max_order));

  // points are the plane's vectors (x, y), numbered p*x + y (0-based)
  const int n = static_cast<int>(p);
  auto build = [n](auto&& f) {
    std::vector<int> images(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto [u, v] = f(x, y);
        images[n * x + y] = n * u + v;
      }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens = {
      build([n](int x, int y) { return std::pair((x + 1) % n, y); }),        // unit translations
      build([n](int x, int y) { return std::pair(x, (y + 1) % n); }),
      build([n](int x, int y) { return std::pair((x + y) % n, y); }),        // elementary transvections
      build([n](int x, int y) { return std::pair(x, (x + y) % n); }),
  };
  PermutationGroup G = PermutationGroup::from_generators(n * n, std::move(gens));
  if (G.order() != *order) throw std::logic_error("affine construction has the wrong order");
  return G;
}

namespace {

// first subgroup of S isomorphic to the model, with the isomorphism attached
std::optional<std::pair<SubgroupHandle, IsoWitness>> find_copy(const PermutationGroup& S,
                                                               const PermutationGroup& model,
                                                               const Limits& limits) {
  if (S.order() % model.order() != 0) return std::nullopt;
  if (S.order() == model.order()) {
    auto iso = isomorphism(model, S, limits);
    if (!iso) return std::nullopt;
    return std::make_pair(full_subgroup(S), *iso);
  }
  for (const SubgroupHandle& H : subgroups_up_to_conjugacy(S, limits)) {
    if (H.order() != model.order()) continue;
    auto iso = isomorphism(model, H.group(), limits);
    if (iso) return std::make_pair(H, *iso);
  }
  return std::nullopt;
}

}  // namespace

std::optional<QdWitness> p_prime_involves_qd(const PermutationGroup& G, std::uint64_t p, const Limits& limits) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p'-involvement is defined for odd primes");
  // |Qd(p)| divides |N_G(K)/K| for a witness K, which in turn divides |G|
  const std::optional<std::uint64_t> qd_order = qd_order_of(p);
  if (!qd_order || G.order() % *qd_order != 0) return std::nullopt;

  const PermutationGroup model = qd_group(p, limits);
  for (const SubgroupHandle& K : subgroups_up_to_conjugacy(G, limits)) {
    if (std::gcd(K.order(), p) != 1) continue;
    // the trivial subgroup's section is the group itself
    PermutationGroup S = K.order() == 1 ? G : section_group(G, K);
    if (S.order() % *qd_order != 0) continue;
    auto copy = find_copy(S, model, limits);
    if (copy) return QdWitness{p, K, S, copy->first, copy->second};
  }
  return std::nullopt;
}

QdFreeReport is_qd_free(const PermutationGroup& G, const Limits& limits) {
  QdFreeReport report;
  for (const PrimePower& pp : prime_decomposition(G)) {
    if (pp.prime == 2) continue;
    QdPrimeReport entry;
    entry.prime = pp.prime;
    const std::optional<std::uint64_t> qd_order = qd_order_of(pp.prime);
    if (!qd_order || *qd_order > G.order()) {
      entry.pruned_by_order = true;  // sections never exceed |G|
    } else {
      entry.witness = p_prime_involves_qd(G, pp.prime, limits);
      if (entry.witness) report.qd_free = false;
    }
    report.per_prime.push_back(std::move(entry));
  }
  return report;
}

}  // namespace isocert
