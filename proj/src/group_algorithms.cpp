#include "isocert/group_algorithms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "isocert/numtheory.hpp"

namespace isocert {

namespace {

std::vector<std::pair<std::uint64_t, std::size_t>> class_shape(const PermutationGroup& G) {
  std::vector<std::pair<std::uint64_t, std::size_t>> shape;
  for (const ConjugacyClass& c : G.conjugacy_classes()) shape.emplace_back(c.element_order, c.size());
  std::sort(shape.begin(), shape.end());
  return shape;
}

std::uint64_t center_order(const PermutationGroup& G) {
  std::uint64_t count = 0;
  for (const Permutation& g : G.elements()) {
    bool central = true;
    for (const Permutation& s : G.generators())
      if (!(g * s == s * g)) {
        central = false;
        break;
      }
    if (central) ++count;
  }
  return count;
}

std::map<std::uint64_t, std::size_t> order_histogram(const PermutationGroup& G) {
  std::map<std::uint64_t, std::size_t> out;
  for (const ConjugacyClass& c : G.conjugacy_classes()) out[c.element_order] += c.size();
  return out;
}

}  // namespace

std::optional<Permutation> conjugating_element(const PermutationGroup& G, const Permutation& x, const Permutation& y) {
  if (!G.contains(x) || !G.contains(y)) throw std::invalid_argument("conjugacy test on elements outside the group");
  if (x.order() != y.order()) return std::nullopt;
  for (const Permutation& g : G.elements())
    if (g * x * g.inverse() == y) return g;
  return std::nullopt;
}

bool is_conjugate(const PermutationGroup& G, const Permutation& x, const Permutation& y) {
  return conjugating_element(G, x, y).has_value();
}

SubgroupHandle full_subgroup(const PermutationGroup& G) { return SubgroupHandle(G, G.generators()); }

SubgroupHandle trivial_subgroup(const PermutationGroup& G) { return SubgroupHandle(G, {}); }

std::vector<Permutation> reduce_generators(int degree, const std::vector<Permutation>& elements) {
  std::vector<Permutation> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Permutation> gens;
  PermutationGroup current = PermutationGroup::trivial(degree);
  for (const Permutation& g : sorted) {
    if (g.is_identity() || current.contains(g)) continue;
    gens.push_back(g);
    current = PermutationGroup::from_generators(degree, gens);
    if (current.order() == sorted.size()) break;
  }
  return gens;
}

SubgroupHandle normalizer(const PermutationGroup& G, const SubgroupHandle& H) {
  std::vector<Permutation> members;
  for (const Permutation& g : G.elements()) {
    const Permutation ginv = g.inverse();
    bool normalizes = true;
    for (const Permutation& h : H.generators())
      if (!H.contains(g * h * ginv)) {
        normalizes = false;
        break;
      }
    if (normalizes) members.push_back(g);
  }
  return SubgroupHandle(G, reduce_generators(G.degree(), members));
}

SubgroupHandle centralizer(const PermutationGroup& G, const Permutation& x) {
  if (!G.contains(x)) throw std::invalid_argument("centralizer of an element outside the group");
  std::vector<Permutation> members;
  for (const Permutation& g : G.elements())
    if (g * x == x * g) members.push_back(g);
  return SubgroupHandle(G, reduce_generators(G.degree(), members));
}

SubgroupHandle centralizer(const PermutationGroup& G, const SubgroupHandle& H) {
  std::vector<Permutation> members;
  for (const Permutation& g : G.elements()) {
    bool commutes = true;
    for (const Permutation& h : H.generators())
      if (!(g * h == h * g)) {
        commutes = false;
        break;
      }
    if (commutes) members.push_back(g);
  }
  return SubgroupHandle(G, reduce_generators(G.degree(), members));
}

bool is_normal(const PermutationGroup& G, const SubgroupHandle& H) {
  for (const Permutation& g : G.generators()) {
    const Permutation ginv = g.inverse();
    for (const Permutation& h : H.generators())
      if (!H.contains(g * h * ginv)) return false;
  }
  return true;
}

SubgroupHandle normal_closure(const PermutationGroup& G, const std::vector<Permutation>& seed) {
  std::vector<Permutation> gens;
  for (const Permutation& s : seed) {
    if (!G.contains(s)) throw std::invalid_argument("normal closure seed outside the group");
    if (!s.is_identity()) gens.push_back(s);
  }
  PermutationGroup K = PermutationGroup::from_generators(G.degree(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Permutation& g : G.generators()) {
      const Permutation ginv = g.inverse();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Permutation c = g * gens[i] * ginv;
        if (!K.contains(c)) {
          gens.push_back(std::move(c));
          K = PermutationGroup::from_generators(G.degree(), gens);
          grew = true;
        }
      }
    }
  }
  return SubgroupHandle(G, reduce_generators(G.degree(), K.elements()));
}

SubgroupHandle derived_subgroup(const PermutationGroup& G) {
  std::vector<Permutation> commutators;
  const auto& gens = G.generators();
  for (const Permutation& a : gens)
    for (const Permutation& b : gens) commutators.push_back(a.inverse() * b.inverse() * a * b);
  return normal_closure(G, commutators);
}

bool is_perfect(const PermutationGroup& G) { return derived_subgroup(G).order() == G.order(); }

std::optional<Permutation> subgroup_conjugator(const PermutationGroup& G, const SubgroupHandle& A,
                                               const SubgroupHandle& B) {
  if (A.order() != B.order()) return std::nullopt;
  if (order_histogram(A.group()) != order_histogram(B.group())) return std::nullopt;
  for (const Permutation& g : G.elements()) {
    const Permutation ginv = g.inverse();
    bool maps = true;
    for (const Permutation& a : A.generators())
      if (!B.contains(g * a * ginv)) {
        maps = false;
        break;
      }
    if (maps) return g;  // image has full order, so inclusion is equality
  }
  return std::nullopt;
}

namespace {

// registry of subgroup classes with (order, order histogram) buckets so the
// quadratic conjugacy dedupe only runs within a bucket
class ClassRegistry {
 public:
  explicit ClassRegistry(const PermutationGroup& G) : G_(G) {}

  bool add(SubgroupHandle handle) {
    if (!exact_.insert(handle.group().elements()).second) return false;  // rediscovered verbatim
    auto key = std::make_pair(handle.order(), order_histogram(handle.group()));
    auto& bucket = buckets_[key];
    for (std::size_t idx : bucket)
      if (subgroup_conjugator(G_, classes_[idx], handle)) return false;
    bucket.push_back(classes_.size());
    classes_.push_back(std::move(handle));
    return true;
  }

  std::vector<SubgroupHandle>& classes() { return classes_; }

 private:
  const PermutationGroup& G_;
  std::vector<SubgroupHandle> classes_;
  std::set<std::vector<Permutation>> exact_;
  std::map<std::pair<std::uint64_t, std::map<std::uint64_t, std::size_t>>, std::vector<std::size_t>> buckets_;
};

// perfect subgroups seed the cyclic-extension walk; every perfect group of
// desk-scale order is generated by two elements, so sweeping pairs (class
// representative, element) finds one member of each conjugacy class
void seed_perfect_subgroups(const PermutationGroup& G, ClassRegistry& registry) {
  if (G.order() < 60 || G.order() % 12 != 0) return;  // perfect orders under 1001 are multiples of 12
  std::set<std::vector<Permutation>> seen;
  for (const ConjugacyClass& cls : G.conjugacy_classes()) {
    if (cls.representative.is_identity()) continue;
    for (const Permutation& y : G.elements()) {
      if (y.is_identity()) continue;
      auto H = PermutationGroup::from_generators(G.degree(), {cls.representative, y});
      if (H.order() < 60 || H.order() % 12 != 0) continue;
      if (!seen.insert(H.elements()).second) continue;
      if (is_perfect(H)) registry.add(SubgroupHandle(G, {cls.representative, y}));
    }
  }
}

}  // namespace

std::vector<SubgroupHandle> subgroups_up_to_conjugacy(const PermutationGroup& G, const Limits& limits) {
  if (G.order() > limits.max_order)
    throw ScaleLimitError("subgroup enumeration at order " + std::to_string(G.order()) +
                          " exceeds the scale limit of " + std::to_string(limits.max_order));
  ClassRegistry registry(G);
  registry.add(trivial_subgroup(G));
  registry.add(full_subgroup(G));
  seed_perfect_subgroups(G, registry);

  // grow by prime-index normal extensions: every chain from a subgroup's
  // perfect residual upward passes through steps H < K with H normal in K of
  // prime index, and any such K is generated by H plus one normalizing
  // element whose coset has prime order
  auto& classes = registry.classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const SubgroupHandle H = classes[i];  // copy: vector may reallocate
    if (H.order() == G.order()) continue;
    SubgroupHandle N = normalizer(G, H);
    for (const Permutation& g : N.group().elements()) {
      if (H.contains(g)) continue;
      std::uint64_t coset_order = 1;
      Permutation t = g;
      while (!H.contains(t)) {
        t = t * g;
        ++coset_order;
      }
      if (!is_prime(coset_order)) continue;
      std::vector<Permutation> gens = H.generators();
      gens.push_back(g);
      SubgroupHandle K(G, std::move(gens));
      if (K.order() != coset_order * H.order()) throw std::logic_error("prime extension produced a wrong order");
      registry.add(std::move(K));
    }
  }

  std::sort(classes.begin(), classes.end(), [](const SubgroupHandle& a, const SubgroupHandle& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.group().elements() < b.group().elements();
  });
  return classes;
}

PermutationGroup section_group(const PermutationGroup& G, const SubgroupHandle& K) {
  SubgroupHandle N = normalizer(G, K);
  if (N.order() == K.order()) return PermutationGroup::trivial(1);

  const auto& kelems = K.group().elements();
  auto coset_key = [&kelems](const Permutation& n) {
    Permutation best = kelems.front() * n;
    for (std::size_t i = 1; i < kelems.size(); ++i) {
      Permutation cand = kelems[i] * n;
      if (cand < best) best = cand;
    }
    return best;
  };

  std::vector<Permutation> keys;
  {
    std::set<Permutation> unique;
    for (const Permutation& n : N.group().elements()) unique.insert(coset_key(n));
    keys.assign(unique.begin(), unique.end());
  }
  auto key_index = [&keys](const Permutation& key) {
    return static_cast<int>(std::lower_bound(keys.begin(), keys.end(), key) - keys.begin());
  };

  const int points = static_cast<int>(keys.size());
  std::vector<Permutation> images;
  for (const Permutation& s : N.generators()) {
    std::vector<int> pi(points);
    for (int i = 0; i < points; ++i) pi[i] = key_index(coset_key(keys[i] * s));
    images.push_back(Permutation(std::move(pi)));
  }
  PermutationGroup section = PermutationGroup::from_generators(points, std::move(images));
  if (section.order() != N.order() / K.order()) throw std::logic_error("coset action kernel is not the subgroup");
  return section;
}

namespace {

// closure of the graph of a partial homomorphism candidate; false on any
// functional or injectivity conflict
bool pair_closure_consistent(const PermutationGroup& G, const std::vector<Permutation>& gens,
                             const std::vector<Permutation>& images, int hdeg, bool require_full) {
  std::unordered_map<Permutation, Permutation, PermHash> forward;
  std::unordered_map<Permutation, Permutation, PermHash> backward;
  std::vector<std::pair<Permutation, Permutation>> queue;
  queue.emplace_back(Permutation::identity(G.degree()), Permutation::identity(hdeg));
  forward.emplace(queue.front().first, queue.front().second);
  backward.emplace(queue.front().second, queue.front().first);
  const std::size_t assigned = std::min(gens.size(), images.size());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t k = 0; k < assigned; ++k) {
      Permutation x = queue[i].first * gens[k];
      Permutation y = queue[i].second * images[k];
      auto it = forward.find(x);
      if (it != forward.end()) {
        if (!(it->second == y)) return false;
        continue;
      }
      auto back = backward.find(y);
      if (back != backward.end()) return false;  // two preimages
      forward.emplace(x, y);
      backward.emplace(y, x);
      queue.emplace_back(std::move(x), std::move(y));
    }
  }
  return !require_full || queue.size() == G.order();
}

}  // namespace

std::optional<IsoWitness> isomorphism(const PermutationGroup& G, const PermutationGroup& H, const Limits& limits) {
  if (G.order() > limits.max_order || H.order() > limits.max_order)
    throw ScaleLimitError("isomorphism test exceeds the scale limit of " + std::to_string(limits.max_order));
  if (G.order() != H.order()) return std::nullopt;
  if (G.order() == 1) return IsoWitness{};
  if (class_shape(G) != class_shape(H)) return std::nullopt;
  if (center_order(G) != center_order(H)) return std::nullopt;
  SubgroupHandle dg = derived_subgroup(G);
  SubgroupHandle dh = derived_subgroup(H);
  if (dg.order() != dh.order()) return std::nullopt;
  if (order_histogram(section_group(G, dg)) != order_histogram(section_group(H, dh))) return std::nullopt;

  const std::vector<Permutation> gens = reduce_generators(G.degree(), G.elements());

  // candidate images, bucketed by the conjugation invariants of an element
  std::unordered_map<Permutation, std::pair<std::uint64_t, std::size_t>, PermHash> profile;
  for (const ConjugacyClass& cls : H.conjugacy_classes())
    for (const Permutation& m : cls.elements) profile.emplace(m, std::make_pair(cls.element_order, cls.size()));
  auto matches = [&](const Permutation& gen, const Permutation& img) {
    const auto& p = profile.at(img);
    std::size_t gsize = G.conjugacy_classes()[G.class_index_of(gen)].size();
    return p.first == gen.order() && p.second == gsize;
  };

  std::vector<Permutation> images;
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) return pair_closure_consistent(G, gens, images, H.degree(), true);
    if (depth == 0) {
      // up to composing with an inner automorphism the first image can be a
      // class representative
      for (const ConjugacyClass& cls : H.conjugacy_classes()) {
        if (!matches(gens[0], cls.representative)) continue;
        images.push_back(cls.representative);
        if (pair_closure_consistent(G, gens, images, H.degree(), false) && self(self, 1)) return true;
        images.pop_back();
      }
      return false;
    }
    for (const Permutation& y : H.elements()) {
      if (!matches(gens[depth], y)) continue;
      images.push_back(y);
      if (pair_closure_consistent(G, gens, images, H.degree(), false) && self(self, depth + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return IsoWitness{gens, images};
}

bool is_isomorphic(const PermutationGroup& G, const PermutationGroup& H, const Limits& limits) {
  return isomorphism(G, H, limits).has_value();
}

bool check_isomorphism_witness(const PermutationGroup& G, const PermutationGroup& H, const IsoWitness& witness) {
  if (witness.domain_generators.size() != witness.images.size()) return false;
  if (G.order() != H.order()) return false;
  if (G.order() == 1) return witness.domain_generators.empty();
  PermutationGroup spanned = PermutationGroup::from_generators(G.degree(), witness.domain_generators);
  if (!spanned.same_realization(G)) return false;
  for (const Permutation& y : witness.images)
    if (!H.contains(y)) return false;
  return pair_closure_consistent(G, witness.domain_generators, witness.images, H.degree(), true);
}

}  // namespace isocert
