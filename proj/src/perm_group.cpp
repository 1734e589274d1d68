#include "isocert/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "isocert/errors.hpp"

namespace isocert {

namespace {

void recompute_level(ChainLevel& level, const std::vector<Permutation>& strong, int degree) {
  // effective generators at this level: every strong generator fixing the
  // earlier base points also fixes ours or moves it within the orbit; the
  // caller passes exactly the ones that fix all earlier bases
  level.orbit.clear();
  level.transversal.clear();
  level.position.assign(degree, -1);
  level.orbit.push_back(level.base_point);
  level.transversal.push_back(Permutation::identity(degree));
  level.position[level.base_point] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    for (const Permutation& s : strong) {
      int target = s.image(level.orbit[i]);
      if (level.position[target] < 0) {
        level.position[target] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(target);
        level.transversal.push_back(level.transversal[i] * s);
      }
    }
  }
  level.generators = strong;
}

}  // namespace

struct PermutationGroup::Impl {
  int degree = 1;
  std::vector<Permutation> generators;
  std::vector<ChainLevel> levels;
  std::uint64_t order = 1;

  mutable std::once_flag elements_once;
  mutable std::vector<Permutation> elements;
  mutable std::once_flag classes_once;
  mutable std::vector<ConjugacyClass> classes;
  mutable std::unordered_map<Permutation, std::size_t, PermHash> class_of;
  mutable std::once_flag exponent_once;
  mutable std::uint64_t exponent = 1;

  // sift through levels starting at `from`; returns the residue and the level
  // it stopped at (residue is the identity iff g lies in the chain group)
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    std::size_t lv = from;
    while (lv < levels.size() && !g.is_identity()) {
      const Permutation* rep = levels[lv].coset_rep(g.image(levels[lv].base_point));
      if (rep == nullptr) return {std::move(g), lv};
      g = g * rep->inverse();
      ++lv;
    }
    return {std::move(g), lv};
  }

  // all strong generators fixing bases[0..lv-1]
  std::vector<Permutation> strong_at(const std::vector<Permutation>& strong, std::size_t lv) const {
    std::vector<Permutation> out;
    for (const Permutation& s : strong) {
      bool fixes = true;
      for (std::size_t i = 0; i < lv && fixes; ++i) fixes = s.image(levels[i].base_point) == levels[i].base_point;
      if (fixes) out.push_back(s);
    }
    return out;
  }

  void rebuild_orbits(const std::vector<Permutation>& strong) {
    for (std::size_t lv = 0; lv < levels.size(); ++lv) recompute_level(levels[lv], strong_at(strong, lv), degree);
  }

  // returns true when the chain changed
  bool add_strong(std::vector<Permutation>& strong, Permutation g, std::size_t from) {
    auto [residue, lv] = sift(std::move(g), from);
    if (residue.is_identity()) return false;
    if (lv == levels.size()) {
      ChainLevel fresh;
      fresh.base_point = residue.smallest_moved_point();
      levels.push_back(std::move(fresh));
    }
    strong.push_back(std::move(residue));
    rebuild_orbits(strong);
    return true;
  }

  void build_chain() {
    std::vector<Permutation> strong;
    for (const Permutation& g : generators) add_strong(strong, g, 0);
    // close under Schreier generators until a full pass adds nothing
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t lv = 0; lv < levels.size() && !changed; ++lv) {
        const ChainLevel& level = levels[lv];
        for (std::size_t i = 0; i < level.orbit.size() && !changed; ++i) {
          for (const Permutation& s : level.generators) {
            int target = s.image(level.orbit[i]);
            const Permutation* back = level.coset_rep(target);
            assert(back != nullptr);
            Permutation schreier = level.transversal[i] * s * back->inverse();
            if (add_strong(strong, std::move(schreier), lv + 1)) {
              changed = true;
              break;
            }
          }
        }
      }
    }
    order = 1;
    for (const ChainLevel& level : levels) order *= static_cast<std::uint64_t>(level.orbit.size());
  }

  void compute_elements() const {
    std::unordered_set<Permutation, PermHash> seen;
    std::vector<Permutation> queue;
    queue.push_back(Permutation::identity(degree));
    seen.insert(queue.front());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const Permutation& g : generators) {
        Permutation next = queue[i] * g;
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
    std::sort(queue.begin(), queue.end());
    if (queue.size() != order) throw std::logic_error("element closure disagrees with stabilizer chain order");
    elements = std::move(queue);
  }

  void compute_classes() const;
};

void PermutationGroup::Impl::compute_classes() const {
  const std::vector<Permutation>& all = elements;
  std::unordered_set<Permutation, PermHash> visited;
  std::vector<ConjugacyClass> out;
  std::vector<Permutation> inverses;
  inverses.reserve(generators.size());
  for (const Permutation& g : generators) inverses.push_back(g.inverse());
  for (const Permutation& x : all) {  // ascending, so each new orbit starts at its minimum
    if (visited.count(x)) continue;
    std::vector<Permutation> members{x};
    visited.insert(x);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t k = 0; k < generators.size(); ++k) {
        Permutation y = generators[k] * members[i] * inverses[k];
        if (visited.insert(y).second) members.push_back(std::move(y));
      }
    }
    std::sort(members.begin(), members.end());
    ConjugacyClass cls;
    cls.representative = members.front();
    cls.element_order = cls.representative.order();
    cls.elements = std::move(members);
    out.push_back(std::move(cls));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const Permutation& m : out[i].elements) class_of.emplace(m, i);
  classes = std::move(out);
}

PermutationGroup::PermutationGroup() : PermutationGroup(trivial(1)) {}

PermutationGroup PermutationGroup::trivial(int degree) { return from_generators(degree, {}); }

PermutationGroup PermutationGroup::from_generators(int degree, std::vector<Permutation> generators) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  for (Permutation& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(impl->generators.begin(), impl->generators.end(), g) != impl->generators.end()) continue;
    impl->generators.push_back(std::move(g));
  }
  impl->build_chain();
  return PermutationGroup(std::move(impl));
}

int PermutationGroup::degree() const { return impl_->degree; }
const std::vector<Permutation>& PermutationGroup::generators() const { return impl_->generators; }
std::uint64_t PermutationGroup::order() const { return impl_->order; }
const std::vector<ChainLevel>& PermutationGroup::chain() const { return impl_->levels; }

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != impl_->degree) return false;
  return impl_->sift(g, 0).first.is_identity();
}

bool PermutationGroup::is_abelian() const {
  const auto& gens = impl_->generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

const std::vector<Permutation>& PermutationGroup::elements() const {
  std::call_once(impl_->elements_once, [this] { impl_->compute_elements(); });
  return impl_->elements;
}

const std::vector<ConjugacyClass>& PermutationGroup::conjugacy_classes() const {
  elements();
  std::call_once(impl_->classes_once, [this] { impl_->compute_classes(); });
  return impl_->classes;
}

std::size_t PermutationGroup::class_index_of(const Permutation& g) const {
  conjugacy_classes();
  auto it = impl_->class_of.find(g);
  if (it == impl_->class_of.end()) throw std::invalid_argument("element outside the group");
  return it->second;
}

std::uint64_t PermutationGroup::exponent() const {
  std::call_once(impl_->exponent_once, [this] {
    std::uint64_t e = 1;
    for (const ConjugacyClass& cls : conjugacy_classes()) e = std::lcm(e, cls.element_order);
    impl_->exponent = e;
  });
  return impl_->exponent;
}

bool PermutationGroup::same_realization(const PermutationGroup& other) const {
  if (impl_ == other.impl_) return true;
  if (degree() != other.degree() || order() != other.order()) return false;
  return elements() == other.elements();
}

SubgroupHandle::SubgroupHandle(PermutationGroup ambient, std::vector<Permutation> generators)
    : ambient_(std::move(ambient)) {
  for (const Permutation& g : generators)
    if (!ambient_.contains(g)) throw std::invalid_argument("subgroup generator outside the ambient group");
  self_ = PermutationGroup::from_generators(ambient_.degree(), std::move(generators));
}

}  // namespace isocert
