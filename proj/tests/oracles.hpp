#pragma once

// Slow reference implementations used only by tests. Everything here takes
// the dumbest correct route (plain closures, whole-set scans) on purpose, so
// the library's structured algorithms are checked against an independent
// path.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "isocert/class_function.hpp"
#include "isocert/cyclotomic.hpp"
#include "isocert/perm.hpp"
#include "isocert/perm_group.hpp"

namespace isocert::oracle {

// breadth-first closure of the generated subgroup, no stabilizer chain
std::vector<Permutation> closure(int degree, const std::vector<Permutation>& generators);

// conjugation orbits over a full element list; classes sorted by minimum
std::vector<std::vector<Permutation>> conjugacy_classes(const std::vector<Permutation>& elements);

// every subgroup (as a sorted element set), grown by single-element
// extensions from the trivial subgroup; feasible up to order ~48
std::set<std::vector<Permutation>> all_subgroups(int degree, const std::vector<Permutation>& elements);

std::map<std::uint64_t, std::size_t> order_histogram(const std::vector<Permutation>& elements);

// orbits of subgroups (given as sorted element sets) under conjugation by
// every group element; each orbit is reported by its minimal member
std::set<std::vector<Permutation>> subgroup_class_minima(const std::vector<Permutation>& group_elements,
                                                         const std::set<std::vector<Permutation>>& subgroups);

// every irreducible character of an abelian group, found by enumerating the
// homomorphisms into the roots of unity generator by generator; rows are one
// value per conjugacy class in class order, in the conductor of the exponent
std::vector<std::vector<CyclotomicNumber>> abelian_character_rows(const PermutationGroup& G);

// the fusion certificate by sheer force: chi(g x g^-1) = chi(x) over every
// g in G and x in P whose conjugate lands back in P
bool fusion_stable_brute(const PermutationGroup& G, const PermutationGroup& P, const ClassFunction& chi);

}  // namespace isocert::oracle
