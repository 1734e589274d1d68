#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "isocert/errors.hpp"
#include "isocert/group_algorithms.hpp"
#include "isocert/perm.hpp"
#include "isocert/perm_group.hpp"
#include "oracles.hpp"

using namespace isocert;

namespace {

PermutationGroup from_cycles(int degree, std::initializer_list<const char*> gens) {
  std::vector<Permutation> parsed;
  for (const char* g : gens) parsed.push_back(Permutation::parse_cycles(g, degree));
  return PermutationGroup::from_generators(degree, std::move(parsed));
}

SubgroupHandle sub(const PermutationGroup& G, std::initializer_list<const char*> gens) {
  std::vector<Permutation> parsed;
  for (const char* g : gens) parsed.push_back(Permutation::parse_cycles(g, G.degree()));
  return SubgroupHandle(G, std::move(parsed));
}

PermutationGroup s4() { return from_cycles(4, {"(1,2,3,4)", "(1,2)"}); }
PermutationGroup a4() { return from_cycles(4, {"(1,2,3)", "(1,2)(3,4)"}); }

}  // namespace

TEST_CASE("conjugating elements within and across classes") {
  auto G = s4();
  Permutation a = Permutation::parse_cycles("(1,2)", 4);
  Permutation b = Permutation::parse_cycles("(3,4)", 4);
  Permutation c = Permutation::parse_cycles("(1,2)(3,4)", 4);

  auto g = conjugating_element(G, a, b);
  REQUIRE(g.has_value());
  CHECK(*g * a * g->inverse() == b);

  // same element order, different cycle type: the full scan has to fail
  CHECK(!is_conjugate(G, a, c));
  CHECK(is_conjugate(G, a, a));

  auto H = a4();
  CHECK_THROWS_AS(is_conjugate(H, a, b), std::invalid_argument);
}

TEST_CASE("reduced generating sets regenerate the group") {
  for (const auto& G : {s4(), a4(), from_cycles(6, {"(1,2,3,4,5,6)"})}) {
    auto gens = reduce_generators(G.degree(), G.elements());
    auto rebuilt = PermutationGroup::from_generators(G.degree(), gens);
    CHECK(rebuilt.same_realization(G));
    // greedy growth at least doubles the order at every step
    CHECK((std::uint64_t(1) << gens.size()) <= G.order());
  }
}

TEST_CASE("centralizers in the symmetric group on 4 points") {
  auto G = s4();
  auto C = centralizer(G, Permutation::parse_cycles("(1,2)", 4));
  CHECK(C.order() == 4);  // generated by (1,2) and (3,4)
  CHECK(C.contains(Permutation::parse_cycles("(3,4)", 4)));

  auto Z = centralizer(G, sub(G, {"(1,2,3)"}));
  CHECK(Z.order() == 3);  // a 3-cycle is self-centralizing here

  CHECK_THROWS_AS(centralizer(a4(), Permutation::parse_cycles("(1,2)", 4)), std::invalid_argument);
}

TEST_CASE("normalizers and normality") {
  auto G = s4();
  auto P3 = sub(G, {"(1,2,3)"});
  auto N = normalizer(G, P3);
  CHECK(N.order() == 6);  // four conjugates of the 3-cycle subgroup
  CHECK(!is_normal(G, P3));

  auto V = sub(G, {"(1,2)(3,4)", "(1,3)(2,4)"});
  CHECK(is_normal(G, V));
  CHECK(normalizer(G, V).order() == 24);

  auto T = sub(G, {"(1,2)"});
  CHECK(normalizer(G, T).order() == 4);
  CHECK(!is_normal(G, T));
}

TEST_CASE("normal closures and derived subgroups") {
  auto G = s4();
  CHECK(normal_closure(G, {Permutation::parse_cycles("(1,2)", 4)}).order() == 24);
  CHECK(normal_closure(G, {Permutation::parse_cycles("(1,2)(3,4)", 4)}).order() == 4);
  CHECK(normal_closure(G, {}).order() == 1);

  CHECK(derived_subgroup(G).order() == 12);
  CHECK(derived_subgroup(a4()).order() == 4);
  auto D8 = from_cycles(4, {"(1,2,3,4)", "(2,4)"});
  CHECK(derived_subgroup(D8).order() == 2);

  CHECK(!is_perfect(G));
  CHECK(is_perfect(from_cycles(5, {"(1,2,3,4,5)", "(3,4,5)"})));
}

TEST_CASE("subgroup conjugator distinguishes the two Klein four classes") {
  auto G = s4();
  auto Vn = sub(G, {"(1,2)(3,4)", "(1,3)(2,4)"});
  auto Vt = sub(G, {"(1,2)", "(3,4)"});
  auto Vt2 = sub(G, {"(1,3)", "(2,4)"});

  CHECK(!subgroup_conjugator(G, Vn, Vt).has_value());
  auto g = subgroup_conjugator(G, Vt, Vt2);
  REQUIRE(g.has_value());
  for (const Permutation& h : Vt.generators()) CHECK(Vt2.contains(*g * h * g->inverse()));
}

TEST_CASE("subgroup classes match the exhaustive oracle") {
  struct Case {
    PermutationGroup G;
    std::size_t classes;
  };
  const Case cases[] = {
      {s4(), 11},
      {a4(), 5},
      {from_cycles(4, {"(1,2,3,4)", "(2,4)"}), 8},                      // dihedral of order 8
      {from_cycles(8, {"(1,3,2,4)(5,7,6,8)", "(1,5,2,6)(3,8,4,7)"}), 6},  // quaternion
      {from_cycles(6, {"(1,2,3,4,5,6)"}), 4},
      {from_cycles(3, {"(1,2,3)", "(1,2)"}), 4},
  };
  for (const Case& c : cases) {
    auto classes = subgroups_up_to_conjugacy(c.G);
    CHECK(classes.size() == c.classes);

    // sorted by (order, element list) and pairwise non-conjugate
    for (std::size_t i = 0; i + 1 < classes.size(); ++i) {
      auto ka = std::make_pair(classes[i].order(), classes[i].group().elements());
      auto kb = std::make_pair(classes[i + 1].order(), classes[i + 1].group().elements());
      CHECK(ka < kb);
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j)
        CHECK(!subgroup_conjugator(c.G, classes[i], classes[j]).has_value());

    // one representative per orbit of the oracle's full subgroup list
    auto all = oracle::all_subgroups(c.G.degree(), c.G.elements());
    auto minima = oracle::subgroup_class_minima(c.G.elements(), all);
    REQUIRE(minima.size() == c.classes);
    std::set<std::vector<Permutation>> reported;
    for (const SubgroupHandle& h : classes) {
      auto orbit_min = *oracle::subgroup_class_minima(c.G.elements(), {h.group().elements()}).begin();
      reported.insert(orbit_min);
    }
    CHECK(reported == minima);
  }
}

TEST_CASE("subgroup enumeration respects the scale limit") {
  CHECK_THROWS_AS(subgroups_up_to_conjugacy(s4(), Limits{10}), ScaleLimitError);
}

TEST_CASE("sections by normal subgroups") {
  auto G = s4();
  auto V = sub(G, {"(1,2)(3,4)", "(1,3)(2,4)"});
  auto Q = section_group(G, V);
  CHECK(Q.order() == 6);
  CHECK(!Q.is_abelian());  // the symmetric group on 3 letters

  auto A = sub(G, {"(1,2,3)", "(1,2)(3,4)"});
  CHECK(section_group(G, A).order() == 2);

  auto H = a4();
  auto VH = sub(H, {"(1,2)(3,4)", "(1,3)(2,4)"});
  CHECK(section_group(H, VH).order() == 3);

  // self-normalizing subgroup: the section collapses to the trivial group
  auto P3 = SubgroupHandle(H, {Permutation::parse_cycles("(1,2,3)", 4)});
  auto S = section_group(H, P3);
  CHECK(S.order() == 1);
  CHECK(S.degree() == 1);
}

TEST_CASE("isomorphism between different realizations") {
  auto D8a = from_cycles(4, {"(1,2,3,4)", "(2,4)"});
  auto D8b = from_cycles(5, {"(2,3,4,5)", "(3,5)"});
  auto w = isomorphism(D8a, D8b);
  REQUIRE(w.has_value());
  CHECK(check_isomorphism_witness(D8a, D8b, *w));

  // tampering with one image breaks the witness
  IsoWitness bad = *w;
  bad.images.front() = Permutation::identity(D8b.degree());
  CHECK(!check_isomorphism_witness(D8a, D8b, bad));

  auto E9a = from_cycles(6, {"(1,2,3)", "(4,5,6)"});
  auto E9b = from_cycles(6, {"(1,2,3)(4,5,6)", "(1,2,3)(4,6,5)"});
  REQUIRE(E9a.order() == 9);
  REQUIRE(E9b.order() == 9);
  auto w2 = isomorphism(E9a, E9b);
  REQUIRE(w2.has_value());
  CHECK(check_isomorphism_witness(E9a, E9b, *w2));
}

TEST_CASE("non-isomorphic groups of equal order are rejected") {
  auto D8 = from_cycles(4, {"(1,2,3,4)", "(2,4)"});
  auto Q8 = from_cycles(8, {"(1,3,2,4)(5,7,6,8)", "(1,5,2,6)(3,8,4,7)"});
  auto C8 = from_cycles(8, {"(1,2,3,4,5,6,7,8)"});
  CHECK(!is_isomorphic(D8, Q8));
  CHECK(!is_isomorphic(D8, C8));
  CHECK(!is_isomorphic(Q8, C8));

  // both have 26 elements of order 3, but only one is abelian
  auto H27 = from_cycles(9, {"(1,4,7)(2,5,8)(3,6,9)", "(1,2,3)(4,5,6)(7,8,9)", "(2,5,8)(3,9,6)"});
  auto E27 = from_cycles(9, {"(1,2,3)", "(4,5,6)", "(7,8,9)"});
  REQUIRE(H27.order() == 27);
  REQUIRE(E27.order() == 27);
  CHECK(oracle::order_histogram(H27.elements()) == oracle::order_histogram(E27.elements()));
  CHECK(!is_isomorphic(H27, E27));

  CHECK_THROWS_AS(is_isomorphic(D8, Q8, Limits{4}), ScaleLimitError);
}

TEST_CASE("witness checking rejects wrong shapes") {
  auto G = s4();
  auto H = from_cycles(5, {"(2,3,4,5)", "(2,3)"});
  REQUIRE(H.order() == 24);

  auto w = isomorphism(G, H);
  REQUIRE(w.has_value());
  CHECK(check_isomorphism_witness(G, H, *w));

  IsoWitness short_witness = *w;
  short_witness.images.pop_back();
  CHECK(!check_isomorphism_witness(G, H, short_witness));

  IsoWitness partial = *w;
  partial.domain_generators.pop_back();
  partial.images.pop_back();
  // generators no longer span the whole group
  if (PermutationGroup::from_generators(4, partial.domain_generators).order() < 24)
    CHECK(!check_isomorphism_witness(G, H, partial));
}
