#pragma once

// What the family says about the sphere it models: fixed-point dimensions per
// subgroup class, the rank-one isotropy and Euler-characteristic checks, and
// the sign calculus for finiteness obstructions under joins.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isocert/class_function.hpp"
#include "isocert/family.hpp"
#include "isocert/perm_group.hpp"

namespace isocert {

struct DimensionEntry {
  SubgroupHandle subgroup;
  std::uint64_t fixed_dim = 0;              // complex dimension of the subgroup's fixed subspace
  int rank = 0;                             // largest elementary abelian rank inside the subgroup
  std::optional<std::uint64_t> sphere_dim;  // 2*k*fixed_dim - 1, or nullopt for an empty fixed set
};

// fixed-point sphere dimensions over the compatible family's subgroup
// classes; an entry is empty exactly when the fixed subspace vanishes
struct DimensionFunction {
  std::uint64_t k = 1;
  std::uint64_t total_dim = 0;  // dimension at the trivial subgroup, 2*k*n - 1
  std::vector<DimensionEntry> entries;  // aligned with the family's subgroup list
};

DimensionFunction dimension_function(const CompatibleFamily& cf, std::uint64_t k);

struct IsotropyReport {
  bool rank_one = true;
  std::optional<SubgroupHandle> offender;  // a rank-two subgroup whose fixed sphere is nonempty
};

// nonempty fixed sets may only occur at subgroups of elementary abelian rank
// at most one
IsotropyReport verify_rank_one_isotropy(const CompatibleFamily& cf);

struct EulerReport {
  bool ok = true;               // every nontrivial prime-power element has Euler characteristic zero
  bool empty_certified = true;  // every composite-order element provably has an empty fixed set
  std::vector<std::string> notes;  // one line per composite-order element class
};

// odd spheres and empty sets both have Euler characteristic zero, so the
// check can only fail to certify emptiness for elements of composite order,
// whose fixed sets are intersections over their prime parts
EulerReport euler_fixed_check(const CompatibleFamily& cf, std::uint64_t k);

// alternating-sum virtual character of an odd-dimensional sphere: bottom and
// top homology both carry the trivial action, so the result vanishes
ClassFunction rational_euler_class(const ClassFunction& chi, std::uint64_t k);

// finite abelian group presented by invariant factors; element coordinates
// are read modulo the factors componentwise
struct ObstructionGroup {
  std::vector<std::uint64_t> invariant_factors;  // each >= 1
};

struct ObstructionValue {
  std::vector<std::int64_t> coords;
};

ObstructionValue reduce(const ObstructionGroup& ctx, ObstructionValue v);
bool is_zero(const ObstructionGroup& ctx, const ObstructionValue& v);
std::uint64_t additive_order(const ObstructionGroup& ctx, const ObstructionValue& v);

// obstruction of an (m-1)-dimensional sphere resolution
struct JoinSymbol {
  ObstructionValue value;
  std::uint64_t dim = 2;  // the m in "(m-1)-sphere"
};

// obstruction of the join: (-1)^{m2} s1 + (-1)^{m1} s2 at dimension
// parameter m1 + m2
JoinSymbol join_sigma(const ObstructionGroup& ctx, const JoinSymbol& a, const JoinSymbol& b);

struct JoinExponentResult {
  std::uint64_t exponent = 1;           // smallest l with a vanishing l-fold self-join
  std::vector<ObstructionValue> trace;  // obstruction after each join, ending at zero
};

// with m even every join adds the obstruction unchanged, so the exponent is
// its additive order; odd m is outside the complex-representation regime and
// rejected
JoinExponentResult join_exponent(const ObstructionGroup& ctx, const ObstructionValue& sigma, std::uint64_t m);
JoinExponentResult join_exponent(std::uint64_t order, std::uint64_t m);

}  // namespace isocert
