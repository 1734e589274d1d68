#pragma once

// End-to-end pipeline: rank gate, Qd involvement gate, per-prime effective
// searches, family assembly, sphere consequences. The outcome is a
// Certificate that serializes to canonical text and can be re-verified from
// its raw data alone, without repeating any search.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isocert/cyclotomic.hpp"
#include "isocert/errors.hpp"
#include "isocert/perm.hpp"
#include "isocert/perm_group.hpp"

namespace isocert {

enum class Verdict { RankOne, RankTooHigh, NotQdFree, Certified, SearchInconclusive };

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

struct CertifyOptions {
  std::map<std::uint64_t, std::uint64_t> dimension_bounds;  // per prime; defaults to the Sylow order
  std::uint64_t k = 1;                                      // join multiplier for the sphere model
  std::string label;                                        // catalog id or file stem, may be empty
  Limits limits;
};

struct SearchRecord {
  std::uint64_t bound = 0;
  bool found = false;
};

// a character as stored in certificates: multiplicities over the Sylow
// table's irreducibles plus the values per conjugacy class
struct CharacterRecord {
  std::uint64_t dimension = 0;
  std::vector<std::uint64_t> multiplicities;
  std::vector<CyclotomicNumber> values;
};

struct QdRecord {
  std::uint64_t prime = 0;
  std::string status;  // "free", "pruned", or "involved"
  std::vector<Permutation> k_generators;      // on the group's points
  int section_degree = 0;                     // coset points of N(K)/K
  std::vector<Permutation> copy_generators;   // on the section's points
  std::vector<Permutation> embedding_domain;  // generators of the reference Qd(p)
  std::vector<Permutation> embedding_images;  // their images inside the copy
};

struct SubgroupRecord {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  int rank = 0;
  std::uint64_t prime = 2;  // the family entry the values came from
  Permutation conjugator;
  std::vector<CyclotomicNumber> values;
  std::optional<std::uint64_t> sphere_dim;  // nullopt is an empty fixed set
};

struct Certificate {
  std::string label;
  int degree = 1;
  std::uint64_t order = 1;
  std::vector<Permutation> generators;
  std::uint64_t k = 1;

  int rank = 0;
  std::map<std::uint64_t, int> rank_per_prime;
  std::map<std::uint64_t, std::vector<Permutation>> rank_witnesses;

  Verdict verdict = Verdict::SearchInconclusive;
  std::string note;

  std::vector<QdRecord> qd;  // odd primes ascending; present once the rank gate passes

  std::map<std::uint64_t, SearchRecord> searches;
  std::map<std::uint64_t, std::vector<Permutation>> sylow_generators;
  std::map<std::uint64_t, CharacterRecord> effective;

  std::uint64_t family_dimension = 0;  // zero while the family stage is not reached
  std::map<std::uint64_t, CharacterRecord> family;
  std::vector<SubgroupRecord> subgroups;
  std::uint64_t sphere_dimension = 0;

  bool flag_compatible = false;
  bool flag_rank_one_isotropy = false;
  bool flag_euler = false;
  bool flag_empty_certified = false;
};

// runs the pipeline; deterministic, so certificates for equal inputs are
// byte-identical. Scale limit errors carry the stage they interrupted.
Certificate certify(const PermutationGroup& G, const CertifyOptions& options = {});

// canonical line-based text with the leading format tag; no timestamps, no
// insignificant whitespace
std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text);
Certificate load_certificate(const std::string& path);

// structural mismatch between certificate and group throws; any failed
// re-check of the recorded data returns false
bool verify_certificate(const Certificate& cert, const PermutationGroup& G);

}  // namespace isocert
