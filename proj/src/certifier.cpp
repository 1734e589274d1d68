#include "isocert/certifier.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "isocert/character_table.hpp"
#include "isocert/class_function.hpp"
#include "isocert/effective.hpp"
#include "isocert/family.hpp"
#include "isocert/group_algorithms.hpp"
#include "isocert/pstructure.hpp"
#include "isocert/spheremodel.hpp"

namespace isocert {

namespace {

// keeps hostile certificates from making the parser allocate absurd
// permutation domains
constexpr std::uint64_t kMaxCertificateDegree = 100000;

template <typename Fn>
auto run_stage(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ScaleLimitError& e) {
    throw ScaleLimitError(std::string(stage) + ": " + e.what());
  }
}

std::uint64_t p_part_of(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  return part;
}

// does p^3 (p^2 - 1) exceed order, computed without overflowing 64 bits
bool qd_order_exceeds(std::uint64_t p, std::uint64_t order) {
  if (p > 0xFFFFFFFFull) return true;
  std::uint64_t value = 1;
  const std::uint64_t factors[4] = {p, p, p, p * p - 1};
  for (const std::uint64_t f : factors) {
    if (value > order / f) return true;
    value *= f;
  }
  return value > order;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string perm_list(const std::vector<Permutation>& perms) {
  if (perms.empty()) return "()";
  std::vector<std::string> parts;
  for (const Permutation& g : perms) parts.push_back(g.cycle_string());
  return join(parts, "; ");
}

std::string value_list(const std::vector<CyclotomicNumber>& values) {
  std::vector<std::string> parts;
  for (const CyclotomicNumber& v : values) parts.push_back(v.to_string());
  return join(parts, "; ");
}

std::string mult_list(const std::vector<std::uint64_t>& mults) {
  std::vector<std::string> parts;
  for (std::uint64_t m : mults) parts.push_back(std::to_string(m));
  return join(parts, ",");
}

std::vector<std::string> split_on(const std::string& text, const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + sep.size();
  }
}

std::uint64_t parse_u64(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a number, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range: '" + text + "'");
  }
}

int parse_small_int(const std::string& text) {
  const std::uint64_t n = parse_u64(text);
  if (n > kMaxCertificateDegree) throw ParseError("number out of range: '" + text + "'");
  return static_cast<int>(n);
}

bool parse_bool(const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw ParseError("expected true or false, got '" + text + "'");
}

std::vector<Permutation> parse_perm_list(const std::string& text, int degree) {
  std::vector<Permutation> out;
  for (const std::string& part : split_on(text, "; ")) out.push_back(Permutation::parse_cycles(part, degree));
  return out;
}

std::vector<CyclotomicNumber> parse_value_list(const std::string& text) {
  std::vector<CyclotomicNumber> out;
  for (const std::string& part : split_on(text, "; ")) out.push_back(CyclotomicNumber::parse(part));
  return out;
}

std::vector<std::uint64_t> parse_mult_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const std::string& part : split_on(text, ",")) out.push_back(parse_u64(part));
  return out;
}

// splits "name[7]" or "name[7].field" into its pieces
struct IndexedKey {
  std::string name;
  std::uint64_t index = 0;
  std::string field;
};

std::optional<IndexedKey> match_indexed(const std::string& key) {
  const std::size_t open = key.find('[');
  const std::size_t close = key.find(']');
  if (open == std::string::npos || close == std::string::npos || close < open + 2) return std::nullopt;
  const std::string digits = key.substr(open + 1, close - open - 1);
  if (digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  IndexedKey out;
  out.name = key.substr(0, open);
  out.index = parse_u64(digits);
  if (close + 1 < key.size()) {
    if (key[close + 1] != '.') return std::nullopt;
    out.field = key.substr(close + 2);
  }
  return out;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::RankOne:
      return "RankOne";
    case Verdict::RankTooHigh:
      return "RankTooHigh";
    case Verdict::NotQdFree:
      return "NotQdFree";
    case Verdict::Certified:
      return "Certified";
    case Verdict::SearchInconclusive:
      return "SearchInconclusive";
  }
  throw std::logic_error("unhandled verdict");
}

Verdict verdict_from_name(const std::string& name) {
  if (name == "RankOne") return Verdict::RankOne;
  if (name == "RankTooHigh") return Verdict::RankTooHigh;
  if (name == "NotQdFree") return Verdict::NotQdFree;
  if (name == "Certified") return Verdict::Certified;
  if (name == "SearchInconclusive") return Verdict::SearchInconclusive;
  throw ParseError("unknown verdict '" + name + "'");
}

Certificate certify(const PermutationGroup& G, const CertifyOptions& options) {
  if (options.k == 0) throw std::invalid_argument("join multiplier must be positive");
  if (G.order() > options.limits.max_order)
    throw ScaleLimitError("certify: group order " + std::to_string(G.order()) +
                          " exceeds the limit " + std::to_string(options.limits.max_order));

  Certificate cert;
  cert.label = options.label;
  cert.degree = G.degree();
  cert.order = G.order();
  cert.generators = G.generators();
  cert.k = options.k;

  const RankProfile profile = run_stage("rank stage", [&] { return rank_profile(G); });
  cert.rank = profile.rank;
  for (const auto& [p, r] : profile.per_prime) cert.rank_per_prime[p] = r;
  for (const auto& [p, witness] : profile.witnesses) cert.rank_witnesses[p] = witness.generators();

  if (cert.rank <= 1) {
    cert.verdict = Verdict::RankOne;
    cert.note = "rank " + std::to_string(cert.rank) +
                " is at most one; the rank-two pipeline does not apply";
    return cert;
  }
  if (cert.rank >= 3) {
    cert.verdict = Verdict::RankTooHigh;
    cert.note = "rank " + std::to_string(cert.rank) +
                " exceeds two; the rank-two pipeline does not apply";
    return cert;
  }

  const QdFreeReport involvement =
      run_stage("involvement stage", [&] { return is_qd_free(G, options.limits); });
  for (const QdPrimeReport& report : involvement.per_prime) {
    QdRecord rec;
    rec.prime = report.prime;
    if (report.pruned_by_order) {
      rec.status = "pruned";
    } else if (report.witness) {
      rec.status = "involved";
      rec.k_generators = report.witness->k.generators();
      rec.section_degree = report.witness->section.degree();
      rec.copy_generators = report.witness->qd_copy.generators();
      rec.embedding_domain = report.witness->embedding.domain_generators;
      rec.embedding_images = report.witness->embedding.images;
    } else {
      rec.status = "free";
    }
    cert.qd.push_back(std::move(rec));
  }
  if (!involvement.qd_free) {
    for (const QdRecord& rec : cert.qd) {
      if (rec.status != "involved") continue;
      cert.verdict = Verdict::NotQdFree;
      cert.note = "Qd(" + std::to_string(rec.prime) + ") is involved in a section of the group";
      return cert;
    }
  }

  std::map<std::uint64_t, EffectiveCharacter> solutions;
  std::vector<std::string> misses;
  for (const PrimePower& pp : prime_decomposition(G)) {
    std::optional<std::uint64_t> bound;
    if (const auto it = options.dimension_bounds.find(pp.prime); it != options.dimension_bounds.end())
      bound = it->second;
    const EffectiveSearchSpec spec = effective_search_spec(G, pp.prime, bound);
    const EffectiveSearchResult result =
        run_stage("search stage", [&] { return search_p_effective(spec); });
    cert.searches[pp.prime] = SearchRecord{spec.dimension_bound, result.solution.has_value()};
    if (!result.solution) {
      misses.push_back("no " + std::to_string(pp.prime) +
                       "-effective character of dimension at most " +
                       std::to_string(spec.dimension_bound));
      continue;
    }
    cert.sylow_generators[pp.prime] = result.solution->character.domain().generators();
    cert.effective[pp.prime] = CharacterRecord{result.solution->dimension,
                                               result.solution->multiplicities,
                                               result.solution->character.values()};
    solutions.emplace(pp.prime, *result.solution);
  }
  if (!misses.empty()) {
    cert.verdict = Verdict::SearchInconclusive;
    cert.note = join(misses, "; ");
    return cert;
  }

  const SylowFamily fam = run_stage("family stage", [&] { return assemble_family(G, solutions); });
  const CompatibleFamily cf = run_stage("family stage", [&] { return compatible_family(fam); });
  const CompatibilityReport compat =
      run_stage("family stage", [&] { return verify_compatibility(cf); });
  cert.family_dimension = fam.dimension;
  for (const auto& [p, entry] : fam.entries)
    cert.family[p] = CharacterRecord{fam.dimension, entry.multiplicities, entry.character.values()};

  const DimensionFunction dims =
      run_stage("sphere stage", [&] { return dimension_function(cf, options.k); });
  const IsotropyReport isotropy =
      run_stage("sphere stage", [&] { return verify_rank_one_isotropy(cf); });
  const EulerReport euler = run_stage("sphere stage", [&] { return euler_fixed_check(cf, options.k); });
  bool euler_classes_zero = true;
  for (const auto& [p, entry] : fam.entries) {
    const ClassFunction zero = rational_euler_class(entry.character, options.k);
    for (const CyclotomicNumber& v : zero.values())
      if (!v.is_zero()) euler_classes_zero = false;
  }

  for (std::size_t i = 0; i < cf.subgroups.size(); ++i) {
    SubgroupRecord rec;
    rec.generators = cf.subgroups[i].generators();
    rec.order = cf.subgroups[i].order();
    rec.rank = dims.entries[i].rank;
    rec.prime = cf.characters[i].prime;
    rec.conjugator = cf.characters[i].conjugator;
    rec.values = cf.characters[i].character.values();
    rec.sphere_dim = dims.entries[i].sphere_dim;
    cert.subgroups.push_back(std::move(rec));
  }
  cert.sphere_dimension = dims.total_dim;
  cert.flag_compatible = compat.compatible;
  cert.flag_rank_one_isotropy = isotropy.rank_one;
  cert.flag_euler = euler.ok && euler_classes_zero;
  cert.flag_empty_certified = euler.empty_certified;

  // every gate was passed to get here, so a false flag is a bug, not a verdict
  if (!cert.flag_compatible || !cert.flag_rank_one_isotropy || !cert.flag_euler)
    throw std::logic_error("verification flags failed after a complete pipeline run");

  cert.verdict = Verdict::Certified;
  return cert;
}

std::string serialize_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "isocert-v1\n";
  if (!cert.label.empty()) out << "label: " << cert.label << "\n";
  out << "degree: " << cert.degree << "\n";
  out << "order: " << cert.order << "\n";
  for (const Permutation& g : cert.generators) out << "generator: " << g.cycle_string() << "\n";
  out << "k: " << cert.k << "\n";
  out << "rank: " << cert.rank << "\n";
  for (const auto& [p, r] : cert.rank_per_prime) {
    out << "rank[" << p << "]: " << r << "\n";
    if (const auto it = cert.rank_witnesses.find(p); it != cert.rank_witnesses.end())
      out << "rank[" << p << "].witness: " << perm_list(it->second) << "\n";
  }
  out << "verdict: " << verdict_name(cert.verdict) << "\n";
  if (!cert.note.empty()) out << "note: " << cert.note << "\n";
  for (const QdRecord& rec : cert.qd) {
    out << "qd[" << rec.prime << "]: " << rec.status << "\n";
    if (rec.status != "involved") continue;
    out << "qd[" << rec.prime << "].k: " << perm_list(rec.k_generators) << "\n";
    out << "qd[" << rec.prime << "].section-degree: " << rec.section_degree << "\n";
    out << "qd[" << rec.prime << "].copy: " << perm_list(rec.copy_generators) << "\n";
    out << "qd[" << rec.prime << "].domain: " << perm_list(rec.embedding_domain) << "\n";
    out << "qd[" << rec.prime << "].images: " << perm_list(rec.embedding_images) << "\n";
  }
  for (const auto& [p, rec] : cert.searches) {
    out << "search[" << p << "].bound: " << rec.bound << "\n";
    out << "search[" << p << "].outcome: " << (rec.found ? "found" : "bound-reached") << "\n";
  }
  for (const auto& [p, rec] : cert.effective) {
    out << "effective[" << p << "].sylow: " << perm_list(cert.sylow_generators.at(p)) << "\n";
    out << "effective[" << p << "].dimension: " << rec.dimension << "\n";
    out << "effective[" << p << "].multiplicities: " << mult_list(rec.multiplicities) << "\n";
    out << "effective[" << p << "].values: " << value_list(rec.values) << "\n";
  }
  if (cert.family_dimension > 0) {
    out << "family.dimension: " << cert.family_dimension << "\n";
    for (const auto& [p, rec] : cert.family) {
      out << "family[" << p << "].multiplicities: " << mult_list(rec.multiplicities) << "\n";
      out << "family[" << p << "].values: " << value_list(rec.values) << "\n";
    }
    out << "subgroups: " << cert.subgroups.size() << "\n";
    for (std::size_t i = 0; i < cert.subgroups.size(); ++i) {
      const SubgroupRecord& rec = cert.subgroups[i];
      const std::string head = "subgroup[" + std::to_string(i) + "].";
      out << head << "generators: " << perm_list(rec.generators) << "\n";
      out << head << "order: " << rec.order << "\n";
      out << head << "rank: " << rec.rank << "\n";
      out << head << "prime: " << rec.prime << "\n";
      out << head << "conjugator: " << rec.conjugator.cycle_string() << "\n";
      out << head << "values: " << value_list(rec.values) << "\n";
      out << head << "entry: "
          << (rec.sphere_dim ? "S" + std::to_string(*rec.sphere_dim) : std::string("empty")) << "\n";
    }
    out << "sphere-dimension: " << cert.sphere_dimension << "\n";
    out << "flags.compatible: " << (cert.flag_compatible ? "true" : "false") << "\n";
    out << "flags.rank-one-isotropy: " << (cert.flag_rank_one_isotropy ? "true" : "false") << "\n";
    out << "flags.euler: " << (cert.flag_euler ? "true" : "false") << "\n";
    out << "flags.empty-certified: " << (cert.flag_empty_certified ? "true" : "false") << "\n";
  }
  return out.str();
}

Certificate parse_certificate(const std::string& text) {
  std::vector<std::string> lines = split_on(text, "\n");
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != "isocert-v1")
    throw ParseError("certificate must begin with the isocert-v1 format tag");

  Certificate cert;
  bool saw_degree = false;
  bool saw_order = false;
  bool saw_k = false;
  bool saw_rank = false;
  bool saw_verdict = false;
  std::optional<std::size_t> subgroup_count;

  const auto need_degree = [&]() -> int {
    if (!saw_degree) throw ParseError("the degree line must precede permutation lines");
    return cert.degree;
  };
  const auto find_qd = [&](std::uint64_t p) -> QdRecord& {
    for (QdRecord& rec : cert.qd)
      if (rec.prime == p) return rec;
    throw ParseError("qd fields must follow the qd status line for prime " + std::to_string(p));
  };

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    if (line.empty()) continue;
    const std::size_t sep = line.find(": ");
    if (sep == std::string::npos)
      throw ParseError("certificate line is not 'key: value': '" + line + "'");
    const std::string key = line.substr(0, sep);
    const std::string value = line.substr(sep + 2);

    if (key == "label") {
      cert.label = value;
    } else if (key == "degree") {
      cert.degree = parse_small_int(value);
      if (cert.degree < 1) throw ParseError("degree must be at least 1");
      saw_degree = true;
    } else if (key == "order") {
      cert.order = parse_u64(value);
      saw_order = true;
    } else if (key == "generator") {
      cert.generators.push_back(Permutation::parse_cycles(value, need_degree()));
    } else if (key == "k") {
      cert.k = parse_u64(value);
      saw_k = true;
    } else if (key == "rank") {
      cert.rank = parse_small_int(value);
      saw_rank = true;
    } else if (key == "verdict") {
      cert.verdict = verdict_from_name(value);
      saw_verdict = true;
    } else if (key == "note") {
      cert.note = value;
    } else if (key == "family.dimension") {
      cert.family_dimension = parse_u64(value);
    } else if (key == "subgroups") {
      subgroup_count = parse_u64(value);
      if (*subgroup_count > 100000) throw ParseError("implausible subgroup count");
      cert.subgroups.assign(*subgroup_count, SubgroupRecord{});
    } else if (key == "sphere-dimension") {
      cert.sphere_dimension = parse_u64(value);
    } else if (key == "flags.compatible") {
      cert.flag_compatible = parse_bool(value);
    } else if (key == "flags.rank-one-isotropy") {
      cert.flag_rank_one_isotropy = parse_bool(value);
    } else if (key == "flags.euler") {
      cert.flag_euler = parse_bool(value);
    } else if (key == "flags.empty-certified") {
      cert.flag_empty_certified = parse_bool(value);
    } else if (const auto idx = match_indexed(key)) {
      if (idx->name == "rank") {
        if (idx->field.empty()) {
          cert.rank_per_prime[idx->index] = parse_small_int(value);
        } else if (idx->field == "witness") {
          cert.rank_witnesses[idx->index] = parse_perm_list(value, need_degree());
        } else {
          throw ParseError("unknown certificate key '" + key + "'");
        }
      } else if (idx->name == "qd") {
        if (idx->field.empty()) {
          if (value != "free" && value != "pruned" && value != "involved")
            throw ParseError("unknown involvement status '" + value + "'");
          QdRecord rec;
          rec.prime = idx->index;
          rec.status = value;
          cert.qd.push_back(std::move(rec));
        } else if (idx->field == "k") {
          find_qd(idx->index).k_generators = parse_perm_list(value, need_degree());
        } else if (idx->field == "section-degree") {
          const int d = parse_small_int(value);
          if (d < 1) throw ParseError("section degree must be at least 1");
          find_qd(idx->index).section_degree = d;
        } else if (idx->field == "copy") {
          QdRecord& rec = find_qd(idx->index);
          if (rec.section_degree < 1)
            throw ParseError("the section-degree line must precede the copy line");
          rec.copy_generators = parse_perm_list(value, rec.section_degree);
        } else if (idx->field == "domain") {
          if (idx->index * idx->index > kMaxCertificateDegree)
            throw ParseError("implausible prime in a qd record");
          const int d = static_cast<int>(idx->index * idx->index);
          find_qd(idx->index).embedding_domain = parse_perm_list(value, d);
        } else if (idx->field == "images") {
          QdRecord& rec = find_qd(idx->index);
          if (rec.section_degree < 1)
            throw ParseError("the section-degree line must precede the images line");
          rec.embedding_images = parse_perm_list(value, rec.section_degree);
        } else {
          throw ParseError("unknown certificate key '" + key + "'");
        }
      } else if (idx->name == "search") {
        SearchRecord& rec = cert.searches[idx->index];
        if (idx->field == "bound") {
          rec.bound = parse_u64(value);
        } else if (idx->field == "outcome") {
          if (value == "found") {
            rec.found = true;
          } else if (value == "bound-reached") {
            rec.found = false;
          } else {
            throw ParseError("unknown search outcome '" + value + "'");
          }
        } else {
          throw ParseError("unknown certificate key '" + key + "'");
        }
      } else if (idx->name == "effective") {
        if (idx->field == "sylow") {
          cert.sylow_generators[idx->index] = parse_perm_list(value, need_degree());
        } else {
          CharacterRecord& rec = cert.effective[idx->index];
          if (idx->field == "dimension") {
            rec.dimension = parse_u64(value);
          } else if (idx->field == "multiplicities") {
            rec.multiplicities = parse_mult_list(value);
          } else if (idx->field == "values") {
            rec.values = parse_value_list(value);
          } else {
            throw ParseError("unknown certificate key '" + key + "'");
          }
        }
      } else if (idx->name == "family") {
        CharacterRecord& rec = cert.family[idx->index];
        if (idx->field == "multiplicities") {
          rec.multiplicities = parse_mult_list(value);
        } else if (idx->field == "values") {
          rec.values = parse_value_list(value);
        } else {
          throw ParseError("unknown certificate key '" + key + "'");
        }
      } else if (idx->name == "subgroup") {
        if (!subgroup_count) throw ParseError("subgroup records must follow the subgroups count");
        if (idx->index >= *subgroup_count) throw ParseError("subgroup index out of range");
        SubgroupRecord& rec = cert.subgroups[idx->index];
        if (idx->field == "generators") {
          rec.generators = parse_perm_list(value, need_degree());
        } else if (idx->field == "order") {
          rec.order = parse_u64(value);
        } else if (idx->field == "rank") {
          rec.rank = parse_small_int(value);
        } else if (idx->field == "prime") {
          rec.prime = parse_u64(value);
        } else if (idx->field == "conjugator") {
          rec.conjugator = Permutation::parse_cycles(value, need_degree());
        } else if (idx->field == "values") {
          rec.values = parse_value_list(value);
        } else if (idx->field == "entry") {
          if (value == "empty") {
            rec.sphere_dim = std::nullopt;
          } else if (value.size() >= 2 && value[0] == 'S') {
            rec.sphere_dim = parse_u64(value.substr(1));
          } else {
            throw ParseError("subgroup entry must be 'empty' or 'S<dim>'");
          }
        } else {
          throw ParseError("unknown certificate key '" + key + "'");
        }
      } else {
        throw ParseError("unknown certificate key '" + key + "'");
      }
    } else {
      throw ParseError("unknown certificate key '" + key + "'");
    }
  }

  if (!saw_degree || !saw_order || !saw_k || !saw_rank || !saw_verdict)
    throw ParseError("certificate is missing a required field");
  // the family records share the family dimension; it has no line of its own
  for (auto& [p, rec] : cert.family) rec.dimension = cert.family_dimension;
  return cert;
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read certificate file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

namespace {

bool stages_absent_after_search(const Certificate& cert) {
  return cert.family_dimension == 0 && cert.family.empty() && cert.subgroups.empty() &&
         cert.sphere_dimension == 0 && !cert.flag_compatible && !cert.flag_rank_one_isotropy &&
         !cert.flag_euler && !cert.flag_empty_certified;
}

bool stages_absent_after_qd(const Certificate& cert) {
  return cert.searches.empty() && cert.effective.empty() && cert.sylow_generators.empty() &&
         stages_absent_after_search(cert);
}

bool stages_absent_after_rank(const Certificate& cert) {
  return cert.qd.empty() && stages_absent_after_qd(cert);
}

// the qd records must list the odd primes dividing the order, ascending, with
// statuses consistent with the order-based prune rule
bool check_qd_coverage(const Certificate& cert, const PermutationGroup& G) {
  std::vector<std::uint64_t> odd;
  for (const PrimePower& pp : prime_decomposition(G))
    if (pp.prime != 2) odd.push_back(pp.prime);
  if (cert.qd.size() != odd.size()) return false;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    const QdRecord& rec = cert.qd[i];
    if (rec.prime != odd[i]) return false;
    const bool too_big = qd_order_exceeds(rec.prime, G.order());
    if (rec.status == "pruned") {
      if (!too_big) return false;
    } else if (rec.status == "free" || rec.status == "involved") {
      if (too_big) return false;
    } else {
      return false;
    }
  }
  return true;
}

// re-checks a stored Sylow character from scratch: right subgroup, genuine
// decomposition over the Sylow table, fusion stability replayed element by
// element, and no fixed vectors at maximal rank
bool check_effective_record(const PermutationGroup& G, std::uint64_t p,
                            const std::vector<Permutation>& sylow_generators,
                            const CharacterRecord& rec, std::uint64_t bound) {
  const SubgroupHandle sylow(G, sylow_generators);
  if (sylow.order() != p_part_of(G.order(), p)) return false;
  const PermutationGroup& P = sylow.group();
  if (rec.values.size() != P.conjugacy_classes().size()) return false;
  const ClassFunction chi(P, rec.values);
  if (rec.dimension == 0 || rec.dimension > bound) return false;
  if (character_degree(chi) != rec.dimension) return false;

  const CharacterTable table = character_table(P);
  if (rec.multiplicities.size() != table.irreducibles.size()) return false;
  for (std::size_t cls = 0; cls < rec.values.size(); ++cls) {
    CyclotomicNumber sum;
    for (std::size_t row = 0; row < table.irreducibles.size(); ++row) {
      const CyclotomicNumber m{Rational(static_cast<std::int64_t>(rec.multiplicities[row]))};
      sum += m * table.irreducibles[row].at_class(cls);
    }
    if (!(sum == rec.values[cls])) return false;
  }

  for (const Permutation& s : G.elements()) {
    const Permutation si = s.inverse();
    for (const Permutation& x : P.elements()) {
      const Permutation y = s * x * si;
      if (P.contains(y) && !(chi.at(y) == chi.at(x))) return false;
    }
  }

  return is_p_effective(chi, effective_search_spec(G, p)).effective;
}

bool check_not_qd_free(const Certificate& cert, const PermutationGroup& G) {
  if (!check_qd_coverage(cert, G)) return false;
  if (!stages_absent_after_qd(cert)) return false;
  const QdRecord* involved = nullptr;
  for (const QdRecord& rec : cert.qd)
    if (rec.status == "involved") {
      involved = &rec;
      break;
    }
  if (involved == nullptr) return false;

  // replay the witness: the p'-subgroup, its section, and the embedded copy;
  // a trivial subgroup's section is the group itself, not a coset action
  const SubgroupHandle K(G, involved->k_generators);
  if (std::gcd(K.order(), involved->prime) != 1) return false;
  const PermutationGroup section = K.order() == 1 ? G : section_group(G, K);
  if (section.degree() != involved->section_degree) return false;
  const SubgroupHandle copy(section, involved->copy_generators);
  const Limits wide{std::max(kDefaultMaxOrder, G.order())};
  const PermutationGroup qd = qd_group(involved->prime, wide);
  return check_isomorphism_witness(
      qd, copy.group(), IsoWitness{involved->embedding_domain, involved->embedding_images});
}

bool check_search_records(const Certificate& cert, const PermutationGroup& G, bool& any_miss) {
  const std::vector<PrimePower> primes = prime_decomposition(G);
  if (cert.searches.size() != primes.size()) return false;
  any_miss = false;
  std::size_t found_count = 0;
  for (const PrimePower& pp : primes) {
    const auto it = cert.searches.find(pp.prime);
    if (it == cert.searches.end() || it->second.bound == 0) return false;
    const bool has_record = cert.effective.count(pp.prime) == 1;
    const bool has_sylow = cert.sylow_generators.count(pp.prime) == 1;
    if (it->second.found) {
      ++found_count;
      if (!has_record || !has_sylow) return false;
      if (!check_effective_record(G, pp.prime, cert.sylow_generators.at(pp.prime),
                                  cert.effective.at(pp.prime), it->second.bound))
        return false;
    } else {
      any_miss = true;
      if (has_record || has_sylow) return false;
    }
  }
  // no stray records for primes outside the order
  return cert.effective.size() == found_count && cert.sylow_generators.size() == found_count;
}

bool check_certified(const Certificate& cert, const PermutationGroup& G) {
  if (!check_qd_coverage(cert, G)) return false;
  for (const QdRecord& rec : cert.qd)
    if (rec.status == "involved") return false;
  if (!cert.flag_compatible || !cert.flag_rank_one_isotropy || !cert.flag_euler) return false;

  bool any_miss = false;
  if (!check_search_records(cert, G, any_miss) || any_miss) return false;

  // the family must be the exact common-dimension scaling of the solutions
  const std::vector<PrimePower> primes = prime_decomposition(G);
  std::uint64_t lcm_dim = 1;
  for (const PrimePower& pp : primes) lcm_dim = std::lcm(lcm_dim, cert.effective.at(pp.prime).dimension);
  if (cert.family_dimension != lcm_dim || cert.family.size() != primes.size()) return false;

  SylowFamily fam{G, lcm_dim, {}};
  for (const PrimePower& pp : primes) {
    const CharacterRecord& eff = cert.effective.at(pp.prime);
    const auto it = cert.family.find(pp.prime);
    if (it == cert.family.end()) return false;
    const CharacterRecord& fr = it->second;
    if (eff.dimension == 0 || lcm_dim % eff.dimension != 0) return false;
    const std::uint64_t scale = lcm_dim / eff.dimension;
    if (fr.multiplicities.size() != eff.multiplicities.size() || fr.values.size() != eff.values.size())
      return false;
    for (std::size_t i = 0; i < eff.multiplicities.size(); ++i)
      if (fr.multiplicities[i] != scale * eff.multiplicities[i]) return false;
    const CyclotomicNumber factor{Rational(static_cast<std::int64_t>(scale))};
    for (std::size_t i = 0; i < eff.values.size(); ++i)
      if (!(fr.values[i] == factor * eff.values[i])) return false;

    const SubgroupHandle sylow(G, cert.sylow_generators.at(pp.prime));
    const ClassFunction chi(sylow.group(), fr.values);
    fam.entries.emplace(pp.prime, SylowFamilyEntry{sylow, chi, fr.multiplicities});
  }

  // the stored subgroup list must be exactly the canonical spread, and each
  // stored conjugator must genuinely produce the stored values
  const CompatibleFamily fresh = compatible_family(fam);
  if (cert.subgroups.size() != fresh.subgroups.size()) return false;
  CompatibleFamily rebuilt{fam, {}, {}};
  for (std::size_t i = 0; i < cert.subgroups.size(); ++i) {
    const SubgroupRecord& rec = cert.subgroups[i];
    const SubgroupHandle H(G, rec.generators);
    if (!H.group().same_realization(fresh.subgroups[i].group())) return false;
    if (rec.order != H.order()) return false;
    if (rec.rank != rank_profile(H.group()).rank) return false;
    if (rec.prime != fresh.characters[i].prime) return false;
    const auto entry_it = fam.entries.find(rec.prime);
    if (entry_it == fam.entries.end()) return false;
    const SylowFamilyEntry& entry = entry_it->second;
    if (rec.conjugator.degree() != G.degree() || !G.contains(rec.conjugator)) return false;
    const Permutation inv = rec.conjugator.inverse();
    for (const Permutation& h : H.group().generators())
      if (!entry.sylow.contains(rec.conjugator * h * inv)) return false;
    const std::vector<ConjugacyClass>& classes = H.group().conjugacy_classes();
    if (rec.values.size() != classes.size()) return false;
    for (std::size_t cls = 0; cls < classes.size(); ++cls) {
      const Permutation moved = rec.conjugator * classes[cls].representative * inv;
      if (!(rec.values[cls] == entry.character.at(moved))) return false;
    }
    rebuilt.subgroups.push_back(H);
    rebuilt.characters.push_back(
        TransportedCharacter{ClassFunction(H.group(), rec.values), rec.conjugator, rec.prime});
  }

  if (!verify_compatibility(rebuilt).compatible) return false;
  if (!verify_rank_one_isotropy(rebuilt).rank_one) return false;
  const EulerReport euler = euler_fixed_check(rebuilt, cert.k);
  if (!euler.ok || euler.empty_certified != cert.flag_empty_certified) return false;
  for (const auto& [p, entry] : fam.entries) {
    const ClassFunction zero = rational_euler_class(entry.character, cert.k);
    for (const CyclotomicNumber& v : zero.values())
      if (!v.is_zero()) return false;
  }
  const DimensionFunction dims = dimension_function(rebuilt, cert.k);
  if (dims.total_dim != cert.sphere_dimension) return false;
  if (dims.entries.size() != cert.subgroups.size()) return false;
  for (std::size_t i = 0; i < dims.entries.size(); ++i)
    if (dims.entries[i].sphere_dim != cert.subgroups[i].sphere_dim) return false;
  return true;
}

bool run_semantic_checks(const Certificate& cert, const PermutationGroup& G) {
  if (cert.k == 0) return false;

  // rank data is recomputed outright and must agree
  const RankProfile profile = rank_profile(G);
  if (profile.rank != cert.rank) return false;
  if (cert.rank_per_prime.size() != profile.per_prime.size()) return false;
  for (const auto& [p, r] : profile.per_prime) {
    const auto it = cert.rank_per_prime.find(p);
    if (it == cert.rank_per_prime.end() || it->second != r) return false;
  }
  if (cert.rank_witnesses.size() != cert.rank_per_prime.size()) return false;
  for (const auto& [p, gens] : cert.rank_witnesses) {
    const auto it = cert.rank_per_prime.find(p);
    if (it == cert.rank_per_prime.end()) return false;
    for (const Permutation& g : gens)
      if (g.degree() != G.degree()) return false;
    const SubgroupHandle witness(G, gens);
    std::uint64_t expected = 1;
    for (int i = 0; i < it->second; ++i) expected *= p;
    if (witness.order() != expected) return false;
    if (!witness.group().is_abelian()) return false;
    if (witness.group().exponent() != (it->second == 0 ? 1 : p)) return false;
  }

  switch (cert.verdict) {
    case Verdict::RankOne:
      return cert.rank <= 1 && stages_absent_after_rank(cert);
    case Verdict::RankTooHigh:
      return cert.rank >= 3 && stages_absent_after_rank(cert);
    case Verdict::NotQdFree:
      return cert.rank == 2 && check_not_qd_free(cert, G);
    case Verdict::SearchInconclusive: {
      if (cert.rank != 2 || !check_qd_coverage(cert, G)) return false;
      for (const QdRecord& rec : cert.qd)
        if (rec.status == "involved") return false;
      bool any_miss = false;
      if (!check_search_records(cert, G, any_miss)) return false;
      return any_miss && stages_absent_after_search(cert);
    }
    case Verdict::Certified:
      return cert.rank == 2 && check_certified(cert, G);
  }
  return false;
}

}  // namespace

bool verify_certificate(const Certificate& cert, const PermutationGroup& G) {
  // identity first: a certificate for a different group is an error, not a
  // failed verification
  if (cert.degree != G.degree() || cert.order != G.order())
    throw std::invalid_argument("certificate does not describe this group: degree or order differs");
  for (const Permutation& g : cert.generators)
    if (g.degree() != G.degree() || !G.contains(g))
      throw std::invalid_argument("certificate generators do not lie in the group");
  if (!PermutationGroup::from_generators(G.degree(), cert.generators).same_realization(G))
    throw std::invalid_argument("certificate generators do not generate the group");

  try {
    return run_semantic_checks(cert, G);
  } catch (const ScaleLimitError&) {
    throw;
  } catch (const std::exception&) {
    return false;  // malformed records are failed verifications, not crashes
  }
}

}  // namespace isocert
