// Command-line front door. Subcommands map onto the library stages: certify
// runs the whole pipeline, the others expose individual stages for
// inspection. Exit codes: 0 for positive verdicts and successful
// computations, 2 for negative verdicts, 3 for inconclusive searches, 1 for
// input or scale errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "isocert/catalog.hpp"
#include "isocert/certifier.hpp"
#include "isocert/character_table.hpp"
#include "isocert/effective.hpp"
#include "isocert/errors.hpp"
#include "isocert/family.hpp"
#include "isocert/pstructure.hpp"
#include "isocert/spheremodel.hpp"

namespace {

using namespace isocert;

struct InputOptions {
  std::string name;
  std::string file;
  std::uint64_t max_order = kDefaultMaxOrder;
};

void add_input_flags(CLI::App* cmd, InputOptions& input) {
  auto* name = cmd->add_option("--name", input.name, "catalog id of the input group");
  auto* file = cmd->add_option("--file", input.file, "path to a group file");
  name->excludes(file);
  file->excludes(name);
  cmd->add_option("--max-order", input.max_order, "largest group order the tool will handle");
}

// the label a certificate carries: the catalog id, or the file's stem
std::string input_label(const InputOptions& input) {
  if (!input.name.empty()) return input.name;
  std::string stem = input.file;
  const std::size_t slash = stem.find_last_of('/');
  if (slash != std::string::npos) stem = stem.substr(slash + 1);
  const std::size_t dot = stem.find_last_of('.');
  if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return stem;
}

PermutationGroup load_input(const InputOptions& input) {
  if (input.name.empty() && input.file.empty())
    throw std::invalid_argument("one of --name or --file is required");
  const PermutationGroup G = input.name.empty() ? load_group_file(input.file)
                                                : catalog_group(input.name);
  if (G.order() > input.max_order)
    throw ScaleLimitError("group order " + std::to_string(G.order()) +
                          " exceeds the limit " + std::to_string(input.max_order));
  return G;
}

std::string perm_list(const std::vector<Permutation>& perms) {
  if (perms.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i > 0) out += "; ";
    out += perms[i].cycle_string();
  }
  return out;
}

std::string generator_list(const std::vector<Permutation>& gens) {
  std::string out = "<";
  if (gens.empty()) out += "()";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens[i].cycle_string();
  }
  return out + ">";
}

std::string value_list(const std::vector<CyclotomicNumber>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += "; ";
    out += values[i].to_string();
  }
  return out;
}

std::string mult_list(const std::vector<std::uint64_t>& mults) {
  std::string out;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(mults[i]);
  }
  return out;
}

std::string entry_name(const std::optional<std::uint64_t>& sphere_dim) {
  return sphere_dim ? "S" + std::to_string(*sphere_dim) : std::string("empty");
}

void print_group_line(const std::string& label, const PermutationGroup& G) {
  std::cout << "group: " << (label.empty() ? "(unnamed)" : label) << " (degree " << G.degree()
            << ", order " << G.order() << ")\n";
}

int exit_for(Verdict verdict) {
  switch (verdict) {
    case Verdict::Certified:
    case Verdict::RankOne:
      return 0;
    case Verdict::NotQdFree:
    case Verdict::RankTooHigh:
      return 2;
    case Verdict::SearchInconclusive:
      return 3;
  }
  return 1;
}

int run_certify(const InputOptions& input, std::uint64_t k,
                std::optional<std::uint64_t> bound, const std::string& out_path) {
  const PermutationGroup G = load_input(input);
  CertifyOptions options;
  options.k = k;
  options.label = input_label(input);
  options.limits.max_order = input.max_order;
  if (bound)
    for (const PrimePower& pp : prime_decomposition(G)) options.dimension_bounds[pp.prime] = *bound;

  const Certificate cert = certify(G, options);
  print_group_line(options.label, G);
  std::cout << "rank: " << cert.rank << "\n";
  std::cout << "verdict: " << verdict_name(cert.verdict) << "\n";
  if (!cert.note.empty()) std::cout << "note: " << cert.note << "\n";
  if (cert.verdict == Verdict::Certified) {
    std::cout << "family dimension: " << cert.family_dimension << "\n";
    std::cout << "sphere: S" << cert.sphere_dimension << " (k = " << cert.k << ")\n";
    std::cout << "isotropy:";
    bool first = true;
    for (const SubgroupRecord& rec : cert.subgroups) {
      if (!rec.sphere_dim) continue;
      std::cout << (first ? " " : ", ") << generator_list(rec.generators);
      first = false;
    }
    std::cout << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write certificate file '" + out_path + "'");
    out << serialize_certificate(cert);
    std::cout << "certificate: " << out_path << "\n";
  }
  return exit_for(cert.verdict);
}

int run_rank(const InputOptions& input) {
  const PermutationGroup G = load_input(input);
  const RankProfile profile = rank_profile(G);
  print_group_line(input_label(input), G);
  std::cout << "rank: " << profile.rank << "\n";
  for (const auto& [p, r] : profile.per_prime)
    std::cout << "rank[" << p << "]: " << r
              << " (witness: " << perm_list(profile.witnesses.at(p).generators()) << ")\n";
  return 0;
}

int run_qdfree(const InputOptions& input) {
  const PermutationGroup G = load_input(input);
  const QdFreeReport report = is_qd_free(G, Limits{input.max_order});
  print_group_line(input_label(input), G);
  for (const QdPrimeReport& pr : report.per_prime) {
    if (pr.pruned_by_order) {
      std::cout << "qd[" << pr.prime << "]: pruned\n";
    } else if (pr.witness) {
      std::cout << "qd[" << pr.prime << "]: involved\n";
      std::cout << "qd[" << pr.prime << "].k: " << perm_list(pr.witness->k.generators()) << "\n";
      std::cout << "qd[" << pr.prime << "].section-degree: " << pr.witness->section.degree()
                << "\n";
      std::cout << "qd[" << pr.prime << "].copy: " << perm_list(pr.witness->qd_copy.generators())
                << "\n";
      std::cout << "qd[" << pr.prime
                << "].domain: " << perm_list(pr.witness->embedding.domain_generators) << "\n";
      std::cout << "qd[" << pr.prime << "].images: " << perm_list(pr.witness->embedding.images)
                << "\n";
    } else {
      std::cout << "qd[" << pr.prime << "]: free\n";
    }
  }
  std::cout << "qd-free: " << (report.qd_free ? "true" : "false") << "\n";
  return report.qd_free ? 0 : 2;
}

int run_chartab(const InputOptions& input) {
  const PermutationGroup G = load_input(input);
  const CharacterTable table = character_table(G, Limits{input.max_order});
  print_group_line(input_label(input), G);
  const std::vector<ConjugacyClass>& classes = G.conjugacy_classes();
  std::cout << "classes: " << classes.size() << "\n";
  for (std::size_t i = 0; i < classes.size(); ++i)
    std::cout << "class[" << i << "]: order " << classes[i].element_order << " size "
              << classes[i].size() << " rep " << classes[i].representative.cycle_string() << "\n";
  for (std::size_t row = 0; row < table.irreducibles.size(); ++row)
    std::cout << "chi[" << row << "]: " << value_list(table.irreducibles[row].values()) << "\n";
  return 0;
}

int run_fusion(const InputOptions& input, std::uint64_t prime) {
  const PermutationGroup G = load_input(input);
  const FusionPartition fp = fusion_partition(G, prime);
  print_group_line(input_label(input), G);
  std::cout << "sylow: " << perm_list(fp.sylow.generators()) << "\n";
  std::cout << "blocks: " << fp.blocks.size() << "\n";
  for (std::size_t i = 0; i < fp.blocks.size(); ++i) {
    std::cout << "block[" << i << "]:";
    for (std::size_t cls : fp.blocks[i]) std::cout << " " << cls;
    std::cout << "\n";
  }
  return 0;
}

int run_search_effective(const InputOptions& input, std::uint64_t prime,
                         std::optional<std::uint64_t> bound) {
  const PermutationGroup G = load_input(input);
  const EffectiveSearchSpec spec = effective_search_spec(G, prime, bound);
  const EffectiveSearchResult result = search_p_effective(spec);
  print_group_line(input_label(input), G);
  std::cout << "prime: " << prime << "\n";
  std::cout << "bound: " << spec.dimension_bound << "\n";
  if (!result.solution) {
    std::cout << "outcome: bound-reached\n";
    return 3;
  }
  std::cout << "outcome: found\n";
  std::cout << "dimension: " << result.solution->dimension << "\n";
  std::cout << "multiplicities: " << mult_list(result.solution->multiplicities) << "\n";
  std::cout << "values: " << value_list(result.solution->character.values()) << "\n";
  return 0;
}

int run_dimfun(const InputOptions& input, std::uint64_t k, std::optional<std::uint64_t> bound) {
  const PermutationGroup G = load_input(input);
  std::map<std::uint64_t, EffectiveCharacter> solutions;
  for (const PrimePower& pp : prime_decomposition(G)) {
    const EffectiveSearchSpec spec = effective_search_spec(G, pp.prime, bound);
    const EffectiveSearchResult result = search_p_effective(spec);
    if (!result.solution) {
      print_group_line(input_label(input), G);
      std::cout << "outcome: no " << pp.prime << "-effective character of dimension at most "
                << spec.dimension_bound << "\n";
      return 3;
    }
    solutions.emplace(pp.prime, *result.solution);
  }
  const SylowFamily fam = assemble_family(G, solutions);
  const CompatibleFamily cf = compatible_family(fam);
  const DimensionFunction dims = dimension_function(cf, k);
  print_group_line(input_label(input), G);
  std::cout << "family dimension: " << fam.dimension << "\n";
  std::cout << "k: " << k << "\n";
  std::cout << "total: S" << dims.total_dim << "\n";
  for (std::size_t i = 0; i < dims.entries.size(); ++i) {
    const DimensionEntry& entry = dims.entries[i];
    std::cout << "subgroup[" << i << "]: " << generator_list(entry.subgroup.generators()) << " order "
              << entry.subgroup.order() << " rank " << entry.rank << " -> "
              << entry_name(entry.sphere_dim) << "\n";
  }
  return 0;
}

int run_verify(const std::string& cert_path, const InputOptions& input) {
  const Certificate cert = load_certificate(cert_path);
  const PermutationGroup G =
      (input.name.empty() && input.file.empty())
          ? PermutationGroup::from_generators(cert.degree, cert.generators)
          : load_input(input);
  const bool ok = verify_certificate(cert, G);
  std::cout << "certificate: " << cert_path << "\n";
  std::cout << "verdict: " << verdict_name(cert.verdict) << "\n";
  std::cout << "verified: " << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificates for sphere actions of rank-two groups with rank-one prime power isotropy"};
  app.require_subcommand(1);

  InputOptions certify_input;
  std::uint64_t certify_k = 1;
  std::optional<std::uint64_t> certify_bound;
  std::string certify_out;
  CLI::App* certify_cmd = app.add_subcommand("certify", "run the full pipeline on one group");
  add_input_flags(certify_cmd, certify_input);
  certify_cmd->add_option("-k", certify_k, "join multiplier for the sphere model");
  certify_cmd->add_option("--bound", certify_bound, "dimension bound for every per-prime search");
  certify_cmd->add_option("-o", certify_out, "write the canonical certificate here");

  InputOptions rank_input;
  CLI::App* rank_cmd = app.add_subcommand("rank", "rank profile with witnesses");
  add_input_flags(rank_cmd, rank_input);

  InputOptions qdfree_input;
  CLI::App* qdfree_cmd = app.add_subcommand("qdfree", "Qd(p) involvement report per odd prime");
  add_input_flags(qdfree_cmd, qdfree_input);

  InputOptions chartab_input;
  CLI::App* chartab_cmd = app.add_subcommand("chartab", "exact character table");
  add_input_flags(chartab_cmd, chartab_input);

  InputOptions fusion_input;
  std::uint64_t fusion_prime = 0;
  CLI::App* fusion_cmd = app.add_subcommand("fusion", "Sylow class fusion under the ambient group");
  add_input_flags(fusion_cmd, fusion_input);
  fusion_cmd->add_option("-p", fusion_prime, "the prime")->required();

  InputOptions search_input;
  std::uint64_t search_prime = 0;
  std::optional<std::uint64_t> search_bound;
  CLI::App* search_cmd =
      app.add_subcommand("search-effective", "smallest effective Sylow character for one prime");
  add_input_flags(search_cmd, search_input);
  search_cmd->add_option("-p", search_prime, "the prime")->required();
  search_cmd->add_option("--bound", search_bound, "dimension bound for the search");

  InputOptions dimfun_input;
  std::uint64_t dimfun_k = 1;
  std::optional<std::uint64_t> dimfun_bound;
  CLI::App* dimfun_cmd =
      app.add_subcommand("dimfun", "dimension function of the searched family");
  add_input_flags(dimfun_cmd, dimfun_input);
  dimfun_cmd->add_option("-k", dimfun_k, "join multiplier for the sphere model");
  dimfun_cmd->add_option("--bound", dimfun_bound, "dimension bound for every per-prime search");

  InputOptions verify_input;
  std::string verify_path;
  CLI::App* verify_cmd = app.add_subcommand("verify", "re-check a certificate from its raw data");
  add_input_flags(verify_cmd, verify_input);
  verify_cmd->add_option("certificate", verify_path, "path to a certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // flag-usage problems count as input errors
  }

  try {
    if (certify_cmd->parsed()) return run_certify(certify_input, certify_k, certify_bound, certify_out);
    if (rank_cmd->parsed()) return run_rank(rank_input);
    if (qdfree_cmd->parsed()) return run_qdfree(qdfree_input);
    if (chartab_cmd->parsed()) return run_chartab(chartab_input);
    if (fusion_cmd->parsed()) return run_fusion(fusion_input, fusion_prime);
    if (search_cmd->parsed()) return run_search_effective(search_input, search_prime, search_bound);
    if (dimfun_cmd->parsed()) return run_dimfun(dimfun_input, dimfun_k, dimfun_bound);
    if (verify_cmd->parsed()) return run_verify(verify_path, verify_input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no subcommand\n";
  return 1;
}
