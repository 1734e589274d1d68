// Python face of the library: groups in, reports and certificates out. The
// bindings stay thin; permutations and character values cross the boundary
// as their canonical strings, everything else as plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isocert/catalog.hpp"
#include "isocert/certifier.hpp"
#include "isocert/character_table.hpp"
#include "isocert/effective.hpp"
#include "isocert/errors.hpp"
#include "isocert/pstructure.hpp"

namespace py = pybind11;
using namespace isocert;

namespace {

std::vector<Permutation> parse_perms(int degree, const std::vector<std::string>& cycles) {
  std::vector<Permutation> out;
  out.reserve(cycles.size());
  for (const std::string& text : cycles) out.push_back(Permutation::parse_cycles(text, degree));
  return out;
}

std::vector<std::string> render_perms(const std::vector<Permutation>& perms) {
  std::vector<std::string> out;
  out.reserve(perms.size());
  for (const Permutation& g : perms) out.push_back(g.cycle_string());
  return out;
}

std::vector<std::string> render_values(const std::vector<CyclotomicNumber>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const CyclotomicNumber& v : values) out.push_back(v.to_string());
  return out;
}

Limits limits_for(std::uint64_t max_order) { return Limits{max_order}; }

py::dict rank_dict(const PermutationGroup& G) {
  const RankProfile profile = rank_profile(G);
  py::dict per_prime, witnesses;
  for (const auto& [p, r] : profile.per_prime) {
    per_prime[py::int_(p)] = r;
    witnesses[py::int_(p)] = render_perms(profile.witnesses.at(p).generators());
  }
  py::dict out;
  out["rank"] = profile.rank;
  out["per_prime"] = per_prime;
  out["witnesses"] = witnesses;
  return out;
}

py::dict qd_free_dict(const PermutationGroup& G, std::uint64_t max_order) {
  const QdFreeReport report = is_qd_free(G, limits_for(max_order));
  py::dict per_prime;
  for (const QdPrimeReport& pr : report.per_prime)
    per_prime[py::int_(pr.prime)] =
        pr.pruned_by_order ? "pruned" : (pr.witness ? "involved" : "free");
  py::dict out;
  out["qd_free"] = report.qd_free;
  out["per_prime"] = per_prime;
  return out;
}

py::list table_rows(const PermutationGroup& G, std::uint64_t max_order) {
  const CharacterTable tab = character_table(G, limits_for(max_order));
  py::list rows;
  for (const ClassFunction& chi : tab.irreducibles) rows.append(render_values(chi.values()));
  return rows;
}

py::dict fusion_dict(const PermutationGroup& G, std::uint64_t p) {
  const FusionPartition fp = fusion_partition(G, p);
  py::dict out;
  out["sylow"] = render_perms(fp.sylow.generators());
  out["blocks"] = fp.blocks;
  return out;
}

py::dict search_dict(const PermutationGroup& G, std::uint64_t p,
                     std::optional<std::uint64_t> bound) {
  const EffectiveSearchSpec spec = effective_search_spec(G, p, bound);
  const EffectiveSearchResult result = search_p_effective(spec);
  py::dict out;
  out["bound"] = spec.dimension_bound;
  out["found"] = result.solution.has_value();
  if (result.solution) {
    out["dimension"] = result.solution->dimension;
    out["multiplicities"] = result.solution->multiplicities;
    out["values"] = render_values(result.solution->character.values());
  }
  return out;
}

Certificate run_certify(const PermutationGroup& G, std::uint64_t k,
                        std::optional<std::uint64_t> bound, const std::string& label,
                        std::uint64_t max_order) {
  CertifyOptions options;
  options.k = k;
  options.label = label;
  options.limits = limits_for(max_order);
  if (bound)
    for (const PrimePower& pp : prime_decomposition(G)) options.dimension_bounds[pp.prime] = *bound;
  return certify(G, options);
}

py::list subgroup_dicts(const Certificate& cert) {
  py::list out;
  for (const SubgroupRecord& rec : cert.subgroups) {
    py::dict entry;
    entry["generators"] = render_perms(rec.generators);
    entry["order"] = rec.order;
    entry["rank"] = rec.rank;
    entry["prime"] = rec.prime;
    entry["sphere_dim"] = rec.sphere_dim ? py::object(py::int_(*rec.sphere_dim)) : py::none();
    out.append(entry);
  }
  return out;
}

py::dict search_records(const Certificate& cert) {
  py::dict out;
  for (const auto& [p, rec] : cert.searches) {
    py::dict one;
    one["bound"] = rec.bound;
    one["found"] = rec.found;
    out[py::int_(p)] = one;
  }
  return out;
}

py::dict effective_records(const Certificate& cert) {
  py::dict out;
  for (const auto& [p, rec] : cert.effective) {
    py::dict one;
    one["dimension"] = rec.dimension;
    one["multiplicities"] = rec.multiplicities;
    one["values"] = render_values(rec.values);
    out[py::int_(p)] = one;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_isocert, m) {
  m.doc() = "group-action certificates: rank gates, effective Sylow characters, sphere models";

  py::register_exception<ScaleLimitError>(m, "ScaleLimitError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<PermutationGroup>(m, "Group")
      .def_static(
          "from_generators",
          [](int degree, const std::vector<std::string>& cycles) {
            return PermutationGroup::from_generators(degree, parse_perms(degree, cycles));
          },
          py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &PermutationGroup::degree)
      .def_property_readonly("order", &PermutationGroup::order)
      .def_property_readonly("abelian", &PermutationGroup::is_abelian)
      .def_property_readonly("exponent", &PermutationGroup::exponent)
      .def_property_readonly("generators",
                             [](const PermutationGroup& G) { return render_perms(G.generators()); })
      .def("same_realization", &PermutationGroup::same_realization, py::arg("other"))
      .def("__repr__", [](const PermutationGroup& G) {
        return "<Group degree " + std::to_string(G.degree()) + " order " +
               std::to_string(G.order()) + ">";
      });

  m.def("catalog_ids", &catalog_ids);
  m.def("catalog_group", &catalog_group, py::arg("id"));
  m.def("parse_group", &parse_group_text, py::arg("text"));
  m.def("load_group", &load_group_file, py::arg("path"));

  m.def("rank", &rank_dict, py::arg("group"));
  m.def("qd_free", &qd_free_dict, py::arg("group"), py::arg("max_order") = kDefaultMaxOrder);
  m.def("character_table", &table_rows, py::arg("group"), py::arg("max_order") = kDefaultMaxOrder);
  m.def("fusion", &fusion_dict, py::arg("group"), py::arg("p"));
  m.def("search_effective", &search_dict, py::arg("group"), py::arg("p"),
        py::arg("bound") = py::none());

  py::class_<Certificate>(m, "Certificate")
      .def_property_readonly("label", [](const Certificate& c) { return c.label; })
      .def_property_readonly("degree", [](const Certificate& c) { return c.degree; })
      .def_property_readonly("order", [](const Certificate& c) { return c.order; })
      .def_property_readonly("generators",
                             [](const Certificate& c) { return render_perms(c.generators); })
      .def_property_readonly("k", [](const Certificate& c) { return c.k; })
      .def_property_readonly("rank", [](const Certificate& c) { return c.rank; })
      .def_property_readonly("verdict", [](const Certificate& c) { return verdict_name(c.verdict); })
      .def_property_readonly("note", [](const Certificate& c) { return c.note; })
      .def_property_readonly("family_dimension",
                             [](const Certificate& c) { return c.family_dimension; })
      .def_property_readonly("sphere_dimension",
                             [](const Certificate& c) { return c.sphere_dimension; })
      .def_property_readonly("searches", &search_records)
      .def_property_readonly("effective", &effective_records)
      .def_property_readonly("subgroups", &subgroup_dicts)
      .def_property_readonly("flags",
                             [](const Certificate& c) {
                               py::dict out;
                               out["compatible"] = c.flag_compatible;
                               out["rank_one_isotropy"] = c.flag_rank_one_isotropy;
                               out["euler"] = c.flag_euler;
                               out["empty_certified"] = c.flag_empty_certified;
                               return out;
                             })
      .def("serialize", &serialize_certificate)
      .def("__repr__", [](const Certificate& c) {
        return "<Certificate " + (c.label.empty() ? "(unlabeled)" : c.label) + " " +
               verdict_name(c.verdict) + ">";
      });

  m.def("certify", &run_certify, py::arg("group"), py::arg("k") = 1,
        py::arg("bound") = py::none(), py::arg("label") = "",
        py::arg("max_order") = kDefaultMaxOrder);
  m.def("parse_certificate", &parse_certificate, py::arg("text"));
  m.def("load_certificate", &load_certificate, py::arg("path"));
  m.def("verify", &verify_certificate, py::arg("certificate"), py::arg("group"));
}
