#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fusionkit/cohomology.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/fusion.hpp"
#include "fusionkit/json_io.hpp"
#include "fusionkit/modrep.hpp"
#include "fusionkit/pcgroup.hpp"
#include "fusionkit/verify.hpp"

namespace py = pybind11;
using namespace fusionkit;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::list reports_to_python(const std::vector<verify::CheckReport>& reports) {
  py::list out;
  for (const auto& r : reports) out.append(to_python(r.to_json()));
  return out;
}

mod::MatGroupF2 sl24_host(const std::string& name, std::uint64_t seed) {
  if (name == "a7") return mod::find_a7_in_gl42(seed);
  if (name == "gl24") return mod::build_gl24_in_gl42();
  throw Error(ErrorKind::Parse, "unknown matrix group '" + name + "' (a7, gl24)");
}

perm::PermGroup perm_group(std::size_t degree, const std::vector<std::vector<perm::Point>>& gens) {
  nlohmann::json j{{"degree", degree}, {"generators", gens}};
  return io::group_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fusion systems, pc presentations and F2-modules for the rank-4 Sylow checks.";

  static py::exception<Error> error(m, "FusionkitError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  m.def(
      "run_checks",
      [](std::uint64_t seed, std::optional<std::string> only) {
        std::vector<verify::CheckReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify::run_checks(seed, only);
        }
        return reports_to_python(reports);
      },
      py::arg("seed") = 0, py::arg("only") = py::none(),
      "Runs the registered checks and returns one report dict per check.");
  m.def("check_ids", [](std::uint64_t seed) {
    std::vector<std::string> ids;
    for (const auto& e : verify::registry(seed)) ids.push_back(e.id);
    return ids;
  }, py::arg("seed") = 0);
  m.def("exit_code", [](const std::vector<std::string>& statuses) {
    std::vector<verify::CheckReport> rs;
    for (const auto& s : statuses)
      rs.push_back({"", s == "pass" ? verify::Status::Pass
                        : s == "fail" ? verify::Status::Fail : verify::Status::Error});
    return verify::exit_code(rs);
  });
  m.def("negative_controls",
        [](std::uint64_t seed) { return to_python(verify::negative_controls(seed).to_json()); },
        py::arg("seed") = 0);

  m.def("sylow_summary", [](const std::string& kind) {
    const auto g = pc::builtin_sylow(pc::parse_sylow_kind(kind));
    py::dict d;
    d["order"] = g.order();
    d["center_order"] =
        pc::characteristic_subgroup(g, pc::CharacteristicKind::Center).order();
    d["thompson_order"] = pc::thompson_subgroup(g).order();
    d["two_rank"] = pc::two_rank(g);
    py::list as;
    for (const auto& h : pc::max_elementary_abelians(g)) {
      py::list gens;
      for (pc::PcElement e : h.generators()) gens.append(g.format(e));
      as.append(gens);
    }
    d["max_elementary_abelians"] = as;
    return d;
  }, py::arg("kind"), "Invariants of a built-in Sylow 2-subgroup (L34, L34_f, L34_u, L34_fu).");

  m.def("first_cohomology", [](const std::string& name, std::uint64_t seed) {
    auto g = std::make_shared<const mod::MatGroupF2>(sl24_host(name, seed));
    const auto h = coh::first_cohomology(coh::Module::natural(g));
    py::dict d;
    d["group_order"] = g->order();
    d["dim_z1"] = h.dim_z1;
    d["dim_b1"] = h.dim_b1;
    d["dim_h0"] = h.dim_h0;
    d["dim_h1"] = h.dim_h1;
    return d;
  }, py::arg("group"), py::arg("seed") = 0);
  m.def("higman_check", [](const std::string& name, std::uint64_t seed) {
    return coh::higman_instance_check(coh::find_sl24_witness(sl24_host(name, seed)));
  }, py::arg("group"), py::arg("seed") = 0);

  m.def("group_order", [](std::size_t degree, const std::vector<std::vector<perm::Point>>& gens) {
    return perm_group(degree, gens).order();
  }, py::arg("degree"), py::arg("generators"), "Generators are 1-based image lists.");
  m.def("hom_set_sizes", [](const std::string& group, bool exhaustive) {
    const fus::FusionSystem f(verify::builtin_group(group));
    const auto method = exhaustive ? fus::HomMethod::Exhaustive : fus::HomMethod::Transversal;
    std::vector<std::vector<std::size_t>> out;
    for (const auto& p : f.subgroups()) {
      auto& row = out.emplace_back();
      for (const auto& q : f.subgroups()) row.push_back(f.hom_sets(p, q, method).size());
    }
    return out;
  }, py::arg("group"), py::arg("exhaustive") = false,
     "|Hom_F(P, Q)| over all pairs of subgroups of S, for s4, d8, a6 or l32.");
  m.def("fusion_report", [](std::size_t degree, const std::vector<std::vector<perm::Point>>& gens) {
    return to_python(verify::check_fusion_axioms(perm_group(degree, gens)).to_json());
  }, py::arg("degree"), py::arg("generators"));
  m.def("wreath_report", [](const std::string& base) {
    return to_python(verify::check_wreath_model(base).to_json());
  }, py::arg("base"));
}
