#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "unigen/analysis.hpp"
#include "unigen/campaign.hpp"
#include "unigen/catalog.hpp"
#include "unigen/errors.hpp"
#include "unigen/io.hpp"
#include "unigen/spec.hpp"

namespace py = pybind11;

namespace {

py::object to_python(nlohmann::json const& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

// A spec string, or a dict in the group file format.
std::pair<std::string, unigen::GroupTable> load(py::object const& input, unigen::Limits const& limits,
                                                unigen::AssociativityCheck assoc) {
  if (py::isinstance<py::str>(input)) {
    auto spec = unigen::parse_spec(input.cast<std::string>());
    return {unigen::to_string(spec), unigen::build_from_spec(spec, limits, assoc)};
  }
  std::string text = py::module_::import("json").attr("dumps")(input).cast<std::string>();
  return {"<table>", unigen::load_group_json(text, limits, assoc)};
}

unigen::AssociativityCheck assoc_of(bool paranoid) {
  return paranoid ? unigen::AssociativityCheck::kFull : unigen::AssociativityCheck::kPolicy;
}

}  // namespace

PYBIND11_MODULE(_unigen, m) {
  m.doc() = "Subgroup lattices, chain lengths and generation invariants of finite groups";

  // Translators run newest first.
  py::register_exception<unigen::Error>(m, "UnigenError", PyExc_RuntimeError);
  py::register_exception<unigen::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (unigen::SpecError const& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (unigen::FormatError const& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("parse_spec", [](std::string const& text) { return unigen::to_string(unigen::parse_spec(text)); },
        py::arg("text"), "Canonical form of a spec expression.");

  m.def(
      "analyze",
      [](py::object const& input, bool chains, bool paranoid) {
        auto limits = unigen::Limits::from_env();
        auto [label, g] = load(input, limits, assoc_of(paranoid));
        return to_python(unigen::to_json(unigen::analyze_group(label, std::move(g), limits), chains));
      },
      py::arg("group"), py::arg("chains") = false, py::arg("paranoid") = false);

  m.def(
      "csv_row",
      [](py::object const& input) {
        auto limits = unigen::Limits::from_env();
        auto [label, g] = load(input, limits, unigen::AssociativityCheck::kPolicy);
        return unigen::csv_row(unigen::analyze_group(label, std::move(g), limits));
      },
      py::arg("group"));
  m.def("csv_header", &unigen::csv_header);

  m.def(
      "classify",
      [](py::object const& input) {
        auto limits = unigen::Limits::from_env();
        auto [label, g] = load(input, limits, unigen::AssociativityCheck::kPolicy);
        auto lat = unigen::SubgroupLattice::enumerate(g, limits);
        auto r = unigen::reconcile(g, lat);
        return to_python(unigen::verdict_record(label, g.order(), r.verdict));
      },
      py::arg("group"));

  m.def(
      "chains",
      [](py::object const& input) {
        auto limits = unigen::Limits::from_env();
        auto [label, g] = load(input, limits, unigen::AssociativityCheck::kPolicy);
        auto lat = unigen::SubgroupLattice::enumerate(g, limits);
        auto report = unigen::chain_report(lat);
        auto hexes = [&](std::vector<unigen::SubgroupIndex> const& chain) {
          std::vector<std::string> out;
          for (auto i : chain) out.push_back(lat[i].hex());
          return out;
        };
        py::dict d;
        d["spec"] = label;
        d["ell"] = report.length_ell;
        d["lambda"] = report.depth_lambda;
        d["longest"] = hexes(report.longest_chain);
        d["shortest"] = hexes(report.shortest_chain);
        return d;
      },
      py::arg("group"));

  m.def(
      "export_lattice",
      [](py::object const& input) {
        auto limits = unigen::Limits::from_env();
        auto [label, g] = load(input, limits, unigen::AssociativityCheck::kPolicy);
        return to_python(unigen::export_lattice(unigen::SubgroupLattice::enumerate(g, limits)));
      },
      py::arg("group"));

  m.def(
      "verify",
      [](std::uint64_t max_order, std::string const& checks, unsigned workers, bool slow) {
        unigen::CampaignOptions options;
        if (!checks.empty()) options.checks = unigen::parse_check_list(checks);
        options.workers = workers;
        options.slow = slow;
        options.limits = unigen::Limits::from_env();
        unigen::CampaignReport report;
        {
          py::gil_scoped_release release;
          report = unigen::run_campaign(unigen::build_catalog(max_order), options);
        }
        py::dict d;
        d["text"] = report.text();
        d["exit_code"] = report.exit_code();
        d["failures"] = report.failures();
        d["skipped"] = report.skipped();
        return d;
      },
      py::arg("max_order") = 64, py::arg("checks") = "", py::arg("workers") = 1, py::arg("slow") = false);
}
