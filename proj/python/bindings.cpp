// Python bindings. Structured results cross the boundary as JSON text and are
// decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <algorithm>
#include <thread>

#include "galct/corpus.hpp"
#include "galct/errors.hpp"
#include "galct/families.hpp"
#include "galct/group_io.hpp"

namespace py = pybind11;
using namespace galct;

namespace {

struct Group {
  CorpusEntry entry;
};

Group from_family(const std::string& spec) { return {{spec, make_family(spec), {"builtin"}, std::nullopt}}; }

Group from_record(std::string source, GroupRecord rec) {
  return {{std::move(source), std::move(rec.group), std::move(rec.tags), std::move(rec.expected)}};
}

Group from_generators(std::size_t degree, const std::vector<std::vector<Point>>& generators, const std::string& name) {
  std::vector<Permutation> perms;
  for (const auto& g : generators) perms.emplace_back(g);
  auto group = PermGroup::from_generators(degree, std::move(perms), name);
  return {{name, std::move(group), {}, std::nullopt}};
}

std::vector<std::vector<Point>> generator_images(const Group& g) {
  std::vector<std::vector<Point>> out;
  for (const auto& p : g.entry.group.generators()) out.push_back(p.images());
  return out;
}

std::string verify_text(const Group& g, const std::string& theorem) {
  const auto t = parse_theorem(theorem);
  if (is_standalone(t)) throw InvalidParameter("theorem '" + theorem + "' does not take a group; use verify_standalone");
  auto out = nlohmann::ordered_json::array();
  for (const auto& o : run_checks(analyze(g.entry), t)) out.push_back(to_json(o));
  return out.dump();
}

std::string verify_standalone_text(const std::string& theorem) {
  const auto t = parse_theorem(theorem);
  if (!is_standalone(t)) throw InvalidParameter("theorem '" + theorem + "' runs per group; use verify");
  auto out = nlohmann::ordered_json::array();
  for (const auto& o : run_standalone(t)) out.push_back(to_json(o));
  return out.dump();
}

std::string scan_text(const std::optional<std::filesystem::path>& corpus, bool builtin, std::size_t max_order,
                      unsigned jobs) {
  std::vector<CorpusEntry> entries;
  std::vector<std::string> present;
  if (builtin) entries = builtin_corpus(max_order);
  if (corpus)
    for (auto& e : load_corpus_dir(*corpus)) {
      present.push_back(e.group.name());
      if (max_order == 0 || e.group.order() <= max_order) entries.push_back(std::move(e));
    }
  sort_corpus(entries);
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  std::vector<Analysis> analyses;
  {
    py::gil_scoped_release release;
    analyses = analyze_all(std::move(entries), jobs);
  }
  return scan_report(analyses, present).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact character tables and rationality checks for finite permutation groups";

  py::register_exception<Error>(m, "GalctError", PyExc_ValueError);

  py::class_<Group>(m, "Group")
      .def_property_readonly("name", [](const Group& g) { return g.entry.group.name(); })
      .def_property_readonly("order", [](const Group& g) { return g.entry.group.order(); })
      .def_property_readonly("degree", [](const Group& g) { return g.entry.group.degree(); })
      .def_property_readonly("source", [](const Group& g) { return g.entry.source; })
      .def_property_readonly("tags", [](const Group& g) { return g.entry.tags; })
      .def_property_readonly("generators", &generator_images)
      .def("to_json_text", [](const Group& g) {
        return group_to_json(g.entry.group, g.entry.tags, g.entry.expected).dump();
      })
      .def("__repr__", [](const Group& g) {
        return "<Group " + g.entry.group.name() + " of order " + std::to_string(g.entry.group.order()) + ">";
      });

  m.def("family", &from_family, py::arg("spec"), "Group from a family spec such as \"dihedral:3\".");
  m.def("load_group", [](const std::filesystem::path& path) { return from_record(path.string(), load_group_file(path)); },
        py::arg("path"));
  m.def("parse_group", [](const std::string& text) { return from_record("<string>", parse_group_json(text)); },
        py::arg("text"));
  m.def("from_generators", &from_generators, py::arg("degree"), py::arg("generators"), py::arg("name") = "G",
        "Group generated by 0-based image lists.");

  m.def("analyze_text", [](const Group& g) { return to_json(analyze(g.entry)).dump(); }, py::arg("group"));
  m.def("table_text", [](const Group& g) { return export_table(compute_character_table(g.entry.group)).dump(); },
        py::arg("group"));
  m.def("verify_text", &verify_text, py::arg("group"), py::arg("theorem"));
  m.def("verify_standalone_text", &verify_standalone_text, py::arg("theorem"));
  m.def("scan_text", &scan_text, py::arg("corpus") = std::nullopt, py::arg("builtin") = true,
        py::arg("max_order") = 0, py::arg("jobs") = 1);
  m.def("family_specs", &builtin_family_specs);
}
