#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "galct/corpus.hpp"
#include "galct/errors.hpp"
#include "galct/families.hpp"

#ifndef GALCT_DEFAULT_CORPUS
#define GALCT_DEFAULT_CORPUS ""
#endif

namespace {

using galct::Analysis;
using galct::CheckOutcome;
using galct::Status;
using Json = nlohmann::ordered_json;

constexpr int kClean = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], r[c].size());
      }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string image_text(const galct::ImageStructure& s) {
  std::string t(galct::to_string(s.tag));
  if (s.tag != galct::ImageTag::Trivial)
    t += " (order " + std::to_string(s.order) + " on " + std::to_string(s.degree) + " classes)";
  return t;
}

void write_json(const Json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw galct::Error("cannot write " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw galct::Error("cannot write " + path);
}

galct::CorpusEntry single_entry(const std::string& path, const std::string& family) {
  if (!path.empty() && !family.empty()) throw galct::InvalidParameter("give either a file or --family, not both");
  if (path.empty() && family.empty()) throw galct::InvalidParameter("a group file or --family is required");
  if (!family.empty()) return {family, galct::make_family(family), {"builtin"}, std::nullopt};
  auto rec = galct::load_group_file(path);
  return {path, std::move(rec.group), std::move(rec.tags), std::move(rec.expected)};
}

struct CorpusOptions {
  std::string dir = GALCT_DEFAULT_CORPUS;
  bool no_builtin = false;
  std::size_t max_order = 0;
  unsigned jobs = 1;
};

struct LoadedCorpus {
  std::vector<Analysis> analyses;
  std::vector<std::string> present;
};

LoadedCorpus load_and_analyze(const CorpusOptions& opt) {
  std::vector<galct::CorpusEntry> entries;
  if (!opt.no_builtin) entries = galct::builtin_corpus(opt.max_order);
  std::vector<std::string> present;
  if (!opt.dir.empty()) {
    for (auto& e : galct::load_corpus_dir(opt.dir)) {
      present.push_back(e.group.name());
      if (opt.max_order == 0 || e.group.order() <= opt.max_order) entries.push_back(std::move(e));
    }
  }
  galct::sort_corpus(entries);
  const unsigned jobs = opt.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opt.jobs;
  return {galct::analyze_all(std::move(entries), jobs), std::move(present)};
}

void add_corpus_flags(CLI::App* cmd, CorpusOptions& opt) {
  cmd->add_option("--corpus", opt.dir, "Directory of group JSON files (searched recursively)");
  cmd->add_flag("--no-builtin", opt.no_builtin, "Skip the built-in family groups");
  cmd->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)");
}

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& path, const std::string& family, bool json, const std::string& report) {
  const auto a = galct::analyze(single_entry(path, family));
  const auto doc = galct::to_json(a);
  const auto fixture = galct::fixture_check(a);
  if (!report.empty()) write_json(doc, report);
  if (json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    const auto& r = a.report;
    Table summary({"group", a.name()});
    summary.add({"order", std::to_string(r.order)});
    summary.add({"exponent", std::to_string(r.exponent)});
    summary.add({"classes", std::to_string(r.k)});
    summary.add({"rational classes", std::to_string(r.rational_class_indices.size())});
    summary.add({"rational characters", std::to_string(r.rational_char_indices.size())});
    summary.add({"irrational classes", std::to_string(r.irrational_class_count)});
    summary.add({"irrational characters", std::to_string(r.irrational_char_count)});
    summary.add({"solvable", yes_no(a.series.solvable)});
    summary.add({"galois image", image_text(a.image)});
    if (fixture.status != Status::NotApplicable)
      summary.add({"fixture", std::string(galct::to_string(fixture.status))});
    summary.print(std::cout);
    std::cout << '\n';
    Table classes({"class", "size", "order", "field degree"});
    for (std::size_t i = 0; i < r.k; ++i)
      classes.add({std::to_string(i), std::to_string(a.table.class_info(i).size),
                   std::to_string(a.table.class_info(i).order), std::to_string(r.class_field_degree[i])});
    classes.print(std::cout);
    if (fixture.status == Status::Fail) std::cout << "\nfixture mismatch: " << fixture.witness.dump() << '\n';
  }
  return fixture.status == Status::Fail ? kCheckFailed : kClean;
}

int cmd_table(const std::string& path, const std::string& family, const std::string& report) {
  const auto entry = single_entry(path, family);
  const auto doc = galct::export_table(galct::compute_character_table(entry.group));
  if (!report.empty()) write_json(doc, report);
  else std::cout << doc.dump(2) << '\n';
  return kClean;
}

int cmd_scan(const CorpusOptions& opt, bool json, const std::string& report) {
  const auto corpus = load_and_analyze(opt);
  const auto doc = galct::scan_report(corpus.analyses, corpus.present);
  if (!report.empty()) write_json(doc, report);
  const bool failed = doc["tally"]["Fail"].get<int>() > 0;
  if (json) {
    std::cout << doc.dump(2) << '\n';
    return failed ? kCheckFailed : kClean;
  }

  Table t({"group", "order", "k", "cl_Q", "Irr_Q", "irr cl", "irr chi", "image", "failed checks"});
  for (const auto& g : doc["groups"]) {
    const auto& r = g["report"];
    std::string fails;
    for (const auto& c : g["checks"])
      if (c["status"] == "Fail") fails += (fails.empty() ? "" : ",") + c["check"].get<std::string>();
    t.add({g["name"].get<std::string>(), std::to_string(r["order"].get<std::uint64_t>()),
           std::to_string(r["k"].get<std::size_t>()), std::to_string(r["rational_class_count"].get<std::size_t>()),
           std::to_string(r["rational_char_count"].get<std::size_t>()),
           std::to_string(r["irrational_class_count"].get<std::size_t>()),
           std::to_string(r["irrational_char_count"].get<std::size_t>()), g["image"]["tag"].get<std::string>(),
           fails.empty() ? "-" : fails});
  }
  t.print(std::cout);

  std::cout << "\nnotable\n";
  for (const auto& [key, list] : doc["notable"].items()) {
    std::cout << "  " << key << ":";
    if (list.empty()) std::cout << " none";
    for (const auto& e : list)
      std::cout << ' ' << e["name"].get<std::string>() << " (irr cl " << e["irrational_classes"] << ", irr chi "
                << e["irrational_characters"] << ", cl_Q " << e["rational_classes"] << ", Irr_Q "
                << e["rational_characters"] << ")";
    std::cout << '\n';
  }
  for (const auto& m : doc["missing_fixtures"])
    std::cout << "  missing fixture: " << m["group"].get<std::string>() << '\n';
  std::cout << "\nPass " << doc["tally"]["Pass"] << "  Fail " << doc["tally"]["Fail"] << "  NotApplicable "
            << doc["tally"]["NotApplicable"] << '\n';
  return failed ? kCheckFailed : kClean;
}

int cmd_verify(const std::string& theorem_name, CorpusOptions opt, bool json, const std::string& report) {
  const auto theorem = galct::parse_theorem(theorem_name);
  std::vector<CheckOutcome> outcomes;
  if (galct::is_standalone(theorem)) {
    outcomes = galct::run_standalone(theorem);
  } else {
    const auto corpus = load_and_analyze(opt);
    for (const auto& a : corpus.analyses)
      for (auto& o : galct::run_checks(a, theorem)) outcomes.push_back(std::move(o));
    if (theorem == galct::Theorem::Fixtures)
      for (auto& o : galct::missing_fixture_outcomes(corpus.present)) outcomes.push_back(std::move(o));
  }

  std::map<std::string, int> tally{{"Pass", 0}, {"Fail", 0}, {"NotApplicable", 0}};
  Json results = Json::array();
  for (const auto& o : outcomes) {
    ++tally[std::string(galct::to_string(o.status))];
    results.push_back(galct::to_json(o));
  }
  Json doc;
  doc["theorem"] = std::string(galct::to_string(theorem));
  doc["max_order"] = opt.max_order;
  doc["tally"] = {{"Pass", tally["Pass"]}, {"Fail", tally["Fail"]}, {"NotApplicable", tally["NotApplicable"]}};
  doc["results"] = std::move(results);
  if (!report.empty()) write_json(doc, report);

  if (json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    Table t({"theorem", "checked", "Pass", "Fail", "NotApplicable"});
    t.add({std::string(galct::to_string(theorem)), std::to_string(outcomes.size()), std::to_string(tally["Pass"]),
           std::to_string(tally["Fail"]), std::to_string(tally["NotApplicable"])});
    t.print(std::cout);
    for (const auto& o : outcomes)
      if (o.status == Status::Fail) std::cout << "FAIL " << o.group << ' ' << o.check << ' ' << o.witness.dump() << '\n';
  }
  return tally["Fail"] > 0 ? kCheckFailed : kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, Galois actions and rationality checks for finite groups"};
  app.require_subcommand(1);

  std::string path, family, report;
  bool json = false;

  auto* analyze = app.add_subcommand("analyze", "Rationality report for one group");
  analyze->add_option("file", path, "Group JSON file");
  analyze->add_option("--family", family, "Built-in family, e.g. dihedral:3 or cyclic:2*cyclic:4");
  analyze->add_flag("--json", json, "Print JSON instead of text");
  analyze->add_option("--report", report, "Also write the JSON report to this file");

  auto* table = app.add_subcommand("table", "Export a character table as JSON");
  table->add_option("file", path, "Group JSON file");
  table->add_option("--family", family, "Built-in family");
  table->add_option("--report", report, "Write to this file instead of stdout");

  CorpusOptions scan_opt;
  auto* scan = app.add_subcommand("scan", "Analyse the corpus and run every per-group check");
  add_corpus_flags(scan, scan_opt);
  scan->add_option("--max-order", scan_opt.max_order, "Skip groups above this order (0 = no limit)");
  scan->add_option("--report", report, "Write the JSON report to this file");
  scan->add_flag("--json", json, "Print JSON instead of text");

  CorpusOptions verify_opt;
  verify_opt.max_order = 100;
  std::string theorem;
  auto* verify = app.add_subcommand("verify", "Run one checker over the corpus");
  verify->add_option("--theorem", theorem,
                     "A, B, C, brauer, column, row, sn, 2groups, s4s5, equivalence, lemma or fixtures")
      ->required();
  add_corpus_flags(verify, verify_opt);
  verify->add_option("--max-order", verify_opt.max_order, "Skip groups above this order (0 = no limit)");
  verify->add_option("--report", report, "Write the JSON results to this file");
  verify->add_flag("--json", json, "Print JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kClean : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(path, family, json, report);
    if (*table) return cmd_table(path, family, report);
    if (*scan) return cmd_scan(scan_opt, json, report);
    if (*verify) return cmd_verify(theorem, verify_opt, json, report);
  } catch (const galct::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
