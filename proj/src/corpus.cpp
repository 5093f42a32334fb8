#include "galct/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "galct/errors.hpp"
#include "galct/families.hpp"
#include "galct/numtheory.hpp"

namespace galct {

namespace {

bool within(std::size_t order, std::size_t max_order) { return max_order == 0 || order <= max_order; }

// Order of the group a family spec describes, without building it.
std::size_t spec_order(const std::string& spec) {
  std::size_t order = 1;
  std::size_t start = 0;
  for (;;) {
    const auto star = spec.find('*', start);
    const std::string part = spec.substr(start, star == std::string::npos ? std::string::npos : star - start);
    const auto colon = part.find(':');
    const std::string kind = part.substr(0, colon);
    const std::size_t n = colon == std::string::npos ? 0 : std::stoul(part.substr(colon + 1));
    if (kind == "klein") order *= 4;
    else if (kind == "cyclic" || kind == "frobenius") order *= n;
    else if (kind == "symmetric") {
      for (std::size_t i = 2; i <= n; ++i) order *= i;
    } else order *= std::size_t{2} << n;  // maximal class 2-groups
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return order;
}

}  // namespace

std::vector<std::string> builtin_family_specs() {
  std::vector<std::string> out;
  for (int n = 1; n <= 64; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) out.push_back("dihedral:" + std::to_string(n));
  for (int n = 3; n <= 5; ++n) out.push_back("semidihedral:" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) out.push_back("quaternion:" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) out.push_back("symmetric:" + std::to_string(n));
  for (int a = 2; a * a <= 64; ++a)
    for (int b = a; a * b <= 64; ++b) out.push_back("cyclic:" + std::to_string(a) + "*cyclic:" + std::to_string(b));
  out.emplace_back("frobenius:20");
  out.emplace_back("frobenius:21");
  out.emplace_back("klein");
  return out;
}

std::vector<CorpusEntry> builtin_corpus(std::size_t max_order) {
  std::vector<CorpusEntry> out;
  for (const auto& spec : builtin_family_specs()) {
    if (!within(spec_order(spec), max_order)) continue;
    out.push_back({spec, make_family(spec), {"builtin"}, std::nullopt});
  }
  return out;
}

std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir, std::size_t max_order) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error("corpus directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (fs::recursive_directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec))
    if (it->is_regular_file() && it->path().extension() == ".json") files.push_back(it->path());
  if (ec) throw Error("cannot read corpus directory " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());

  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    auto rec = load_group_file(f);
    if (!within(rec.group.order(), max_order)) continue;
    out.push_back({f.string(), std::move(rec.group), std::move(rec.tags), std::move(rec.expected)});
  }
  return out;
}

const std::vector<std::string>& known_fixture_names() {
  static const std::vector<std::string> names{"sg_32_15", "sg_32_42", "sg_672_128"};
  return names;
}

Analysis analyze(CorpusEntry entry) {
  Analysis a{std::move(entry), {}, {}, {}, {}, {}, {}};
  a.classes = conjugacy_classes(a.entry.group);
  a.table = compute_character_table(a.entry.group, a.classes);
  a.model = build_galois_model(a.table);
  a.report = classify(a.table, a.model);
  a.series = derived_series(a.entry.group);
  a.image = galois_image_structure(a.report);
  return a;
}

nlohmann::ordered_json to_json(const Analysis& a) {
  nlohmann::ordered_json j;
  j["name"] = a.name();
  j["source"] = a.entry.source;
  j["counts"] = observed_counts(a);
  j["solvable"] = a.series.solvable;
  j["image"] = to_json(a.image);
  j["report"] = to_json(a.report);
  j["fixture"] = to_json(fixture_check(a));
  return j;
}

std::vector<Analysis> analyze_all(std::vector<CorpusEntry> entries, unsigned jobs) {
  const std::size_t n = entries.size();
  std::vector<std::optional<Analysis>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = analyze(std::move(entries[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Analysis> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

void sort_corpus(std::vector<CorpusEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const CorpusEntry& x, const CorpusEntry& y) {
    if (x.group.order() != y.group.order()) return x.group.order() < y.group.order();
    return x.group.name() < y.group.name();
  });
}

nlohmann::ordered_json observed_counts(const Analysis& a) {
  const auto& r = a.report;
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["exponent"] = r.exponent;
  j["classes"] = r.k;
  j["rational_classes"] = r.rational_class_indices.size();
  j["rational_characters"] = r.rational_char_indices.size();
  j["irrational_classes"] = r.irrational_class_count;
  j["irrational_characters"] = r.irrational_char_count;
  return j;
}

CheckOutcome fixture_check(const Analysis& a) {
  const std::string name = "fixture";
  if (!a.entry.expected) return CheckOutcome::not_applicable(a.name(), name, "entry carries no expected counts");
  const auto observed = observed_counts(a);
  nlohmann::ordered_json compared;
  for (const auto& [key, value] : a.entry.expected->values) {
    if (!observed.contains(key) || observed[key].get<std::int64_t>() != value) {
      nlohmann::ordered_json w;
      w["key"] = key;
      w["expected"] = value;
      w["actual"] = observed.contains(key) ? observed[key] : nlohmann::ordered_json();
      w["provenance"] = a.entry.expected->provenance;
      return CheckOutcome::fail(a.name(), name, std::move(w));
    }
    compared[key] = value;
  }
  nlohmann::ordered_json w;
  w["compared"] = std::move(compared);
  w["provenance"] = a.entry.expected->provenance;
  return CheckOutcome::pass(a.name(), name, std::move(w));
}

std::vector<CheckOutcome> missing_fixture_outcomes(const std::vector<std::string>& present) {
  std::vector<CheckOutcome> out;
  for (const auto& f : known_fixture_names()) {
    if (std::find(present.begin(), present.end(), f) == present.end())
      out.push_back(CheckOutcome::not_applicable(f, "fixture", "fixture file absent from the corpus"));
  }
  return out;
}

CheckOutcome equivalence_check(const Analysis& a) {
  const std::string name = "rationality_equivalence";
  const auto verdicts = check_rationality_equivalences(a.entry.group, a.classes, a.table, a.model);
  for (const auto& v : verdicts)
    if (!v.agree()) {
      nlohmann::ordered_json w;
      w["class"] = v.class_index;
      w["values_rational"] = v.values_rational;
      w["conjugate_to_powers"] = v.conjugate_to_powers;
      w["galois_fixed"] = v.galois_fixed;
      w["normalizer_full"] = v.normalizer_full;
      return CheckOutcome::fail(a.name(), name, std::move(w));
    }
  nlohmann::ordered_json w;
  w["classes"] = verdicts.size();
  return CheckOutcome::pass(a.name(), name, std::move(w));
}

std::vector<CheckOutcome> basic_lemma_checks(const Analysis& a) {
  std::vector<CheckOutcome> out;
  for (auto g : a.entry.group.generator_indices()) {
    auto o = check_subgroup_rationality(a.entry.group, {g});
    o.group = a.name();
    out.push_back(std::move(o));
  }
  out.push_back(check_power_rationality(a.entry.group, a.classes));
  out.push_back(check_coprime_centralizer(a.entry.group, a.classes));
  for (auto& o : out) o.group = a.name();
  return out;
}

Theorem parse_theorem(std::string_view name) {
  static const std::pair<std::string_view, Theorem> table[] = {
      {"A", Theorem::A},
      {"B", Theorem::B},
      {"C", Theorem::C},
      {"brauer", Theorem::Brauer},
      {"column", Theorem::Column},
      {"row", Theorem::Row},
      {"sn", Theorem::Sn},
      {"2groups", Theorem::TwoGroups},
      {"s4s5", Theorem::S4S5},
      {"equivalence", Theorem::Equivalence},
      {"lemma", Theorem::Lemma},
      {"fixtures", Theorem::Fixtures},
  };
  for (const auto& [key, t] : table)
    if (key == name) return t;
  throw InvalidParameter("unknown theorem '" + std::string(name) +
                         "' (expected A, B, C, brauer, column, row, sn, 2groups, s4s5, equivalence, lemma, fixtures)");
}

std::string_view to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::A: return "A";
    case Theorem::B: return "B";
    case Theorem::C: return "C";
    case Theorem::Brauer: return "brauer";
    case Theorem::Column: return "column";
    case Theorem::Row: return "row";
    case Theorem::Sn: return "sn";
    case Theorem::TwoGroups: return "2groups";
    case Theorem::S4S5: return "s4s5";
    case Theorem::Equivalence: return "equivalence";
    case Theorem::Lemma: return "lemma";
    case Theorem::Fixtures: return "fixtures";
  }
  return "?";
}

bool is_standalone(Theorem t) noexcept {
  return t == Theorem::Sn || t == Theorem::TwoGroups || t == Theorem::S4S5;
}

std::vector<CheckOutcome> run_checks(const Analysis& a, Theorem t) {
  switch (t) {
    case Theorem::A: return {theorem_a_check(a.report)};
    case Theorem::B: return {theorem_b_check(a.report, a.series.solvable)};
    case Theorem::C: return {theorem_c_bound_check(a.report)};
    case Theorem::Brauer: return {brauer_check(a.model, a.name())};
    case Theorem::Column: return {column_analysis_check(a.table, a.model)};
    case Theorem::Row: return {row_analysis_check(a.table, a.model)};
    case Theorem::Equivalence: return {equivalence_check(a)};
    case Theorem::Lemma: return basic_lemma_checks(a);
    case Theorem::Fixtures: return {fixture_check(a)};
    case Theorem::Sn:
    case Theorem::TwoGroups:
    case Theorem::S4S5: break;
  }
  return {};
}

std::vector<CheckOutcome> run_standalone(Theorem t) {
  std::vector<CheckOutcome> out;
  switch (t) {
    case Theorem::Sn:
      for (std::size_t n = 3; n <= 7; ++n) out.push_back(abelian_sn_check(n));
      break;
    case Theorem::TwoGroups:
      for (std::size_t n = 3; n <= 5; ++n) out.push_back(maximal_class_2group_check(n));
      break;
    case Theorem::S4S5:
      out.push_back(s4_abelian_scan());
      out.push_back(s5_fixed_point_free_scan());
      break;
    default: break;
  }
  return out;
}

std::vector<CheckOutcome> scan_checks(const Analysis& a) {
  std::vector<CheckOutcome> out;
  for (auto t : {Theorem::Fixtures, Theorem::A, Theorem::B, Theorem::C, Theorem::Brauer, Theorem::Column,
                 Theorem::Row, Theorem::Equivalence})
    for (auto& o : run_checks(a, t)) out.push_back(std::move(o));
  return out;
}

nlohmann::ordered_json scan_report(const std::vector<Analysis>& analyses, const std::vector<std::string>& present) {
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  nlohmann::ordered_json mismatch = nlohmann::ordered_json::array();
  nlohmann::ordered_json seven = nlohmann::ordered_json::array();
  nlohmann::ordered_json question = nlohmann::ordered_json::array();
  nlohmann::ordered_json tally = {{"Pass", 0}, {"Fail", 0}, {"NotApplicable", 0}};

  for (const auto& a : analyses) {
    const auto& r = a.report;
    nlohmann::ordered_json g;
    g["name"] = a.name();
    g["source"] = a.entry.source;
    g["tags"] = a.entry.tags;
    g["solvable"] = a.series.solvable;
    g["derived_series"] = a.series.orders;
    g["image"] = to_json(a.image);
    g["report"] = to_json(r);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& o : scan_checks(a)) {
      tally[std::string(to_string(o.status))] = tally[std::string(to_string(o.status))].get<int>() + 1;
      checks.push_back(to_json(o));
    }
    g["checks"] = std::move(checks);
    groups.push_back(std::move(g));

    nlohmann::ordered_json counts = observed_counts(a);
    counts["name"] = a.name();
    if (r.irrational_class_count != r.irrational_char_count) mismatch.push_back(counts);
    if (a.series.solvable && r.irrational_class_count == 2 && r.order % 7 == 0) seven.push_back(counts);
    if (r.rational_char_indices.size() <= 5 && r.rational_char_indices.size() != r.rational_class_indices.size())
      question.push_back(counts);
  }
  nlohmann::ordered_json missing = nlohmann::ordered_json::array();
  for (const auto& o : missing_fixture_outcomes(present)) {
    tally["NotApplicable"] = tally["NotApplicable"].get<int>() + 1;
    missing.push_back(to_json(o));
  }

  nlohmann::ordered_json doc;
  doc["groups"] = std::move(groups);
  doc["missing_fixtures"] = std::move(missing);
  doc["notable"] = {
      {"irrational_counts_differ", std::move(mismatch)},
      {"solvable_two_irrational_classes_order_divisible_by_7", std::move(seven)},
      {"rational_counts_differ_with_at_most_5_rational_characters", std::move(question)},
  };
  doc["tally"] = std::move(tally);
  return doc;
}

}  // namespace galct
