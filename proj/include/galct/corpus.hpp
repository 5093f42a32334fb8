#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "galct/char_table.hpp"
#include "galct/classes.hpp"
#include "galct/group_io.hpp"
#include "galct/outcome.hpp"
#include "galct/rationality.hpp"
#include "galct/theorem_lab.hpp"

namespace galct {

struct CorpusEntry {
  /// Family spec ("cyclic:8") or file path.
  std::string source;
  PermGroup group;
  std::vector<std::string> tags;
  std::optional<ExpectedCounts> expected;
};

/// Family specs of the built-in corpus, in corpus order.
std::vector<std::string> builtin_family_specs();

/// Built-in groups of order <= max_order (0 = no limit).
std::vector<CorpusEntry> builtin_corpus(std::size_t max_order = 0);

/// Every *.json file below `dir`, sorted by path, as corpus entries of order
/// <= max_order (0 = no limit). Throws ParseError / ValidationFailed /
/// InvalidPermutation with the file path in the message, and Error when the
/// directory cannot be read.
std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir, std::size_t max_order = 0);

/// File stems of the externally exported fixtures the corpus expects.
const std::vector<std::string>& known_fixture_names();

struct Analysis {
  CorpusEntry entry;
  ClassData classes;
  CharacterTable table;
  GaloisGroupModel model;
  RationalityReport report;
  DerivedSeries series;
  ImageStructure image;

  [[nodiscard]] const std::string& name() const { return entry.group.name(); }
};

Analysis analyze(CorpusEntry entry);

/// {name, source, counts, solvable, image, report, fixture}
nlohmann::ordered_json to_json(const Analysis& a);

/// Analyses every entry, with up to `jobs` worker threads; the result order
/// matches `entries`.
std::vector<Analysis> analyze_all(std::vector<CorpusEntry> entries, unsigned jobs = 1);

/// Orders entries by group order, then name.
void sort_corpus(std::vector<CorpusEntry>& entries);

/// Actual values for the keys a fixture may carry.
nlohmann::ordered_json observed_counts(const Analysis& a);

/// Compares the entry's expected counts with the computed ones.
/// NotApplicable when the entry has no expectations.
CheckOutcome fixture_check(const Analysis& a);

/// NotApplicable outcome for every known fixture whose name is not in
/// `present` (names of all groups found in the corpus, before any order
/// filter).
std::vector<CheckOutcome> missing_fixture_outcomes(const std::vector<std::string>& present);

/// All four rationality tests agree on every class.
CheckOutcome equivalence_check(const Analysis& a);

/// Basic-lemma items (a), (d), (e) on the entry: (a) uses the cyclic
/// subgroup generated by each generator.
std::vector<CheckOutcome> basic_lemma_checks(const Analysis& a);

enum class Theorem { A, B, C, Brauer, Column, Row, Sn, TwoGroups, S4S5, Equivalence, Lemma, Fixtures };

/// Accepts A, B, C, brauer, column, row, sn, 2groups, s4s5, equivalence,
/// lemma, fixtures. Throws InvalidParameter otherwise.
Theorem parse_theorem(std::string_view name);
std::string_view to_string(Theorem t) noexcept;

/// True for the checks that run once rather than per corpus entry.
bool is_standalone(Theorem t) noexcept;

std::vector<CheckOutcome> run_checks(const Analysis& a, Theorem t);
std::vector<CheckOutcome> run_standalone(Theorem t);

/// Per-entry checks recorded by a scan.
std::vector<CheckOutcome> scan_checks(const Analysis& a);

/// One record per analysis plus the "notable" section; `present` as for
/// missing_fixture_outcomes.
nlohmann::ordered_json scan_report(const std::vector<Analysis>& analyses, const std::vector<std::string>& present);

}  // namespace galct
