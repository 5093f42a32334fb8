#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "galct/corpus.hpp"
#include "galct/errors.hpp"
#include "galct/families.hpp"

using namespace galct;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("galct_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("built-in corpus") {
  const auto specs = builtin_family_specs();
  CHECK(std::set<std::string>(specs.begin(), specs.end()).size() == specs.size());
  CHECK(std::count(specs.begin(), specs.end(), "frobenius:21") == 1);
  const auto all = builtin_corpus();
  CHECK(all.size() == specs.size());
  for (const auto& e : all) CHECK(e.group.order() <= 120);
  const auto small = builtin_corpus(16);
  for (const auto& e : small) CHECK(e.group.order() <= 16);
  // The order filter agrees with the built groups.
  std::size_t expected = 0;
  for (const auto& e : all) expected += e.group.order() <= 16;
  CHECK(small.size() == expected);
}

TEST_CASE("fixture comparison") {
  auto entries = load_corpus_dir(GALCT_FIXTURE_DIR, 32);
  REQUIRE(entries.size() == 2);
  for (auto& e : entries) {
    auto a = analyze(e);
    CAPTURE(a.name());
    CHECK(fixture_check(a).status == Status::Pass);
  }
  auto a = analyze(entries[0]);
  a.entry.expected->values["rational_classes"] = 5;
  auto f = fixture_check(a);
  CHECK(f.status == Status::Fail);
  CHECK(f.witness["expected"] == 5);
  CHECK(f.witness["actual"] == 4);
  CHECK(f.witness["key"] == "rational_classes");

  a.entry.expected->values = {{"no_such_count", 1}};
  CHECK(fixture_check(a).status == Status::Fail);

  a.entry.expected.reset();
  CHECK(fixture_check(a).status == Status::NotApplicable);
}

TEST_CASE("missing fixtures are reported, never passed") {
  auto missing = missing_fixture_outcomes({"sg_32_42"});
  REQUIRE(missing.size() == 2);
  for (const auto& o : missing) CHECK(o.status == Status::NotApplicable);
  CHECK(missing_fixture_outcomes(known_fixture_names()).empty());
}

TEST_CASE("corpus directory errors") {
  CHECK_THROWS_AS(load_corpus_dir("/nonexistent/galct"), Error);
  auto dir = scratch_dir("bad");
  std::ofstream(dir / "broken.json") << "{\"name\": \"x\", \"degree\": 2, \"generators\": [[0, 0]]}";
  try {
    load_corpus_dir(dir);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("scan is deterministic and flags the counterexamples") {
  std::vector<CorpusEntry> entries = builtin_corpus(12);
  for (auto& e : load_corpus_dir(GALCT_FIXTURE_DIR, 32)) entries.push_back(std::move(e));
  sort_corpus(entries);
  std::vector<std::string> present{"sg_32_15", "sg_32_42"};
  auto one = scan_report(analyze_all(entries, 1), present);
  auto four = scan_report(analyze_all(entries, 4), present);
  CHECK(one.dump() == four.dump());
  CHECK(one["tally"]["Fail"] == 0);
  std::set<std::string> flagged;
  for (const auto& e : one["notable"]["irrational_counts_differ"]) flagged.insert(e["name"].get<std::string>());
  CHECK(flagged == std::set<std::string>{"sg_32_15", "sg_32_42"});
  CHECK(one["missing_fixtures"].size() == 1);
}

TEST_CASE("theorem names") {
  for (const char* t : {"A", "B", "C", "brauer", "column", "row", "sn", "2groups", "s4s5", "equivalence", "lemma",
                        "fixtures"})
    CHECK(to_string(parse_theorem(t)) == t);
  CHECK_THROWS_AS(parse_theorem("D"), InvalidParameter);
  CHECK(is_standalone(Theorem::Sn));
  CHECK(!is_standalone(Theorem::A));
  CHECK(run_standalone(Theorem::S4S5).size() == 2);
}
