#include <doctest.h>

#include <algorithm>

#include "galct/char_table.hpp"
#include "galct/errors.hpp"
#include "galct/families.hpp"
#include "galct/group_io.hpp"

using namespace galct;

namespace {

std::vector<std::int64_t> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

// Fixed-point counts of the natural action, straight from the elements.
std::vector<std::int64_t> permutation_character(const PermGroup& g, const ClassData& cd) {
  std::vector<std::int64_t> out;
  for (const auto& c : cd.classes()) {
    std::int64_t fixed = 0;
    for (std::size_t x = 0; x < c.representative_perm.degree(); ++x)
      if (c.representative_perm[x] == x) ++fixed;
    out.push_back(fixed);
  }
  return out;
}

}  // namespace

TEST_CASE("small tables") {
  auto s3 = compute_character_table(make_symmetric(3));
  CHECK(sorted_degrees(s3) == std::vector<std::int64_t>{1, 1, 2});

  auto c3 = compute_character_table(make_cyclic(3));
  std::vector<std::vector<Cyclo>> expect{
      {1, 1, 1}, {1, zeta(3, 1), zeta(3, 2)}, {1, zeta(3, 2), zeta(3, 1)}};
  // Row order is fixed by the serialisation; compare as sets.
  for (const auto& row : expect) CHECK(std::find(c3.rows().begin(), c3.rows().end(), row) != c3.rows().end());

  auto q8 = compute_character_table(make_generalized_quaternion(2));
  CHECK(sorted_degrees(q8) == std::vector<std::int64_t>{1, 1, 1, 1, 2});
  for (const auto& row : q8.rows())
    for (const auto& z : row) CHECK(z.is_rational());

  CHECK(sorted_degrees(compute_character_table(make_symmetric(4))) == std::vector<std::int64_t>{1, 1, 2, 3, 3});
  CHECK(sorted_degrees(compute_character_table(make_symmetric(5))) ==
        std::vector<std::int64_t>{1, 1, 4, 4, 5, 5, 6});
  CHECK(sorted_degrees(compute_character_table(make_frobenius(21))) == std::vector<std::int64_t>{1, 1, 1, 3, 3});
  CHECK(sorted_degrees(compute_character_table(make_frobenius(20))) == std::vector<std::int64_t>{1, 1, 1, 1, 4});
  auto trivial = compute_character_table(make_cyclic(1));
  CHECK(trivial.rows() == std::vector<std::vector<Cyclo>>{{Cyclo(1)}});
}

TEST_CASE("table invariants on families") {
  for (const char* spec : {"cyclic:12", "dihedral:3", "semidihedral:3", "quaternion:3", "symmetric:4",
                           "frobenius:20", "cyclic:3*symmetric:3", "cyclic:4*cyclic:6", "klein"}) {
    auto g = make_family(spec);
    auto cd = conjugacy_classes(g);
    auto t = compute_character_table(g, cd);
    CAPTURE(spec);
    CHECK_FALSE(find_table_defect(t));
    CHECK(t.class_count() == cd.count());
    auto degs = t.degrees();
    CHECK(std::is_sorted(degs.begin(), degs.end()));
    for (std::size_t a = 0; a < t.class_count(); ++a) CHECK(t.value(a, 0) == Cyclo(t.degree(a)));

    // Multiplicities of the natural permutation character are non-negative integers.
    auto pi = permutation_character(g, cd);
    std::int64_t norm = 0;
    for (std::size_t j = 0; j < cd.count(); ++j) norm += static_cast<std::int64_t>(cd[j].size) * pi[j] * pi[j];
    std::int64_t mult_sq = 0;
    for (std::size_t a = 0; a < t.class_count(); ++a) {
      Cyclo acc;
      for (std::size_t j = 0; j < cd.count(); ++j)
        acc += Cyclo(static_cast<std::int64_t>(cd[j].size) * pi[j]) * t.value(a, j).conj();
      auto q = acc.to_rational();
      REQUIRE(q);
      auto m = (*q / Rational(static_cast<std::int64_t>(g.order())));
      REQUIRE(m.is_integer());
      CHECK(m.sign() >= 0);
      mult_sq += *m.to_int64() * *m.to_int64();
    }
    CHECK(mult_sq * static_cast<std::int64_t>(g.order()) == norm);
  }
}

TEST_CASE("deterministic output") {
  auto a = compute_character_table(make_semidihedral(4));
  auto b = compute_character_table(make_semidihedral(4));
  CHECK(export_table(a).dump() == export_table(b).dump());
  REQUIRE(a.prime());
  CHECK(*a.prime() % a.exponent() == 1);
}

TEST_CASE("import and export") {
  auto s3 = compute_character_table(make_symmetric(3));
  auto doc = export_table(s3);
  CHECK(doc.begin().key() == "group");
  CHECK(doc["classes"][2]["power_map"]["2"] == 2);
  CHECK(import_table(doc) == s3);

  auto bad = doc;
  bad["rows"][2][1] = to_json(Cyclo(1));
  CHECK_THROWS_AS(import_table(bad), ValidationFailed);
  auto bad_shape = doc;
  bad_shape["rows"].erase(0);
  CHECK_THROWS_AS(import_table(bad_shape), ValidationFailed);
  auto bad_power = doc;
  bad_power["classes"][2]["power_map"].erase("1");
  CHECK_THROWS_AS(import_table(bad_power), ValidationFailed);
  auto bad_size = doc;
  bad_size["classes"][1]["size"] = 2;
  CHECK_THROWS_AS(import_table(bad_size), ValidationFailed);
}

TEST_CASE("fixture table") {
  auto rec = load_group_file(GALCT_FIXTURE_DIR "/sg_32_42.json");
  auto t = compute_character_table(rec.group);
  // 14 classes, as reported by an external computer-algebra system.
  CHECK(t.class_count() == 14);
  auto again = import_table(export_table(t));
  CHECK(again.class_count() == 14);
  CHECK(again == t);
}
