#include <doctest.h>

#include <set>

#include "galct/errors.hpp"
#include "galct/families.hpp"
#include "galct/numtheory.hpp"
#include "galct/theorem_lab.hpp"

using namespace galct;

namespace {

struct Analysed {
  PermGroup group;
  CharacterTable table;
  GaloisGroupModel model;
  RationalityReport report;
};

Analysed analyse(const PermGroup& g) {
  auto t = compute_character_table(g);
  auto m = build_galois_model(t);
  auto r = classify(t, m);
  return {g, std::move(t), std::move(m), std::move(r)};
}

// A table shaped like the row-analysis hypothesis: four classes x, x^3, x^5,
// x^7 of order 8 permuted by (Z/8)^x as the regular Klein group, everything
// else fixed, and a pair of rows with values +-i on the x-classes. It is not
// the table of a group (r = 5 moves classes but no rows); only the data the
// checker reads is coherent.
struct Mock {
  CharacterTable table;
  GaloisGroupModel model;
};

Mock klein_mock(bool corrupt) {
  // classes: 0 = 1, 1 = z (order 2), 2 = w (order 4), 3..6 = x^1, x^3, x^5, x^7
  const std::vector<std::size_t> x_class{0, 3, 0, 4, 0, 5, 0, 6};
  std::vector<ClassInfo> classes;
  classes.push_back({1, 1, {0}});
  classes.push_back({1, 2, {0, 1}});
  classes.push_back({2, 4, {0, 2, 1, 2}});
  for (std::size_t j : {1, 3, 5, 7}) {
    std::vector<std::size_t> pm(8);
    for (std::size_t t = 0; t < 8; ++t) {
      const std::size_t u = j * t % 8;
      pm[t] = u == 0 ? 0 : u == 4 ? 1 : u % 2 == 0 ? 2 : x_class[u];
    }
    classes.push_back({4, 8, pm});  // |C(x)| = 32 / 4 = 8
  }
  const Cyclo i = zeta(4, 1);
  std::vector<std::vector<Cyclo>> rows;
  rows.push_back(std::vector<Cyclo>(7, Cyclo(1)));
  rows.push_back({1, 1, -1, -1, -1, -1, -1});
  rows.push_back({1, -1, 0, i, -i, i, -i});
  rows.push_back({1, -1, 0, -i, i, -i, i});
  if (corrupt) rows[2][4] = i;
  CharacterTable table("mock", 32, 8, classes, rows);

  GaloisGroupModel model;
  model.modulus = 8;
  for (std::uint32_t r : {1U, 3U, 5U, 7U}) {
    model.elements.emplace_back(8, r);
    std::vector<std::size_t> cp{0, 1, 2, 0, 0, 0, 0};
    for (std::size_t j : {1, 3, 5, 7}) cp[x_class[j]] = x_class[j * r % 8];
    model.class_perm.push_back(cp);
    // i -> i^r swaps the pair for r = 3, 7.
    model.char_perm.push_back(r % 4 == 3 ? std::vector<std::size_t>{0, 1, 3, 2} : std::vector<std::size_t>{0, 1, 2, 3});
  }
  return {std::move(table), std::move(model)};
}

}  // namespace

TEST_CASE("brauer") {
  auto c5 = analyse(make_cyclic(5));
  CHECK(brauer_check(c5.model, "C5").status == Status::Pass);
  for (const char* spec : {"symmetric:3", "frobenius:21", "cyclic:8", "semidihedral:3", "cyclic:3*cyclic:5"}) {
    auto a = analyse(make_family(spec));
    CHECK(brauer_check(a.model, spec).status == Status::Pass);
  }
  // Breaking the character action must be caught.
  auto broken = c5.model;
  broken.char_perm[1] = broken.char_perm[0];
  auto o = brauer_check(broken, "C5");
  CHECK(o.status == Status::Fail);
  CHECK(o.witness.contains("class_cycle_type"));
}

TEST_CASE("column analysis") {
  auto c5 = analyse(make_cyclic(5));
  auto o = column_analysis_check(c5.table, c5.model);
  REQUIRE(o.status == Status::Pass);
  CHECK(o.witness["applicable_r"] == nlohmann::ordered_json::array({4}));
  CHECK(o.witness["instances"] == 4);
  // The defining instance, written out.
  CHECK(abs_squared(zeta(5, 1) - zeta(5, 4)) + abs_squared(zeta(5, 2) - zeta(5, 3)) == Cyclo(5));

  auto s3 = analyse(make_symmetric(3));
  CHECK(column_analysis_check(s3.table, s3.model).status == Status::NotApplicable);

  for (const char* spec : {"cyclic:8", "cyclic:12", "frobenius:21", "quaternion:3", "cyclic:2*cyclic:5"}) {
    auto a = analyse(make_family(spec));
    CHECK(column_analysis_check(a.table, a.model).status != Status::Fail);
  }

  // A wrong class size breaks the identity.
  auto classes = c5.table.classes();
  classes[1].size = 2;
  CharacterTable bad(c5.table.group_name(), 5, 5, classes, c5.table.rows());
  auto f = column_analysis_check(bad, c5.model);
  CHECK(f.status == Status::Fail);
  CHECK(f.witness.contains("lhs"));
}

TEST_CASE("row analysis on real groups") {
  auto c5 = analyse(make_cyclic(5));
  CHECK(row_analysis_check(c5.table, c5.model).status == Status::NotApplicable);
  auto f21 = analyse(make_frobenius(21));
  auto o = row_analysis_check(f21.table, f21.model);
  CHECK(o.status == Status::NotApplicable);
  CHECK(o.witness["moved_classes"] == 4);
  CHECK(galois_image_structure(f21.report).tag == ImageTag::KleinWithTransposition);
  auto c8 = analyse(make_cyclic(8));
  CHECK(row_analysis_check(c8.table, c8.model).status == Status::NotApplicable);
}

TEST_CASE("row analysis on a synthetic table") {
  auto good = klein_mock(false);
  auto o = row_analysis_check(good.table, good.model);
  REQUIRE(o.status == Status::Pass);
  CHECK(o.witness["instances"] == 4);  // r = 3, 7, two moved rows each

  auto bad = klein_mock(true);
  auto f = row_analysis_check(bad.table, bad.model);
  CHECK(f.status == Status::Fail);
  CHECK(f.witness["character"] == 2);

  // Cyclic image on the same four classes is out of hypothesis.
  auto cyc = klein_mock(false);
  cyc.model.class_perm[1] = {0, 1, 2, 4, 5, 6, 3};
  CHECK(row_analysis_check(cyc.table, cyc.model).status == Status::NotApplicable);
}

TEST_CASE("theorems A, B, C") {
  auto c3 = analyse(make_cyclic(3));
  auto a = theorem_a_check(c3.report);
  CHECK(a.status == Status::Pass);
  CHECK(a.witness["rational_classes"] == 1);
  CHECK(theorem_a_check(analyse(make_cyclic(5)).report).status == Status::Pass);
  CHECK(theorem_a_check(analyse(make_cyclic(16)).report).status == Status::NotApplicable);

  auto mixed = c3.report;
  mixed.rational_char_indices.push_back(1);
  CHECK(theorem_a_check(mixed).status == Status::Fail);

  auto c8 = analyse(make_cyclic(8));
  CHECK(theorem_c_bound_check(c8.report).status == Status::Pass);
  CHECK(theorem_c_bound_check(analyse(make_symmetric(4)).report).status == Status::Pass);
  auto lopsided = c8.report;
  lopsided.irrational_char_count = 19;
  CHECK(theorem_c_bound_check(lopsided).status == Status::Fail);
  lopsided.irrational_class_count = 0;
  lopsided.irrational_char_count = 1;
  CHECK(theorem_c_bound_check(lopsided).status == Status::Fail);

  CHECK(theorem_b_check(c3.group, c3.report).status == Status::Pass);
  auto d16 = analyse(make_dihedral(3));
  CHECK(d16.report.irrational_class_count == 2);
  CHECK(theorem_b_check(d16.group, d16.report).status == Status::Pass);
  auto c11 = analyse(make_cyclic(11));
  CHECK(theorem_b_check(c11.group, c11.report).status == Status::NotApplicable);
  auto s5 = analyse(make_symmetric(5));
  CHECK(theorem_b_check(s5.group, s5.report).status == Status::NotApplicable);
  // A doctored report with a prime above 7.
  auto fake = c3.report;
  fake.order = 11 * 3;
  CHECK(theorem_b_check(fake, true).status == Status::Fail);
  auto f21 = analyse(make_frobenius(21));
  auto b = theorem_b_check(f21.group, f21.report);
  CHECK(b.witness["seven_with_two_irrational_classes"] == false);
}

TEST_CASE("galois image structure") {
  auto c5 = analyse(make_cyclic(5));
  auto s = galois_image_structure(c5.report);
  CHECK(s.tag == ImageTag::Cyclic);
  CHECK(s.order == 4);
  CHECK(s.degree == 4);
  CHECK(galois_image_structure(analyse(make_symmetric(4)).report).tag == ImageTag::Trivial);
  CHECK(galois_image_structure(analyse(make_cyclic(3)).report).tag == ImageTag::Cyclic);
  // (Z/8)^x on six classes: Klein, but not on four points.
  auto c8 = galois_image_structure(analyse(make_cyclic(8)).report);
  CHECK(c8.tag == ImageTag::Other);
  CHECK(c8.elementary_abelian_2);
  CHECK(to_json(s)["tag"] == "cyclic");
}

TEST_CASE("abelian subgroups of S_n") {
  // Known totals of abelian subgroups: S3: 5, S4: 21.
  CHECK(abelian_subgroups_of_sn(3).size() == 5);
  CHECK(abelian_subgroups_of_sn(4).size() == 21);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto o = abelian_sn_check(n);
    CAPTURE(n);
    CHECK(o.status == Status::Pass);
  }
  auto s5 = abelian_sn_check(5);
  CHECK(s5.witness["types"].contains("C2 x C3"));
  CHECK(!s5.witness["types"].contains("C2 x C2 x C2"));
  auto s4 = abelian_sn_check(4);
  CHECK(s4.witness["types"]["C2 x C2"] == 4);
  CHECK_THROWS_AS(abelian_sn_check(8), DegreeTooLarge);

  auto scan4 = s4_abelian_scan();
  CHECK(scan4.status == Status::Pass);
  CHECK(scan4.witness["klein_conjugacy_classes"] == 2);
  auto scan5 = s5_fixed_point_free_scan();
  CHECK(scan5.status == Status::Pass);
  // <(01234)> in six conjugates and <(01)(234)> in ten.
  CHECK(scan5.witness["fixed_point_free_subgroups"] == 16);
}

TEST_CASE("k-eigenvalue property") {
  CHECK(eigenvalue_property_check(3, {{{2}}}, 2).status == Status::Pass);
  auto o = eigenvalue_property_check(5, {{{2}}}, 4);
  CHECK(o.status == Status::Pass);
  CHECK(o.witness["lambda"] == 2);
  // Only +-1 act: scaling by an element of order 4 is never achieved on v != 0.
  auto f = eigenvalue_property_check(5, {{{4}}}, 4);
  CHECK(f.status == Status::Fail);
  CHECK(f.witness["vector"] == std::vector<std::uint64_t>{1});
  // Diagonal action on F_5^2 by (2, 2): every v is scaled by 2.
  CHECK(eigenvalue_property_check(5, {{{2, 0}, {0, 2}}}, 4).status == Status::Pass);
  // diag(2, 3) scales e1 and e2 by order-4 elements but not e1 + e2 by a common one.
  CHECK(eigenvalue_property_check(5, {{{2, 0}, {0, 3}}}, 4).status == Status::Fail);
  CHECK_THROWS_AS(eigenvalue_property_check(7, {{{3}}}, 4), InvalidK);
  CHECK_THROWS_AS(eigenvalue_property_check(101, {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}, 4), CapExceeded);
  CHECK_THROWS_AS(eigenvalue_property_check(5, {{{0}}}, 2), InvalidParameter);
  CHECK_THROWS_AS(eigenvalue_property_check(6, {{{1}}}, 1), InvalidParameter);
}

TEST_CASE("maximal class 2-groups") {
  for (std::size_t n : {3, 4, 5}) {
    auto o = maximal_class_2group_check(n);
    CAPTURE(n);
    CHECK(o.status == Status::Pass);
    for (const auto& g : o.witness["groups"]) CHECK(g["rational_classes"] == 5);
  }
  CHECK_THROWS_AS(maximal_class_2group_check(2), InvalidParameter);
}
