#include <doctest.h>

#include <algorithm>

#include "galct/errors.hpp"
#include "galct/families.hpp"
#include "galct/numtheory.hpp"
#include "galct/rationality.hpp"

using namespace galct;

namespace {

struct Analysed {
  PermGroup group;
  ClassData classes;
  CharacterTable table;
  GaloisGroupModel model;
  RationalityReport report;
};

Analysed analyse(const PermGroup& g) {
  auto cd = conjugacy_classes(g);
  auto t = compute_character_table(g, cd);
  auto m = build_galois_model(t);
  auto r = classify(t, m);
  return {g, std::move(cd), std::move(t), std::move(m), std::move(r)};
}

std::size_t cycle_count(const std::vector<std::size_t>& p) {
  std::vector<char> seen(p.size(), 0);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return cycles;
}

std::size_t fixed_count(const std::vector<std::size_t>& p) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) n += p[i] == i;
  return n;
}

}  // namespace

TEST_CASE("Galois model on cyclic groups") {
  auto c3 = analyse(make_cyclic(3));
  auto s = c3.model.index_of(2);
  CHECK(c3.model.class_perm[s] == std::vector<std::size_t>{0, 2, 1});
  CHECK(fixed_count(c3.model.char_perm[s]) == 1);

  auto c5 = analyse(make_cyclic(5));
  CHECK(c5.model.size() == 4);
  s = c5.model.index_of(2);
  CHECK(fixed_count(c5.model.class_perm[s]) == 1);
  CHECK(cycle_count(c5.model.class_perm[s]) == 2);  // a fixed point and a 4-cycle
  CHECK(fixed_count(c5.model.char_perm[s]) == 1);
  CHECK(cycle_count(c5.model.char_perm[s]) == 2);

  auto c1 = analyse(make_cyclic(1));
  CHECK(c1.model.size() == 1);
  CHECK(c1.model.elements[0].r() == 1);
}

TEST_CASE("rational groups have trivial actions") {
  for (const char* spec : {"symmetric:3", "symmetric:4", "symmetric:5", "quaternion:2", "dihedral:2", "klein"}) {
    auto a = analyse(make_family(spec));
    CAPTURE(spec);
    for (std::size_t s = 0; s < a.model.size(); ++s) {
      CHECK(fixed_count(a.model.class_perm[s]) == a.classes.count());
      CHECK(fixed_count(a.model.char_perm[s]) == a.classes.count());
    }
    CHECK(a.report.irrational_class_count == 0);
    CHECK(a.report.irrational_char_count == 0);
  }
}

TEST_CASE("classify") {
  auto c8 = analyse(make_cyclic(8));
  CHECK(c8.report.rational_class_indices.size() == 2);
  CHECK(c8.report.rational_char_indices.size() == 2);
  CHECK(c8.report.irrational_class_count == 6);
  CHECK(c8.report.irrational_char_count == 6);
  // Brute force: x rational in an abelian group iff x = x^-1.
  for (auto i : c8.report.rational_class_indices) CHECK(c8.classes[i].element_order <= 2);

  auto d16 = analyse(make_dihedral(3));
  CHECK(d16.report.rational_class_indices.size() == 5);
  auto s3 = analyse(make_symmetric(3));
  CHECK(s3.report.rational_class_indices.size() == 3);
  CHECK(s3.report.rational_char_indices.size() == 3);

  for (const char* spec : {"cyclic:12", "frobenius:21", "frobenius:20", "semidihedral:4", "cyclic:3*symmetric:3",
                           "cyclic:4*cyclic:4"}) {
    auto a = analyse(make_family(spec));
    const auto& r = a.report;
    CAPTURE(spec);
    CHECK(r.rational_class_indices.size() + r.irrational_class_count == r.k);
    CHECK(r.rational_char_indices.size() + r.irrational_char_count == r.k);
    for (std::size_t i = 0; i < r.k; ++i) {
      CHECK((r.class_field_degree[i] == 1) == std::binary_search(r.rational_class_indices.begin(),
                                                                   r.rational_class_indices.end(), i));
      // Field degree = orbit size = index of the stabiliser.
      std::size_t stab = 0;
      for (const auto& p : a.model.char_perm) stab += p[i] == i;
      CHECK(r.char_field_degree[i] * stab == a.model.size());
      // A character is rational iff all its values are.
      const bool values_rational =
          std::all_of(a.table.row(i).begin(), a.table.row(i).end(), [](const Cyclo& z) { return z.is_rational(); });
      CHECK(values_rational == (r.char_field_degree[i] == 1));
    }
    // Brauer: fixed classes and fixed characters agree for every sigma.
    for (std::size_t s = 0; s < a.model.size(); ++s)
      CHECK(fixed_count(a.model.class_perm[s]) == fixed_count(a.model.char_perm[s]));
    CHECK(to_json(r).dump() == to_json(classify(a.table)).dump());
  }
}

TEST_CASE("rationality equivalences") {
  auto d8 = analyse(make_dihedral(2));
  auto verdicts = check_rationality_equivalences(d8.group, d8.classes, d8.table, d8.model);
  for (const auto& v : verdicts) {
    CHECK(v.agree());
    if (d8.classes[v.class_index].element_order == 4) CHECK(v.values_rational);
  }
  auto c5 = analyse(make_cyclic(5));
  for (const auto& v : check_rationality_equivalences(c5.group, c5.classes, c5.table, c5.model)) {
    CHECK(v.agree());
    CHECK(v.values_rational == (v.class_index == 0));
  }
  for (const char* spec : {"frobenius:21", "semidihedral:4", "quaternion:4", "cyclic:2*cyclic:8", "symmetric:5"}) {
    auto a = analyse(make_family(spec));
    for (const auto& v : check_rationality_equivalences(a.group, a.classes, a.table, a.model)) CHECK(v.agree());
  }
}

TEST_CASE("basic lemma properties") {
  auto d16 = make_dihedral(3);
  // <y> is cyclic of order 8: its rational elements are 1 and y^4.
  auto a = check_subgroup_rationality(d16, {d16.generator_indices()[1]});
  CHECK(a.status == Status::Pass);
  CHECK(a.witness["rational_subgroup_classes"] == 2);

  CHECK(check_quotient_rationality(make_symmetric(3), make_cyclic(4)).status == Status::Pass);
  CHECK(check_quotient_rationality(make_dihedral(2), make_cyclic(3)).status == Status::Pass);
  CHECK(check_coprime_quotient_irrationality(make_cyclic(5), make_cyclic(4)).status == Status::Pass);
  CHECK(check_coprime_quotient_irrationality(make_frobenius(21), make_cyclic(4)).status == Status::Pass);
  // Every irrational element of C2 x C4 has even order.
  CHECK(check_coprime_quotient_irrationality(make_cyclic(2), make_cyclic(4)).status == Status::NotApplicable);

  for (const char* spec : {"cyclic:3*cyclic:4", "cyclic:5*cyclic:8", "frobenius:21", "semidihedral:3"}) {
    auto g = make_family(spec);
    auto cd = conjugacy_classes(g);
    CHECK(check_power_rationality(g, cd).status == Status::Pass);
    CHECK(check_coprime_centralizer(g, cd).status == Status::Pass);
  }
  auto s4 = make_symmetric(4);
  CHECK(check_coprime_centralizer(s4, conjugacy_classes(s4)).status == Status::NotApplicable);
}
