#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "galct/classes.hpp"
#include "galct/errors.hpp"
#include "galct/families.hpp"
#include "galct/group_io.hpp"
#include "galct/numtheory.hpp"

using namespace galct;

namespace {

// Class sizes by conjugating every element by every element, sorted ascending.
std::multiset<std::size_t> brute_class_sizes(const PermGroup& g) {
  std::vector<Permutation> els;
  for (std::size_t i = 0; i < g.order(); ++i) els.push_back(g.element_perm(i));
  std::set<Permutation> seen;
  std::multiset<std::size_t> sizes;
  for (const auto& x : els) {
    if (seen.count(x)) continue;
    std::set<Permutation> orbit;
    for (const auto& h : els) orbit.insert(h.inverse() * x * h);
    seen.insert(orbit.begin(), orbit.end());
    sizes.insert(orbit.size());
  }
  return sizes;
}

std::multiset<std::size_t> sizes_of(const ClassData& cd) {
  std::multiset<std::size_t> s;
  for (const auto& c : cd.classes()) s.insert(c.size);
  return s;
}

}  // namespace

TEST_CASE("group_from_generators") {
  auto s3 = PermGroup::from_generators(3, {Permutation::from_cycles(3, {{0, 1, 2}}),
                                           Permutation::from_cycles(3, {{0, 1}})});
  CHECK(s3.order() == 6);
  CHECK(PermGroup::from_generators(1, {}).order() == 1);
  CHECK(PermGroup::from_generators(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})}).order() == 4);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), InvalidPermutation);
  GroupOptions small{.enumeration_cap = 10};
  CHECK_THROWS_AS(make_symmetric(4, small), OrderCapExceeded);
}

TEST_CASE("closure and inverses") {
  for (const char* spec : {"symmetric:4", "quaternion:3", "frobenius:21", "cyclic:6*klein"}) {
    auto g = make_family(spec);
    for (std::size_t i = 0; i < g.order(); ++i) {
      CHECK(g.multiply(i, g.inverse(i)) == PermGroup::identity());
      for (std::size_t j = 0; j < g.order(); j += 3) {
        auto expect = g.element_perm(i) * g.element_perm(j);
        CHECK(g.element_perm(g.multiply(i, j)) == expect);
      }
    }
  }
}

TEST_CASE("family orders and presentations") {
  CHECK(make_cyclic(5).order() == 5);
  CHECK(make_dihedral(2).order() == 8);
  CHECK(make_semidihedral(3).order() == 16);
  CHECK(make_generalized_quaternion(4).order() == 32);
  CHECK(make_symmetric(5).order() == 120);
  CHECK(make_klein().order() == 4);
  CHECK(make_frobenius(20).order() == 20);
  CHECK(make_frobenius(21).order() == 21);
  CHECK(make_family("cyclic:2*cyclic:4").order() == 8);
  CHECK(make_family("cyclic:2*cyclic:4").name() == "C2xC4");
  CHECK_THROWS_AS(make_family("dihedral:1"), InvalidParameter);
  CHECK_THROWS_AS(make_family("bogus:3"), InvalidParameter);
  CHECK_THROWS_AS(make_family("cyclic"), InvalidParameter);
  CHECK_THROWS_AS(make_family("cyclic:x"), InvalidParameter);
  CHECK_THROWS_AS(make_frobenius(22), InvalidParameter);

  // Relations of the maximal-class presentations, checked on the generators.
  for (std::size_t n = 2; n <= 5; ++n) {
    const std::int64_t half = std::int64_t{1} << n;
    for (int kind = 0; kind < 3; ++kind) {
      if (kind == 1 && n < 3) continue;
      auto g = kind == 0 ? make_dihedral(n) : kind == 1 ? make_semidihedral(n) : make_generalized_quaternion(n);
      const std::size_t x = g.generator_indices()[0];
      const std::size_t y = g.generator_indices()[1];
      CHECK(g.element_order(y) == static_cast<std::uint64_t>(half));
      const std::size_t x2 = g.power(x, 2);
      CHECK(x2 == (kind == 2 ? g.power(y, half / 2) : PermGroup::identity()));
      const std::int64_t s = kind == 1 ? half / 2 - 1 : -1;
      CHECK(g.multiply(y, x) == g.multiply(x, g.power(y, s)));
    }
  }
}

TEST_CASE("conjugacy classes") {
  auto s3 = make_symmetric(3);
  auto cd = conjugacy_classes(s3);
  REQUIRE(cd.count() == 3);
  CHECK(cd[0].size == 1);
  CHECK(cd[1].size == 3);
  CHECK(cd[2].size == 2);
  CHECK(cd[1].element_order == 2);
  CHECK(cd[2].element_order == 3);

  CHECK(conjugacy_classes(make_cyclic(8)).count() == 8);
  CHECK(conjugacy_classes(make_dihedral(2)).count() == 5);
  CHECK(conjugacy_classes(make_dihedral(3)).count() == 7);
  auto q8 = conjugacy_classes(make_generalized_quaternion(2));
  CHECK(sizes_of(q8) == std::multiset<std::size_t>{1, 1, 2, 2, 2});

  for (const char* spec : {"symmetric:4", "symmetric:5", "dihedral:4", "semidihedral:4", "quaternion:3",
                           "frobenius:20", "frobenius:21", "cyclic:3*symmetric:3"}) {
    auto g = make_family(spec);
    auto c = conjugacy_classes(g);
    CHECK(sizes_of(c) == brute_class_sizes(g));
  }
}

TEST_CASE("class data invariants") {
  for (const char* spec : {"symmetric:4", "dihedral:3", "semidihedral:3", "frobenius:21", "cyclic:12",
                           "cyclic:2*cyclic:6", "quaternion:2"}) {
    auto g = make_family(spec);
    auto cd = conjugacy_classes(g);
    std::size_t total = 0;
    for (std::size_t i = 0; i < cd.count(); ++i) {
      total += cd[i].size;
      CHECK(g.order() % cd[i].size == 0);
      CHECK(cd.exponent() % cd[i].element_order == 0);
      CHECK(cd.power_class(i, 1) == i);
      CHECK(cd.power_class(i, 0) == 0);
      CHECK(cd.inverse_class(cd.inverse_class(i)) == i);
      CHECK(cd.power_class(i, -1) == cd.inverse_class(i));
      const auto o = static_cast<std::int64_t>(cd[i].element_order);
      for (std::int64_t k = -o; k <= 2 * o; ++k) {
        CHECK(cd.power_class(i, k) == cd.power_class(i, k + o));
        CHECK(cd.power_class(i, k) == cd.class_of(g.power(cd[i].representative, k)));
        if (nt::gcd(nt::mod(k, o), o) == 1) {
          const auto j = cd.power_class(i, k);
          CHECK(cd[j].size == cd[i].size);
          CHECK(cd[j].element_order == cd[i].element_order);
        }
      }
      CHECK(centralizer_order(cd, i) == centralizer_order_direct(g, cd[i].representative));
    }
    CHECK(total == g.order());
    CHECK(g.order() % cd.exponent() == 0);
    CHECK(cd[0].size == 1);
    CHECK(cd[0].element_order == 1);
  }
}

TEST_CASE("class order is deterministic") {
  auto a = conjugacy_classes(make_symmetric(5));
  auto b = conjugacy_classes(make_symmetric(5));
  for (std::size_t i = 0; i < a.count(); ++i) CHECK(a[i].representative_perm == b[i].representative_perm);
}

TEST_CASE("centralizers and normalizers") {
  auto s3 = make_symmetric(3);
  auto cd = conjugacy_classes(s3);
  CHECK(centralizer_order(cd, 1) == 2);
  CHECK(centralizer_order(cd, 0) == 6);
  auto c5 = make_cyclic(5);
  auto cd5 = conjugacy_classes(c5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(centralizer_order(cd5, i) == 5);
  CHECK(normalizer_cyclic_quotient_order(c5, cd5, 1) == 1);
  CHECK(normalizer_cyclic_quotient_order(c5, cd5, 0) == 1);

  auto d8 = make_dihedral(2);
  auto cd8 = conjugacy_classes(d8);
  for (std::size_t i = 0; i < cd8.count(); ++i) {
    if (cd8[i].element_order == 4) CHECK(normalizer_cyclic_quotient_order(d8, cd8, i) == 2);
  }
}

TEST_CASE("derived series") {
  auto s3 = derived_series(make_symmetric(3));
  CHECK(s3.solvable);
  CHECK(s3.orders == std::vector<std::size_t>{6, 3, 1});
  auto c5 = derived_series(make_cyclic(5));
  CHECK(c5.solvable);
  CHECK(c5.orders == std::vector<std::size_t>{5, 1});
  auto s5 = derived_series(make_symmetric(5));
  CHECK_FALSE(s5.solvable);
  CHECK(s5.orders == std::vector<std::size_t>{120, 60});
  auto s4 = derived_series(make_symmetric(4));
  CHECK(s4.orders == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(derived_series(make_cyclic(1)).orders == std::vector<std::size_t>{1});
}

TEST_CASE("group JSON ingestion") {
  auto rec = parse_group_json(R"({"name": "S3", "degree": 3, "generators": [[1,2,0],[1,0,2]], "tags": ["x"]})");
  CHECK(rec.group.order() == 6);
  CHECK(rec.tags == std::vector<std::string>{"x"});
  CHECK_FALSE(rec.expected);

  auto bad = [](const char* text) {
    try {
      (void)parse_group_json(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(bad(R"({"name": "g", "degree": 3, "generators": [[1,2,0],[1,1,2]]})").find("generators[1]") !=
        std::string::npos);
  CHECK(bad(R"({"name": "g", "degree": 3, "generators": [[1,2,7]]})").find("generators[0][2]") !=
        std::string::npos);
  CHECK(bad(R"({"name": "g", "degree": 3, "generators": [[1,2]]})").find("generators[0]") != std::string::npos);
  CHECK(bad("{\"name\": \"g\",\n \"degree\": 3,\n \"generators\": [[1,2,0],]}").find("line 3") !=
        std::string::npos);
  CHECK(bad(R"({"degree": 3, "generators": []})").find("name") != std::string::npos);
  CHECK_THROWS_AS(parse_group_json(R"({"name": "g", "degree": 3, "generators": [[1,1,2]]})"),
                  InvalidPermutation);

  auto fixture = load_group_file(GALCT_FIXTURE_DIR "/sg_32_42.json");
  CHECK(fixture.group.order() == 32);
  REQUIRE(fixture.expected);
  CHECK(fixture.expected->values.at("irrational_classes") == 6);

  auto round = parse_group_json(group_to_json(rec.group, rec.tags).dump());
  CHECK(round.group.order() == 6);
  CHECK(round.group.generators() == rec.group.generators());
}
