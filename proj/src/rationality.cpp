#include "galct/rationality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "galct/errors.hpp"
#include "galct/families.hpp"
#include "galct/numtheory.hpp"

namespace galct {

namespace {

std::vector<std::vector<std::size_t>> orbits_of(const std::vector<std::vector<std::size_t>>& perms, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::set<std::size_t> orbit;
    for (const auto& p : perms) orbit.insert(p[i]);
    orbit.insert(i);
    for (auto x : orbit) seen[x] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

std::vector<bool> class_rationality(const PermGroup& group, const ClassData& classes) {
  std::vector<bool> out(classes.count());
  for (std::size_t i = 0; i < classes.count(); ++i)
    out[i] = element_is_rational(group, classes, classes[i].representative);
  return out;
}

nlohmann::ordered_json perm_witness(const Permutation& p) { return p.to_cycle_string(); }

// Element of `a` obtained by restricting an element of a x b to the first
// a.degree() points.
std::size_t project_first(const PermGroup& product, const PermGroup& a, std::size_t element) {
  auto img = product.element(element);
  std::vector<Point> head(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(a.degree()));
  auto idx = a.index_of(std::span<const Point>(head));
  if (!idx) throw InternalInconsistency("projection left the first factor");
  return *idx;
}

}  // namespace

std::size_t GaloisGroupModel::index_of(std::int64_t r) const {
  const auto rr = static_cast<std::uint32_t>(modulus == 1 ? 1 : nt::mod(r, modulus));
  for (std::size_t s = 0; s < elements.size(); ++s)
    if (elements[s].r() == rr) return s;
  throw InvalidParameter("r = " + std::to_string(r) + " is not a unit modulo " + std::to_string(modulus));
}

GaloisGroupModel build_galois_model(const CharacterTable& table) {
  GaloisGroupModel model;
  model.modulus = static_cast<std::uint32_t>(table.exponent());
  const std::size_t k = table.class_count();

  std::map<std::vector<Cyclo>, std::size_t> row_index;
  for (std::size_t a = 0; a < k; ++a) row_index.emplace(table.row(a), a);
  if (row_index.size() != k) throw InternalInconsistency("character table has repeated rows");

  for (auto r : nt::units(model.modulus)) {
    model.elements.emplace_back(model.modulus, static_cast<std::int64_t>(r));
    std::vector<std::size_t> cp(k);
    for (std::size_t i = 0; i < k; ++i) cp[i] = table.power_class(i, static_cast<std::int64_t>(r));
    std::vector<std::size_t> chp(k);
    std::vector<char> hit(k, 0);
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<Cyclo> image(k);
      for (std::size_t j = 0; j < k; ++j) image[j] = table.value(a, cp[j]);
      auto it = row_index.find(image);
      if (it == row_index.end())
        throw InternalInconsistency("row " + std::to_string(a) + " has no Galois image under r = " + std::to_string(r));
      chp[a] = it->second;
      if (hit[it->second]++) throw InternalInconsistency("Galois action on characters is not a permutation");
    }
    model.class_perm.push_back(std::move(cp));
    model.char_perm.push_back(std::move(chp));
  }

  for (auto r : nt::unit_group_generators(model.modulus)) {
    const std::size_t s = model.index_of(static_cast<std::int64_t>(r));
    const auto& sigma = model.elements[s];
    for (std::size_t a = 0; a < k; ++a) {
      const auto& target = table.row(model.char_perm[s][a]);
      for (std::size_t j = 0; j < k; ++j) {
        if (galois_apply(sigma, table.value(a, j)) != target[j])
          throw InternalInconsistency("Galois compatibility fails for r = " + std::to_string(r) + ", row " +
                                      std::to_string(a) + ", class " + std::to_string(j));
      }
    }
  }
  return model;
}

RationalityReport classify(const CharacterTable& table, const GaloisGroupModel& model) {
  RationalityReport rep;
  const std::size_t k = table.class_count();
  rep.group = table.group_name();
  rep.order = table.group_order();
  rep.exponent = table.exponent();
  rep.k = k;
  rep.class_orbits = orbits_of(model.class_perm, k);
  rep.char_orbits = orbits_of(model.char_perm, k);
  rep.class_field_degree.assign(k, 0);
  rep.char_field_degree.assign(k, 0);
  for (const auto& o : rep.class_orbits)
    for (auto i : o) rep.class_field_degree[i] = o.size();
  for (const auto& o : rep.char_orbits)
    for (auto i : o) rep.char_field_degree[i] = o.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (rep.class_field_degree[i] == 1) rep.rational_class_indices.push_back(i);
    else rep.irrational_classes.push_back(i);
    if (rep.char_field_degree[i] == 1) rep.rational_char_indices.push_back(i);
  }
  rep.irrational_class_count = k - rep.rational_class_indices.size();
  rep.irrational_char_count = k - rep.rational_char_indices.size();

  std::vector<std::size_t> position(k, 0);
  for (std::size_t t = 0; t < rep.irrational_classes.size(); ++t) position[rep.irrational_classes[t]] = t;
  std::set<std::vector<std::size_t>> image;
  for (const auto& cp : model.class_perm) {
    std::vector<std::size_t> p;
    for (auto i : rep.irrational_classes) p.push_back(position[cp[i]]);
    image.insert(std::move(p));
  }
  rep.galois_image_on_irrational_classes.assign(image.begin(), image.end());
  return rep;
}

RationalityReport classify(const CharacterTable& table) { return classify(table, build_galois_model(table)); }

nlohmann::ordered_json to_json(const RationalityReport& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["exponent"] = r.exponent;
  j["k"] = r.k;
  j["rational_class_indices"] = r.rational_class_indices;
  j["rational_char_indices"] = r.rational_char_indices;
  j["rational_class_count"] = r.rational_class_indices.size();
  j["rational_char_count"] = r.rational_char_indices.size();
  j["irrational_class_count"] = r.irrational_class_count;
  j["irrational_char_count"] = r.irrational_char_count;
  j["class_orbits"] = r.class_orbits;
  j["char_orbits"] = r.char_orbits;
  j["class_field_degree"] = r.class_field_degree;
  j["char_field_degree"] = r.char_field_degree;
  j["irrational_classes"] = r.irrational_classes;
  j["galois_image_on_irrational_classes"] = r.galois_image_on_irrational_classes;
  return j;
}

bool element_is_rational(const PermGroup& group, const ClassData& classes, std::size_t element) {
  const std::size_t home = classes.class_of(element);
  std::vector<std::size_t> powers{PermGroup::identity()};
  for (std::size_t x = element; x != PermGroup::identity(); x = group.multiply(x, element)) powers.push_back(x);
  const std::uint64_t o = powers.size();
  for (std::uint64_t m = 2; m < o; ++m)
    if (nt::gcd(m, o) == 1 && classes.class_of(powers[m]) != home) return false;
  return true;
}

std::vector<ClassRationalityVerdict> check_rationality_equivalences(const PermGroup& group,
                                                                    const ClassData& classes,
                                                                    const CharacterTable& table,
                                                                    const GaloisGroupModel& model) {
  std::vector<ClassRationalityVerdict> out;
  for (std::size_t i = 0; i < classes.count(); ++i) {
    ClassRationalityVerdict v;
    v.class_index = i;
    v.values_rational = true;
    for (std::size_t a = 0; a < table.class_count(); ++a)
      if (!table.value(a, i).is_rational()) v.values_rational = false;
    v.conjugate_to_powers = element_is_rational(group, classes, classes[i].representative);
    v.galois_fixed = std::all_of(model.class_perm.begin(), model.class_perm.end(),
                                 [i](const auto& p) { return p[i] == i; });
    v.normalizer_full =
        normalizer_cyclic_quotient_order(group, classes, i) == nt::euler_phi(classes[i].element_order);
    out.push_back(v);
  }
  return out;
}

CheckOutcome check_subgroup_rationality(const PermGroup& group, const std::vector<std::size_t>& subgroup_generators) {
  const std::string name = "basic_lemma_a";
  std::vector<Permutation> gens;
  for (auto g : subgroup_generators) gens.push_back(group.element_perm(g));
  auto h = PermGroup::from_generators(group.degree(), std::move(gens), group.name() + "_sub");
  auto hc = conjugacy_classes(h);
  auto gc = conjugacy_classes(group);
  auto g_rational = class_rationality(group, gc);
  std::size_t instances = 0;
  for (std::size_t i = 0; i < hc.count(); ++i) {
    if (!element_is_rational(h, hc, hc[i].representative)) continue;
    ++instances;
    auto idx = group.index_of(hc[i].representative_perm);
    if (!idx) throw InternalInconsistency("subgroup element missing from the group");
    if (!g_rational[gc.class_of(*idx)])
      return CheckOutcome::fail(group.name(), name,
                                {{"element", perm_witness(hc[i].representative_perm)},
                                 {"subgroup_order", h.order()},
                                 {"detail", "rational in the subgroup, irrational in the group"}});
  }
  return CheckOutcome::pass(group.name(), name, {{"subgroup_order", h.order()}, {"rational_subgroup_classes", instances}});
}

namespace {

// Elements x of a x b (restricted to gcd(o(x), |b|) = 1 when `coprime_only`)
// whose rationality equals `rational_side` must keep it in the quotient a.
CheckOutcome quotient_check(const PermGroup& a, const PermGroup& b, bool rational_side, bool coprime_only,
                            const std::string& name) {
  auto g = direct_product(a, b);
  auto gc = conjugacy_classes(g);
  auto ac = conjugacy_classes(a);
  std::size_t instances = 0;
  for (std::size_t i = 0; i < gc.count(); ++i) {
    if (coprime_only && nt::gcd(gc[i].element_order, b.order()) != 1) continue;
    const bool rational = element_is_rational(g, gc, gc[i].representative);
    if (rational != rational_side) continue;
    ++instances;
    const std::size_t image = project_first(g, a, gc[i].representative);
    if (element_is_rational(a, ac, image) != rational_side)
      return CheckOutcome::fail(g.name(), name,
                                {{"element", perm_witness(gc[i].representative_perm)},
                                 {"image", perm_witness(a.element_perm(image))}});
  }
  if (instances == 0) return CheckOutcome::not_applicable(g.name(), name, "no element meets the hypothesis");
  return CheckOutcome::pass(g.name(), name, {{"instances", instances}});
}

}  // namespace

CheckOutcome check_quotient_rationality(const PermGroup& a, const PermGroup& b) {
  return quotient_check(a, b, true, false, "basic_lemma_b");
}

CheckOutcome check_coprime_quotient_irrationality(const PermGroup& a, const PermGroup& b) {
  return quotient_check(a, b, false, true, "basic_lemma_c");
}

CheckOutcome check_power_rationality(const PermGroup& group, const ClassData& classes) {
  const std::string name = "basic_lemma_d";
  auto rational = class_rationality(group, classes);
  std::size_t instances = 0;
  for (std::size_t i = 0; i < classes.count(); ++i) {
    if (!rational[i]) continue;
    for (auto j : classes.power_row(i)) {
      ++instances;
      if (!rational[j])
        return CheckOutcome::fail(group.name(), name, {{"class", i}, {"power_class", j}});
    }
  }
  return CheckOutcome::pass(group.name(), name, {{"instances", instances}});
}

CheckOutcome check_coprime_centralizer(const PermGroup& group, const ClassData& classes) {
  const std::string name = "basic_lemma_e";
  auto rational = class_rationality(group, classes);
  std::size_t instances = 0;
  for (std::size_t i = 0; i < classes.count(); ++i) {
    if (rational[i]) continue;
    const std::size_t x = classes[i].representative;
    const auto ox = classes[i].element_order;
    for (std::size_t z = 0; z < group.order(); ++z) {
      if (!group.commute(x, z) || nt::gcd(ox, group.element_order(z)) != 1) continue;
      ++instances;
      const std::size_t xz = group.multiply(x, z);
      if (rational[classes.class_of(xz)])
        return CheckOutcome::fail(group.name(), name,
                                  {{"x", perm_witness(classes[i].representative_perm)},
                                   {"z", perm_witness(group.element_perm(z))}});
    }
  }
  if (instances == 0)
    return CheckOutcome::not_applicable(group.name(), name, "no irrational class");
  return CheckOutcome::pass(group.name(), name, {{"instances", instances}});
}

}  // namespace galct
