#include "galct/classes.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "galct/errors.hpp"
#include "galct/numtheory.hpp"

namespace galct {

std::vector<std::size_t> ClassData::members(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < member_index_.size(); ++e)
    if (member_index_[e] == i) out.push_back(e);
  return out;
}

std::size_t ClassData::power_class(std::size_t i, std::int64_t k) const {
  const auto& row = power_map_.at(i);
  return row[nt::mod(k, row.size())];
}

ClassData conjugacy_classes(const PermGroup& group) {
  const std::size_t n = group.order();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit_of(n, kUnset);
  std::vector<std::vector<std::size_t>> orbits;

  const auto& gens = group.generator_indices();
  for (std::size_t start = 0; start < n; ++start) {
    if (orbit_of[start] != kUnset) continue;
    const std::size_t id = orbits.size();
    std::vector<std::size_t> orbit{start};
    orbit_of[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (std::size_t g : gens) {
        std::size_t c = group.conjugate(orbit[head], g);
        if (orbit_of[c] == kUnset) {
          orbit_of[c] = id;
          orbit.push_back(c);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }

  struct Raw {
    std::size_t orbit;
    std::size_t rep;
    std::uint64_t order;
  };
  std::vector<Raw> raw;
  raw.reserve(orbits.size());
  auto lex_less = [&](std::size_t a, std::size_t b) {
    auto ea = group.element(a);
    auto eb = group.element(b);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  };
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    std::size_t rep = *std::min_element(orbits[o].begin(), orbits[o].end(), lex_less);
    raw.push_back({o, rep, group.element_order(rep)});
  }
  std::sort(raw.begin(), raw.end(), [&](const Raw& a, const Raw& b) {
    const std::size_t sa = orbits[a.orbit].size();
    const std::size_t sb = orbits[b.orbit].size();
    if (a.order != b.order) return a.order < b.order;
    if (sa != sb) return sa < sb;
    return lex_less(a.rep, b.rep);
  });

  ClassData cd;
  cd.group_order_ = n;
  cd.member_index_.assign(n, 0);
  std::vector<std::size_t> new_index(orbits.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    new_index[raw[i].orbit] = i;
    ConjugacyClass c;
    c.representative = raw[i].rep;
    c.representative_perm = group.element_perm(raw[i].rep);
    c.size = orbits[raw[i].orbit].size();
    c.element_order = raw[i].order;
    cd.classes_.push_back(std::move(c));
    cd.exponent_ = nt::lcm(cd.exponent_, raw[i].order);
  }
  for (std::size_t e = 0; e < n; ++e) cd.member_index_[e] = new_index[orbit_of[e]];

  cd.power_map_.resize(cd.classes_.size());
  cd.inverse_map_.resize(cd.classes_.size());
  for (std::size_t i = 0; i < cd.classes_.size(); ++i) {
    const auto& c = cd.classes_[i];
    auto& row = cd.power_map_[i];
    row.reserve(c.element_order);
    std::size_t x = PermGroup::identity();
    for (std::uint64_t t = 0; t < c.element_order; ++t) {
      row.push_back(cd.member_index_[x]);
      x = group.multiply(x, c.representative);
    }
    if (x != PermGroup::identity()) throw InternalInconsistency("power map: order mismatch");
    cd.inverse_map_[i] = cd.member_index_[group.inverse(c.representative)];
  }
  return cd;
}

std::uint64_t centralizer_order(const ClassData& classes, std::size_t class_index) {
  return classes.group_order() / classes[class_index].size;
}

std::uint64_t centralizer_order_direct(const PermGroup& group, std::size_t element) {
  std::uint64_t count = 0;
  for (std::size_t g = 0; g < group.order(); ++g)
    if (group.commute(g, element)) ++count;
  return count;
}

std::uint64_t normalizer_cyclic_quotient_order(const PermGroup& group, const ClassData& classes,
                                               std::size_t class_index) {
  const std::size_t x = classes[class_index].representative;
  std::vector<char> in_cyclic(group.order(), 0);
  std::size_t p = PermGroup::identity();
  do {
    in_cyclic[p] = 1;
    p = group.multiply(p, x);
  } while (p != PermGroup::identity());

  std::uint64_t normalizer = 0;
  std::uint64_t centralizer = 0;
  for (std::size_t g = 0; g < group.order(); ++g) {
    // g normalizes <x> iff x^g lies in <x> (same order, so it generates it).
    std::size_t c = group.conjugate(x, g);
    if (in_cyclic[c]) ++normalizer;
    if (c == x) ++centralizer;
  }
  return normalizer / centralizer;
}

DerivedSeries derived_series(const PermGroup& group) {
  DerivedSeries out;
  std::vector<std::size_t> current(group.order());
  std::iota(current.begin(), current.end(), std::size_t{0});
  std::vector<std::size_t> gens = group.generator_indices();
  out.orders.push_back(current.size());
  while (current.size() > 1) {
    std::vector<std::size_t> commutators;
    std::vector<char> seen(group.order(), 0);
    for (std::size_t h : current) {
      for (std::size_t s : gens) {
        // [h, s] = h^-1 s^-1 h s
        std::size_t c = group.multiply(group.multiply(group.inverse(h), group.inverse(s)),
                                       group.multiply(h, s));
        if (!seen[c]) {
          seen[c] = 1;
          commutators.push_back(c);
        }
      }
    }
    auto next = subgroup_closure(group, commutators);
    if (next.size() == current.size()) break;
    // Generators of the next term: the commutators that enlarged the closure.
    std::vector<std::size_t> next_gens;
    std::vector<std::size_t> partial;
    std::vector<char> in(group.order(), 0);
    in[PermGroup::identity()] = 1;
    for (std::size_t c : commutators) {
      if (in[c]) continue;
      next_gens.push_back(c);
      partial = subgroup_closure(group, next_gens);
      for (std::size_t e : partial) in[e] = 1;
      if (partial.size() == next.size()) break;
    }
    current = std::move(next);
    gens = std::move(next_gens);
    out.orders.push_back(current.size());
  }
  out.solvable = current.size() == 1;
  return out;
}

}  // namespace galct
