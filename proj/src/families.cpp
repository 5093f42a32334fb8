#include "galct/families.hpp"

#include <charconv>
#include <vector>

#include "galct/errors.hpp"

namespace galct {

namespace {

enum class MaximalClass { Dihedral, Semidihedral, Quaternion };

PermGroup make_maximal_class(MaximalClass kind, std::size_t n, GroupOptions options) {
  if (n < 2 || n > 20) throw InvalidParameter("maximal-class 2-group needs 2 <= n <= 20");
  const std::size_t half = std::size_t{1} << n;  // o(y) = 2^n
  const std::size_t order = 2 * half;
  if (order > options.enumeration_cap)
    throw OrderCapExceeded("order " + std::to_string(order) + " exceeds the enumeration cap");

  // y^b x = x y^(b s)
  std::size_t s = half - 1;
  if (kind == MaximalClass::Semidihedral) s = half / 2 - 1;
  // x^2 = y^h
  const std::size_t h = kind == MaximalClass::Quaternion ? half / 2 : 0;

  auto mul = [=](std::size_t u, std::size_t v) {
    const std::size_t a = u / half, b = u % half;
    const std::size_t c = v / half, d = v % half;
    if (c == 0) return a * half + (b + d) % half;
    const std::size_t e = (b * s + d) % half;
    if (a == 0) return half + e;
    return (h + e) % half;  // x^2 = y^h
  };
  std::string name;
  switch (kind) {
    case MaximalClass::Dihedral: name = "D"; break;
    case MaximalClass::Semidihedral: name = "SD"; break;
    case MaximalClass::Quaternion: name = "Q"; break;
  }
  return regular_representation(order, mul, {half, 1}, name + std::to_string(order), options);
}

std::size_t parse_size(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InvalidParameter("bad family parameter '" + std::string(text) + "' in '" +
                           std::string(spec) + "'");
  return value;
}

PermGroup make_single_family(std::string_view spec, GroupOptions options) {
  const auto colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  if (kind == "klein") {
    if (colon != std::string_view::npos) throw InvalidParameter("klein takes no parameter");
    return make_klein(options);
  }
  if (colon == std::string_view::npos)
    throw InvalidParameter("family '" + std::string(spec) + "' needs a parameter (name:N)");
  const std::size_t n = parse_size(spec.substr(colon + 1), spec);
  if (kind == "cyclic") return make_cyclic(n, options);
  if (kind == "dihedral") return make_dihedral(n, options);
  if (kind == "semidihedral") return make_semidihedral(n, options);
  if (kind == "quaternion") return make_generalized_quaternion(n, options);
  if (kind == "symmetric") return make_symmetric(n, options);
  if (kind == "frobenius") return make_frobenius(n, options);
  throw InvalidParameter("unknown family '" + std::string(kind) + "'");
}

}  // namespace

PermGroup regular_representation(std::size_t order,
                                 const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                                 const std::vector<std::size_t>& generators, std::string name,
                                 GroupOptions options) {
  std::vector<Permutation> gens;
  for (std::size_t g : generators) {
    std::vector<Point> images(order);
    for (std::size_t p = 0; p < order; ++p) images[p] = static_cast<Point>(mul(p, g));
    gens.emplace_back(std::move(images));
  }
  return PermGroup::from_generators(order, std::move(gens), std::move(name), options);
}

PermGroup make_cyclic(std::size_t n, GroupOptions options) {
  if (n < 1) throw InvalidParameter("cyclic group needs n >= 1");
  if (n == 1) return PermGroup::from_generators(1, {}, "C1", options);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return PermGroup::from_generators(n, {Permutation(std::move(images))}, "C" + std::to_string(n),
                                    options);
}

PermGroup make_dihedral(std::size_t n, GroupOptions options) {
  return make_maximal_class(MaximalClass::Dihedral, n, options);
}

PermGroup make_semidihedral(std::size_t n, GroupOptions options) {
  return make_maximal_class(MaximalClass::Semidihedral, n, options);
}

PermGroup make_generalized_quaternion(std::size_t n, GroupOptions options) {
  return make_maximal_class(MaximalClass::Quaternion, n, options);
}

PermGroup make_symmetric(std::size_t n, GroupOptions options) {
  if (n < 1) throw InvalidParameter("symmetric group needs n >= 1");
  const std::string name = "S" + std::to_string(n);
  if (n == 1) return PermGroup::from_generators(1, {}, name, options);
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n);
  std::vector<Permutation> gens{Permutation(std::move(cycle))};
  if (n > 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  return PermGroup::from_generators(n, std::move(gens), name, options);
}

PermGroup make_klein(GroupOptions options) {
  return PermGroup::from_generators(
      4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
      "V4", options);
}

PermGroup make_frobenius(std::size_t order, GroupOptions options) {
  std::size_t p = 0;
  if (order == 20) p = 5;
  else if (order == 21) p = 7;
  else throw InvalidParameter("frobenius family supports orders 20 and 21");
  std::vector<Point> shift(p), scale(p);
  for (std::size_t x = 0; x < p; ++x) {
    shift[x] = static_cast<Point>((x + 1) % p);
    scale[x] = static_cast<Point>((2 * x) % p);
  }
  return PermGroup::from_generators(p, {Permutation(std::move(shift)), Permutation(std::move(scale))},
                                    "F" + std::to_string(order), options);
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h, GroupOptions options) {
  const std::size_t dg = g.degree();
  const std::size_t dh = h.degree();
  std::vector<Permutation> gens;
  for (const auto& a : g.generators()) {
    std::vector<Point> images(dg + dh);
    for (std::size_t i = 0; i < dg; ++i) images[i] = a[i];
    for (std::size_t i = 0; i < dh; ++i) images[dg + i] = static_cast<Point>(dg + i);
    gens.emplace_back(std::move(images));
  }
  for (const auto& b : h.generators()) {
    std::vector<Point> images(dg + dh);
    for (std::size_t i = 0; i < dg; ++i) images[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < dh; ++i) images[dg + i] = static_cast<Point>(dg + b[i]);
    gens.emplace_back(std::move(images));
  }
  return PermGroup::from_generators(dg + dh, std::move(gens), g.name() + "x" + h.name(), options);
}

PermGroup make_family(std::string_view spec, GroupOptions options) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto star = spec.find('*', start);
    parts.push_back(spec.substr(start, star == std::string_view::npos ? spec.npos : star - start));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  PermGroup result = make_single_family(parts[0], options);
  for (std::size_t i = 1; i < parts.size(); ++i)
    result = direct_product(result, make_single_family(parts[i], options), options);
  return result;
}

}  // namespace galct
