#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "galct/perm_group.hpp"

namespace galct {

/// C_n on n points.
PermGroup make_cyclic(std::size_t n, GroupOptions options = {});
/// Maximal-class 2-groups of order 2^(n+1), n >= 2, given by the presentations
///   dihedral:      <x, y | x^2 = y^(2^n) = 1, yx = x y^-1>
///   semidihedral:  <x, y | x^2 = y^(2^n) = 1, yx = x y^(2^(n-1) - 1)>
///   quaternion:    <x, y | x^2 = y^(2^(n-1)), y^(2^n) = 1, yx = x y^-1>
/// realised by the right regular action on normal forms x^a y^b (point index
/// a * 2^n + b). Generators are [x, y] in that order.
PermGroup make_dihedral(std::size_t n, GroupOptions options = {});
PermGroup make_semidihedral(std::size_t n, GroupOptions options = {});
PermGroup make_generalized_quaternion(std::size_t n, GroupOptions options = {});
/// S_n on n points, generated by (0 1 ... n-1) and (0 1).
PermGroup make_symmetric(std::size_t n, GroupOptions options = {});
/// C2 x C2 as {(0 1)(2 3), (0 2)(1 3)} on 4 points.
PermGroup make_klein(GroupOptions options = {});
/// Frobenius group of order 20 (x -> x + 1, x -> 2x mod 5) or 21
/// (x -> x + 1, x -> 2x mod 7).
PermGroup make_frobenius(std::size_t order, GroupOptions options = {});
/// G x H acting on the disjoint union of the point sets.
PermGroup direct_product(const PermGroup& g, const PermGroup& h, GroupOptions options = {});

/// Builds a group from a family spec: "cyclic:N", "dihedral:N",
/// "semidihedral:N", "quaternion:N", "symmetric:N", "klein", "frobenius:20",
/// "frobenius:21", or a '*'-separated direct product such as
/// "cyclic:2*cyclic:4". Throws InvalidParameter on bad input.
PermGroup make_family(std::string_view spec, GroupOptions options = {});

/// Builds the regular representation of a group of order `order` given by a
/// multiplication rule on element indices 0..order-1 (0 must be the identity).
PermGroup regular_representation(std::size_t order,
                                 const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                                 const std::vector<std::size_t>& generators, std::string name,
                                 GroupOptions options = {});

}  // namespace galct
