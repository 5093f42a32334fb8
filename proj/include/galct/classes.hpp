#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "galct/perm_group.hpp"

namespace galct {

struct ConjugacyClass {
  std::size_t representative = 0;  ///< element index in the group
  Permutation representative_perm;
  std::size_t size = 0;
  std::uint64_t element_order = 1;
};

/// Conjugacy classes of a PermGroup with power maps.
///
/// Classes are ordered by element order, then size, then the
/// lexicographically least image array; the representative is that least
/// element. All downstream indexing (character table columns, Galois
/// permutations) uses this order, so class 0 is always the identity.
class ClassData {
 public:
  [[nodiscard]] std::size_t count() const noexcept { return classes_.size(); }
  [[nodiscard]] const ConjugacyClass& operator[](std::size_t i) const { return classes_.at(i); }
  [[nodiscard]] const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  [[nodiscard]] std::size_t group_order() const noexcept { return group_order_; }
  [[nodiscard]] std::uint64_t exponent() const noexcept { return exponent_; }

  /// Class containing the element with the given group index.
  [[nodiscard]] std::size_t class_of(std::size_t element) const { return member_index_.at(element); }
  [[nodiscard]] const std::vector<std::size_t>& member_index() const noexcept { return member_index_; }
  /// Element indices of class i, ascending.
  [[nodiscard]] std::vector<std::size_t> members(std::size_t i) const;

  [[nodiscard]] std::size_t inverse_class(std::size_t i) const { return inverse_map_.at(i); }
  /// Class of rep(i)^k for any integer k.
  [[nodiscard]] std::size_t power_class(std::size_t i, std::int64_t k) const;
  /// Classes of rep(i)^t for t = 0, ..., element_order(i) - 1.
  [[nodiscard]] std::span<const std::size_t> power_row(std::size_t i) const { return power_map_.at(i); }

 private:
  friend ClassData conjugacy_classes(const PermGroup& group);

  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> member_index_;
  std::vector<std::size_t> inverse_map_;
  std::vector<std::vector<std::size_t>> power_map_;
  std::size_t group_order_ = 1;
  std::uint64_t exponent_ = 1;
};

/// Orbits of the conjugation action (by the generators), in canonical order.
ClassData conjugacy_classes(const PermGroup& group);

/// |C_G(x)| for the class representative, by orbit-stabilizer.
std::uint64_t centralizer_order(const ClassData& classes, std::size_t class_index);
/// |C_G(x)| by counting commuting elements directly.
std::uint64_t centralizer_order_direct(const PermGroup& group, std::size_t element);

/// |N_G(<x>)| / |C_G(x)| for the class representative x, by enumerating the
/// elements that normalize <x>.
std::uint64_t normalizer_cyclic_quotient_order(const PermGroup& group, const ClassData& classes,
                                               std::size_t class_index);

struct DerivedSeries {
  bool solvable = true;
  /// |G|, |G'|, |G''|, ... until the series stabilises.
  std::vector<std::size_t> orders;
};

/// Each term is the subgroup generated by the commutators [h, s] with h in the
/// previous term and s among its generators (this equals the subgroup
/// generated by all commutators).
DerivedSeries derived_series(const PermGroup& group);

}  // namespace galct
