#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galct/permutation.hpp"

namespace galct {

inline constexpr std::size_t kDefaultEnumerationCap = 20000;

struct GroupOptions {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
};

/// Finite permutation group with its full element list.
///
/// Elements are enumerated once, at construction, by breadth-first closure
/// under right multiplication by the generators. Element 0 is the identity and
/// the numbering is deterministic for a given generator list. Instances are
/// immutable and cheap to copy (the element store is shared).
class PermGroup {
 public:
  /// Throws InvalidPermutation if a generator has the wrong degree or is not
  /// a bijection, OrderCapExceeded if the closure grows past the cap.
  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> generators,
                                   std::string name = {}, GroupOptions options = {});

  [[nodiscard]] const std::string& name() const noexcept;
  [[nodiscard]] std::size_t degree() const noexcept;
  [[nodiscard]] const std::vector<Permutation>& generators() const noexcept;
  [[nodiscard]] std::size_t order() const noexcept;
  [[nodiscard]] std::size_t enumeration_cap() const noexcept;

  [[nodiscard]] std::span<const Point> element(std::size_t i) const;
  [[nodiscard]] Permutation element_perm(std::size_t i) const;
  [[nodiscard]] std::optional<std::size_t> index_of(std::span<const Point> images) const;
  [[nodiscard]] std::optional<std::size_t> index_of(const Permutation& p) const {
    return index_of(std::span<const Point>(p.images()));
  }

  [[nodiscard]] static constexpr std::size_t identity() noexcept { return 0; }
  /// Index of element(i) * element(j) (apply i, then j).
  [[nodiscard]] std::size_t multiply(std::size_t i, std::size_t j) const;
  [[nodiscard]] std::size_t inverse(std::size_t i) const;
  /// element(by)^-1 * element(i) * element(by).
  [[nodiscard]] std::size_t conjugate(std::size_t i, std::size_t by) const;
  [[nodiscard]] std::size_t power(std::size_t i, std::int64_t k) const;
  [[nodiscard]] std::uint64_t element_order(std::size_t i) const;
  [[nodiscard]] bool commute(std::size_t i, std::size_t j) const;
  /// Indices of the generators in the element list.
  [[nodiscard]] const std::vector<std::size_t>& generator_indices() const noexcept;

  /// Same group under a different label.
  [[nodiscard]] PermGroup renamed(std::string name) const;

 private:
  struct Store;
  explicit PermGroup(std::shared_ptr<const Store> store, std::string name)
      : store_(std::move(store)), name_(std::move(name)) {}

  std::shared_ptr<const Store> store_;
  std::string name_;
};

/// Sorted element indices of the subgroup generated by `generators`
/// (element indices of `group`).
std::vector<std::size_t> subgroup_closure(const PermGroup& group,
                                          std::span<const std::size_t> generators);

}  // namespace galct
