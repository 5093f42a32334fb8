#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace galct {

using Point = std::uint32_t;

/// Bijection of {0, ..., degree-1} stored as its image array.
///
/// Products compose left to right: (p * q)(i) = q(p(i)), so p * q means
/// "apply p, then q".
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  [[nodiscard]] std::size_t degree() const noexcept { return images_.size(); }
  [[nodiscard]] const std::vector<Point>& images() const noexcept { return images_; }
  [[nodiscard]] Point operator[](std::size_t i) const { return images_[i]; }

  Permutation operator*(const Permutation& o) const;
  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] Permutation pow(std::int64_t k) const;
  [[nodiscard]] bool is_identity() const noexcept;
  [[nodiscard]] std::uint64_t order() const;

  /// Disjoint-cycle notation with 0-based points, "()" for the identity.
  [[nodiscard]] std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// Checks that images is a bijection of {0, ..., images.size()-1}; returns an
/// empty string when valid, otherwise a description of the first defect.
std::string permutation_defect(std::span<const Point> images);

}  // namespace galct
