#include "galct/permutation.hpp"

#include <numeric>
#include <sstream>

#include "galct/errors.hpp"
#include "galct/numtheory.hpp"

namespace galct {

std::string permutation_defect(std::span<const Point> images) {
  std::vector<char> seen(images.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Point p = images[i];
    if (p >= images.size()) {
      return "image " + std::to_string(p) + " at position " + std::to_string(i) +
             " out of range for degree " + std::to_string(images.size());
    }
    if (seen[p]) {
      return "image " + std::to_string(p) + " repeated at position " + std::to_string(i) +
             " (not a bijection)";
    }
    seen[p] = 1;
  }
  return {};
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (auto defect = permutation_defect(images_); !defect.empty()) throw InvalidPermutation(defect);
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<char> used(degree, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Point a = cyc[i];
      if (a >= degree) throw InvalidPermutation("cycle point " + std::to_string(a) + " out of range");
      if (used[a]) throw InvalidPermutation("cycles are not disjoint at point " + std::to_string(a));
      used[a] = 1;
      im[a] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.degree() != degree()) throw InvalidPermutation("degree mismatch in product");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = o.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = nt::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << "(";
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (j != i) os << " ";
      os << j;
    }
    os << ")";
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace galct
