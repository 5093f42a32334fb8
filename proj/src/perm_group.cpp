#include "galct/perm_group.hpp"

#include <algorithm>
#include <limits>

#include "galct/errors.hpp"
#include "galct/numtheory.hpp"

namespace galct {

namespace {

std::uint64_t hash_images(std::span<const Point> images) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point p : images) {
    h ^= p;
    h *= 0x100000001b3ULL;
    h ^= h >> 29U;
  }
  return h;
}

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

}  // namespace

struct PermGroup::Store {
  std::size_t degree = 0;
  std::size_t cap = kDefaultEnumerationCap;
  std::vector<Permutation> generators;
  std::vector<std::size_t> generator_indices;
  std::vector<Point> data;  // element i occupies [i * degree, (i + 1) * degree)
  std::size_t count = 0;
  std::vector<std::uint32_t> slots;  // open addressing, linear probing
  std::vector<std::size_t> inverses;

  [[nodiscard]] std::span<const Point> at(std::size_t i) const {
    return {data.data() + i * degree, degree};
  }

  [[nodiscard]] std::optional<std::size_t> find(std::span<const Point> images) const {
    if (slots.empty()) return std::nullopt;
    const std::size_t mask = slots.size() - 1;
    for (std::size_t s = hash_images(images) & mask;; s = (s + 1) & mask) {
      const std::uint32_t idx = slots[s];
      if (idx == kEmpty) return std::nullopt;
      auto e = at(idx);
      if (std::equal(e.begin(), e.end(), images.begin())) return idx;
    }
  }

  void rehash(std::size_t capacity) {
    slots.assign(capacity, kEmpty);
    const std::size_t mask = capacity - 1;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t s = hash_images(at(i)) & mask;
      while (slots[s] != kEmpty) s = (s + 1) & mask;
      slots[s] = static_cast<std::uint32_t>(i);
    }
  }

  // Inserts if absent; returns (index, inserted).
  std::pair<std::size_t, bool> insert(std::span<const Point> images) {
    if (auto idx = find(images)) return {*idx, false};
    if (count + 1 > cap) {
      throw OrderCapExceeded("group order exceeds the enumeration cap of " + std::to_string(cap) +
                             " elements");
    }
    data.insert(data.end(), images.begin(), images.end());
    ++count;
    if (2 * count > slots.size()) {
      rehash(std::max<std::size_t>(16, slots.size() * 2));
    } else {
      const std::size_t mask = slots.size() - 1;
      std::size_t s = hash_images(images) & mask;
      while (slots[s] != kEmpty) s = (s + 1) & mask;
      slots[s] = static_cast<std::uint32_t>(count - 1);
    }
    return {count - 1, true};
  }
};

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> generators,
                                     std::string name, GroupOptions options) {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].degree() != degree) {
      throw InvalidPermutation("generator " + std::to_string(g) + " has degree " +
                               std::to_string(generators[g].degree()) + ", expected " +
                               std::to_string(degree));
    }
  }
  if (options.enumeration_cap == 0) throw InvalidParameter("enumeration cap must be positive");
  auto store = std::make_shared<Store>();
  store->degree = degree;
  store->cap = options.enumeration_cap;
  store->generators = std::move(generators);
  store->rehash(16);

  const Permutation id = Permutation::identity(degree);
  store->insert(id.images());
  std::vector<Point> buf(degree);
  for (std::size_t head = 0; head < store->count; ++head) {
    for (const auto& g : store->generators) {
      auto e = store->at(head);
      for (std::size_t x = 0; x < degree; ++x) buf[x] = g[e[x]];
      store->insert(buf);
    }
  }
  for (const auto& g : store->generators) store->generator_indices.push_back(*store->find(g.images()));

  store->inverses.resize(store->count);
  for (std::size_t i = 0; i < store->count; ++i) {
    auto e = store->at(i);
    for (std::size_t x = 0; x < degree; ++x) buf[e[x]] = static_cast<Point>(x);
    auto inv = store->find(buf);
    if (!inv) throw InternalInconsistency("element closure is missing an inverse");
    store->inverses[i] = *inv;
  }
  store->data.shrink_to_fit();
  return PermGroup(std::move(store), std::move(name));
}

const std::string& PermGroup::name() const noexcept { return name_; }
std::size_t PermGroup::degree() const noexcept { return store_->degree; }
const std::vector<Permutation>& PermGroup::generators() const noexcept { return store_->generators; }
std::size_t PermGroup::order() const noexcept { return store_->count; }
std::size_t PermGroup::enumeration_cap() const noexcept { return store_->cap; }
const std::vector<std::size_t>& PermGroup::generator_indices() const noexcept {
  return store_->generator_indices;
}

std::span<const Point> PermGroup::element(std::size_t i) const { return store_->at(i); }

Permutation PermGroup::element_perm(std::size_t i) const {
  auto e = element(i);
  return Permutation(std::vector<Point>(e.begin(), e.end()));
}

std::optional<std::size_t> PermGroup::index_of(std::span<const Point> images) const {
  if (images.size() != store_->degree) return std::nullopt;
  return store_->find(images);
}

std::size_t PermGroup::multiply(std::size_t i, std::size_t j) const {
  const std::size_t n = store_->degree;
  auto a = element(i);
  auto b = element(j);
  std::vector<Point> buf(n);
  for (std::size_t x = 0; x < n; ++x) buf[x] = b[a[x]];
  auto idx = store_->find(buf);
  if (!idx) throw InternalInconsistency("product left the enumerated element set");
  return *idx;
}

std::size_t PermGroup::inverse(std::size_t i) const { return store_->inverses[i]; }

std::size_t PermGroup::conjugate(std::size_t i, std::size_t by) const {
  return multiply(multiply(inverse(by), i), by);
}

std::size_t PermGroup::power(std::size_t i, std::int64_t k) const {
  std::size_t base = k < 0 ? inverse(i) : i;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  std::size_t result = identity();
  while (e > 0) {
    if (e & 1U) result = multiply(result, base);
    e >>= 1U;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

std::uint64_t PermGroup::element_order(std::size_t i) const {
  auto e = element(i);
  std::vector<char> seen(e.size(), 0);
  std::uint64_t ord = 1;
  for (std::size_t x = 0; x < e.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = e[y]) {
      seen[y] = 1;
      ++len;
    }
    ord = nt::lcm(ord, len);
  }
  return ord;
}

bool PermGroup::commute(std::size_t i, std::size_t j) const {
  auto a = element(i);
  auto b = element(j);
  for (std::size_t x = 0; x < a.size(); ++x)
    if (b[a[x]] != a[b[x]]) return false;
  return true;
}

PermGroup PermGroup::renamed(std::string name) const { return PermGroup(store_, std::move(name)); }

std::vector<std::size_t> subgroup_closure(const PermGroup& group,
                                          std::span<const std::size_t> generators) {
  std::vector<char> in(group.order(), 0);
  std::vector<std::size_t> members{PermGroup::identity()};
  in[PermGroup::identity()] = 1;
  std::vector<std::size_t> gens;
  for (std::size_t g : generators) {
    if (in[g]) continue;
    gens.push_back(g);
    // Re-close from scratch with the enlarged generator list; each accepted
    // generator at least doubles the subgroup, so this runs O(log |G|) times.
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (std::size_t s : gens) {
        std::size_t p = group.multiply(members[head], s);
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace galct
