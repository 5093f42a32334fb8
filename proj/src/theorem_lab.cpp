#include "galct/theorem_lab.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "galct/classes.hpp"
#include "galct/errors.hpp"
#include "galct/families.hpp"
#include "galct/numtheory.hpp"

namespace galct {

namespace {

using Perm = std::vector<std::size_t>;

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t fixed_points(const Perm& p) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) n += p[i] == i;
  return n;
}

std::optional<std::int64_t> as_integer(const Cyclo& z) {
  auto q = z.to_rational();
  if (!q || !q->is_integer()) return std::nullopt;
  return q->to_int64();
}

nlohmann::ordered_json count_witness(const RationalityReport& r) {
  nlohmann::ordered_json w;
  w["rational_classes"] = r.rational_class_indices.size();
  w["rational_characters"] = r.rational_char_indices.size();
  w["irrational_classes"] = r.irrational_class_count;
  w["irrational_characters"] = r.irrational_char_count;
  return w;
}

// Checks |C(x)| == rhs exactly; on failure returns the witness.
std::optional<nlohmann::ordered_json> identity_defect(std::uint64_t lhs, const Cyclo& rhs) {
  auto v = as_integer(rhs);
  if (v && *v >= 0 && static_cast<std::uint64_t>(*v) == lhs) return std::nullopt;
  nlohmann::ordered_json w;
  w["lhs"] = lhs;
  w["rhs"] = rhs.to_string();
  w["rhs_is_integer"] = v.has_value();
  return w;
}

// ---------------------------------------------------------------------------
// S_n for n <= 7, elements numbered by lexicographic rank of the image array.

class SmallSymmetric {
 public:
  explicit SmallSymmetric(std::size_t n) : n_(n) {
    std::array<std::uint8_t, 8> p{};
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
    do {
      elems_.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n)));
    fact_.assign(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) fact_[i] = fact_[i - 1] * static_cast<std::uint32_t>(i);
    orders_.resize(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) orders_[i] = compute_order(elems_[i]);
  }

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
  [[nodiscard]] const std::array<std::uint8_t, 8>& element(std::size_t i) const { return elems_[i]; }
  [[nodiscard]] std::uint64_t order(std::size_t i) const { return orders_[i]; }

  [[nodiscard]] std::uint32_t rank(const std::array<std::uint8_t, 8>& p) const {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint32_t smaller = 0;
      for (std::size_t j = i + 1; j < n_; ++j) smaller += p[j] < p[i];
      r += smaller * fact_[n_ - 1 - i];
    }
    return r;
  }

  // Apply i, then j.
  [[nodiscard]] std::uint32_t mul(std::size_t i, std::size_t j) const {
    std::array<std::uint8_t, 8> out{};
    for (std::size_t x = 0; x < n_; ++x) out[x] = elems_[j][elems_[i][x]];
    return rank(out);
  }

  [[nodiscard]] std::uint32_t inv(std::size_t i) const {
    std::array<std::uint8_t, 8> out{};
    for (std::size_t x = 0; x < n_; ++x) out[elems_[i][x]] = static_cast<std::uint8_t>(x);
    return rank(out);
  }

  [[nodiscard]] bool commute(std::size_t i, std::size_t j) const {
    for (std::size_t x = 0; x < n_; ++x)
      if (elems_[j][elems_[i][x]] != elems_[i][elems_[j][x]]) return false;
    return true;
  }

 private:
  [[nodiscard]] std::uint64_t compute_order(const std::array<std::uint8_t, 8>& p) const {
    std::uint64_t ord = 1;
    std::array<char, 8> seen{};
    for (std::size_t i = 0; i < n_; ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = 1;
        ++len;
      }
      ord = nt::lcm(ord, len);
    }
    return ord;
  }

  std::size_t n_;
  std::vector<std::array<std::uint8_t, 8>> elems_;
  std::vector<std::uint32_t> fact_;
  std::vector<std::uint64_t> orders_;
};

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : b) h = (h ^ w) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

std::vector<std::vector<std::uint32_t>> enumerate_abelian(const SmallSymmetric& sym) {
  const std::size_t size = sym.size();
  const std::size_t words = (size + 63) / 64;

  std::vector<Bits> commute(size, Bits(words, 0));
  for (std::size_t i = 0; i < size; ++i) {
    set_bit(commute[i], i);
    for (std::size_t j = i + 1; j < size; ++j)
      if (sym.commute(i, j)) {
        set_bit(commute[i], j);
        set_bit(commute[j], i);
      }
  }

  struct Node {
    Bits bits;
    std::vector<std::uint32_t> elems;
    std::vector<std::uint32_t> gens;
  };
  const std::uint32_t id = 0;  // rank of the identity
  std::unordered_set<Bits, BitsHash> seen;
  std::deque<Node> queue;
  Node root{Bits(words, 0), {id}, {}};
  set_bit(root.bits, id);
  seen.insert(root.bits);
  queue.push_back(std::move(root));

  std::vector<std::vector<std::uint32_t>> out;
  while (!queue.empty()) {
    Node a = std::move(queue.front());
    queue.pop_front();

    Bits cent(words, ~std::uint64_t{0});
    for (auto g : a.gens)
      for (std::size_t w = 0; w < words; ++w) cent[w] &= commute[g][w];
    Bits done = a.bits;

    for (std::size_t g = 0; g < size; ++g) {
      if (!test_bit(cent, g) || test_bit(done, g)) continue;
      // Powers of g until one lands in A; m = order of gA.
      std::vector<std::uint32_t> powers{id, static_cast<std::uint32_t>(g)};
      while (!test_bit(a.bits, powers.back())) powers.push_back(sym.mul(powers.back(), g));
      powers.pop_back();
      const std::size_t m = powers.size();

      Node h{Bits(words, 0), {}, a.gens};
      h.gens.push_back(static_cast<std::uint32_t>(g));
      for (std::size_t t = 0; t < m; ++t)
        for (auto x : a.elems) {
          auto y = t == 0 ? x : sym.mul(x, powers[t]);
          set_bit(h.bits, y);
          h.elems.push_back(y);
          // g^t A with gcd(t, m) = 1 generates the same subgroup with A.
          if (nt::gcd(t, m) == 1) set_bit(done, y);
        }
      if (seen.insert(h.bits).second) queue.push_back(std::move(h));
    }
    std::sort(a.elems.begin(), a.elems.end());
    out.push_back(std::move(a.elems));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Elementary divisors of an abelian group from its element orders.
std::vector<std::uint64_t> elementary_divisors(const std::vector<std::uint64_t>& element_orders) {
  const std::uint64_t size = element_orders.size();
  std::vector<std::uint64_t> out;
  for (auto [p, e] : nt::factorize(size)) {
    // rank_j = number of cyclic factors of order >= p^j
    std::vector<std::size_t> rank{0};
    std::uint64_t pj = 1;
    std::size_t prev = 1;
    for (unsigned j = 1; j <= e; ++j) {
      pj *= p;
      std::size_t count = 0;
      for (auto o : element_orders) count += pj % o == 0;
      std::size_t r = 0;
      for (std::size_t q = count / prev; q > 1; q /= p) ++r;
      rank.push_back(r);
      prev = count;
    }
    rank.push_back(0);
    std::uint64_t q = 1;
    for (unsigned j = 1; j <= e; ++j) {
      q *= p;
      for (std::size_t c = rank[j] - rank[j + 1]; c > 0; --c) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cyclic(const SmallSymmetric& sym, const std::vector<std::uint32_t>& sub) {
  return std::any_of(sub.begin(), sub.end(), [&](auto x) { return sym.order(x) == sub.size(); });
}

std::string type_name(const std::vector<std::uint64_t>& divisors) {
  if (divisors.empty()) return "1";
  std::string s;
  for (auto q : divisors) s += (s.empty() ? "C" : " x C") + std::to_string(q);
  return s;
}

// ---------------------------------------------------------------------------
// Linear algebra over F_p.

using FpVec = std::vector<std::uint64_t>;

std::size_t rank_mod_p(FpMatrix m, std::uint64_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const auto inv = nt::invmod(m[r][c], p);
    for (auto& v : m[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const auto f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
    }
    ++r;
  }
  return r;
}

// Basis of {v : m v = 0}.
std::vector<FpVec> nullspace(FpMatrix m, std::uint64_t p) {
  const std::size_t d = m.size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < d; ++c) {
    std::size_t piv = r;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) continue;
    std::swap(m[piv], m[r]);
    const auto inv = nt::invmod(m[r][c], p);
    for (auto& v : m[r]) v = v * inv % p;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const auto f = m[i][c];
      for (std::size_t j = 0; j < d; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<FpVec> basis;
  for (std::size_t f = 0; f < d; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    FpVec v(d, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - m[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b, std::uint64_t p) {
  const std::size_t d = a.size();
  FpMatrix c(d, FpVec(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
    }
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

CheckOutcome brauer_check(const GaloisGroupModel& model, const std::string& group) {
  const std::string name = "brauer";
  for (std::size_t s = 0; s < model.size(); ++s) {
    const auto ct_cls = cycle_type(model.class_perm[s]);
    const auto ct_chr = cycle_type(model.char_perm[s]);
    const auto fx_cls = fixed_points(model.class_perm[s]);
    const auto fx_chr = fixed_points(model.char_perm[s]);
    if (ct_cls != ct_chr || fx_cls != fx_chr) {
      nlohmann::ordered_json w;
      w["r"] = model.elements[s].r();
      w["class_cycle_type"] = ct_cls;
      w["character_cycle_type"] = ct_chr;
      w["fixed_classes"] = fx_cls;
      w["fixed_characters"] = fx_chr;
      return CheckOutcome::fail(group, name, std::move(w));
    }
  }
  nlohmann::ordered_json w;
  w["galois_elements"] = model.size();
  return CheckOutcome::pass(group, name, std::move(w));
}

CheckOutcome column_analysis_check(const CharacterTable& table, const GaloisGroupModel& model) {
  const std::string name = "column_analysis";
  const std::string& group = table.group_name();
  const std::size_t k = table.class_count();
  nlohmann::ordered_json applicable = nlohmann::ordered_json::array();
  std::size_t instances = 0;

  for (std::size_t s = 0; s < model.size(); ++s) {
    const auto& cp = model.char_perm[s];
    std::vector<std::size_t> moved;
    bool involutive = true;
    for (std::size_t a = 0; a < cp.size(); ++a)
      if (cp[a] != a) {
        moved.push_back(a);
        involutive = involutive && cp[cp[a]] == a;
      }
    if (moved.size() != 4 || !involutive) continue;
    const std::size_t chi1 = moved[0];
    const std::size_t chi2 = *std::find_if(moved.begin(), moved.end(),
                                           [&](std::size_t a) { return a != chi1 && a != cp[chi1]; });
    applicable.push_back(model.elements[s].r());

    for (std::size_t x = 0; x < k; ++x) {
      if (model.class_perm[s][x] == x) continue;
      ++instances;
      const Cyclo rhs = abs_squared(table.value(chi1, x) - table.value(cp[chi1], x)) +
                        abs_squared(table.value(chi2, x) - table.value(cp[chi2], x));
      if (auto defect = identity_defect(table.centralizer_order(x), rhs)) {
        auto w = std::move(*defect);
        w["r"] = model.elements[s].r();
        w["class"] = x;
        w["chi1"] = chi1;
        w["chi2"] = chi2;
        return CheckOutcome::fail(group, name, std::move(w));
      }
    }
  }
  if (applicable.empty())
    return CheckOutcome::not_applicable(group, name, "no Galois element moves exactly four characters in two 2-cycles");
  nlohmann::ordered_json w;
  w["applicable_r"] = std::move(applicable);
  w["instances"] = instances;
  return CheckOutcome::pass(group, name, std::move(w));
}

CheckOutcome row_analysis_check(const CharacterTable& table, const GaloisGroupModel& model) {
  const std::string name = "row_analysis";
  const std::string& group = table.group_name();
  const std::size_t k = table.class_count();

  std::vector<std::size_t> moved;
  for (std::size_t i = 0; i < k; ++i)
    if (std::any_of(model.class_perm.begin(), model.class_perm.end(), [&](const Perm& p) { return p[i] != i; }))
      moved.push_back(i);
  nlohmann::ordered_json counts;
  counts["moved_classes"] = moved.size();
  if (moved.size() != 4)
    return CheckOutcome::not_applicable(group, name, "Galois image does not move exactly four classes", counts);

  std::set<Perm> image;
  for (const auto& p : model.class_perm) {
    Perm r(4);
    for (std::size_t t = 0; t < 4; ++t)
      r[t] = static_cast<std::size_t>(std::find(moved.begin(), moved.end(), p[moved[t]]) - moved.begin());
    image.insert(std::move(r));
  }
  const bool klein_normal = image.size() == 4 && std::all_of(image.begin(), image.end(), [](const Perm& p) {
    return fixed_points(p) == 4 || (fixed_points(p) == 0 && cycle_type(p) == std::vector<std::size_t>{2, 2});
  });
  if (!klein_normal) {
    counts["image_order"] = image.size();
    return CheckOutcome::not_applicable(group, name, "image on the moved classes is not the fixed-point-free Klein group",
                                        counts);
  }

  const std::size_t x = moved[0];
  const auto e = static_cast<std::int64_t>(table.exponent());
  std::size_t instances = 0;
  for (std::size_t s = 0; s < model.size(); ++s) {
    const std::size_t xa = model.class_perm[s][x];
    if (xa == x) continue;
    const auto a = static_cast<std::int64_t>(model.elements[s].r());
    std::size_t sb = 0;
    while (model.class_perm[sb][x] == x || model.class_perm[sb][x] == xa) ++sb;
    const auto b = static_cast<std::int64_t>(model.elements[sb].r());
    const std::size_t xb = table.power_class(x, b);
    const std::size_t xab = table.power_class(x, static_cast<std::int64_t>(nt::mod(a * b, static_cast<std::uint64_t>(e))));
    std::set<std::size_t> quad{x, table.power_class(x, a), xb, xab};
    if (table.power_class(x, a) != xa || quad != std::set<std::size_t>(moved.begin(), moved.end())) {
      counts["a"] = a;
      counts["b"] = b;
      return CheckOutcome::not_applicable(group, name, "moved classes are not x, x^a, x^b, x^ab by the power maps",
                                          counts);
    }
    for (std::size_t chi = 0; chi < model.char_perm[s].size(); ++chi) {
      if (model.char_perm[s][chi] == chi) continue;
      ++instances;
      const Cyclo rhs = abs_squared(table.value(chi, x) - table.value(chi, xa)) +
                        abs_squared(table.value(chi, xb) - table.value(chi, xab));
      if (auto defect = identity_defect(table.centralizer_order(x), rhs)) {
        auto w = std::move(*defect);
        w["r"] = a;
        w["b"] = b;
        w["character"] = chi;
        w["classes"] = {x, xa, xb, xab};
        return CheckOutcome::fail(group, name, std::move(w));
      }
    }
  }
  nlohmann::ordered_json w;
  w["moved_classes"] = moved;
  w["instances"] = instances;
  return CheckOutcome::pass(group, name, std::move(w));
}

CheckOutcome theorem_a_check(const RationalityReport& report) {
  const std::string name = "theorem_a";
  auto w = count_witness(report);
  if (report.irrational_class_count > 5)
    return CheckOutcome::not_applicable(report.group, name, "more than five irrational classes", std::move(w));
  if (report.rational_class_indices.size() != report.rational_char_indices.size())
    return CheckOutcome::fail(report.group, name, std::move(w));
  return CheckOutcome::pass(report.group, name, std::move(w));
}

CheckOutcome theorem_c_bound_check(const RationalityReport& report) {
  const std::string name = "theorem_c";
  const std::uint64_t c = report.irrational_class_count;
  const std::uint64_t x = report.irrational_char_count;
  auto w = count_witness(report);
  if (2 * x <= c * c && 2 * c <= x * x) return CheckOutcome::pass(report.group, name, std::move(w));
  return CheckOutcome::fail(report.group, name, std::move(w));
}

CheckOutcome theorem_b_check(const RationalityReport& report, bool solvable) {
  const std::string name = "theorem_b";
  auto w = count_witness(report);
  const auto primes = nt::prime_divisors(report.order);
  w["primes"] = primes;
  w["solvable"] = solvable;
  w["seven_with_two_irrational_classes"] = solvable && report.irrational_class_count == 2 && report.order % 7 == 0;
  if (!solvable) return CheckOutcome::not_applicable(report.group, name, "group is not solvable", std::move(w));
  if (report.irrational_class_count != 2 && report.irrational_class_count != 3)
    return CheckOutcome::not_applicable(report.group, name, "irrational class count is not 2 or 3", std::move(w));
  if (std::any_of(primes.begin(), primes.end(), [](auto p) { return p > 7; }))
    return CheckOutcome::fail(report.group, name, std::move(w));
  return CheckOutcome::pass(report.group, name, std::move(w));
}

CheckOutcome theorem_b_check(const PermGroup& group, const RationalityReport& report) {
  return theorem_b_check(report, derived_series(group).solvable);
}

std::string_view to_string(ImageTag tag) noexcept {
  switch (tag) {
    case ImageTag::Trivial: return "trivial";
    case ImageTag::Cyclic: return "cyclic";
    case ImageTag::KleinNormal: return "klein-normal";
    case ImageTag::KleinWithTransposition: return "klein-with-transposition";
    case ImageTag::Other: return "other";
  }
  return "?";
}

ImageStructure galois_image_structure(const RationalityReport& report) {
  ImageStructure out;
  const auto& image = report.galois_image_on_irrational_classes;
  out.order = std::max<std::size_t>(image.size(), 1);
  out.degree = report.irrational_classes.size();
  if (out.order == 1) return out;

  auto perm_order = [](const Perm& p) {
    std::uint64_t o = 1;
    for (auto len : cycle_type(p)) o = nt::lcm(o, len);
    return o;
  };
  out.cyclic = std::any_of(image.begin(), image.end(), [&](const Perm& p) { return perm_order(p) == out.order; });
  out.elementary_abelian_2 = std::all_of(image.begin(), image.end(), [&](const Perm& p) { return perm_order(p) <= 2; });

  if (out.cyclic) {
    out.tag = ImageTag::Cyclic;
  } else if (out.order == 4 && out.elementary_abelian_2 && out.degree == 4) {
    const bool regular = std::all_of(image.begin(), image.end(), [](const Perm& p) {
      return fixed_points(p) == 0 || fixed_points(p) == p.size();
    });
    out.tag = regular ? ImageTag::KleinNormal : ImageTag::KleinWithTransposition;
  } else {
    out.tag = ImageTag::Other;
  }
  return out;
}

nlohmann::ordered_json to_json(const ImageStructure& s) {
  nlohmann::ordered_json j;
  j["tag"] = std::string(to_string(s.tag));
  j["order"] = s.order;
  j["degree"] = s.degree;
  j["cyclic"] = s.cyclic;
  j["elementary_abelian_2"] = s.elementary_abelian_2;
  return j;
}

std::vector<std::vector<std::uint32_t>> abelian_subgroups_of_sn(std::size_t n) {
  if (n < 1) throw InvalidParameter("degree must be at least 1");
  if (n > 7) throw DegreeTooLarge("abelian subgroup enumeration supports n <= 7, got " + std::to_string(n));
  return enumerate_abelian(SmallSymmetric(n));
}

CheckOutcome abelian_sn_check(std::size_t n) {
  const std::string group = "S" + std::to_string(n);
  const std::string name = "abelian_sn";
  if (n > 7) throw DegreeTooLarge("abelian subgroup enumeration supports n <= 7, got " + std::to_string(n));
  SmallSymmetric sym(n);
  const auto subs = enumerate_abelian(sym);

  std::map<std::string, std::size_t> types;
  std::uint64_t max_sum = 0;
  std::size_t max_factors = 0;
  for (const auto& sub : subs) {
    std::vector<std::uint64_t> orders;
    orders.reserve(sub.size());
    for (auto x : sub) orders.push_back(sym.order(x));
    const auto divisors = elementary_divisors(orders);
    std::uint64_t sum = 0;
    for (auto q : divisors) sum += q;
    ++types[type_name(divisors)];
    max_sum = std::max(max_sum, sum);
    max_factors = std::max(max_factors, divisors.size());
    if (sum > n || 2 * divisors.size() > n) {
      nlohmann::ordered_json w;
      w["elements"] = sub;
      w["elementary_divisors"] = divisors;
      w["sum"] = sum;
      return CheckOutcome::fail(group, name, std::move(w));
    }
  }
  nlohmann::ordered_json w;
  w["subgroups"] = subs.size();
  w["max_divisor_sum"] = max_sum;
  w["max_factors"] = max_factors;
  w["types"] = types;
  return CheckOutcome::pass(group, name, std::move(w));
}

CheckOutcome s4_abelian_scan() {
  const std::string name = "s4_abelian";
  SmallSymmetric sym(4);
  const auto subs = enumerate_abelian(sym);
  std::set<std::vector<std::uint32_t>> klein_types;
  std::size_t cyclic = 0;
  std::size_t klein = 0;
  for (const auto& sub : subs) {
    if (is_cyclic(sym, sub)) {
      ++cyclic;
      continue;
    }
    if (sub.size() != 4) {
      nlohmann::ordered_json w;
      w["elements"] = sub;
      return CheckOutcome::fail("S4", name, std::move(w));
    }
    ++klein;
    std::vector<std::uint32_t> canonical;
    for (std::size_t c = 0; c < sym.size(); ++c) {
      std::vector<std::uint32_t> conj;
      for (auto h : sub) conj.push_back(sym.mul(sym.mul(sym.inv(c), h), c));
      std::sort(conj.begin(), conj.end());
      if (canonical.empty() || conj < canonical) canonical = std::move(conj);
    }
    klein_types.insert(std::move(canonical));
  }
  nlohmann::ordered_json w;
  w["subgroups"] = subs.size();
  w["cyclic"] = cyclic;
  w["klein"] = klein;
  w["klein_conjugacy_classes"] = klein_types.size();
  if (klein_types.size() != 2) return CheckOutcome::fail("S4", name, std::move(w));
  return CheckOutcome::pass("S4", name, std::move(w));
}

CheckOutcome s5_fixed_point_free_scan() {
  const std::string name = "s5_fixed_point_free";
  SmallSymmetric sym(5);
  std::size_t fpf = 0;
  for (const auto& sub : enumerate_abelian(sym)) {
    std::array<bool, 5> moved{};
    for (auto h : sub)
      for (std::size_t x = 0; x < 5; ++x) moved[x] = moved[x] || sym.element(h)[x] != x;
    if (!std::all_of(moved.begin(), moved.end(), [](bool b) { return b; })) continue;
    ++fpf;
    if (!is_cyclic(sym, sub)) {
      nlohmann::ordered_json w;
      w["elements"] = sub;
      return CheckOutcome::fail("S5", name, std::move(w));
    }
  }
  nlohmann::ordered_json w;
  w["fixed_point_free_subgroups"] = fpf;
  return CheckOutcome::pass("S5", name, std::move(w));
}

CheckOutcome eigenvalue_property_check(std::uint64_t p, const std::vector<FpMatrix>& generators, std::uint64_t k) {
  const std::string name = "eigenvalue_property";
  if (!nt::is_prime(p)) throw InvalidParameter(std::to_string(p) + " is not prime");
  if (k == 0 || (p - 1) % k != 0)
    throw InvalidK("k = " + std::to_string(k) + " does not divide p - 1 = " + std::to_string(p - 1));
  if (generators.empty()) throw InvalidParameter("at least one generator is required");
  const std::size_t d = generators[0].size();
  if (d == 0) throw InvalidParameter("dimension must be at least 1");
  std::vector<FpMatrix> gens;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& m = generators[g];
    if (m.size() != d || std::any_of(m.begin(), m.end(), [&](const FpVec& row) { return row.size() != d; }))
      throw InvalidParameter("generator " + std::to_string(g) + " is not " + std::to_string(d) + " x " +
                             std::to_string(d));
    FpMatrix r = m;
    for (auto& row : r)
      for (auto& v : row) v %= p;
    if (rank_mod_p(r, p) != d) throw InvalidParameter("generator " + std::to_string(g) + " is singular");
    gens.push_back(std::move(r));
  }
  constexpr std::uint64_t kVectorCap = 1000000;
  constexpr std::size_t kGroupCap = 100000;
  std::uint64_t vectors = 1;
  for (std::size_t i = 0; i < d; ++i) {
    vectors *= p;
    if (vectors > kVectorCap) throw CapExceeded("p^d exceeds " + std::to_string(kVectorCap));
  }

  std::uint64_t lambda = 1;
  while (nt::multiplicative_order(lambda, p) != k) ++lambda;

  FpMatrix identity(d, FpVec(d, 0));
  for (std::size_t i = 0; i < d; ++i) identity[i][i] = 1 % p;
  std::set<FpMatrix> group{identity};
  std::vector<FpMatrix> order{identity};
  for (std::size_t head = 0; head < order.size(); ++head)
    for (const auto& g : gens) {
      auto prod = mat_mul(order[head], g, p);
      if (group.insert(prod).second) {
        if (group.size() > kGroupCap) throw CapExceeded("matrix group exceeds " + std::to_string(kGroupCap) + " elements");
        order.push_back(std::move(prod));
      }
    }

  std::vector<char> covered(vectors, 0);
  std::uint64_t remaining = vectors;
  for (const auto& h : order) {
    FpMatrix m = h;
    for (std::size_t i = 0; i < d; ++i) m[i][i] = (m[i][i] + p - lambda) % p;
    const auto basis = nullspace(std::move(m), p);
    // Walk all combinations of the basis.
    std::vector<std::uint64_t> coeff(basis.size(), 0);
    for (;;) {
      std::uint64_t index = 0;
      for (std::size_t i = d; i-- > 0;) {
        std::uint64_t v = 0;
        for (std::size_t b = 0; b < basis.size(); ++b) v = (v + coeff[b] * basis[b][i]) % p;
        index = index * p + v;
      }
      if (!covered[index]) {
        covered[index] = 1;
        --remaining;
      }
      std::size_t b = 0;
      while (b < coeff.size() && ++coeff[b] == p) coeff[b++] = 0;
      if (b == coeff.size()) break;
    }
    if (remaining == 0) break;
  }

  nlohmann::ordered_json w;
  w["p"] = p;
  w["k"] = k;
  w["lambda"] = lambda;
  w["group_order"] = order.size();
  if (remaining != 0) {
    std::uint64_t index = 0;
    while (covered[index]) ++index;
    FpVec v(d);
    for (std::size_t i = 0; i < d; ++i) {
      v[d - 1 - i] = index % p;
      index /= p;
    }
    w["vector"] = v;
    return CheckOutcome::fail("", name, std::move(w));
  }
  w["vectors"] = vectors;
  return CheckOutcome::pass("", name, std::move(w));
}

CheckOutcome maximal_class_2group_check(std::size_t n) {
  if (n < 3 || n > 12) throw InvalidParameter("maximal-class check needs 3 <= n <= 12");
  const std::string name = "maximal_class_2group";
  const std::size_t half = std::size_t{1} << n;
  nlohmann::ordered_json summary = nlohmann::ordered_json::array();

  for (int kind = 0; kind < 3; ++kind) {
    const PermGroup g = kind == 0 ? make_dihedral(n) : kind == 1 ? make_semidihedral(n) : make_generalized_quaternion(n);
    const std::size_t s = kind == 1 ? half / 2 - 1 : half - 1;
    const ClassData cd = conjugacy_classes(g);

    // Label of the listed class containing x^a y^b; element i maps point 0 to
    // the index a * 2^n + b of its normal form.
    auto label = [&](std::size_t element) -> std::string {
      const std::size_t w = g.element(element)[0];
      const std::size_t a = w / half, b = w % half;
      if (a == 1) return b % 2 == 0 ? "x" : "xy";
      if (b == 0) return "1";
      if (b == half / 2) return "z";
      return "y" + std::to_string(std::min(b, b * s % half));
    };
    const std::set<std::string> rational_listed{"1", "z", "x", "xy", "y" + std::to_string(half / 4)};

    nlohmann::ordered_json w;
    w["group"] = g.name();
    std::set<std::string> labels;
    for (std::size_t c = 0; c < cd.count(); ++c) {
      const auto members = cd.members(c);
      const std::string l = label(members[0]);
      for (auto m : members)
        if (label(m) != l) {
          w["class"] = c;
          w["labels"] = {l, label(m)};
          return CheckOutcome::fail(g.name(), name, std::move(w));
        }
      labels.insert(l);
    }
    std::set<std::string> rational;
    for (std::size_t c = 0; c < cd.count(); ++c)
      if (element_is_rational(g, cd, cd[c].representative)) rational.insert(label(cd[c].representative));
    w["classes"] = cd.count();
    w["rational_classes"] = rational.size();
    if (labels.size() != cd.count() || rational != rational_listed)
      return CheckOutcome::fail(g.name(), name, std::move(w));
    if (g.order() <= 256) {
      const auto report = classify(compute_character_table(g, cd));
      w["rational_characters"] = report.rational_char_indices.size();
      if (report.rational_class_indices.size() != 5) return CheckOutcome::fail(g.name(), name, std::move(w));
    }
    summary.push_back(std::move(w));
  }
  nlohmann::ordered_json w;
  w["n"] = n;
  w["groups"] = std::move(summary);
  return CheckOutcome::pass("order " + std::to_string(2 * half), name, std::move(w));
}

}  // namespace galct
