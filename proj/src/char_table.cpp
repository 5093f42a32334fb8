#include "galct/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "galct/errors.hpp"
#include "galct/numtheory.hpp"

namespace galct {

namespace {

using u64 = std::uint64_t;
using Row = std::vector<u64>;
using Matrix = std::vector<Row>;

// ---------------------------------------------------------------------------
// Arithmetic in F_p, p < 2^32.

struct Field {
  u64 p;

  [[nodiscard]] u64 add(u64 a, u64 b) const { return (a + b) % p; }
  [[nodiscard]] u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  [[nodiscard]] u64 mul(u64 a, u64 b) const { return a * b % p; }
  [[nodiscard]] u64 inv(u64 a) const { return nt::powmod(a, p - 2, p); }
  [[nodiscard]] u64 pow(u64 a, u64 e) const { return nt::powmod(a, e, p); }
  [[nodiscard]] u64 of(std::int64_t v) const { return nt::mod(v, p); }
};

// Row-reduces in place; returns pivot columns, rows trimmed to the rank.
std::vector<std::size_t> rref(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const u64 iv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, iv);
    for (std::size_t o = 0; o < m.size(); ++o) {
      if (o == r || m[o][c] == 0) continue;
      const u64 factor = m[o][c];
      for (std::size_t t = c; t < cols; ++t) m[o][t] = f.sub(m[o][t], f.mul(factor, m[r][t]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Basis of {c : c * m = 0} for a square matrix m.
Matrix left_nullspace(const Field& f, const Matrix& m) {
  const std::size_t n = m.size();
  Matrix t(n, Row(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = m[j][i];
  auto pivots = rref(f, t);
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Matrix basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Row v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, t[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial (constant term first) via Hessenberg reduction.
std::vector<u64> charpoly(const Field& f, Matrix h) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const u64 iv = f.inv(h[m][m - 1]);
    for (std::size_t r = m + 1; r < n; ++r) {
      const u64 u = f.mul(h[r][m - 1], iv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = f.sub(h[r][c], f.mul(u, h[m][c]));
      for (std::size_t c = 0; c < n; ++c) h[c][m] = f.add(h[c][m], f.mul(u, h[c][r]));
    }
  }
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_{i<m} h[i-1][m-1] * prod * p_{i-1}
    std::vector<u64> next(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], prev[d]);
      next[d] = f.sub(next[d], f.mul(h[m - 1][m - 1], prev[d]));
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = f.mul(prod, h[i][i - 1]);
      if (prod == 0) break;
      const u64 coef = f.mul(prod, h[i - 1][m - 1]);
      const auto& lower = polys[i - 1];
      for (std::size_t d = 0; d < lower.size(); ++d) next[d] = f.sub(next[d], f.mul(coef, lower[d]));
    }
    polys[m] = std::move(next);
  }
  return polys[n];
}

std::vector<u64> roots(const Field& f, const std::vector<u64>& poly) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.p; ++x) {
    u64 acc = 0;
    for (std::size_t d = poly.size(); d-- > 0;) acc = f.add(f.mul(acc, x), poly[d]);
    if (acc == 0) out.push_back(x);
    if (out.size() + 1 == poly.size()) break;
  }
  return out;
}

u64 choose_prime(u64 exponent, u64 order) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  for (u64 p = exponent + 1;; p += exponent) {
    if (static_cast<double>(p) > bound && nt::is_prime(p)) return p;
  }
}

// An invariant subspace kept as an RREF row basis.
struct Space {
  Matrix basis;
  std::vector<std::size_t> pivots;
};

class Splitter {
 public:
  Splitter(const PermGroup& group, const ClassData& classes, const Field& f)
      : group_(group), classes_(classes), f_(f), k_(classes.count()) {
    members_.resize(k_);
    for (std::size_t e = 0; e < group.order(); ++e) members_[classes.class_of(e)].push_back(e);
  }

  // Column l of A_j holds, for each i, #{w in C_{j'} : class(z_l w) = i}.
  Matrix class_matrix(std::size_t j) const {
    Matrix a(k_, Row(k_, 0));
    const auto& inv_members = members_[classes_.inverse_class(j)];
    for (std::size_t l = 0; l < k_; ++l) {
      const std::size_t z = classes_[l].representative;
      for (std::size_t w : inv_members) ++a[classes_.class_of(group_.multiply(z, w))][l];
    }
    for (auto& row : a)
      for (auto& x : row) x %= f_.p;
    return a;
  }

  // Splits `space` along the eigenspaces of A_j.
  std::vector<Space> split(const Space& space, const Matrix& a) const {
    const std::size_t dim = space.basis.size();
    Matrix images(dim, Row(k_, 0));
    for (std::size_t s = 0; s < dim; ++s)
      for (std::size_t i = 0; i < k_; ++i) {
        u64 acc = 0;
        for (std::size_t l = 0; l < k_; ++l) acc = f_.add(acc, f_.mul(a[i][l], space.basis[s][l]));
        images[s][i] = acc;
      }
    Matrix r(dim, Row(dim));
    for (std::size_t s = 0; s < dim; ++s)
      for (std::size_t t = 0; t < dim; ++t) r[s][t] = images[s][space.pivots[t]];
    for (std::size_t s = 0; s < dim; ++s)
      for (std::size_t i = 0; i < k_; ++i) {
        u64 acc = 0;
        for (std::size_t t = 0; t < dim; ++t) acc = f_.add(acc, f_.mul(r[s][t], space.basis[t][i]));
        if (acc != images[s][i]) throw InternalInconsistency("class matrix does not preserve eigenspace");
      }

    auto eig = roots(f_, charpoly(f_, r));
    if (eig.size() <= 1) return {space};
    std::vector<Space> out;
    std::size_t total = 0;
    for (u64 lambda : eig) {
      Matrix shifted = r;
      for (std::size_t s = 0; s < dim; ++s) shifted[s][s] = f_.sub(shifted[s][s], lambda);
      Matrix coeffs = left_nullspace(f_, shifted);
      Space sub;
      for (const auto& c : coeffs) {
        Row v(k_, 0);
        for (std::size_t s = 0; s < dim; ++s)
          if (c[s] != 0)
            for (std::size_t i = 0; i < k_; ++i) v[i] = f_.add(v[i], f_.mul(c[s], space.basis[s][i]));
        sub.basis.push_back(std::move(v));
      }
      sub.pivots = rref(f_, sub.basis);
      total += sub.basis.size();
      out.push_back(std::move(sub));
    }
    if (total != dim) throw InternalInconsistency("class matrix is not diagonalisable over F_p");
    return out;
  }

  // Central characters, normalised so the identity-class coordinate is 1.
  std::vector<Row> central_characters() const {
    Space whole;
    whole.basis.assign(k_, Row(k_, 0));
    for (std::size_t i = 0; i < k_; ++i) whole.basis[i][i] = 1;
    whole.pivots.resize(k_);
    std::iota(whole.pivots.begin(), whole.pivots.end(), std::size_t{0});

    std::vector<Space> pending{std::move(whole)};
    std::vector<Row> done;
    for (std::size_t j = 1; j < k_ && !pending.empty(); ++j) {
      const Matrix a = class_matrix(j);
      std::vector<Space> next;
      for (const auto& sp : pending) {
        for (auto& piece : split(sp, a)) {
          if (piece.basis.size() == 1) done.push_back(std::move(piece.basis[0]));
          else next.push_back(std::move(piece));
        }
      }
      pending = std::move(next);
    }
    if (k_ == 1) {
      done.push_back(Row{1});
      pending.clear();
    }
    if (!pending.empty()) throw InternalInconsistency("class matrices failed to split the centre");
    for (auto& v : done) {
      if (v[0] == 0) throw InternalInconsistency("central character vanishes on the identity");
      const u64 iv = f_.inv(v[0]);
      for (auto& x : v) x = f_.mul(x, iv);
    }
    return done;
  }

 private:
  const PermGroup& group_;
  const ClassData& classes_;
  const Field& f_;
  std::size_t k_;
  std::vector<std::vector<std::size_t>> members_;
};

// chi(1) from the central character omega: chi(1)^2 = |G| / sum_j omega_j omega_j' / |C_j|.
u64 degree_of(const Field& f, const ClassData& cd, const Row& omega) {
  u64 s = 0;
  for (std::size_t j = 0; j < cd.count(); ++j) {
    const u64 term = f.mul(f.mul(omega[j], omega[cd.inverse_class(j)]), f.inv(f.of(cd[j].size)));
    s = f.add(s, term);
  }
  if (s == 0) throw InternalInconsistency("degree equation degenerate mod p");
  const u64 target = f.mul(f.of(static_cast<std::int64_t>(cd.group_order())), f.inv(s));
  for (u64 d = 1; d * d <= cd.group_order(); ++d)
    if (f.mul(d, d) == target) return d;
  throw InternalInconsistency("no admissible character degree");
}

std::vector<Cyclo> lift_row(const Field& f, const ClassData& cd, const Row& values, u64 degree, u64 z,
                            u64 exponent) {
  std::vector<Cyclo> row(cd.count());
  for (std::size_t j = 0; j < cd.count(); ++j) {
    const u64 o = cd[j].element_order;
    const u64 zo = f.pow(z, exponent / o);  // image of zeta_o
    const u64 zo_inv = f.inv(zo);
    const u64 o_inv = f.inv(o % f.p);
    const auto powers = cd.power_row(j);
    std::vector<std::int64_t> mult(o);
    u64 total = 0;
    for (u64 l = 0; l < o; ++l) {
      const u64 step = f.pow(zo_inv, l);
      u64 acc = 0;
      u64 w = 1;
      for (u64 t = 0; t < o; ++t) {
        acc = f.add(acc, f.mul(values[powers[t]], w));
        w = f.mul(w, step);
      }
      const u64 m = f.mul(acc, o_inv);
      if (m > degree) throw InternalInconsistency("eigenvalue multiplicity out of range");
      mult[l] = static_cast<std::int64_t>(m);
      total += m;
    }
    if (total != degree) throw InternalInconsistency("eigenvalue multiplicities do not sum to the degree");
    row[j] = Cyclo::from_root_multiplicities(static_cast<std::uint32_t>(o), mult);
  }
  return row;
}

// ---------------------------------------------------------------------------
// Exact sums of products through IntegralKernel, with a Cyclo fallback.

struct EmbeddedTable {
  IntegralKernel kernel;
  std::vector<std::vector<IntegralKernel::Vec>> values;
  std::vector<std::vector<IntegralKernel::Vec>> conj_values;
  bool ok = true;

  explicit EmbeddedTable(const CharacterTable& t) : kernel(static_cast<std::uint32_t>(t.exponent())) {
    values.resize(t.rows().size());
    conj_values.resize(t.rows().size());
    for (std::size_t a = 0; a < t.rows().size() && ok; ++a) {
      for (const auto& z : t.row(a)) {
        auto v = kernel.embed(z);
        if (!v) {
          ok = false;
          break;
        }
        conj_values[a].push_back(kernel.conj(*v));
        values[a].push_back(std::move(*v));
      }
    }
  }
};

Cyclo accumulate_to_cyclo(const IntegralKernel& ker, const IntegralKernel::Accumulator& acc) {
  std::vector<Rational> coeffs;
  coeffs.reserve(acc.size());
  for (auto v : acc) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw InternalInconsistency("orthogonality sum exceeds 64 bits");
    coeffs.emplace_back(static_cast<std::int64_t>(v));
  }
  return Cyclo::from_power_basis(ker.n(), std::move(coeffs));
}

std::optional<Cyclo> kernel_first(const CharacterTable& t, const EmbeddedTable& e, std::size_t a,
                                  std::size_t b) {
  auto acc = e.kernel.make_accumulator();
  for (std::size_t j = 0; j < t.class_count(); ++j)
    e.kernel.mul_add(acc, e.values[a][j], e.conj_values[b][j], static_cast<std::int64_t>(t.class_info(j).size));
  auto red = e.kernel.reduce(std::move(acc));
  if (!red) return std::nullopt;
  return accumulate_to_cyclo(e.kernel, *red);
}

std::optional<Cyclo> kernel_second(const CharacterTable& t, const EmbeddedTable& e, std::size_t i,
                                   std::size_t j) {
  auto acc = e.kernel.make_accumulator();
  for (std::size_t chi = 0; chi < t.rows().size(); ++chi)
    e.kernel.mul_add(acc, e.values[chi][i], e.conj_values[chi][j]);
  auto red = e.kernel.reduce(std::move(acc));
  if (!red) return std::nullopt;
  return accumulate_to_cyclo(e.kernel, *red);
}

// Same sums, detecting a zero/integer target without leaving the kernel.
bool kernel_equals(const EmbeddedTable& e, const IntegralKernel::Accumulator& acc, std::int64_t target,
                   bool& overflow) {
  auto red = e.kernel.reduce(acc);
  if (!red) {
    overflow = true;
    return false;
  }
  return IntegralKernel::equals_integer(*red, target);
}

std::string describe(const Cyclo& z) { return z.to_string(); }

}  // namespace

// ---------------------------------------------------------------------------

CharacterTable::CharacterTable(std::string group, std::uint64_t order, std::uint64_t exponent,
                               std::vector<ClassInfo> classes, std::vector<std::vector<Cyclo>> rows)
    : group_(std::move(group)),
      order_(order),
      exponent_(exponent),
      classes_(std::move(classes)),
      rows_(std::move(rows)) {}

std::int64_t CharacterTable::degree(std::size_t chi) const {
  auto q = value(chi, 0).to_rational();
  if (!q || !q->is_integer() || !q->to_int64()) throw ValidationFailed("character degree is not an integer");
  return *q->to_int64();
}

std::vector<std::int64_t> CharacterTable::degrees() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(degree(i));
  return out;
}

std::size_t CharacterTable::power_class(std::size_t cls, std::int64_t k) const {
  const auto& pm = classes_.at(cls).power_map;
  return pm[nt::mod(k, pm.size())];
}

std::vector<ClassInfo> class_infos(const ClassData& classes) {
  std::vector<ClassInfo> out;
  for (std::size_t i = 0; i < classes.count(); ++i) {
    ClassInfo c;
    c.size = classes[i].size;
    c.order = classes[i].element_order;
    auto row = classes.power_row(i);
    c.power_map.assign(row.begin(), row.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::string row_key(const std::vector<Cyclo>& row) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& z : row) arr.push_back(to_json(z));
  return arr.dump();
}

CharacterTable compute_character_table(const PermGroup& group, const ClassData& classes) {
  const u64 order = classes.group_order();
  const u64 exponent = classes.exponent();
  const Field f{choose_prime(exponent, order)};
  const u64 g = nt::primitive_root(f.p);
  const u64 z = f.pow(g, (f.p - 1) / exponent);

  Splitter splitter(group, classes, f);
  const auto omegas = splitter.central_characters();

  struct Keyed {
    std::int64_t degree;
    std::string key;
    std::vector<Cyclo> row;
  };
  std::vector<Keyed> rows;
  for (const auto& omega : omegas) {
    const u64 d = degree_of(f, classes, omega);
    Row values(classes.count());
    for (std::size_t j = 0; j < classes.count(); ++j)
      values[j] = f.mul(f.mul(omega[j], d), f.inv(f.of(classes[j].size)));
    auto row = lift_row(f, classes, values, d, z, exponent);
    auto key = row_key(row);
    rows.push_back({static_cast<std::int64_t>(d), std::move(key), std::move(row)});
  }
  std::sort(rows.begin(), rows.end(), [](const Keyed& a, const Keyed& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.key < b.key;
  });

  std::vector<std::vector<Cyclo>> table_rows;
  for (auto& r : rows) table_rows.push_back(std::move(r.row));
  CharacterTable table(group.name(), order, exponent, class_infos(classes), std::move(table_rows));
  table.set_modular_data(f.p, z);
  if (auto defect = find_table_defect(table))
    throw InternalInconsistency("computed character table failed self-check: " + *defect);
  return table;
}

CharacterTable compute_character_table(const PermGroup& group) {
  return compute_character_table(group, conjugacy_classes(group));
}

Cyclo first_orthogonality(const CharacterTable& table, std::size_t a, std::size_t b) {
  Cyclo acc;
  for (std::size_t j = 0; j < table.class_count(); ++j)
    acc += Cyclo(static_cast<std::int64_t>(table.class_info(j).size)) * table.value(a, j) *
           table.value(b, j).conj();
  return acc;
}

Cyclo second_orthogonality(const CharacterTable& table, std::size_t i, std::size_t j) {
  Cyclo acc;
  for (std::size_t chi = 0; chi < table.rows().size(); ++chi)
    acc += table.value(chi, i) * table.value(chi, j).conj();
  return acc;
}

std::optional<std::string> find_table_defect(const CharacterTable& t) {
  const std::size_t k = t.class_count();
  const u64 order = t.group_order();
  if (k == 0) return "table has no classes";
  if (t.exponent() == 0 || t.exponent() > std::numeric_limits<std::uint32_t>::max())
    return "exponent out of range";
  if (t.rows().size() != k)
    return "table is not square: " + std::to_string(t.rows().size()) + " rows, " + std::to_string(k) + " classes";

  // Class metadata.
  u64 total = 0;
  u64 lcm = 1;
  for (std::size_t j = 0; j < k; ++j) {
    const auto& c = t.class_info(j);
    const std::string where = "class " + std::to_string(j);
    if (c.size == 0 || order % c.size != 0) return where + ": size does not divide the group order";
    if (c.order == 0 || t.exponent() % c.order != 0) return where + ": element order does not divide the exponent";
    if (c.power_map.size() != c.order) return where + ": power map length differs from the element order";
    for (auto idx : c.power_map)
      if (idx >= k) return where + ": power map index out of range";
    if (c.power_map[0] != 0) return where + ": power map sends t = 0 outside the identity class";
    if (c.order > 1 && c.power_map[1] != j) return where + ": power map sends t = 1 elsewhere";
    for (u64 tt = 0; tt < c.order; ++tt) {
      const auto& target = t.class_info(c.power_map[tt]);
      if (target.order != c.order / nt::gcd(c.order, tt == 0 ? c.order : tt))
        return where + ": power map target has the wrong element order";
    }
    total += c.size;
    lcm = nt::lcm(lcm, c.order);
  }
  if (t.class_info(0).size != 1 || t.class_info(0).order != 1) return "class 0 is not the identity class";
  if (total != order) return "class sizes do not sum to the group order";
  if (lcm != t.exponent()) return "exponent is not the lcm of the element orders";
  for (std::size_t j = 0; j < k; ++j)
    if (t.inverse_class(t.inverse_class(j)) != j) return "inverse map is not an involution";

  // Rows.
  u64 sum_sq = 0;
  bool trivial_seen = false;
  for (std::size_t a = 0; a < k; ++a) {
    const std::string where = "row " + std::to_string(a);
    if (t.row(a).size() != k) return where + ": wrong length";
    auto d = t.value(a, 0).to_rational();
    if (!d || !d->is_integer() || d->sign() <= 0 || !d->to_int64()) return where + ": degree is not a positive integer";
    const auto deg = static_cast<u64>(*d->to_int64());
    if (order % deg != 0) return where + ": degree does not divide the group order";
    sum_sq += deg * deg;
    bool all_one = true;
    for (std::size_t j = 0; j < k; ++j) {
      const auto& z = t.value(a, j);
      if (!z.is_integral()) return where + ", class " + std::to_string(j) + ": value is not an algebraic integer";
      if (t.exponent() % z.conductor() != 0)
        return where + ", class " + std::to_string(j) + ": conductor does not divide the exponent";
      if (!(z == Cyclo(1))) all_one = false;
    }
    trivial_seen = trivial_seen || all_one;
  }
  if (sum_sq != order) return "sum of squared degrees is " + std::to_string(sum_sq) + ", not " + std::to_string(order);
  if (!trivial_seen) return "no trivial character";

  // Orthogonality, both ways.
  EmbeddedTable e(t);
  auto first = [&](std::size_t a, std::size_t b) -> std::optional<std::string> {
    const std::int64_t target = a == b ? static_cast<std::int64_t>(order) : 0;
    if (e.ok) {
      auto acc = e.kernel.make_accumulator();
      for (std::size_t j = 0; j < k; ++j)
        e.kernel.mul_add(acc, e.values[a][j], e.conj_values[b][j], static_cast<std::int64_t>(t.class_info(j).size));
      bool overflow = false;
      if (kernel_equals(e, acc, target, overflow)) return std::nullopt;
      if (!overflow) {
        auto got = kernel_first(t, e, a, b);
        return "first orthogonality fails for rows " + std::to_string(a) + ", " + std::to_string(b) + ": " +
               (got ? describe(*got) : std::string("?")) + " != " + std::to_string(target);
      }
    }
    auto got = first_orthogonality(t, a, b);
    if (got == Cyclo(target)) return std::nullopt;
    return "first orthogonality fails for rows " + std::to_string(a) + ", " + std::to_string(b) + ": " +
           describe(got) + " != " + std::to_string(target);
  };
  auto second = [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
    const std::int64_t target = i == j ? static_cast<std::int64_t>(t.centralizer_order(i)) : 0;
    if (e.ok) {
      auto acc = e.kernel.make_accumulator();
      for (std::size_t chi = 0; chi < k; ++chi) e.kernel.mul_add(acc, e.values[chi][i], e.conj_values[chi][j]);
      bool overflow = false;
      if (kernel_equals(e, acc, target, overflow)) return std::nullopt;
      if (!overflow) {
        auto got = kernel_second(t, e, i, j);
        return "second orthogonality fails for classes " + std::to_string(i) + ", " + std::to_string(j) + ": " +
               (got ? describe(*got) : std::string("?")) + " != " + std::to_string(target);
      }
    }
    auto got = second_orthogonality(t, i, j);
    if (got == Cyclo(target)) return std::nullopt;
    return "second orthogonality fails for classes " + std::to_string(i) + ", " + std::to_string(j) + ": " +
           describe(got) + " != " + std::to_string(target);
  };
  // The (b, a) sums are the conjugates of the (a, b) sums.
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b)
      if (auto msg = first(a, b)) return msg;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      if (auto msg = second(i, j)) return msg;

  // Galois stability of the row set.
  std::unordered_set<std::string> keys;
  for (const auto& row : t.rows()) keys.insert(row_key(row));
  const auto n = static_cast<std::uint32_t>(t.exponent());
  for (u64 r : nt::unit_group_generators(n)) {
    GaloisElement sigma(n, static_cast<std::int64_t>(r));
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<Cyclo> image;
      for (const auto& z : t.row(a)) image.push_back(galois_apply(sigma, z));
      if (!keys.count(row_key(image)))
        return "row " + std::to_string(a) + " is not Galois-stable under r = " + std::to_string(r);
    }
  }
  return std::nullopt;
}

void validate(const CharacterTable& table) {
  if (auto defect = find_table_defect(table)) throw ValidationFailed(*defect);
}

nlohmann::ordered_json export_table(const CharacterTable& t) {
  using nlohmann::ordered_json;
  ordered_json out;
  out["group"] = t.group_name();
  out["order"] = t.group_order();
  out["exponent"] = t.exponent();
  ordered_json classes = ordered_json::array();
  for (const auto& c : t.classes()) {
    ordered_json cj;
    cj["size"] = c.size;
    cj["order"] = c.order;
    ordered_json pm = ordered_json::object();
    for (std::size_t k = 0; k < c.power_map.size(); ++k) pm[std::to_string(k)] = c.power_map[k];
    cj["power_map"] = std::move(pm);
    classes.push_back(std::move(cj));
  }
  out["classes"] = std::move(classes);
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows()) {
    ordered_json r = ordered_json::array();
    for (const auto& z : row) r.push_back(to_json(z));
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  if (t.prime() && t.root_of_unity()) {
    out["modular"] = {{"prime", *t.prime()}, {"root_of_unity", *t.root_of_unity()}};
  }
  return out;
}

namespace {

const nlohmann::ordered_json& field(const nlohmann::ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

u64 unsigned_field(const nlohmann::ordered_json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw ParseError(where + "." + key + ": expected a non-negative integer");
  return v.get<u64>();
}

}  // namespace

CharacterTable import_table(const nlohmann::ordered_json& doc) {
  const auto& name = field(doc, "group", "table");
  if (!name.is_string()) throw ParseError("table.group: expected a string");
  const u64 order = unsigned_field(doc, "order", "table");
  const u64 exponent = unsigned_field(doc, "exponent", "table");

  const auto& cls = field(doc, "classes", "table");
  if (!cls.is_array()) throw ParseError("table.classes: expected an array");
  std::vector<ClassInfo> classes;
  for (std::size_t j = 0; j < cls.size(); ++j) {
    const std::string where = "classes[" + std::to_string(j) + "]";
    ClassInfo c;
    c.size = unsigned_field(cls[j], "size", where);
    c.order = unsigned_field(cls[j], "order", where);
    const auto& pm = field(cls[j], "power_map", where);
    if (!pm.is_object()) throw ParseError(where + ".power_map: expected an object");
    if (c.order == 0 || c.order > (u64{1} << 32)) throw ValidationFailed(where + ": element order out of range");
    if (pm.size() != c.order)
      throw ValidationFailed(where + ".power_map: expected " + std::to_string(c.order) + " entries");
    c.power_map.assign(c.order, 0);
    for (u64 t = 0; t < c.order; ++t) {
      auto it = pm.find(std::to_string(t));
      if (it == pm.end()) throw ValidationFailed(where + ".power_map: missing key \"" + std::to_string(t) + "\"");
      if (!it->is_number_integer() || it->get<std::int64_t>() < 0) throw ParseError(where + ".power_map." + std::to_string(t) + ": expected an index");
      c.power_map[t] = it->get<std::size_t>();
    }
    classes.push_back(std::move(c));
  }

  const auto& rows_j = field(doc, "rows", "table");
  if (!rows_j.is_array()) throw ParseError("table.rows: expected an array");
  std::vector<std::vector<Cyclo>> rows;
  for (std::size_t a = 0; a < rows_j.size(); ++a) {
    const std::string where = "rows[" + std::to_string(a) + "]";
    if (!rows_j[a].is_array()) throw ParseError(where + ": expected an array");
    std::vector<Cyclo> row;
    for (std::size_t j = 0; j < rows_j[a].size(); ++j) {
      try {
        row.push_back(cyclo_from_json(rows_j[a][j]));
      } catch (const Error& e) {
        throw ParseError(where + "[" + std::to_string(j) + "]: " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }

  CharacterTable table(name.get<std::string>(), order, exponent, std::move(classes), std::move(rows));
  if (auto it = doc.find("modular"); it != doc.end()) {
    table.set_modular_data(unsigned_field(*it, "prime", "table.modular"),
                           unsigned_field(*it, "root_of_unity", "table.modular"));
  }
  validate(table);
  return table;
}

}  // namespace galct
