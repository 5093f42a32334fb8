#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "galct/classes.hpp"
#include "galct/cyclotomic.hpp"
#include "galct/perm_group.hpp"

namespace galct {

/// Class metadata carried by a table: enough to check orthogonality and to
/// realise the Galois action without the group itself.
struct ClassInfo {
  std::uint64_t size = 1;
  std::uint64_t order = 1;
  /// power_map[t] = class of rep^t, t = 0, ..., order - 1.
  std::vector<std::size_t> power_map{0};

  friend bool operator==(const ClassInfo&, const ClassInfo&) = default;
};

/// Exact ordinary character table. Rows are irreducible characters, columns
/// follow the canonical class order.
class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(std::string group, std::uint64_t order, std::uint64_t exponent,
                 std::vector<ClassInfo> classes, std::vector<std::vector<Cyclo>> rows);

  [[nodiscard]] const std::string& group_name() const noexcept { return group_; }
  [[nodiscard]] std::uint64_t group_order() const noexcept { return order_; }
  [[nodiscard]] std::uint64_t exponent() const noexcept { return exponent_; }
  [[nodiscard]] std::size_t class_count() const noexcept { return classes_.size(); }
  [[nodiscard]] const std::vector<ClassInfo>& classes() const noexcept { return classes_; }
  [[nodiscard]] const ClassInfo& class_info(std::size_t j) const { return classes_.at(j); }
  [[nodiscard]] const std::vector<std::vector<Cyclo>>& rows() const noexcept { return rows_; }
  [[nodiscard]] const std::vector<Cyclo>& row(std::size_t i) const { return rows_.at(i); }
  [[nodiscard]] const Cyclo& value(std::size_t chi, std::size_t cls) const { return rows_.at(chi).at(cls); }

  /// chi(1) as an integer.
  [[nodiscard]] std::int64_t degree(std::size_t chi) const;
  [[nodiscard]] std::vector<std::int64_t> degrees() const;
  [[nodiscard]] std::size_t power_class(std::size_t cls, std::int64_t k) const;
  [[nodiscard]] std::size_t inverse_class(std::size_t cls) const { return power_class(cls, -1); }
  [[nodiscard]] std::uint64_t centralizer_order(std::size_t cls) const {
    return order_ / classes_.at(cls).size;
  }

  /// Prime and the F_p element identified with zeta_exponent during the
  /// modular computation; absent for tables built from external data.
  [[nodiscard]] std::optional<std::uint64_t> prime() const noexcept { return prime_; }
  [[nodiscard]] std::optional<std::uint64_t> root_of_unity() const noexcept { return root_; }
  void set_modular_data(std::uint64_t prime, std::uint64_t root) {
    prime_ = prime;
    root_ = root;
  }

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;

 private:
  std::string group_;
  std::uint64_t order_ = 1;
  std::uint64_t exponent_ = 1;
  std::vector<ClassInfo> classes_;
  std::vector<std::vector<Cyclo>> rows_;
  std::optional<std::uint64_t> prime_;
  std::optional<std::uint64_t> root_;
};

std::vector<ClassInfo> class_infos(const ClassData& classes);

/// Dixon-Schneider over F_p followed by lifting to Q(zeta_e), e = exp(G).
/// Rows are sorted by degree, then by the compact JSON text of the row. The
/// result is checked with find_table_defect and InternalInconsistency is
/// thrown if any invariant fails.
CharacterTable compute_character_table(const PermGroup& group, const ClassData& classes);
CharacterTable compute_character_table(const PermGroup& group);

/// Description of the first violated table invariant, or nullopt. Checks
/// shape, class metadata, degrees, integrality, conductors, both
/// orthogonality relations and Galois stability of the row set.
std::optional<std::string> find_table_defect(const CharacterTable& table);
/// Throws ValidationFailed carrying find_table_defect's message.
void validate(const CharacterTable& table);

/// Exact inner products. first_orthogonality(t, a, b) is
/// sum_j |C_j| chi_a(j) conj(chi_b(j)); second_orthogonality(t, i, j) is
/// sum_chi chi(i) conj(chi(j)).
Cyclo first_orthogonality(const CharacterTable& table, std::size_t a, std::size_t b);
Cyclo second_orthogonality(const CharacterTable& table, std::size_t i, std::size_t j);

nlohmann::ordered_json export_table(const CharacterTable& table);
/// Parses and validates. Throws ParseError on malformed JSON structure and
/// ValidationFailed when the data violates a table invariant.
CharacterTable import_table(const nlohmann::ordered_json& doc);

/// Compact JSON text of one row; the secondary sort key of the row order.
std::string row_key(const std::vector<Cyclo>& row);

}  // namespace galct
