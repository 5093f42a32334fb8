#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "galct/char_table.hpp"
#include "galct/classes.hpp"
#include "galct/cyclotomic.hpp"
#include "galct/outcome.hpp"
#include "galct/perm_group.hpp"

namespace galct {

/// (Z/n)^x, n = exp(G), acting on classes by x -> x^r and on characters by
/// conjugating values.
struct GaloisGroupModel {
  std::uint32_t modulus = 1;
  /// Units in ascending order; {r = 1} when n = 1.
  std::vector<GaloisElement> elements;
  /// class_perm[s][i] = class of rep(i)^r for elements[s].
  std::vector<std::vector<std::size_t>> class_perm;
  /// char_perm[s][a] = index of the row sigma(chi_a).
  std::vector<std::vector<std::size_t>> char_perm;

  [[nodiscard]] std::size_t size() const noexcept { return elements.size(); }
  /// Position of r (mod modulus) in `elements`; throws InvalidParameter.
  [[nodiscard]] std::size_t index_of(std::int64_t r) const;
};

/// Builds both actions. The character action is obtained by matching permuted
/// rows; the defining identity sigma(chi(x)) = chi(x^r) is then verified
/// entrywise with exact arithmetic for a generating set of (Z/n)^x, which
/// suffices because both sides are group actions. Throws
/// InternalInconsistency on a mismatch.
GaloisGroupModel build_galois_model(const CharacterTable& table);

struct RationalityReport {
  std::string group;
  std::uint64_t order = 1;
  std::uint64_t exponent = 1;
  std::size_t k = 1;
  std::vector<std::size_t> rational_class_indices;
  std::vector<std::size_t> rational_char_indices;
  std::size_t irrational_class_count = 0;
  std::size_t irrational_char_count = 0;
  /// Orbits as sorted index lists, ordered by least member.
  std::vector<std::vector<std::size_t>> class_orbits;
  std::vector<std::vector<std::size_t>> char_orbits;
  /// [Q(x):Q] and [Q(chi):Q] as Galois orbit sizes.
  std::vector<std::size_t> class_field_degree;
  std::vector<std::size_t> char_field_degree;
  /// Irrational classes in ascending order; position = re-index used below.
  std::vector<std::size_t> irrational_classes;
  /// Distinct permutations induced on the re-indexed irrational classes,
  /// sorted, identity included.
  std::vector<std::vector<std::size_t>> galois_image_on_irrational_classes;

  friend bool operator==(const RationalityReport&, const RationalityReport&) = default;
};

RationalityReport classify(const CharacterTable& table, const GaloisGroupModel& model);
RationalityReport classify(const CharacterTable& table);

nlohmann::ordered_json to_json(const RationalityReport& report);

/// Per-class verdicts of the four rationality criteria.
struct ClassRationalityVerdict {
  std::size_t class_index = 0;
  bool values_rational = false;      ///< every chi(x) is rational
  bool conjugate_to_powers = false;  ///< x ~ x^m for all m coprime to o(x), tested in the group
  bool galois_fixed = false;         ///< fixed by every class_perm
  bool normalizer_full = false;      ///< |N_G(<x>) / C_G(x)| = phi(o(x))

  [[nodiscard]] bool agree() const noexcept {
    return values_rational == conjugate_to_powers && conjugate_to_powers == galois_fixed &&
           galois_fixed == normalizer_full;
  }
};

std::vector<ClassRationalityVerdict> check_rationality_equivalences(const PermGroup& group,
                                                                    const ClassData& classes,
                                                                    const CharacterTable& table,
                                                                    const GaloisGroupModel& model);

/// x is conjugate in G to x^m for every m coprime to o(x).
bool element_is_rational(const PermGroup& group, const ClassData& classes, std::size_t element);

// Basic-lemma properties. Each returns Pass with instance counts, or Fail with
// the offending elements.

/// (a) Elements rational in the subgroup generated by `subgroup_generators`
/// (element indices of `group`) are rational in `group`.
CheckOutcome check_subgroup_rationality(const PermGroup& group, const std::vector<std::size_t>& subgroup_generators);
/// (b) In A x B, the image of a rational element in (A x B)/B = A is rational.
CheckOutcome check_quotient_rationality(const PermGroup& a, const PermGroup& b);
/// (c) In A x B, an irrational element x with gcd(o(x), |B|) = 1 has an
/// irrational image in (A x B)/B = A. NotApplicable when no x qualifies.
CheckOutcome check_coprime_quotient_irrationality(const PermGroup& a, const PermGroup& b);
/// (d) Every power of a rational element is rational.
CheckOutcome check_power_rationality(const PermGroup& group, const ClassData& classes);
/// (e) x irrational, z in C_G(x), gcd(o(x), o(z)) = 1 implies xz irrational.
CheckOutcome check_coprime_centralizer(const PermGroup& group, const ClassData& classes);

}  // namespace galct
