#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "galct/char_table.hpp"
#include "galct/outcome.hpp"
#include "galct/perm_group.hpp"
#include "galct/rationality.hpp"

namespace galct {

/// Cycle type of class_perm(sigma) equals that of char_perm(sigma) for every
/// sigma; the fixed-point counts are compared as well.
CheckOutcome brauer_check(const GaloisGroupModel& model, const std::string& group = {});

/// For each sigma moving exactly four characters in two 2-cycles
/// {chi1, sigma chi1}, {chi2, sigma chi2} and each class x moved by sigma:
/// |C(x)| = |chi1(x) - sigma chi1(x)|^2 + |chi2(x) - sigma chi2(x)|^2.
CheckOutcome column_analysis_check(const CharacterTable& table, const GaloisGroupModel& model);

/// Applicable when the Galois image on classes moves exactly four classes
/// x, x^a, x^b, x^ab as the fixed-point-free Klein group. Then for every
/// sigma with sigma x = x^a and every chi with sigma chi != chi:
/// |C(x)| = |chi(x) - chi(x^a)|^2 + |chi(x^b) - chi(x^ab)|^2.
CheckOutcome row_analysis_check(const CharacterTable& table, const GaloisGroupModel& model);

/// At most 5 irrational classes: Pass iff |cl_Q| = |Irr_Q|.
CheckOutcome theorem_a_check(const RationalityReport& report);
/// 2 |Irr_irr| <= |cl_irr|^2 and 2 |cl_irr| <= |Irr_irr|^2.
CheckOutcome theorem_c_bound_check(const RationalityReport& report);
/// Solvable with 2 or 3 irrational classes: Pass iff every prime divisor of
/// |G| is at most 7.
CheckOutcome theorem_b_check(const RationalityReport& report, bool solvable);
CheckOutcome theorem_b_check(const PermGroup& group, const RationalityReport& report);

enum class ImageTag { Trivial, Cyclic, KleinNormal, KleinWithTransposition, Other };

std::string_view to_string(ImageTag tag) noexcept;

struct ImageStructure {
  ImageTag tag = ImageTag::Trivial;
  std::size_t order = 1;
  /// Number of irrational classes the image acts on.
  std::size_t degree = 0;
  bool cyclic = true;
  bool elementary_abelian_2 = false;
};

/// The Klein tags are used only for an image of order 4 and exponent 2 on
/// exactly four classes.
ImageStructure galois_image_structure(const RationalityReport& report);

nlohmann::ordered_json to_json(const ImageStructure& s);

/// Every abelian subgroup of S_n, n <= 7, as sorted element ranks
/// (lexicographic rank of the image array).
std::vector<std::vector<std::uint32_t>> abelian_subgroups_of_sn(std::size_t n);

/// q_1 + ... + q_k <= n and k <= n / 2 for the elementary divisors of every
/// abelian subgroup of S_n. Throws DegreeTooLarge for n > 7.
CheckOutcome abelian_sn_check(std::size_t n);

/// Abelian subgroups of S_4 are cyclic or Klein, and the Klein ones fall
/// into exactly two conjugacy classes.
CheckOutcome s4_abelian_scan();
/// Abelian subgroups of S_5 with no common fixed point are cyclic.
CheckOutcome s5_fixed_point_free_scan();

/// d x d matrix over F_p, row-major.
using FpMatrix = std::vector<std::vector<std::uint64_t>>;

/// k-eigenvalue property of the matrix group generated by `generators` on
/// F_p^d: with lambda the least element of order k in F_p^x, every v has
/// some h with h v = lambda v. Throws InvalidK unless k | p - 1,
/// CapExceeded when p^d > 10^6 or the group exceeds 10^5 elements, and
/// InvalidParameter on bad dimensions, a non-prime p or a singular
/// generator.
CheckOutcome eigenvalue_property_check(std::uint64_t p, const std::vector<FpMatrix>& generators, std::uint64_t k);

/// Dihedral, semidihedral and generalized quaternion of order 2^(n+1) have
/// the listed classes and exactly five rational ones. n in [3, 12].
CheckOutcome maximal_class_2group_check(std::size_t n);

}  // namespace galct
