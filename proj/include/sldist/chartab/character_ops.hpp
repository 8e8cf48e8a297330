#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "sldist/chartab/char_table.hpp"
#include "sldist/ff/characters.hpp"

namespace sldist::chartab {

struct TrivialCharacter {};
/// chi o det for a character chi of E^x.
struct DetCharacter {
  ff::MultChar chi;
};
/// u -> prod_i psi_i(u_{i,i+1}) on upper unitriangular matrices.
struct WhittakerCharacter {
  std::vector<ff::AddChar> components;
  bool nondegenerate() const;
};
using LinearCharacter = std::variant<TrivialCharacter, DetCharacter, WhittakerCharacter>;

/// lambda(x) as a power of zeta_e.  Throws std::domain_error if lambda(x) is
/// not an e-th root of unity.
std::uint64_t linear_exponent(const groups::EnumeratedGroup& group, const LinearCharacter& lambda, std::uint32_t x,
                              std::uint64_t e);

/// Elements of H counted by (class in G, exponent of lambda): everything a
/// restriction multiplicity needs from H.
struct SubgroupProfile {
  std::uint64_t exponent = 1;
  std::uint64_t order = 0;
  struct Entry {
    std::uint32_t cls;
    std::uint32_t lambda_exp;
    std::uint64_t count;
  };
  std::vector<Entry> entries;
};

/// Throws std::invalid_argument if H is not inside the classed group, or if
/// lambda fails to be a homomorphism on H (checked on H x generators).
SubgroupProfile subgroup_profile(const GroupView& h, const ConjugacyData& g_classes, const LinearCharacter& lambda);

/// (1/|H|) sum_{h in H} chi(h) conj(lambda(h)), exact.
std::uint64_t restriction_multiplicity(const CharTable& table, std::size_t row, const SubgroupProfile& profile);

/// (1/|G|) sum_k |C_k| a_k conj(b_k) for class functions given as root sums.
Rational inner_product(const CharTable& table, const std::vector<RootSum>& a, const std::vector<RootSum>& b);

/// For each class of H, the class of G containing it.
std::vector<std::uint32_t> class_fusion(const ConjugacyData& h_classes, const ConjugacyData& g_classes);

/// <Res chi, phi>_H for chi a row of the G-table and phi a row of the H-table.
std::uint64_t restricted_inner_product(const CharTable& g_table, std::size_t g_row, const CharTable& h_table,
                                       std::size_t h_row, const std::vector<std::uint32_t>& fusion);

/// Row i maps to the row whose value at k is chi_i(class_perm[k]).  Throws
/// std::logic_error if the permuted vector is not a row.
std::vector<std::uint32_t> row_permutation(const CharTable& table, const std::vector<std::uint32_t>& class_perm);

/// Row of chi_i . (chi o det).
std::vector<std::uint32_t> twist_permutation(const GroupView& view, const CharTable& table, const ff::MultChar& chi);

/// sigma, dual and det-twists resolved to row permutations of a GL_n(E) table.
/// Twisting by chi_a is the a-th power of twisting by chi_1.
class RowActions {
 public:
  RowActions(const GroupView& gl_view, const CharTable& table);

  std::uint32_t sigma(std::uint32_t row) const { return sigma_[row]; }
  std::uint32_t dual(std::uint32_t row) const { return dual_[row]; }
  std::uint32_t twist(std::uint32_t row, std::uint64_t exponent) const;
  std::uint32_t twist(std::uint32_t row, const ff::MultChar& chi) const { return twist(row, chi.exponent); }
  std::uint64_t twist_modulus() const { return modulus_; }
  bool conjugate_self_dual(std::uint32_t row) const { return sigma_[row] == dual_[row]; }

 private:
  std::uint64_t modulus_;
  std::vector<std::uint32_t> sigma_, dual_;
  std::vector<std::vector<std::uint32_t>> cycles_;
  std::vector<std::uint32_t> cycle_of_, position_;
};

/// An irreducible of GL_n(E) with its images resolved.
struct PiTilde {
  std::uint32_t row = 0;
  std::uint64_t degree = 0;
  std::uint32_t sigma = 0;
  std::uint32_t dual = 0;
  /// twists[a] = row of pi~ (x) (chi_a o det), a mod q^2 - 1.
  std::vector<std::uint32_t> twists;

  bool conjugate_self_dual() const { return sigma == dual; }
};
PiTilde make_pi_tilde(const CharTable& table, const RowActions& actions, std::uint32_t row);

/// An irreducible of SL_n(E).
struct Pi {
  std::uint32_t row = 0;
  std::uint64_t degree = 0;
  std::uint32_t sigma = 0;
  std::uint32_t dual = 0;
};

/// (1/|N|) sum_u chi(u) conj(psi(u)).  Throws std::invalid_argument for a
/// degenerate psi.
std::uint64_t whittaker_multiplicity(const GroupView& view, const CharTable& table, std::size_t row,
                                     const WhittakerCharacter& psi);

}  // namespace sldist::chartab
