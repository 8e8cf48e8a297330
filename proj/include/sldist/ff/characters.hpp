#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "sldist/ff/field_tower.hpp"

namespace sldist::ff {

/// Which multiplicative group a character lives on.
enum class CharDomain : std::uint8_t { E, F };

/// A character of E^x or F^x, stored as a discrete-log exponent.
///
/// On E^x the character is x -> zeta_{q^2-1}^{exponent * log x}; on F^x it is
/// x -> zeta_{q-1}^{exponent * log_F x}, logs taken against the tower's fixed
/// generators.  The group law is addition of exponents.
struct MultChar {
  CharDomain domain = CharDomain::E;
  std::uint64_t exponent = 0;
  std::uint64_t modulus = 1;

  bool is_trivial() const { return exponent % modulus == 0; }
  std::uint64_t order() const;

  MultChar operator*(const MultChar& other) const;
  MultChar inverse() const;
  MultChar pow(std::uint64_t e) const;

  friend bool operator==(const MultChar&, const MultChar&) = default;
};

MultChar char_of_e(const FieldTower& tower, std::uint64_t exponent);
MultChar char_of_f(const FieldTower& tower, std::uint64_t exponent);

/// All q^2 - 1 characters of E^x, by exponent.
std::vector<MultChar> chars_of_e(const FieldTower& tower);
/// All q - 1 characters of F^x, by exponent.
std::vector<MultChar> chars_of_f(const FieldTower& tower);

/// Characters of E^x trivial on F^x.  There are q + 1 of them.
std::vector<MultChar> chars_trivial_on_f(const FieldTower& tower);

/// Exponent r with chi(x) = zeta_m^r, m = chi.modulus.
std::uint64_t char_exponent_at(const FieldTower& tower, const MultChar& chi, FieldElem x);

/// chi|_{F^x} as a character of F^x.
MultChar restrict_to_f(const FieldTower& tower, const MultChar& chi);
/// alpha o Nm as a character of E^x.
MultChar compose_with_norm(const FieldTower& tower, const MultChar& alpha);
/// The Galois conjugate x -> chi(x^q).
MultChar galois_conjugate(const FieldTower& tower, const MultChar& chi);

/// psi_b(x) = zeta_p^{Tr_{E/F_p}(b x)}.
struct AddChar {
  FieldElem b;

  bool is_trivial() const { return b.code == 0; }
  friend bool operator==(const AddChar&, const AddChar&) = default;
};

/// Exponent in [0, p) of psi_b(x) as a power of zeta_p.
std::uint32_t addchar_exponent_at(const FieldTower& tower, const AddChar& psi, FieldElem x);

/// All q^2 additive characters psi_b, b in code order.
std::vector<AddChar> addchars_of_e(const FieldTower& tower);
/// {psi_b : Tr_{E/F}(b) = 0}, b in code order; q characters including the trivial one.
std::vector<AddChar> addchars_trivial_on_f(const FieldTower& tower);

}  // namespace sldist::ff
