#include "sldist/ff/characters.hpp"

#include <numeric>

namespace sldist::ff {

std::uint64_t MultChar::order() const {
  return modulus / std::gcd(modulus, exponent % modulus);
}

MultChar MultChar::operator*(const MultChar& other) const {
  if (domain != other.domain || modulus != other.modulus) {
    throw FieldError("cannot multiply characters of different groups");
  }
  return {domain, (exponent + other.exponent) % modulus, modulus};
}

MultChar MultChar::inverse() const { return {domain, (modulus - exponent % modulus) % modulus, modulus}; }

MultChar MultChar::pow(std::uint64_t e) const {
  return {domain, static_cast<std::uint64_t>((static_cast<unsigned __int128>(exponent) * e) % modulus), modulus};
}

MultChar char_of_e(const FieldTower& tower, std::uint64_t exponent) {
  const std::uint64_t m = tower.order_e() - 1;
  return {CharDomain::E, exponent % m, m};
}

MultChar char_of_f(const FieldTower& tower, std::uint64_t exponent) {
  const std::uint64_t m = tower.q() - 1;
  return {CharDomain::F, m == 0 ? 0 : exponent % m, m};
}

std::vector<MultChar> chars_of_e(const FieldTower& tower) {
  std::vector<MultChar> out;
  for (std::uint64_t a = 0; a + 1 < tower.order_e(); ++a) out.push_back(char_of_e(tower, a));
  return out;
}

std::vector<MultChar> chars_of_f(const FieldTower& tower) {
  std::vector<MultChar> out;
  for (std::uint64_t a = 0; a + 1 < tower.q(); ++a) out.push_back(char_of_f(tower, a));
  return out;
}

std::vector<MultChar> chars_trivial_on_f(const FieldTower& tower) {
  // chi_a restricted to F^x is chi_{a mod (q-1)}.
  std::vector<MultChar> out;
  const std::uint64_t step = tower.q() - 1;
  for (std::uint64_t a = 0; a + 1 < tower.order_e(); a += step) out.push_back(char_of_e(tower, a));
  return out;
}

std::uint64_t char_exponent_at(const FieldTower& tower, const MultChar& chi, FieldElem x) {
  const std::uint64_t l = chi.domain == CharDomain::E ? tower.log(x) : tower.log_base(x);
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(chi.exponent) * l) % chi.modulus);
}

MultChar restrict_to_f(const FieldTower& tower, const MultChar& chi) {
  if (chi.domain != CharDomain::E) throw FieldError("restrict_to_f expects a character of E^x");
  return char_of_f(tower, chi.exponent);
}

MultChar compose_with_norm(const FieldTower& tower, const MultChar& alpha) {
  if (alpha.domain != CharDomain::F) throw FieldError("compose_with_norm expects a character of F^x");
  return char_of_e(tower, alpha.exponent * (tower.q() + 1));
}

MultChar galois_conjugate(const FieldTower& tower, const MultChar& chi) {
  if (chi.domain != CharDomain::E) return chi;
  return chi.pow(tower.q());
}

std::uint32_t addchar_exponent_at(const FieldTower& tower, const AddChar& psi, FieldElem x) {
  return tower.absolute_trace(tower.mul(psi.b, x));
}

std::vector<AddChar> addchars_of_e(const FieldTower& tower) {
  std::vector<AddChar> out;
  for (std::uint32_t c = 0; c < tower.order_e(); ++c) out.push_back({FieldElem{c}});
  return out;
}

std::vector<AddChar> addchars_trivial_on_f(const FieldTower& tower) {
  std::vector<AddChar> out;
  for (std::uint32_t c = 0; c < tower.order_e(); ++c) {
    if (tower.trace(FieldElem{c}).code == 0) out.push_back({FieldElem{c}});
  }
  return out;
}

}  // namespace sldist::ff
