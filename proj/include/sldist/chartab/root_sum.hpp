#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "sldist/chartab/cyclotomic.hpp"

namespace sldist::chartab {

/// A character value chi(g) stored as the eigenvalue multiset of rho(g):
/// sum of mult * zeta_e^exponent over the terms.  Exponents are strictly
/// increasing residues mod e and multiplicities are positive, so equal
/// multisets compare equal.
struct RootSum {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> terms;

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, m] : terms) d += m;
    return d;
  }
  friend auto operator<=>(const RootSum&, const RootSum&) = default;
  friend bool operator==(const RootSum&, const RootSum&) = default;
};

/// Builds from unsorted (exponent, multiplicity) pairs, merging duplicates.
RootSum make_root_sum(std::vector<std::pair<std::uint64_t, std::uint64_t>> terms, std::uint64_t e);
/// Exponents times u, mod e.
RootSum scale_exponents(const RootSum& x, std::uint64_t u, std::uint64_t e);
/// Every eigenvalue multiplied by zeta_e^s.
RootSum shift_exponents(const RootSum& x, std::uint64_t s, std::uint64_t e);
/// Image under zeta_e -> w, with powers[k] = w^k mod m.
std::uint64_t evaluate_mod(const RootSum& x, const std::vector<std::uint64_t>& powers, std::uint64_t m);
Cyclotomic<std::int64_t> to_cyclotomic(const RootSum& x, std::uint64_t e);

std::size_t hash_row(const std::vector<RootSum>& row);

}  // namespace sldist::chartab
