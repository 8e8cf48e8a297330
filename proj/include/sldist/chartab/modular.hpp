#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace sldist::chartab {

/// Dense matrices over Z/m, entries kept in [0, m) between operations.
using ModMatrix = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ModVector = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, 1>;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= b ? a - b : a + m - b; }
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// m prime, a nonzero mod m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Least prime l with l = 1 (mod e) and l > bound.
std::uint64_t least_prime_one_mod(std::uint64_t e, std::uint64_t bound);
/// Least primitive root mod a prime l, raised to (l-1)/e.
std::uint64_t primitive_root_of_unity(std::uint64_t e, std::uint64_t l);

/// A * B mod m for reduced inputs; the inner dimension is chunked so that
/// no partial sum overflows.
ModMatrix mat_mul_mod(const ModMatrix& a, const ModMatrix& b, std::uint64_t m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<Eigen::Index> rref_mod(ModMatrix& a, std::uint64_t m);
/// Rows form a basis of {x : a x = 0}.
ModMatrix nullspace_mod(ModMatrix a, std::uint64_t m);

/// Characteristic polynomial det(xI - a), low degree first, via reduction
/// to upper Hessenberg form.
std::vector<std::uint64_t> charpoly_mod(ModMatrix a, std::uint64_t m);
/// Distinct roots in increasing order, found by evaluation at every residue.
std::vector<std::uint64_t> roots_mod(const std::vector<std::uint64_t>& poly, std::uint64_t m);

}  // namespace sldist::chartab
