#include "sldist/chartab/modular.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "sldist/ff/field_tower.hpp"

namespace sldist::chartab {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

// Products of two reduced residues fit in 64 bits.
inline std::uint64_t mul_small(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }

void reduce_row(ModMatrix& a, Eigen::Index r, std::uint64_t m) {
  for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) %= m;
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  if (a % m == 0) throw std::domain_error("inv_mod: zero has no inverse");
  return pow_mod(a, m - 2, m);
}

std::uint64_t least_prime_one_mod(std::uint64_t e, std::uint64_t bound) {
  std::uint64_t l = bound / e * e + 1;
  while (l <= bound) l += e;
  while (!ff::is_prime(l)) l += e;
  return l;
}

std::uint64_t primitive_root_of_unity(std::uint64_t e, std::uint64_t l) {
  if ((l - 1) % e != 0) throw std::invalid_argument("primitive_root_of_unity: e does not divide l-1");
  const auto factors = ff::prime_divisors(l - 1);
  for (std::uint64_t g = 2; g < l; ++g) {
    bool primitive = true;
    for (auto f : factors) {
      if (pow_mod(g, (l - 1) / f, l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return pow_mod(g, (l - 1) / e, l);
  }
  if (l == 2) return 1;
  throw std::logic_error("primitive_root_of_unity: none found");
}

ModMatrix mat_mul_mod(const ModMatrix& a, const ModMatrix& b, std::uint64_t m) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul_mod: shape mismatch");
  const std::uint64_t mm = m - 1;
  const std::uint64_t chunk = mm == 0 ? kMax : (mm > 0xFFFFFFFFull ? 0 : kMax / (mm * mm) / 2);
  ModMatrix out = ModMatrix::Zero(a.rows(), b.cols());
  if (chunk == 0) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        const std::uint64_t x = a(i, k);
        if (x == 0) continue;
        for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) = add_mod(out(i, j), mul_mod(x, b(k, j), m), m);
      }
    return out;
  }
  const Eigen::Index step = static_cast<Eigen::Index>(std::min<std::uint64_t>(chunk, static_cast<std::uint64_t>(a.cols()) + 1));
  for (Eigen::Index k0 = 0; k0 < a.cols(); k0 += step) {
    const Eigen::Index len = std::min(step, a.cols() - k0);
    ModMatrix part = a.middleCols(k0, len) * b.middleRows(k0, len);
    out = (out + part.unaryExpr([m](std::uint64_t x) { return x % m; })).unaryExpr([m](std::uint64_t x) { return x % m; });
  }
  return out;
}

std::vector<Eigen::Index> rref_mod(ModMatrix& a, std::uint64_t m) {
  // Row updates are applied without reduction until the per-row bound would
  // overflow; pivot rows and pivot columns are reduced as they are read.
  const std::uint64_t mm = m - 1;
  const std::uint64_t limit = mm == 0 ? kMax : (mm > 0xFFFFFFFFull ? 0 : (kMax - mm) / (mm * mm));
  std::vector<std::uint64_t> pending(static_cast<std::size_t>(a.rows()), 0);
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank = 0;
  const Eigen::Index cols = a.cols();
  for (Eigen::Index col = 0; col < cols && rank < a.rows(); ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index r = rank; r < a.rows(); ++r) {
      a(r, col) %= m;
      if (a(r, col) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != rank) {
      a.row(p).swap(a.row(rank));
      std::swap(pending[p], pending[rank]);
    }
    reduce_row(a, rank, m);
    pending[rank] = 0;
    const std::uint64_t inv = inv_mod(a(rank, col), m);
    for (Eigen::Index c = col; c < cols; ++c) a(rank, c) = mul_mod(a(rank, c), inv, m);
    const Eigen::Index tail = cols - col;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == rank) continue;
      const std::uint64_t f = a(r, col) % m;
      if (f == 0) {
        a(r, col) = 0;
        continue;
      }
      if (limit == 0) {
        for (Eigen::Index c = col; c < cols; ++c) a(r, c) = sub_mod(a(r, c) % m, mul_mod(f, a(rank, c), m), m);
        continue;
      }
      if (pending[r] >= limit) {
        reduce_row(a, r, m);
        pending[r] = 0;
      }
      a.row(r).tail(tail) += (m - f) * a.row(rank).tail(tail);
      ++pending[r];
    }
    pivots.push_back(col);
    ++rank;
  }
  a = a.unaryExpr([m](std::uint64_t x) { return x % m; });
  return pivots;
}

ModMatrix nullspace_mod(ModMatrix a, std::uint64_t m) {
  const auto pivots = rref_mod(a, m);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : pivots) is_pivot[c] = true;
  ModMatrix basis(n - static_cast<Eigen::Index>(pivots.size()), n);
  basis.setZero();
  Eigen::Index row = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(row, f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(row, pivots[r]) = (m - a(static_cast<Eigen::Index>(r), f)) % m;
    ++row;
  }
  return basis;
}

std::vector<std::uint64_t> charpoly_mod(ModMatrix h, std::uint64_t m) {
  const Eigen::Index n = h.rows();
  if (h.cols() != n) throw std::invalid_argument("charpoly_mod: matrix not square");
  const bool small = m <= 0xFFFFFFFFull;
  auto mul = [&](std::uint64_t x, std::uint64_t y) { return small ? mul_small(x, y, m) : mul_mod(x, y, m); };

  // Similarity transform to upper Hessenberg form.
  for (Eigen::Index j = 0; j + 2 < n; ++j) {
    Eigen::Index p = -1;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      if (h(i, j) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != j + 1) {
      h.row(p).swap(h.row(j + 1));
      h.col(p).swap(h.col(j + 1));
    }
    const std::uint64_t inv = inv_mod(h(j + 1, j), m);
    for (Eigen::Index i = j + 2; i < n; ++i) {
      if (h(i, j) == 0) continue;
      const std::uint64_t u = mul(h(i, j), inv);
      for (Eigen::Index c = j; c < n; ++c) h(i, c) = sub_mod(h(i, c), mul(u, h(j + 1, c)), m);
      for (Eigen::Index r = 0; r < n; ++r) h(r, j + 1) = add_mod(h(r, j + 1), mul(u, h(r, i)), m);
    }
  }

  // p_k = det(xI - H_k) for the leading k x k block, by expansion along the last column.
  std::vector<std::vector<std::uint64_t>> p(static_cast<std::size_t>(n) + 1);
  p[0] = {1 % m};
  for (Eigen::Index k = 1; k <= n; ++k) {
    const Eigen::Index c = k - 1;
    auto& cur = p[k];
    cur.assign(static_cast<std::size_t>(k) + 1, 0);
    // (x - h_cc) p_{k-1}
    const auto& prev = p[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = add_mod(cur[d + 1], prev[d], m);
      cur[d] = sub_mod(cur[d], mul(h(c, c), prev[d]), m);
    }
    // - sum_{i<c} h_{i,c} (prod_{t=i+1}^{c} h_{t,t-1}) p_i
    std::uint64_t prod = 1 % m;
    for (Eigen::Index i = c - 1; i >= 0; --i) {
      prod = mul(prod, h(i + 1, i));
      if (prod == 0) break;
      const std::uint64_t coeff = mul(h(i, c), prod);
      if (coeff == 0) continue;
      const auto& pi = p[i];
      for (std::size_t d = 0; d < pi.size(); ++d) cur[d] = sub_mod(cur[d], mul(coeff, pi[d]), m);
    }
  }
  return p[n];
}

std::vector<std::uint64_t> roots_mod(const std::vector<std::uint64_t>& poly, std::uint64_t m) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < m; ++x) {
    std::uint64_t v = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = add_mod(mul_mod(v, x, m), *it, m);
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace sldist::chartab
