#include "sldist/groups/matrix.hpp"

#include <stdexcept>

namespace sldist::groups {

Mat::Mat(int n, std::vector<FieldElem> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("Mat: wrong entry count");
}

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m.entries_[static_cast<std::size_t>(i) * n + i] = FieldElem{1};
  return m;
}

Mat Mat::diagonal(std::span<const FieldElem> diag) {
  const int n = static_cast<int>(diag.size());
  Mat m(n);
  for (int i = 0; i < n; ++i) m.entries_[static_cast<std::size_t>(i) * n + i] = diag[i];
  return m;
}

void Mat::set(int r, int c, FieldElem x) {
  entries_[static_cast<std::size_t>(r) * n_ + c] = x;
  det_.reset();
}

FieldElem Mat::determinant(const FieldTower& tower) const {
  if (!det_) det_ = groups::determinant(tower, entries_, n_);
  return *det_;
}

FieldElem determinant(const FieldTower& tower, std::span<const FieldElem> entries, int n) {
  std::vector<FieldElem> a(entries.begin(), entries.end());
  FieldElem det = tower.one();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a[static_cast<std::size_t>(r) * n + col].code != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return tower.zero();
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[static_cast<std::size_t>(pivot) * n + c], a[static_cast<std::size_t>(col) * n + c]);
      det = tower.neg(det);
    }
    const FieldElem pv = a[static_cast<std::size_t>(col) * n + col];
    det = tower.mul(det, pv);
    const FieldElem pinv = tower.inv(pv);
    for (int r = col + 1; r < n; ++r) {
      const FieldElem f = tower.mul(a[static_cast<std::size_t>(r) * n + col], pinv);
      if (f.code == 0) continue;
      for (int c = col; c < n; ++c) {
        auto& x = a[static_cast<std::size_t>(r) * n + c];
        x = tower.sub(x, tower.mul(f, a[static_cast<std::size_t>(col) * n + c]));
      }
    }
  }
  return det;
}

Mat multiply(const FieldTower& tower, const Mat& a, const Mat& b) {
  const int n = a.dim();
  Mat out(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      FieldElem acc = tower.zero();
      for (int t = 0; t < n; ++t) acc = tower.add(acc, tower.mul(a(r, t), b(t, c)));
      out.set(r, c, acc);
    }
  }
  return out;
}

Mat inverse(const FieldTower& tower, const Mat& a) {
  const int n = a.dim();
  const int w = 2 * n;
  std::vector<FieldElem> m(static_cast<std::size_t>(n) * w);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(r) * w + c] = a(r, c);
    m[static_cast<std::size_t>(r) * w + n + r] = tower.one();
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m[static_cast<std::size_t>(r) * w + col].code != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw ff::FieldError("inverse of a singular matrix");
    for (int c = 0; c < w; ++c) std::swap(m[static_cast<std::size_t>(pivot) * w + c], m[static_cast<std::size_t>(col) * w + c]);
    const FieldElem pinv = tower.inv(m[static_cast<std::size_t>(col) * w + col]);
    for (int c = 0; c < w; ++c) {
      auto& x = m[static_cast<std::size_t>(col) * w + c];
      x = tower.mul(x, pinv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const FieldElem f = m[static_cast<std::size_t>(r) * w + col];
      if (f.code == 0) continue;
      for (int c = 0; c < w; ++c) {
        auto& x = m[static_cast<std::size_t>(r) * w + c];
        x = tower.sub(x, tower.mul(f, m[static_cast<std::size_t>(col) * w + c]));
      }
    }
  }
  Mat out(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out.set(r, c, m[static_cast<std::size_t>(r) * w + n + c]);
  }
  return out;
}

Mat frobenius(const FieldTower& tower, const Mat& a) {
  const int n = a.dim();
  Mat out(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out.set(r, c, tower.frobenius(a(r, c)));
  }
  return out;
}

Mat scale(const FieldTower& tower, FieldElem s, const Mat& a) {
  const int n = a.dim();
  Mat out(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out.set(r, c, tower.mul(s, a(r, c)));
  }
  return out;
}

std::vector<Mat> commutant_basis(const FieldTower& tower, const Mat& a) {
  // Unknown X has n^2 entries x_{ij}; (Xa - aX)_{rc} = sum_t x_{rt} a_{tc} - a_{rt} x_{tc}.
  const int n = a.dim();
  const int vars = n * n;
  std::vector<std::vector<FieldElem>> rows;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      std::vector<FieldElem> eq(vars, tower.zero());
      for (int t = 0; t < n; ++t) {
        auto& xrt = eq[r * n + t];
        xrt = tower.add(xrt, a(t, c));
        auto& xtc = eq[t * n + c];
        xtc = tower.sub(xtc, a(r, t));
      }
      rows.push_back(std::move(eq));
    }
  }
  // Reduced row echelon form.
  std::vector<int> pivot_cols;
  std::size_t rank = 0;
  for (int col = 0; col < vars && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].code == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const FieldElem pinv = tower.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = tower.mul(x, pinv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].code == 0) continue;
      const FieldElem f = rows[r][col];
      for (int c = 0; c < vars; ++c) rows[r][c] = tower.sub(rows[r][c], tower.mul(f, rows[rank][c]));
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(vars, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<Mat> basis;
  for (int free = 0; free < vars; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElem> x(vars, tower.zero());
    x[free] = tower.one();
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = tower.neg(rows[r][free]);
    basis.emplace_back(n, std::move(x));
  }
  return basis;
}

}  // namespace sldist::groups
