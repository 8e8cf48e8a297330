#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sldist/ff/field_tower.hpp"

namespace sldist::groups {

using ff::FieldElem;
using ff::FieldTower;

/// Square matrix over E, entries row-major.
class Mat {
 public:
  explicit Mat(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}
  Mat(int n, std::vector<FieldElem> entries);

  static Mat identity(int n);
  static Mat diagonal(std::span<const FieldElem> diag);

  int dim() const { return n_; }
  FieldElem operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r) * n_ + c]; }
  void set(int r, int c, FieldElem x);
  std::span<const FieldElem> entries() const { return entries_; }

  /// Computed once, then cached.
  FieldElem determinant(const FieldTower& tower) const;

  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }

 private:
  int n_;
  std::vector<FieldElem> entries_;
  mutable std::optional<FieldElem> det_;
};

Mat multiply(const FieldTower& tower, const Mat& a, const Mat& b);
/// Throws ff::FieldError for a singular matrix.
Mat inverse(const FieldTower& tower, const Mat& a);
/// Entrywise x -> x^q.
Mat frobenius(const FieldTower& tower, const Mat& a);
Mat scale(const FieldTower& tower, FieldElem s, const Mat& a);

FieldElem determinant(const FieldTower& tower, std::span<const FieldElem> entries, int n);

/// Basis of {X : X a = a X}, each basis matrix row-major.
std::vector<Mat> commutant_basis(const FieldTower& tower, const Mat& a);

}  // namespace sldist::groups
