#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sldist/chartab/root_sum.hpp"
#include "sldist/groups/conjugacy.hpp"

namespace sldist::chartab {

using groups::ConjugacyData;
using groups::GroupView;

/// Irreducible characters of one group view, values exact over Q(zeta_e).
///
/// Rows are sorted by degree, then lexicographically by their values, so the
/// trivial character is row 0.
class CharTable {
 public:
  CharTable(std::shared_ptr<const ConjugacyData> classes, std::uint64_t prime, std::vector<std::vector<RootSum>> rows);

  const ConjugacyData& classes() const { return *classes_; }
  std::shared_ptr<const ConjugacyData> classes_ptr() const { return classes_; }
  std::uint64_t exponent() const { return classes_->exponent; }
  /// The splitting prime used during construction.
  std::uint64_t prime() const { return prime_; }
  std::size_t size() const { return rows_.size(); }
  std::uint64_t degree(std::size_t row) const { return degrees_[row]; }
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }
  const std::vector<RootSum>& row(std::size_t i) const { return rows_[i]; }
  const RootSum& value(std::size_t row, std::size_t cls) const { return rows_[row][cls]; }
  std::optional<std::size_t> find_row(const std::vector<RootSum>& values) const;

 private:
  std::shared_ptr<const ConjugacyData> classes_;
  std::uint64_t prime_;
  std::vector<std::vector<RootSum>> rows_;
  std::vector<std::uint64_t> degrees_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
};

struct TableOptions {
  /// Tables with more classes than this are refused.
  std::size_t max_classes = 2000;
};

/// Dixon-Schneider over F_l with l the least prime = 1 (mod e) above
/// 2 sqrt|G|, then lifting through eigenvalue multiplicities.  The result is
/// certified with verify_table before it is returned; a failed certificate
/// throws std::logic_error.
CharTable dixon_schneider(const GroupView& view, std::shared_ptr<const ConjugacyData> classes,
                          const TableOptions& options = {});

/// Outcome of the exact checks on a table.
struct TableCertificate {
  bool row_count = false;
  bool degree_sum = false;
  bool identity_column = false;
  bool power_maps = false;
  bool galois_closed = false;
  bool rows_orthogonal = false;
  bool columns_orthogonal = false;
  /// Prime used for the orthogonality certificate.
  std::uint64_t prime = 0;
  std::string failure;

  bool ok() const {
    return row_count && degree_sum && identity_column && power_maps && galois_closed && rows_orthogonal &&
           columns_orthogonal;
  }
};

/// Exact checks.  The orthogonality sums are Galois invariant once the power
/// maps are consistent, hence rational integers bounded by |G| (d_max^2 + 1);
/// they are compared modulo a prime above that bound.
TableCertificate verify_table(const GroupView& view, const CharTable& table);

/// Class of rep(k)^u for every class k.
std::vector<std::uint32_t> power_map(const GroupView& view, const ConjugacyData& classes, std::uint64_t u);

}  // namespace sldist::chartab
