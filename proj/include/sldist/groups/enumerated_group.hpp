#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sldist/ff/field_tower.hpp"
#include "sldist/groups/matrix.hpp"

namespace sldist::groups {

/// The named subgroups of GL_n(E), all sharing the master element index.
enum class GroupKind : std::uint8_t { GlE, SlE, GlF, SlF, GlPlus, NE, Center };

inline constexpr std::array<GroupKind, 7> kAllGroupKinds = {GroupKind::GlE, GroupKind::SlE,    GroupKind::GlF,
                                                            GroupKind::SlF, GroupKind::GlPlus, GroupKind::NE,
                                                            GroupKind::Center};

/// "gl-e", "sl-e", "gl-f", "sl-f", "gl-plus", "n-e", "center".
std::string to_string(GroupKind kind);
GroupKind parse_group_kind(const std::string& name);

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Product formula for |GL_n(F_order)|, saturating at UINT64_MAX.
std::uint64_t gl_order(std::uint64_t field_order, int n);

class EnumeratedGroup;

/// A named subgroup of an EnumeratedGroup: a membership bitmap over the
/// master index plus the sorted member list.
class GroupView {
 public:
  GroupKind kind() const { return kind_; }
  const EnumeratedGroup& group() const { return *group_; }
  std::size_t size() const { return members_->size(); }
  bool contains(std::uint32_t index) const { return (*membership_)[index] != 0; }
  std::span<const std::uint32_t> members() const { return *members_; }

 private:
  friend class EnumeratedGroup;
  GroupView(const EnumeratedGroup* g, GroupKind kind, const std::vector<std::uint8_t>* membership,
            const std::vector<std::uint32_t>* members)
      : group_(g), kind_(kind), membership_(membership), members_(members) {}

  const EnumeratedGroup* group_;
  GroupKind kind_;
  const std::vector<std::uint8_t>* membership_;
  const std::vector<std::uint32_t>* members_;
};

/// GL_n(E) enumerated densely.
///
/// Elements are indexed in increasing order of their canonical code: the
/// row-major entry codes read as base-q^2 digits, first entry most
/// significant.  Products and inverses are index lookups.
class EnumeratedGroup {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = 2'000'000;

  /// Throws SizeGuardError when |GL_n(E)| exceeds max_order.
  static std::shared_ptr<const EnumeratedGroup> enumerate(std::shared_ptr<const FieldTower> tower, int n,
                                                          std::uint64_t max_order = kDefaultMaxOrder);

  EnumeratedGroup(const EnumeratedGroup&) = delete;
  EnumeratedGroup& operator=(const EnumeratedGroup&) = delete;

  int n() const { return n_; }
  const FieldTower& tower() const { return *tower_; }
  std::shared_ptr<const FieldTower> tower_ptr() const { return tower_; }
  std::size_t size() const { return det_log_.size(); }
  std::uint32_t identity() const { return identity_; }

  Mat element(std::uint32_t index) const;
  std::span<const std::uint32_t> entries(std::uint32_t index) const {
    return {entries_.data() + static_cast<std::size_t>(index) * n_ * n_, static_cast<std::size_t>(n_) * n_};
  }
  std::uint64_t code(std::uint32_t index) const;
  std::optional<std::uint32_t> find(const Mat& m) const;
  /// Throws std::out_of_range if m is not invertible.
  std::uint32_t index_of(const Mat& m) const;

  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t conjugate(std::uint32_t g, std::uint32_t x) const { return multiply(multiply(g, x), inverse_[g]); }
  std::uint32_t power(std::uint32_t a, std::uint64_t e) const;
  std::uint64_t element_order(std::uint32_t a) const;
  std::uint32_t frobenius(std::uint32_t a) const;

  /// Discrete log of det, base generator_e().
  std::uint32_t det_log(std::uint32_t a) const { return det_log_[a]; }
  FieldElem determinant(std::uint32_t a) const { return tower_->exp(det_log_[a]); }

  GroupView view(GroupKind kind) const;

 private:
  EnumeratedGroup() = default;

  int n_ = 0;
  std::shared_ptr<const FieldTower> tower_;
  std::uint32_t field_order_ = 0;
  std::vector<std::uint32_t> entries_;
  std::vector<std::int32_t> lookup_;
  std::vector<std::uint32_t> det_log_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::uint32_t identity_ = 0;
  std::array<std::vector<std::uint8_t>, kAllGroupKinds.size()> membership_;
  std::array<std::vector<std::uint32_t>, kAllGroupKinds.size()> members_;
};

/// N(E) with its superdiagonal coordinates.
struct UnipotentData {
  std::vector<std::uint32_t> elements;
  /// superdiagonal[i] = (u_{1,2}, ..., u_{n-1,n}) of elements[i].
  std::vector<std::vector<FieldElem>> superdiagonal;
};

UnipotentData unipotent_data(const EnumeratedGroup& group);

/// Coset representatives diag(g^i, 1, ..., 1) of GL_n(E)^+ in GL_n(E).
struct GlPlusCosets {
  std::vector<std::uint32_t> representatives;
  std::uint64_t index_from_groups = 0;
  std::uint64_t index_from_cyclic = 0;
};

/// Throws std::logic_error if the two index computations disagree.
GlPlusCosets glplus_cosets(const EnumeratedGroup& group);

/// g = scalar * rational * special with scalar in E^x, rational in GL_n(F),
/// special in SL_n(E).
struct GlPlusFactorization {
  std::uint32_t scalar;
  std::uint32_t rational;
  std::uint32_t special;
};

std::optional<GlPlusFactorization> glplus_factorization(const EnumeratedGroup& group, std::uint32_t element);

}  // namespace sldist::groups
