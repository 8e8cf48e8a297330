#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sldist/groups/enumerated_group.hpp"

namespace sldist::groups {

/// Conjugacy classes of one GroupView.
///
/// Classes are ordered by size, then by least member index; the
/// representative is the least member.
struct ConjugacyData {
  GroupKind kind = GroupKind::GlE;
  std::uint64_t group_order = 0;
  /// Per master index; -1 outside the view.
  std::vector<std::int32_t> class_of;
  std::vector<std::uint32_t> representative;
  std::vector<std::uint64_t> class_size;
  std::vector<std::uint64_t> element_order;
  /// Members of class c are members[member_offsets[c] .. member_offsets[c+1]).
  std::vector<std::uint32_t> member_offsets;
  std::vector<std::uint32_t> members;
  /// Class of g^{-1}.
  std::vector<std::uint32_t> inverse_class;
  /// Class of the entrywise Frobenius image g^sigma.
  std::vector<std::uint32_t> galois_class;
  std::uint32_t identity_class = 0;
  /// Least common multiple of element orders.
  std::uint64_t exponent = 1;
  /// The generating set used for the flood fill.
  std::vector<std::uint32_t> generators;

  std::size_t size() const { return representative.size(); }
  std::span<const std::uint32_t> class_members(std::size_t c) const {
    return {members.data() + member_offsets[c], members.data() + member_offsets[c + 1]};
  }
  std::uint32_t class_index(std::uint32_t element) const { return static_cast<std::uint32_t>(class_of[element]); }
};

/// Random members (seeded) added until they generate the whole view.
std::vector<std::uint32_t> generating_set(const GroupView& view, std::uint64_t seed);

/// Flood fill under conjugation by a generating set; each class size is then
/// checked against the centralizer order computed from the commutant algebra.
ConjugacyData conjugacy_classes(const GroupView& view, std::uint64_t seed = 0x5eed);

/// Class permutations induced by g -> g^sigma and g -> g^{-1}.
std::vector<std::uint32_t> galois_class_perm(const GroupView& view, const ConjugacyData& classes);
std::vector<std::uint32_t> inverse_class_perm(const GroupView& view, const ConjugacyData& classes);

/// |C_view(g)|, by enumerating the commutant {X : Xg = gX}.
std::uint64_t centralizer_order(const GroupView& view, std::uint32_t element);

/// Class of rep(c)^e.
std::uint32_t class_power(const GroupView& view, const ConjugacyData& classes, std::uint32_t c, std::uint64_t e);

}  // namespace sldist::groups
