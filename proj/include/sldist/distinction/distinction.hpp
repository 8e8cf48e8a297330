#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sldist/chartab/character_ops.hpp"

namespace sldist::distinction {

using chartab::CharTable;
using chartab::Pi;
using chartab::PiTilde;
using groups::ConjugacyData;
using groups::EnumeratedGroup;
using groups::GroupView;

/// Supplies the table of a view, e.g. from a cache.  Must return a table over
/// exactly the classes it is given.
using TableSource = std::function<CharTable(const GroupView&, std::shared_ptr<const ConjugacyData>)>;

struct ContextOptions {
  std::uint64_t max_order = EnumeratedGroup::kDefaultMaxOrder;
  std::uint64_t seed = 0x5eed;
  chartab::TableOptions table;
  /// Empty means dixon_schneider.
  TableSource source;
};

/// Per irreducible of SL_n(E).
struct SlRow {
  Pi pi;
  /// dim Hom_{SL_n(F)}(pi, 1).
  std::uint64_t sl_multiplicity = 0;
  /// Largest multiplicity in a Gelfand-Graev character; at most 1 is expected.
  std::uint64_t max_gelfand_graev = 0;
  bool generic = false;
  bool whittaker_relative = false;
};

/// Everything shared by the per-row computations for one pair (n, q).
///
/// E = F_{q^2}, F = F_q.  Immutable once built.
class DistinctionContext {
 public:
  static std::shared_ptr<const DistinctionContext> build(int n, std::uint32_t q, const ContextOptions& options = {});

  int n() const { return group_->n(); }
  std::uint32_t q() const { return group_->tower().q(); }
  const EnumeratedGroup& group() const { return *group_; }
  std::shared_ptr<const EnumeratedGroup> group_ptr() const { return group_; }
  GroupView gl_e() const { return group_->view(groups::GroupKind::GlE); }
  GroupView sl_e() const { return group_->view(groups::GroupKind::SlE); }
  GroupView gl_f() const { return group_->view(groups::GroupKind::GlF); }
  GroupView sl_f() const { return group_->view(groups::GroupKind::SlF); }

  const CharTable& gl_table() const { return *gl_table_; }
  const CharTable& sl_table() const { return *sl_table_; }
  const chartab::RowActions& actions() const { return *actions_; }
  /// Class of GL_n(E) containing each class of SL_n(E).
  const std::vector<std::uint32_t>& fusion() const { return fusion_; }
  const std::vector<SlRow>& sl_rows() const { return sl_rows_; }

  /// Profile of GL_n(F) against alpha o det, alpha = chi_a of F^x.
  const chartab::SubgroupProfile& gl_f_profile(std::uint64_t a) const { return alpha_profiles_[a]; }
  /// Conjugation by an element generating GL_n(E)^+ modulo SL_n(E), as a
  /// permutation of SL rows.
  const std::vector<std::uint32_t>& glplus_row_action() const { return glplus_action_; }
  const groups::GlPlusCosets& glplus_cosets() const { return cosets_; }
  /// Profile of N(E) against one nondegenerate psi, over the classes of GL_n(E).
  const chartab::SubgroupProfile& gl_whittaker_profile() const { return gl_whittaker_; }

 private:
  DistinctionContext() = default;

  std::shared_ptr<const EnumeratedGroup> group_;
  std::unique_ptr<CharTable> gl_table_, sl_table_;
  std::unique_ptr<chartab::RowActions> actions_;
  std::vector<std::uint32_t> fusion_;
  std::vector<SlRow> sl_rows_;
  std::vector<chartab::SubgroupProfile> alpha_profiles_;
  std::vector<std::uint32_t> glplus_action_;
  groups::GlPlusCosets cosets_;
  chartab::SubgroupProfile gl_whittaker_;
};

struct Constituent {
  std::uint32_t sl_row = 0;
  /// Multiplicity of pi in the restriction of pi~.
  std::uint64_t multiplicity = 0;
  /// Index into DistinctionData::glplus_groups.
  std::uint32_t glplus_group = 0;
};

/// The sets attached to one irreducible pi~ of GL_n(E).  Characters of F^x
/// and E^x are stored as exponents: alpha = chi_a on F^x (a mod q-1),
/// chi = chi_a on E^x (a mod q^2-1).
struct DistinctionData {
  PiTilde pi_tilde;
  std::uint64_t gow_multiplicity = 0;
  std::vector<std::uint64_t> X, Xprime, Z, Y, nm_kernel;
  /// Only for conjugate self-dual pi~.
  std::optional<std::uint64_t> q_value;
  bool generic = false;

  std::vector<Constituent> constituents;
  std::vector<std::vector<std::uint32_t>> glplus_groups;

  /// Z/Y maps X to itself and every orbit has |Z/Y| points.
  bool free_action = false;
  /// alpha o Nm in Z for every alpha in X.  Expected when pi~ is distinguished.
  bool norm_in_z = false;
  bool multiplicity_free = false;

  bool distinguished() const { return gow_multiplicity > 0; }
  std::uint64_t z_over_y() const { return Z.size() / Y.size(); }
};

class NotConjugateSelfDual : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// pi~^sigma = pi~^vee.
bool gow_distinguished(const DistinctionContext& ctx, std::uint32_t row);
/// dim Hom_{GL_n(F)}(pi~, 1).
std::uint64_t gow_multiplicity(const DistinctionContext& ctx, std::uint32_t row);

/// X, X', Z, Y and the checks tying them together.
DistinctionData compute_sets(const DistinctionContext& ctx, std::uint32_t row);
/// {alpha : alpha^2 = 1, alpha o Nm in Z}.
std::vector<std::uint64_t> norm_map_kernel(const DistinctionContext& ctx, const DistinctionData& data);

struct Restriction {
  std::vector<Constituent> constituents;
  /// Constituents grouped into orbits of GL_n(E)^+, each orbit sorted.
  std::vector<std::vector<std::uint32_t>> glplus_groups;
};
Restriction restrict_to_sl(const DistinctionContext& ctx, std::uint32_t row);

std::uint64_t sl_multiplicity(const DistinctionContext& ctx, std::uint32_t sl_row);

/// Number of strong classes among the conjugate self-dual twists of pi~.
/// Throws NotConjugateSelfDual.
std::uint64_t q_of(const DistinctionContext& ctx, std::uint32_t row);

bool genericity(const DistinctionContext& ctx, std::uint32_t sl_row);
bool whittaker_relative(const DistinctionContext& ctx, std::uint32_t sl_row);
/// pi~ occurs in the Gelfand-Graev character of GL_n(E).
bool generic_gl(const DistinctionContext& ctx, std::uint32_t row);

/// compute_sets + restrict_to_sl + q_of for one row.
DistinctionData analyze(const DistinctionContext& ctx, std::uint32_t row);
/// Every row of the GL_n(E) table, in table order.  Uses worker threads;
/// the result does not depend on their number.
std::vector<DistinctionData> analyze_all(const DistinctionContext& ctx, unsigned threads = 0);

enum class Proposition : std::uint8_t { Gow, SumRule, Qpi, Qpii, Corollary, Qpj, ThmQpi, Whittaker, Structure };
inline constexpr Proposition kAllPropositions[] = {
    Proposition::Gow, Proposition::SumRule, Proposition::Qpi,      Proposition::Qpii,     Proposition::Corollary,
    Proposition::Qpj, Proposition::ThmQpi,  Proposition::Whittaker, Proposition::Structure};

/// "gow", "sumrule", "qpi", "qpii", "corollary", "qpj", "thmqpi", "whittaker",
/// "structure".
std::string to_string(Proposition p);
/// Throws std::invalid_argument.
Proposition parse_proposition(const std::string& name);

enum class Status : std::uint8_t { Pass, Fail, Warn, NotApplicable };
std::string to_string(Status s);

struct Counterexample {
  std::int64_t gl_row = -1;
  std::int64_t sl_row = -1;
  std::string quantity;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
};

struct Verdict {
  Proposition id = Proposition::Gow;
  std::string statement;
  /// Asserted verdicts decide the exit code; the others are evidence.
  bool asserted = true;
  std::uint64_t instances = 0;
  Status status = Status::Pass;
  std::vector<Counterexample> counterexamples;
  /// Cases outside the asserted scope where the identity fails.
  std::vector<Counterexample> reported;
};

struct VerificationReport {
  int n = 0;
  std::uint32_t q = 0;
  std::vector<Verdict> verdicts;

  /// No asserted verdict failed.
  bool ok() const;
};

Verdict verify_gow(const DistinctionContext& ctx, const std::vector<DistinctionData>& data);
VerificationReport verify_propositions(const DistinctionContext& ctx, const std::vector<DistinctionData>& data,
                                       const std::vector<Proposition>& which = {std::begin(kAllPropositions),
                                                                                std::end(kAllPropositions)});

/// Rows of GL_n(E) grouped by |X|, |Z|, |Y| and the sorted SL_n(F)
/// multiplicities of their constituents.
struct ProfileGroup {
  std::uint64_t x = 0, z = 0, y = 0;
  std::vector<std::uint64_t> multiplicities;
  std::vector<std::uint32_t> rows;
};
std::vector<ProfileGroup> multiplicity_profiles(const DistinctionContext& ctx, const std::vector<DistinctionData>& data);

}  // namespace sldist::distinction
