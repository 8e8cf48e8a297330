#include "sldist/chartab/character_ops.hpp"

#include <map>
#include <stdexcept>

namespace sldist::chartab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Accumulates count * chi * zeta^{-shift} into acc.
void accumulate(CyclicAccumulator& acc, const RootSum& value, std::uint64_t shift, std::uint64_t scale,
                std::int64_t count, std::uint64_t e) {
  for (const auto& [a, m] : value.terms) acc.add((a * scale + e - shift % e) % e, count * static_cast<std::int64_t>(m));
}

std::uint64_t nonnegative_integer(const Rational& r, const char* what) {
  if (!r.is_integer() || r.num < 0) throw std::logic_error(std::string(what) + ": not a nonnegative integer");
  return static_cast<std::uint64_t>(r.num);
}

}  // namespace

bool WhittakerCharacter::nondegenerate() const {
  for (const auto& psi : components)
    if (psi.is_trivial()) return false;
  return true;
}

std::uint64_t linear_exponent(const groups::EnumeratedGroup& group, const LinearCharacter& lambda, std::uint32_t x,
                              std::uint64_t e) {
  const auto& t = group.tower();
  return std::visit(
      overloaded{
          [](const TrivialCharacter&) -> std::uint64_t { return 0; },
          [&](const DetCharacter& d) -> std::uint64_t {
            const std::uint64_t r = ff::char_exponent_at(t, d.chi, group.determinant(x));
            const std::uint64_t num = r * e;
            if (num % d.chi.modulus != 0) throw std::domain_error("linear_exponent: value outside mu_e");
            return num / d.chi.modulus % e;
          },
          [&](const WhittakerCharacter& w) -> std::uint64_t {
            const int n = group.n();
            if (static_cast<int>(w.components.size()) != n - 1)
              throw std::invalid_argument("linear_exponent: wrong number of Whittaker components");
            if (n < 2) return 0;
            if (e % t.p() != 0) throw std::domain_error("linear_exponent: p does not divide e");
            const auto entries = group.entries(x);
            std::uint64_t s = 0;
            for (int i = 0; i + 1 < n; ++i)
              s += ff::addchar_exponent_at(t, w.components[i], ff::FieldElem{entries[i * n + i + 1]});
            return (s % t.p()) * (e / t.p());
          },
      },
      lambda);
}

SubgroupProfile subgroup_profile(const GroupView& h, const ConjugacyData& g_classes, const LinearCharacter& lambda) {
  const auto& group = h.group();
  const std::uint64_t e = g_classes.exponent;
  SubgroupProfile out;
  out.exponent = e;
  out.order = h.size();
  std::vector<std::uint64_t> exps(group.size(), 0);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> counts;
  for (auto x : h.members()) {
    if (g_classes.class_of[x] < 0) throw std::invalid_argument("subgroup_profile: H is not contained in G");
    exps[x] = linear_exponent(group, lambda, x, e);
    ++counts[{g_classes.class_index(x), static_cast<std::uint32_t>(exps[x])}];
  }
  if (!std::holds_alternative<TrivialCharacter>(lambda)) {
    for (auto s : groups::generating_set(h, 0x5eed)) {
      for (auto x : h.members()) {
        if (exps[group.multiply(x, s)] != (exps[x] + exps[s]) % e)
          throw std::invalid_argument("subgroup_profile: lambda is not a homomorphism on H");
      }
    }
  }
  for (const auto& [key, c] : counts) out.entries.push_back({key.first, key.second, c});
  return out;
}

std::uint64_t restriction_multiplicity(const CharTable& table, std::size_t row, const SubgroupProfile& profile) {
  const std::uint64_t e = table.exponent();
  if (profile.exponent != e) throw std::invalid_argument("restriction_multiplicity: profile built for another table");
  CyclicAccumulator acc(e);
  for (const auto& entry : profile.entries)
    accumulate(acc, table.value(row, entry.cls), entry.lambda_exp, 1, static_cast<std::int64_t>(entry.count), e);
  const Rational total = acc.rational_value(unit_group_generators(e));
  return nonnegative_integer(Rational::make(total.num, total.den * static_cast<std::int64_t>(profile.order)),
                             "restriction_multiplicity");
}

Rational inner_product(const CharTable& table, const std::vector<RootSum>& a, const std::vector<RootSum>& b) {
  const auto& cls = table.classes();
  if (a.size() != cls.size() || b.size() != cls.size()) throw std::invalid_argument("inner_product: mismatched class data");
  const std::uint64_t e = table.exponent();
  CyclicAccumulator acc(e);
  for (std::size_t k = 0; k < cls.size(); ++k) {
    for (const auto& [y, my] : b[k].terms) {
      accumulate(acc, a[k], y, 1, static_cast<std::int64_t>(cls.class_size[k] * my), e);
    }
  }
  const Rational total = acc.rational_value(unit_group_generators(e));
  return Rational::make(total.num, total.den * static_cast<std::int64_t>(cls.group_order));
}

std::vector<std::uint32_t> class_fusion(const ConjugacyData& h_classes, const ConjugacyData& g_classes) {
  std::vector<std::uint32_t> out(h_classes.size());
  for (std::size_t k = 0; k < h_classes.size(); ++k) {
    const auto c = g_classes.class_of[h_classes.representative[k]];
    if (c < 0) throw std::invalid_argument("class_fusion: H is not contained in G");
    out[k] = static_cast<std::uint32_t>(c);
  }
  return out;
}

std::uint64_t restricted_inner_product(const CharTable& g_table, std::size_t g_row, const CharTable& h_table,
                                       std::size_t h_row, const std::vector<std::uint32_t>& fusion) {
  const std::uint64_t e = g_table.exponent();
  const std::uint64_t eh = h_table.exponent();
  if (e % eh != 0) throw std::invalid_argument("restricted_inner_product: exponent of H does not divide that of G");
  const std::uint64_t up = e / eh;
  const auto& hc = h_table.classes();
  CyclicAccumulator acc(e);
  for (std::size_t k = 0; k < hc.size(); ++k) {
    for (const auto& [y, my] : h_table.value(h_row, k).terms)
      accumulate(acc, g_table.value(g_row, fusion[k]), y * up, 1, static_cast<std::int64_t>(hc.class_size[k] * my), e);
  }
  const Rational total = acc.rational_value(unit_group_generators(e));
  return nonnegative_integer(Rational::make(total.num, total.den * static_cast<std::int64_t>(hc.group_order)),
                             "restricted_inner_product");
}

std::vector<std::uint32_t> row_permutation(const CharTable& table, const std::vector<std::uint32_t>& class_perm) {
  std::vector<std::uint32_t> out(table.size());
  std::vector<RootSum> image(class_perm.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t k = 0; k < class_perm.size(); ++k) image[k] = table.value(i, class_perm[k]);
    const auto j = table.find_row(image);
    if (!j) throw std::logic_error("row_permutation: image is not an irreducible character");
    out[i] = static_cast<std::uint32_t>(*j);
  }
  return out;
}

std::vector<std::uint32_t> twist_permutation(const GroupView& view, const CharTable& table, const ff::MultChar& chi) {
  const auto& cls = table.classes();
  const std::uint64_t e = table.exponent();
  const DetCharacter det{chi};
  std::vector<std::uint64_t> shift(cls.size());
  for (std::size_t k = 0; k < cls.size(); ++k) shift[k] = linear_exponent(view.group(), det, cls.representative[k], e);
  std::vector<std::uint32_t> out(table.size());
  std::vector<RootSum> image(cls.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t k = 0; k < cls.size(); ++k) image[k] = shift_exponents(table.value(i, k), shift[k], e);
    const auto j = table.find_row(image);
    if (!j) throw std::logic_error("twist_permutation: twisted row is not an irreducible character");
    out[i] = static_cast<std::uint32_t>(*j);
  }
  return out;
}

RowActions::RowActions(const GroupView& gl_view, const CharTable& table)
    : modulus_(gl_view.group().tower().order_e() - 1),
      sigma_(row_permutation(table, table.classes().galois_class)),
      dual_(row_permutation(table, table.classes().inverse_class)) {
  const auto tau = twist_permutation(gl_view, table, ff::char_of_e(gl_view.group().tower(), 1));
  cycle_of_.assign(table.size(), UINT32_MAX);
  position_.assign(table.size(), 0);
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    if (cycle_of_[i] != UINT32_MAX) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t j = i; cycle_of_[j] == UINT32_MAX; j = tau[j]) {
      cycle_of_[j] = static_cast<std::uint32_t>(cycles_.size());
      position_[j] = static_cast<std::uint32_t>(cycle.size());
      cycle.push_back(j);
    }
    if (modulus_ % cycle.size() != 0) throw std::logic_error("RowActions: twist orbit length does not divide q^2-1");
    cycles_.push_back(std::move(cycle));
  }
}

std::uint32_t RowActions::twist(std::uint32_t row, std::uint64_t exponent) const {
  const auto& cycle = cycles_[cycle_of_[row]];
  return cycle[(position_[row] + exponent % modulus_) % cycle.size()];
}

PiTilde make_pi_tilde(const CharTable& table, const RowActions& actions, std::uint32_t row) {
  PiTilde p;
  p.row = row;
  p.degree = table.degree(row);
  p.sigma = actions.sigma(row);
  p.dual = actions.dual(row);
  p.twists.resize(actions.twist_modulus());
  for (std::uint64_t a = 0; a < actions.twist_modulus(); ++a) p.twists[a] = actions.twist(row, a);
  return p;
}

std::uint64_t whittaker_multiplicity(const GroupView& view, const CharTable& table, std::size_t row,
                                     const WhittakerCharacter& psi) {
  if (!psi.nondegenerate()) throw std::invalid_argument("whittaker_multiplicity: degenerate character");
  const auto profile = subgroup_profile(view.group().view(groups::GroupKind::NE), table.classes(), psi);
  return restriction_multiplicity(table, row, profile);
}

}  // namespace sldist::chartab
