#include <gtest/gtest.h>

#include "sldist/chartab/character_ops.hpp"

using namespace sldist;
using namespace sldist::chartab;
using groups::EnumeratedGroup;
using groups::GroupKind;

namespace {

struct Built {
  std::shared_ptr<const EnumeratedGroup> group;
  std::shared_ptr<const groups::ConjugacyData> classes;
  std::shared_ptr<const CharTable> table;
  GroupKind kind;
  groups::GroupView view() const { return group->view(kind); }
};

Built build(std::uint32_t p, std::uint32_t k, int n, GroupKind kind) {
  Built b;
  b.kind = kind;
  b.group = EnumeratedGroup::enumerate(std::make_shared<const ff::FieldTower>(ff::FieldTower::build(p, k)), n);
  b.classes = std::make_shared<const groups::ConjugacyData>(groups::conjugacy_classes(b.view()));
  b.table = std::make_shared<const CharTable>(dixon_schneider(b.view(), b.classes));
  return b;
}

const Built& sl2_4() {
  static const Built b = build(2, 1, 2, GroupKind::SlE);
  return b;
}
const Built& gl2_4() {
  static const Built b = build(2, 1, 2, GroupKind::GlE);
  return b;
}
const Built& gl2_9() {
  static const Built b = build(3, 1, 2, GroupKind::GlE);
  return b;
}

}  // namespace

TEST(InnerProduct, RowsAreOrthonormal) {
  const auto& t = *gl2_4().table;
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(inner_product(t, t.row(i), t.row(i)), Rational::make(1, 1));
    if (i > 0) {
      EXPECT_EQ(inner_product(t, t.row(i), t.row(0)), Rational::make(0, 1));
    }
  }
}

TEST(InnerProduct, RegularCharacter) {
  const auto& t = *gl2_4().table;
  const auto& cls = t.classes();
  std::vector<RootSum> reg(cls.size());
  reg[cls.identity_class] = make_root_sum({{0, cls.group_order}}, t.exponent());
  for (std::size_t i = 0; i < t.size(); ++i)
    EXPECT_EQ(inner_product(t, reg, t.row(i)), Rational::make(static_cast<std::int64_t>(t.degree(i)), 1));
}

TEST(InnerProduct, PermutationCharacterOnTenCosets) {
  // SL_2(F_4) = A5 acting on the cosets of SL_2(F_2) = S3: fixed points of g are
  // #{x : x^{-1} g x in H} / |H|, counted directly.
  const auto& b = sl2_4();
  const auto& t = *b.table;
  const auto& cls = t.classes();
  const auto& g = *b.group;
  const auto h = g.view(GroupKind::SlF);
  ASSERT_EQ(b.view().size() / h.size(), 10u);
  std::vector<RootSum> perm(cls.size());
  for (std::size_t k = 0; k < cls.size(); ++k) {
    std::uint64_t hits = 0;
    for (auto x : b.view().members())
      if (h.contains(g.conjugate(g.inverse(x), cls.representative[k]))) ++hits;
    perm[k] = make_root_sum({{0, hits / h.size()}}, t.exponent());
  }
  std::vector<std::int64_t> mults;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto r = inner_product(t, perm, t.row(i));
    ASSERT_TRUE(r.is_integer());
    mults.push_back(r.num);
  }
  EXPECT_EQ(t.degrees(), (std::vector<std::uint64_t>{1, 3, 3, 4, 5}));
  EXPECT_EQ(mults, (std::vector<std::int64_t>{1, 0, 0, 1, 1}));
  EXPECT_EQ(inner_product(t, perm, t.row(4)), Rational::make(1, 1));

  // The same numbers through the subgroup machinery, and the sum rule.
  const auto profile = subgroup_profile(h, cls, TrivialCharacter{});
  std::uint64_t weighted = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(restriction_multiplicity(t, i, profile), static_cast<std::uint64_t>(mults[i]));
    weighted += restriction_multiplicity(t, i, profile) * t.degree(i);
  }
  EXPECT_EQ(weighted, 10u);
}

TEST(Restriction, DirectSumOracle) {
  // (1/|H|) sum_h chi(h) evaluated in Q(zeta_e) element by element.
  const auto& b = gl2_9();
  const auto& t = *b.table;
  const auto h = b.group->view(GroupKind::GlF);
  const auto e = t.exponent();
  for (std::uint64_t a : {0u, 1u}) {
    const DetCharacter lambda{ff::char_of_e(b.group->tower(), a * 4)};
    const auto profile = subgroup_profile(h, t.classes(), lambda);
    for (std::size_t i = 0; i < t.size(); i += 5) {
      Cyclotomic<> s(e);
      for (auto x : h.members()) {
        const auto le = linear_exponent(*b.group, lambda, x, e);
        s = s + to_cyclotomic(t.value(i, t.classes().class_index(x)), e) * Cyclotomic<>::root(e, e - le);
      }
      ASSERT_TRUE(s.is_rational());
      const auto r = s.rational_value();
      EXPECT_EQ(static_cast<std::uint64_t>(r.num), restriction_multiplicity(t, i, profile) * h.size());
    }
  }
}

TEST(Restriction, TrivialAndWholeGroup) {
  const auto& b = gl2_9();
  const auto& t = *b.table;
  const auto whole = subgroup_profile(b.view(), t.classes(), TrivialCharacter{});
  EXPECT_EQ(restriction_multiplicity(t, 0, whole), 1u);
  for (std::size_t i = 1; i < t.size(); ++i) EXPECT_EQ(restriction_multiplicity(t, i, whole), 0u);
}

TEST(Restriction, RejectsNonHomomorphism) {
  // A Whittaker-type rule applied to GL_2(F) is not a character there.
  const auto& b = gl2_9();
  const auto addchars = ff::addchars_of_e(b.group->tower());
  const WhittakerCharacter psi{{addchars[1]}};
  EXPECT_THROW(subgroup_profile(b.group->view(GroupKind::GlF), b.table->classes(), psi), std::invalid_argument);
}

TEST(RowActions, Involutions) {
  for (const Built* b : {&gl2_4(), &gl2_9()}) {
    const auto& t = *b->table;
    const RowActions act(b->view(), t);
    const auto chars = ff::chars_of_e(b->group->tower());
    EXPECT_EQ(act.dual(0), 0u);
    EXPECT_EQ(act.sigma(0), 0u);
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      EXPECT_EQ(act.sigma(act.sigma(i)), i);
      EXPECT_EQ(act.dual(act.dual(i)), i);
      EXPECT_EQ(act.twist(i, 0), i);
      for (const auto& chi : chars) {
        const auto tw = act.twist(i, chi);
        EXPECT_EQ(t.degree(tw), t.degree(i));
        EXPECT_EQ(act.dual(tw), act.twist(act.dual(i), chi.inverse()));
      }
    }
    // Twisting directly agrees with powers of the generator twist.
    for (const auto& chi : chars) EXPECT_EQ(twist_permutation(b->view(), t, chi)[3], act.twist(3, chi));
  }
}

TEST(RowActions, Gl1F9Exponents) {
  const auto b = build(3, 1, 1, GroupKind::GlE);
  const auto& t = *b.table;
  const RowActions act(b.view(), t);
  const auto& tower = b.group->tower();
  // Row of chi_a: value zeta_8^a at the generator.
  const auto gen_cls = t.classes().class_index(b.group->index_of(groups::Mat(1, {tower.generator_e()})));
  auto exponent_of = [&](std::uint32_t row) { return t.value(row, gen_cls).terms.at(0).first * 8 / t.exponent(); };
  std::uint32_t chi = 0;
  for (std::uint32_t i = 0; i < t.size(); ++i)
    if (exponent_of(i) == 1) chi = i;
  EXPECT_EQ(exponent_of(act.sigma(chi)), 3u);
  EXPECT_EQ(exponent_of(act.dual(chi)), 7u);
  EXPECT_FALSE(act.conjugate_self_dual(chi));
  const auto pt = make_pi_tilde(t, act, chi);
  EXPECT_EQ(pt.twists.size(), 8u);
  EXPECT_EQ(exponent_of(pt.twists[2]), 3u);
}

TEST(Whittaker, GelfandGraev) {
  const auto& b = gl2_4();
  const auto& t = *b.table;
  const auto addchars = ff::addchars_of_e(b.group->tower());
  const WhittakerCharacter psi{{addchars[1]}};
  EXPECT_EQ(whittaker_multiplicity(b.view(), t, 0, psi), 0u);
  std::uint64_t weighted = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto m = whittaker_multiplicity(b.view(), t, i, psi);
    EXPECT_LE(m, 1u);
    weighted += m * t.degree(i);
    if (t.degree(i) == 4) EXPECT_EQ(m, 1u) << "Steinberg-type row " << i;
  }
  EXPECT_EQ(weighted, 180u / 4u);
  EXPECT_THROW(whittaker_multiplicity(b.view(), t, 0, WhittakerCharacter{{addchars[0]}}), std::invalid_argument);
}

TEST(Whittaker, DirectNSum) {
  const auto& b = gl2_4();
  const auto& t = *b.table;
  const auto e = t.exponent();
  const auto addchars = ff::addchars_of_e(b.group->tower());
  const WhittakerCharacter psi{{addchars[2]}};
  const auto n = b.group->view(GroupKind::NE);
  for (std::size_t i = 0; i < t.size(); ++i) {
    Cyclotomic<> s(e);
    for (auto u : n.members()) {
      const auto le = linear_exponent(*b.group, psi, u, e);
      s = s + to_cyclotomic(t.value(i, t.classes().class_index(u)), e) * Cyclotomic<>::root(e, e - le);
    }
    ASSERT_TRUE(s.is_rational());
    EXPECT_EQ(static_cast<std::uint64_t>(s.rational_value().num), whittaker_multiplicity(b.view(), t, i, psi) * n.size());
  }
}

TEST(Fusion, SlConstituentsOfGl) {
  const auto& gl = gl2_4();
  const auto& sl = sl2_4();
  // Both tables come from distinct enumerations of the same GL_2(F_4); rebuild SL inside gl's group.
  const auto sl_view = gl.group->view(GroupKind::SlE);
  auto sl_cls = std::make_shared<const groups::ConjugacyData>(groups::conjugacy_classes(sl_view));
  const auto sl_table = dixon_schneider(sl_view, sl_cls);
  EXPECT_EQ(sl_table.degrees(), sl.table->degrees());
  const auto fusion = class_fusion(*sl_cls, gl.table->classes());
  for (std::size_t i = 0; i < gl.table->size(); ++i) {
    std::uint64_t dim = 0;
    for (std::size_t j = 0; j < sl_table.size(); ++j) {
      const auto m = restricted_inner_product(*gl.table, i, sl_table, j, fusion);
      EXPECT_LE(m, 1u);
      dim += m * sl_table.degree(j);
    }
    EXPECT_EQ(dim, gl.table->degree(i));
  }
}
