#include <gtest/gtest.h>

#include <map>
#include <set>

#include "sldist/chartab/char_table.hpp"

using namespace sldist;
using namespace sldist::chartab;
using groups::EnumeratedGroup;
using groups::GroupKind;

namespace {

struct Built {
  std::shared_ptr<const EnumeratedGroup> group;
  std::shared_ptr<const groups::ConjugacyData> classes;
  std::shared_ptr<const CharTable> table;
};

Built build(std::uint32_t p, std::uint32_t k, int n, GroupKind kind) {
  Built b;
  b.group = EnumeratedGroup::enumerate(std::make_shared<const ff::FieldTower>(ff::FieldTower::build(p, k)), n);
  const auto view = b.group->view(kind);
  b.classes = std::make_shared<const groups::ConjugacyData>(groups::conjugacy_classes(view));
  b.table = std::make_shared<const CharTable>(dixon_schneider(view, b.classes));
  return b;
}

const Built& a5() {
  static const Built b = build(2, 1, 2, GroupKind::SlE);
  return b;
}
const Built& gl2_4() {
  static const Built b = build(2, 1, 2, GroupKind::GlE);
  return b;
}

// Exact row orthogonality in Q(zeta_e), independent of the modular certificate.
void expect_exact_orthogonality(const Built& b) {
  const auto& t = *b.table;
  const auto& cls = t.classes();
  const auto e = t.exponent();
  std::vector<std::vector<Cyclotomic<>>> v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t k = 0; k < cls.size(); ++k) v[i].push_back(to_cyclotomic(t.value(i, k), e));
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      Cyclotomic<> s(e);
      for (std::size_t k = 0; k < cls.size(); ++k)
        s = s + Cyclotomic<>::integer(e, static_cast<std::int64_t>(cls.class_size[k])) * v[i][k] * v[j][k].conj();
      EXPECT_EQ(s, Cyclotomic<>::integer(e, i == j ? static_cast<std::int64_t>(cls.group_order) : 0)) << i << "," << j;
    }
  }
}

}  // namespace

TEST(CharTable, A5AgainstClassicalTable) {
  const auto& t = *a5().table;
  const auto& cls = t.classes();
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t.degrees(), (std::vector<std::uint64_t>{1, 3, 3, 4, 5}));
  const auto e = t.exponent();
  ASSERT_EQ(e, 30u);
  const auto z = [&](std::uint64_t k) { return Cyclotomic<>::root(e, k); };
  const auto one = Cyclotomic<>::integer(e, 1);
  // Golden ratio and its conjugate as sums of fifth roots of unity (zeta_5 = zeta_30^6).
  const auto phi = one + z(6) + z(24);
  const auto phi_bar = one + z(12) + z(18);
  // Classical table keyed by element order; the two 5-classes are told apart by the value of one 3-dim row.
  std::map<std::uint64_t, std::vector<std::int64_t>> rational = {
      {1, {1, 3, 3, 4, 5}}, {2, {1, -1, -1, 0, 1}}, {3, {1, 0, 0, 1, -1}}};
  for (std::size_t k = 0; k < cls.size(); ++k) {
    const auto ord = cls.element_order[k];
    if (ord == 5) {
      EXPECT_EQ(cls.class_size[k], 12u);
      const auto a = to_cyclotomic(t.value(1, k), e), b = to_cyclotomic(t.value(2, k), e);
      EXPECT_TRUE((a == phi && b == phi_bar) || (a == phi_bar && b == phi));
      EXPECT_EQ(to_cyclotomic(t.value(0, k), e), one);
      EXPECT_EQ(to_cyclotomic(t.value(3, k), e), -one);
      EXPECT_TRUE(to_cyclotomic(t.value(4, k), e).is_zero());
      continue;
    }
    ASSERT_TRUE(rational.count(ord)) << ord;
    for (std::size_t i = 0; i < 5; ++i)
      EXPECT_EQ(to_cyclotomic(t.value(i, k), e), Cyclotomic<>::integer(e, rational[ord][i])) << "row " << i << " order " << ord;
  }
}

TEST(CharTable, Gl2F4Integrity) {
  const auto& b = gl2_4();
  const auto& t = *b.table;
  EXPECT_EQ(t.size(), 15u);
  std::uint64_t s = 0;
  for (auto d : t.degrees()) s += d * d;
  EXPECT_EQ(s, 180u);
  const auto cert = verify_table(b.group->view(GroupKind::GlE), t);
  EXPECT_TRUE(cert.ok()) << cert.failure;
  expect_exact_orthogonality(b);
  expect_exact_orthogonality(a5());
}

TEST(CharTable, TrivialRowFirst) {
  const auto& t = *gl2_4().table;
  for (std::size_t k = 0; k < t.classes().size(); ++k) EXPECT_EQ(t.value(0, k), make_root_sum({{0, 1}}, t.exponent()));
}

TEST(CharTable, AbelianCaseAllLinear) {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const auto b = build(p, k, 1, GroupKind::GlE);
    EXPECT_EQ(b.table->size(), b.group->size());
    for (auto d : b.table->degrees()) EXPECT_EQ(d, 1u);
  }
}

TEST(CharTable, VerificationRejectsTamperedTable) {
  const auto& b = a5();
  std::vector<std::vector<RootSum>> rows;
  for (std::size_t i = 0; i < b.table->size(); ++i) rows.push_back(b.table->row(i));
  // Swap the values of the two order-5 classes in one 3-dim row only.
  const auto& cls = b.table->classes();
  std::vector<std::size_t> fives;
  for (std::size_t k = 0; k < cls.size(); ++k)
    if (cls.element_order[k] == 5) fives.push_back(k);
  ASSERT_EQ(fives.size(), 2u);
  std::swap(rows[1][fives[0]], rows[1][fives[1]]);
  const CharTable bad(b.classes, b.table->prime(), rows);
  const auto cert = verify_table(b.group->view(GroupKind::SlE), bad);
  EXPECT_FALSE(cert.ok());
}

TEST(CharTable, ClassLimit) {
  auto g = EnumeratedGroup::enumerate(std::make_shared<const ff::FieldTower>(ff::FieldTower::build(5, 1)), 1);
  const auto view = g->view(GroupKind::GlE);
  auto cls = std::make_shared<const groups::ConjugacyData>(groups::conjugacy_classes(view));
  EXPECT_THROW(dixon_schneider(view, cls, TableOptions{.max_classes = 10}), groups::SizeGuardError);
}
