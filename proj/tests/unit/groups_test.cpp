#include <gtest/gtest.h>

#include <memory>
#include <numeric>
#include <set>

#include "sldist/groups/conjugacy.hpp"
#include "sldist/groups/enumerated_group.hpp"

using namespace sldist;
using namespace sldist::groups;

namespace {

std::shared_ptr<const EnumeratedGroup> make(std::uint32_t p, std::uint32_t k, int n) {
  return EnumeratedGroup::enumerate(std::make_shared<const ff::FieldTower>(ff::FieldTower::build(p, k)), n);
}

// Shared fixtures; enumeration is the expensive part.
const EnumeratedGroup& gl2_4() {
  static auto g = make(2, 1, 2);
  return *g;
}
const EnumeratedGroup& gl2_9() {
  static auto g = make(3, 1, 2);
  return *g;
}

}  // namespace

TEST(Enumerate, OrdersQ2) {
  const auto& g = gl2_4();
  EXPECT_EQ(g.size(), 180u);
  EXPECT_EQ(g.view(GroupKind::SlE).size(), 60u);
  EXPECT_EQ(g.view(GroupKind::GlF).size(), 6u);
  EXPECT_EQ(g.view(GroupKind::SlF).size(), 6u);
  EXPECT_EQ(g.view(GroupKind::NE).size(), 4u);
  EXPECT_EQ(g.view(GroupKind::Center).size(), 3u);
}

TEST(Enumerate, OrdersQ3) {
  const auto& g = gl2_9();
  EXPECT_EQ(g.size(), 5760u);
  EXPECT_EQ(g.view(GroupKind::SlE).size(), 720u);
  EXPECT_EQ(g.view(GroupKind::GlF).size(), 48u);
  EXPECT_EQ(g.view(GroupKind::SlF).size(), 24u);
}

TEST(Enumerate, OrdersN3) {
  const auto g = make(2, 1, 3);
  EXPECT_EQ(g->size(), 181440u);
  EXPECT_EQ(g->view(GroupKind::NE).size(), 64u);
  EXPECT_EQ(g->view(GroupKind::SlE).size(), 60480u);
  EXPECT_EQ(g->view(GroupKind::GlF).size(), 168u);
}

TEST(Enumerate, GuardNamesOrder) {
  try {
    (void)EnumeratedGroup::enumerate(std::make_shared<const ff::FieldTower>(ff::FieldTower::build(3, 1)), 3);
    FAIL() << "expected a size guard error";
  } catch (const SizeGuardError& e) {
    EXPECT_NE(std::string(e.what()).find(std::to_string(gl_order(9, 3))), std::string::npos) << e.what();
  }
}

TEST(Enumerate, GlOrderFormula) {
  EXPECT_EQ(gl_order(4, 2), 180u);
  EXPECT_EQ(gl_order(9, 2), 5760u);
  EXPECT_EQ(gl_order(2, 3), 168u);
}

TEST(Enumerate, MembershipConsistency) {
  const auto& g = gl2_9();
  const auto sl_e = g.view(GroupKind::SlE), gl_f = g.view(GroupKind::GlF), sl_f = g.view(GroupKind::SlF);
  for (std::uint32_t x = 0; x < g.size(); ++x) EXPECT_EQ(sl_f.contains(x), sl_e.contains(x) && gl_f.contains(x));
}

TEST(Enumerate, SubgroupsClosed) {
  const auto& g = gl2_9();
  for (auto kind : {GroupKind::SlE, GroupKind::GlPlus, GroupKind::GlF, GroupKind::SlF, GroupKind::NE}) {
    const auto v = g.view(kind);
    for (auto a : v.members()) {
      EXPECT_TRUE(v.contains(g.inverse(a)));
      for (auto b : v.members()) {
        if (!v.contains(g.multiply(a, b))) {
          ADD_FAILURE() << to_string(kind) << " not closed";
          return;
        }
      }
    }
  }
}

TEST(Enumerate, MultiplyMatchesMatrixProduct) {
  const auto& g = gl2_9();
  for (std::uint32_t a = 0; a < g.size(); a += 37) {
    for (std::uint32_t b = 0; b < g.size(); b += 53) {
      EXPECT_EQ(g.element(g.multiply(a, b)), multiply(g.tower(), g.element(a), g.element(b)));
    }
    EXPECT_EQ(g.multiply(a, g.inverse(a)), g.identity());
  }
}

TEST(Enumerate, IndexOrderIsCodeOrder) {
  const auto& g = gl2_4();
  for (std::uint32_t i = 1; i < g.size(); ++i) EXPECT_LT(g.code(i - 1), g.code(i));
}

TEST(Enumerate, GlPlusIndex) {
  // q=3, n=2: |E^x / F^x (E^x)^2| = 2 by a direct count in Z/8.
  {
    std::set<int> image;
    for (int f = 0; f < 8; f += 4)
      for (int s = 0; s < 8; ++s) image.insert((f + 2 * s) % 8);
    const auto cos = glplus_cosets(gl2_9());
    EXPECT_EQ(cos.index_from_groups, 8u / image.size());
    EXPECT_EQ(cos.index_from_cyclic, 2u);
    EXPECT_EQ(cos.representatives.size(), 2u);
  }
  {
    const auto cos = glplus_cosets(gl2_4());
    EXPECT_EQ(cos.representatives.size(), 1u);
    EXPECT_EQ(gl2_4().view(GroupKind::GlPlus).size(), 180u);
  }
  {
    // n=3, q=2: F^x and (E^x)^3 are both trivial in E^x = Z/3.
    const auto g = make(2, 1, 3);
    EXPECT_EQ(glplus_cosets(*g).representatives.size(), 3u);
    // gcd(n, q^2-1) = 1: determinant onto E^x already covers everything.
    const auto g1 = make(5, 1, 1);
    EXPECT_EQ(glplus_cosets(*g1).representatives.size(), 1u);
  }
}

TEST(Enumerate, GlPlusFactorizationWitness) {
  const auto& g = gl2_9();
  const auto plus = g.view(GroupKind::GlPlus);
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    const auto f = glplus_factorization(g, x);
    EXPECT_EQ(f.has_value(), plus.contains(x));
    if (f) {
      EXPECT_TRUE(g.view(GroupKind::Center).contains(f->scalar));
      EXPECT_TRUE(g.view(GroupKind::GlF).contains(f->rational));
      EXPECT_TRUE(g.view(GroupKind::SlE).contains(f->special));
      EXPECT_EQ(g.multiply(g.multiply(f->scalar, f->rational), f->special), x);
    }
  }
}

TEST(Enumerate, UnipotentSuperdiagonal) {
  const auto g = make(2, 1, 3);
  const auto u = unipotent_data(*g);
  ASSERT_EQ(u.elements.size(), 64u);
  const auto& t = g->tower();
  std::size_t kernel = 0;
  std::set<std::vector<std::uint32_t>> image;
  for (std::size_t i = 0; i < u.elements.size(); ++i) {
    std::vector<std::uint32_t> codes;
    bool zero = true;
    for (auto x : u.superdiagonal[i]) {
      codes.push_back(x.code);
      zero = zero && x.code == 0;
    }
    image.insert(codes);
    kernel += zero;
    for (std::size_t j = 0; j < u.elements.size(); ++j) {
      const auto prod = g->multiply(u.elements[i], u.elements[j]);
      const auto m = g->element(prod);
      for (int r = 0; r + 1 < 3; ++r)
        EXPECT_EQ(m(r, r + 1), t.add(u.superdiagonal[i][r], u.superdiagonal[j][r]));
    }
  }
  EXPECT_EQ(image.size(), 16u);
  EXPECT_EQ(kernel, 64u / 16u);
}

TEST(Conjugacy, ClassCounts) {
  const auto c4 = conjugacy_classes(gl2_4().view(GroupKind::GlE));
  EXPECT_EQ(c4.size(), 4u * 4u - 1u);
  const auto c9 = conjugacy_classes(gl2_9().view(GroupKind::GlE));
  EXPECT_EQ(c9.size(), 9u * 9u - 1u);
  const auto sl = conjugacy_classes(gl2_4().view(GroupKind::SlE));
  EXPECT_EQ(sl.size(), 5u);
  std::multiset<std::uint64_t> sizes(sl.class_size.begin(), sl.class_size.end());
  EXPECT_EQ(sizes, (std::multiset<std::uint64_t>{1, 12, 12, 15, 20}));
}

TEST(Conjugacy, ClassCountN3) {
  const auto g = make(2, 1, 3);
  const auto c = conjugacy_classes(g->view(GroupKind::GlE));
  EXPECT_EQ(c.size(), 4u * 4u * 4u - 4u);
}

TEST(Conjugacy, ClassEquationAndOrdering) {
  const auto& g = gl2_9();
  for (auto kind : {GroupKind::GlE, GroupKind::SlE, GroupKind::GlF, GroupKind::SlF}) {
    const auto v = g.view(kind);
    const auto c = conjugacy_classes(v);
    EXPECT_EQ(std::accumulate(c.class_size.begin(), c.class_size.end(), std::uint64_t{0}), v.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_EQ(v.size() % c.class_size[i], 0u);
      if (i > 0) {
        EXPECT_TRUE(c.class_size[i - 1] < c.class_size[i] ||
                    (c.class_size[i - 1] == c.class_size[i] && c.representative[i - 1] < c.representative[i]));
      }
    }
  }
}

TEST(Conjugacy, CentralizerTimesClassSize) {
  const auto v = gl2_9().view(GroupKind::GlE);
  const auto c = conjugacy_classes(v);
  for (std::size_t i = 0; i < c.size(); i += 7) EXPECT_EQ(centralizer_order(v, c.representative[i]) * c.class_size[i], v.size());
}

TEST(Conjugacy, PermutationsAreCommutingInvolutions) {
  const auto v = gl2_9().view(GroupKind::GlE);
  const auto c = conjugacy_classes(v);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(c.galois_class[c.galois_class[i]], i);
    EXPECT_EQ(c.inverse_class[c.inverse_class[i]], i);
    EXPECT_EQ(c.galois_class[c.inverse_class[i]], c.inverse_class[c.galois_class[i]]);
    if (c.element_order[i] <= 2) EXPECT_EQ(c.inverse_class[i], i);
  }
  EXPECT_EQ(c.galois_class[c.identity_class], c.identity_class);
  EXPECT_EQ(c.inverse_class[c.identity_class], c.identity_class);
}

TEST(Conjugacy, GaloisFixedClassesMeetRationalGroup) {
  const auto& g = gl2_4();
  const auto c = conjugacy_classes(g.view(GroupKind::GlE));
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < c.size(); ++i) fixed += (c.galois_class[i] == i);
  std::set<std::uint32_t> meeting;
  for (auto x : g.view(GroupKind::GlF).members()) meeting.insert(c.class_index(x));
  EXPECT_EQ(fixed, meeting.size());
  EXPECT_EQ(fixed, 3u);
}

TEST(Conjugacy, Deterministic) {
  const auto v = gl2_9().view(GroupKind::SlE);
  const auto a = conjugacy_classes(v, 7);
  const auto b = conjugacy_classes(v, 7);
  const auto other_seed = conjugacy_classes(v, 99);
  EXPECT_EQ(a.representative, b.representative);
  EXPECT_EQ(a.representative, other_seed.representative);
  EXPECT_EQ(a.class_of, other_seed.class_of);
}
