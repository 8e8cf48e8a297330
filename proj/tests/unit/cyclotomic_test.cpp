#include <gtest/gtest.h>

#include "sldist/chartab/cyclotomic.hpp"
#include "sldist/chartab/root_sum.hpp"

using namespace sldist::chartab;

TEST(Cyclotomic, PolynomialsMatchKnownForms) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient -2.
  const auto p105 = cyclotomic_polynomial(105);
  EXPECT_EQ(p105.size(), 49u);
  EXPECT_EQ(*std::min_element(p105.begin(), p105.end()), -2);
}

TEST(Cyclotomic, RamanujanSumsAgreeWithDirectTraces) {
  for (std::uint64_t n : {1u, 4u, 5u, 12u, 15u, 24u}) {
    for (std::uint64_t a = 0; a < n; ++a) {
      // Trace of zeta^a = sum over the conjugates zeta^{ak}, computed in Q(zeta_n).
      Cyclotomic<> sum(n);
      for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) sum = sum + Cyclotomic<>::root(n, a * k);
      ASSERT_TRUE(sum.is_rational()) << n << " " << a;
      EXPECT_EQ(sum.rational_value().num, ramanujan_sum(n, a)) << n << " " << a;
    }
  }
}

TEST(Cyclotomic, RootsOfUnityArithmetic) {
  const std::uint64_t n = 12;
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      EXPECT_EQ(Cyclotomic<>::root(n, a) * Cyclotomic<>::root(n, b), Cyclotomic<>::root(n, a + b));
  // 1 + zeta_3 + zeta_3^2 = 0.
  const auto s = Cyclotomic<>::integer(3, 1) + Cyclotomic<>::root(3, 1) + Cyclotomic<>::root(3, 2);
  EXPECT_TRUE(s.is_zero());
}

TEST(Cyclotomic, GaloisIsRingAutomorphism) {
  const std::uint64_t n = 15;
  const auto x = Cyclotomic<>::root(n, 1, 3) + Cyclotomic<>::root(n, 7, -2) + Cyclotomic<>::integer(n, 5);
  const auto y = Cyclotomic<>::root(n, 4) + Cyclotomic<>::root(n, 11, 6);
  for (std::uint64_t j : {1u, 2u, 4u, 7u, 14u}) {
    EXPECT_EQ((x * y).galois(j), x.galois(j) * y.galois(j));
    EXPECT_EQ((x + y).galois(j), x.galois(j) + y.galois(j));
  }
  EXPECT_EQ(x.conj().conj(), x);
  EXPECT_THROW(x.galois(3), std::invalid_argument);
}

TEST(Cyclotomic, DenominatorsNormalise) {
  const auto half = Cyclotomic<>::integer(5, 1).divided_by(2);
  EXPECT_EQ(half + half, Cyclotomic<>::integer(5, 1));
  EXPECT_EQ(half.rational_value(), Rational::make(1, 2));
}

TEST(CyclicAccumulator, TraceRouteMatchesReduction) {
  const std::uint64_t n = 24;
  const auto gens = unit_group_generators(n);
  CyclicAccumulator acc(n);
  // Sum over all units plus a Galois stable rest: rational.
  for (std::uint64_t a = 0; a < n; ++a)
    if (std::gcd(a, n) == 1) acc.add(a, 3);
  acc.add(0, 7);
  acc.add(12, 2);
  ASSERT_TRUE(acc.invariant_under(gens));
  const auto direct = acc.value();
  ASSERT_TRUE(direct.is_rational());
  EXPECT_EQ(acc.rational_value(gens), direct.rational_value());
}

TEST(CyclicAccumulator, NonInvariantButRational) {
  // zeta_4 + zeta_4^3 = 0 is rational though the accumulator below is not invariant under all units.
  CyclicAccumulator acc(8);
  acc.add(2, 1);
  acc.add(6, 1);
  acc.add(0, 4);
  EXPECT_EQ(acc.rational_value({3}).num, 4);
  CyclicAccumulator bad(8);
  bad.add(1, 1);
  EXPECT_THROW(bad.rational_value(unit_group_generators(8)), std::domain_error);
}

TEST(CyclicAccumulator, UnitGenerators) {
  for (std::uint64_t n : {3u, 8u, 24u, 3120u, 1260u}) {
    const auto gens = unit_group_generators(n);
    std::vector<bool> seen(n, false);
    std::vector<std::uint64_t> span{1};
    seen[1] = true;
    for (std::size_t i = 0; i < span.size(); ++i)
      for (auto g : gens)
        if (!seen[span[i] * g % n]) {
          seen[span[i] * g % n] = true;
          span.push_back(span[i] * g % n);
        }
    EXPECT_EQ(span.size(), euler_phi(n));
  }
}

TEST(RootSum, Operations) {
  const auto x = make_root_sum({{5, 1}, {1, 2}, {5, 1}}, 6);
  EXPECT_EQ(x.terms, (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 2}, {5, 2}}));
  EXPECT_EQ(x.degree(), 4u);
  EXPECT_EQ(scale_exponents(x, 5, 6), make_root_sum({{5, 2}, {1, 2}}, 6));
  EXPECT_EQ(shift_exponents(x, 1, 6), make_root_sum({{2, 2}, {0, 2}}, 6));
  // 2 zeta_6 + 2 zeta_6^5 = 2 (zeta_6 + zeta_6^{-1}) = 2.
  EXPECT_EQ(to_cyclotomic(x, 6), Cyclotomic<>::integer(6, 2));
}
