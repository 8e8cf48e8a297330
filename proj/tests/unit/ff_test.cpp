#include <gtest/gtest.h>

#include <map>
#include <set>

#include "sldist/ff/characters.hpp"
#include "sldist/ff/field_tower.hpp"

using namespace sldist::ff;

namespace {

std::vector<FieldElem> all_elements(const FieldTower& t) {
  std::vector<FieldElem> out;
  for (std::uint32_t c = 0; c < t.order_e(); ++c) out.push_back(t.from_code(c));
  return out;
}

}  // namespace

TEST(FieldTower, Orders) {
  const auto t21 = FieldTower::build(2, 1);
  EXPECT_EQ(t21.q(), 2u);
  EXPECT_EQ(t21.order_e() - 1, 3u);
  const auto t31 = FieldTower::build(3, 1);
  EXPECT_EQ(t31.order_e() - 1, 8u);
  EXPECT_EQ(t31.q() - 1, 2u);
}

TEST(FieldTower, RejectsBadInput) {
  EXPECT_THROW(FieldTower::build(4, 1), FieldError);
  EXPECT_THROW(FieldTower::build(2, 0), FieldError);
  EXPECT_THROW(split_prime_power(6), FieldError);
  EXPECT_EQ(split_prime_power(9), std::make_pair(3u, 2u));
}

TEST(FieldTower, ModuliIrreducibleByRootSearch) {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {3u, 2u}}) {
    const auto t = FieldTower::build(p, k);
    const auto& m = t.ext_modulus();
    for (std::uint32_t c = 0; c < t.q(); ++c) {
      const FieldElem x{c};
      const FieldElem v = t.add(t.add(t.mul(x, x), t.mul(m[1], x)), m[0]);
      EXPECT_NE(v.code, 0u) << "root of the quadratic modulus in F_q";
    }
    // The base modulus has no roots in F_p when k > 1 (sufficient for k <= 3).
    if (k > 1) {
      const auto& b = t.base_modulus();
      for (std::uint32_t x = 0; x < p; ++x) {
        std::uint64_t v = 0, pw = 1;
        for (auto coeff : b) {
          v = (v + coeff * pw) % p;
          pw = pw * x % p;
        }
        EXPECT_NE(v, 0u);
      }
    }
  }
}

TEST(FieldTower, GeneratorOrders) {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const auto t = FieldTower::build(p, k);
    EXPECT_EQ(t.order(t.generator_e()), t.order_e() - 1);
    EXPECT_EQ(t.order(t.generator_f()), t.q() - 1);
    EXPECT_TRUE(t.in_base(t.generator_f()));
  }
}

TEST(FieldTower, FrobeniusFixesExactlyBaseField) {
  const auto t = FieldTower::build(2, 2);
  int fixed = 0;
  for (auto x : all_elements(t)) {
    EXPECT_EQ(t.frobenius(t.frobenius(x)), x);
    EXPECT_EQ(t.frobenius(x), t.pow(x, 4));
    if (t.frobenius(x) == x) {
      ++fixed;
      EXPECT_TRUE(t.in_base(x));
    }
  }
  EXPECT_EQ(fixed, 4);
}

TEST(FieldTower, FieldAxiomsExhaustive) {
  const auto t = FieldTower::build(3, 1);
  const auto els = all_elements(t);
  for (auto a : els) {
    EXPECT_EQ(t.add(a, t.neg(a)), t.zero());
    if (a.code != 0) EXPECT_EQ(t.mul(a, t.inv(a)), t.one());
    for (auto b : els) {
      EXPECT_EQ(t.frobenius(t.mul(a, b)), t.mul(t.frobenius(a), t.frobenius(b)));
      EXPECT_EQ(t.frobenius(t.add(a, b)), t.add(t.frobenius(a), t.frobenius(b)));
      EXPECT_EQ(t.norm(t.mul(a, b)), t.mul(t.norm(a), t.norm(b)));
      EXPECT_EQ(t.trace(t.add(a, b)), t.add(t.trace(a), t.trace(b)));
      EXPECT_TRUE(t.in_base(t.norm(a)));
      EXPECT_TRUE(t.in_base(t.trace(a)));
    }
  }
}

TEST(FieldTower, NormFibers) {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const auto t = FieldTower::build(p, k);
    std::map<std::uint32_t, int> fibers;
    for (auto x : all_elements(t))
      if (x.code != 0) ++fibers[t.norm(x).code];
    EXPECT_EQ(fibers.size(), t.q() - 1);
    for (auto [a, count] : fibers) EXPECT_EQ(count, static_cast<int>(t.q() + 1)) << a;
  }
  // F_4: the norm is identically 1 on units.
  const auto t = FieldTower::build(2, 1);
  for (std::uint32_t c = 1; c < 4; ++c) EXPECT_EQ(t.norm(FieldElem{c}), t.one());
}

TEST(FieldTower, LogExpRoundTrip) {
  const auto t = FieldTower::build(5, 1);
  for (std::uint32_t c = 1; c < t.order_e(); ++c) EXPECT_EQ(t.exp(t.log(FieldElem{c})).code, c);
  for (std::uint32_t c = 1; c < t.q(); ++c) EXPECT_EQ(t.pow(t.generator_f(), t.log_base(FieldElem{c})).code, c);
}

TEST(Characters, TrivialOnF) {
  const auto t2 = FieldTower::build(2, 1);
  EXPECT_EQ(chars_trivial_on_f(t2).size(), 3u);
  const auto t3 = FieldTower::build(3, 1);
  const auto triv = chars_trivial_on_f(t3);
  ASSERT_EQ(triv.size(), 4u);
  int even = 0;
  for (std::uint64_t a = 0; a < 8; ++a) even += (a % 2 == 0);
  EXPECT_EQ(even, 4);
  for (const auto& chi : triv) {
    EXPECT_TRUE(chi.pow(t3.q() + 1).is_trivial());
    EXPECT_TRUE(restrict_to_f(t3, chi).is_trivial());
  }
  EXPECT_TRUE(triv.front().is_trivial());
}

TEST(Characters, RestrictionMatchesValues) {
  const auto t = FieldTower::build(5, 1);
  for (const auto& chi : chars_of_e(t)) {
    const auto r = restrict_to_f(t, chi);
    for (std::uint32_t c = 1; c < t.q(); ++c) {
      // On F^x the value zeta_{Q-1}^{a log x} is a (q-1)-th root of unity since q+1 divides log x.
      const auto e = char_exponent_at(t, chi, FieldElem{c});
      ASSERT_EQ(e % (t.q() + 1), 0u);
      EXPECT_EQ(e / (t.q() + 1), char_exponent_at(t, r, FieldElem{c}));
    }
  }
}

TEST(Characters, NormCompositionAndGalois) {
  const auto t = FieldTower::build(3, 1);
  for (const auto& alpha : chars_of_f(t)) {
    const auto chi = compose_with_norm(t, alpha);
    for (std::uint32_t c = 1; c < t.order_e(); ++c) {
      const FieldElem x{c};
      const auto direct = char_exponent_at(t, alpha, t.norm(x)) * ((t.order_e() - 1) / (t.q() - 1));
      EXPECT_EQ(char_exponent_at(t, chi, x), direct % (t.order_e() - 1));
    }
  }
  // GL_1(F_9): chi of order 8 has sigma-conjugate chi^3 and dual chi^7.
  const auto chi = char_of_e(t, 1);
  EXPECT_EQ(chi.order(), 8u);
  EXPECT_EQ(galois_conjugate(t, chi), chi.pow(3));
  EXPECT_EQ(chi.inverse(), chi.pow(7));
  EXPECT_NE(galois_conjugate(t, chi), chi.inverse());
}

TEST(Characters, AdditiveTrivialOnF) {
  const auto t2 = FieldTower::build(2, 1);
  const auto a2 = addchars_trivial_on_f(t2);
  EXPECT_EQ(a2.size(), 2u);
  EXPECT_TRUE(a2.front().is_trivial());
  const auto t3 = FieldTower::build(3, 1);
  const auto a3 = addchars_trivial_on_f(t3);
  EXPECT_EQ(a3.size(), 3u);
  for (const auto& psi : a3) {
    for (std::uint32_t c = 0; c < t3.q(); ++c) EXPECT_EQ(addchar_exponent_at(t3, psi, FieldElem{c}), 0u);
  }
  // psi_b is a homomorphism and psi_0 is trivial.
  for (const auto& psi : addchars_of_e(t3)) {
    for (std::uint32_t x = 0; x < 9; ++x)
      for (std::uint32_t y = 0; y < 9; ++y)
        EXPECT_EQ(addchar_exponent_at(t3, psi, t3.add(FieldElem{x}, FieldElem{y})),
                  (addchar_exponent_at(t3, psi, FieldElem{x}) + addchar_exponent_at(t3, psi, FieldElem{y})) % 3);
  }
}
