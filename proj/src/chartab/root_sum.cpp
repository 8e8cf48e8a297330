#include "sldist/chartab/root_sum.hpp"

#include <algorithm>

#include "sldist/chartab/modular.hpp"

namespace sldist::chartab {

RootSum make_root_sum(std::vector<std::pair<std::uint64_t, std::uint64_t>> terms, std::uint64_t e) {
  for (auto& t : terms) t.first %= e;
  std::sort(terms.begin(), terms.end());
  RootSum out;
  for (const auto& [x, m] : terms) {
    if (m == 0) continue;
    if (!out.terms.empty() && out.terms.back().first == x) {
      out.terms.back().second += static_cast<std::uint32_t>(m);
    } else {
      out.terms.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(m));
    }
  }
  return out;
}

RootSum scale_exponents(const RootSum& x, std::uint64_t u, std::uint64_t e) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> t;
  t.reserve(x.terms.size());
  for (const auto& [a, m] : x.terms) t.emplace_back(a * u % e, m);
  return make_root_sum(std::move(t), e);
}

RootSum shift_exponents(const RootSum& x, std::uint64_t s, std::uint64_t e) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> t;
  t.reserve(x.terms.size());
  for (const auto& [a, m] : x.terms) t.emplace_back((a + s) % e, m);
  return make_root_sum(std::move(t), e);
}

std::uint64_t evaluate_mod(const RootSum& x, const std::vector<std::uint64_t>& powers, std::uint64_t m) {
  std::uint64_t v = 0;
  for (const auto& [a, mult] : x.terms) v = add_mod(v, mul_mod(mult % m, powers[a], m), m);
  return v;
}

Cyclotomic<std::int64_t> to_cyclotomic(const RootSum& x, std::uint64_t e) {
  std::vector<std::int64_t> ring(e, 0);
  for (const auto& [a, m] : x.terms) ring[a] += m;
  return Cyclotomic<std::int64_t>::from_group_ring(e, std::move(ring));
}

std::size_t hash_row(const std::vector<RootSum>& row) {
  std::size_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const auto& x : row) {
    mix(x.terms.size());
    for (const auto& [a, m] : x.terms) mix((static_cast<std::uint64_t>(a) << 32) | m);
  }
  return h;
}

}  // namespace sldist::chartab
