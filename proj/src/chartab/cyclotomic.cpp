#include "sldist/chartab/cyclotomic.hpp"

#include <algorithm>

#include "sldist/ff/field_tower.hpp"

namespace sldist::chartab {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto p : ff::prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

int moebius(std::uint64_t n) {
  int sign = 1;
  for (auto p : ff::prime_divisors(n)) {
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t ramanujan_sum(std::uint64_t n, std::uint64_t a) {
  const std::uint64_t g = std::gcd(a % n, n);
  const std::uint64_t m = n / g;
  return static_cast<std::int64_t>(moebius(m)) * static_cast<std::int64_t>(euler_phi(n) / euler_phi(m));
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n = 0");
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply first, then divide.
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    divisors.push_back(d);
    if (d * d != n) divisors.push_back(n / d);
  }
  std::sort(divisors.begin(), divisors.end());
  std::vector<std::int64_t> poly{1};
  for (auto d : divisors) {
    if (moebius(n / d) != 1) continue;
    std::vector<std::int64_t> next(poly.size() + d, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + d] += poly[i];
      next[i] -= poly[i];
    }
    poly = std::move(next);
  }
  for (auto d : divisors) {
    if (moebius(n / d) != -1) continue;
    // Exact division by x^d - 1, from the top: b_i = a_{i+d} + b_{i+d}.
    const std::size_t deg = poly.size() - 1;
    std::vector<std::int64_t> quot(deg - d + 1, 0);
    for (std::size_t i = deg - d + 1; i-- > 0;) quot[i] = poly[i + d] + (i + d <= deg - d ? quot[i + d] : 0);
    poly = std::move(quot);
  }
  return poly;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const CyclotomicField>(n);
  return slot;
}

bool CyclicAccumulator::invariant_under(const std::vector<std::uint64_t>& units) const {
  for (auto u : units) {
    for (std::uint64_t a = 0; a < n_; ++a) {
      if (acc_[a] != acc_[(a * u) % n_]) return false;
    }
  }
  return true;
}

Rational CyclicAccumulator::rational_value(const std::vector<std::uint64_t>& unit_generators) const {
  if (invariant_under(unit_generators)) {
    __int128 trace = 0;
    for (std::uint64_t a = 0; a < n_; ++a) {
      if (acc_[a] != 0) trace += static_cast<__int128>(acc_[a]) * ramanujan_sum(n_, a);
    }
    const auto phi = static_cast<__int128>(euler_phi(n_));
    if (trace % phi != 0) throw std::logic_error("CyclicAccumulator: invariant element with non-integral trace");
    return Rational::make(static_cast<std::int64_t>(trace / phi), 1);
  }
  const auto z = value();
  if (!z.is_rational()) throw std::domain_error("CyclicAccumulator: value is not rational");
  return z.rational_value();
}

Cyclotomic<std::int64_t> CyclicAccumulator::value() const { return Cyclotomic<std::int64_t>::from_group_ring(n_, acc_); }

std::vector<std::uint64_t> unit_group_generators(std::uint64_t n) {
  std::vector<std::uint64_t> gens;
  if (n <= 2) return gens;
  std::vector<bool> in_span(n, false);
  in_span[1] = true;
  std::vector<std::uint64_t> span{1};
  for (std::uint64_t u = 2; u < n && span.size() < euler_phi(n); ++u) {
    if (std::gcd(u, n) != 1 || in_span[u]) continue;
    gens.push_back(u);
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (auto g : gens) {
        const std::uint64_t y = span[i] * g % n;
        if (!in_span[y]) {
          in_span[y] = true;
          span.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace sldist::chartab
