#include "sldist/ff/field_tower.hpp"

#include <numeric>

namespace sldist::ff {

namespace {

constexpr std::uint32_t kMaxFieldOrder = 1u << 22;
constexpr std::uint32_t kFullTableLimit = 1024;

using Poly = std::vector<std::uint32_t>;  // low degree first, over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly monic_from_code(std::uint64_t code, std::uint32_t p, std::uint32_t degree) {
  Poly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Irreducible iff no monic factor of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t c = 0; c < count; ++c) {
      if (poly_mod(f, monic_from_code(c, p, d), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  const auto primes = prime_divisors(q);
  if (q < 2 || primes.size() != 1) throw FieldError("q = " + std::to_string(q) + " is not a prime power");
  std::uint32_t k = 0;
  while (q > 1) {
    q /= primes[0];
    ++k;
  }
  return {static_cast<std::uint32_t>(primes[0]), k};
}

FieldTower FieldTower::build(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
  if (k == 0) throw FieldError("extension degree must be positive");
  const std::uint64_t q64 = ipow(p, k);
  if (q64 * q64 > kMaxFieldOrder) {
    throw FieldError("field F_" + std::to_string(q64) + "^2 exceeds the supported size");
  }

  FieldTower t;
  t.p_ = p;
  t.k_ = k;
  t.q_ = static_cast<std::uint32_t>(q64);
  const std::uint32_t q = t.q_;

  // Base field F_q = F_p[s]/(base_modulus).
  bool found = false;
  for (std::uint64_t c = 0; c < q64 && !found; ++c) {
    Poly f = monic_from_code(c, p, k);
    if (is_irreducible(f, p)) {
      t.base_modulus_ = f;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no irreducible base modulus found");

  t.base_add_.resize(static_cast<std::size_t>(q) * q);
  t.base_mul_.resize(static_cast<std::size_t>(q) * q);
  t.base_neg_.resize(q);
  std::vector<Poly> digits(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly d(k);
    std::uint32_t c = a;
    for (std::uint32_t i = 0; i < k; ++i) {
      d[i] = c % p;
      c /= p;
    }
    digits[a] = d;
  }
  auto encode = [&](const Poly& d) {
    std::uint32_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
    return code;
  };
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly n(k);
    for (std::uint32_t i = 0; i < k; ++i) n[i] = (p - digits[a][i]) % p;
    t.base_neg_[a] = encode(n);
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly s(k);
      for (std::uint32_t i = 0; i < k; ++i) s[i] = (digits[a][i] + digits[b][i]) % p;
      t.base_add_[a * q + b] = encode(s);
      Poly prod(2 * k, 0);
      for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) {
          prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(digits[a][i]) * digits[b][j]) % p);
        }
      }
      Poly r = poly_mod(prod, t.base_modulus_, p);
      r.resize(k, 0);
      t.base_mul_[a * q + b] = encode(r);
    }
  }

  // E = F_q[t]/(t^2 + c1 t + c0); irreducible iff it has no root in F_q.
  found = false;
  for (std::uint64_t c = 0; c < q64 * q64 && !found; ++c) {
    const auto c0 = static_cast<std::uint32_t>(c % q);
    const auto c1 = static_cast<std::uint32_t>(c / q);
    bool has_root = false;
    for (std::uint32_t x = 0; x < q && !has_root; ++x) {
      const std::uint32_t v = t.base_add(t.base_add(t.base_mul(x, x), t.base_mul(c1, x)), c0);
      has_root = (v == 0);
    }
    if (!has_root) {
      t.ext_modulus_ = {{c0}, {c1}, {1}};
      found = true;
    }
  }
  if (!found) throw std::logic_error("no irreducible quadratic found");

  // Least generator of E^x, then exp/log tables.
  const std::uint32_t order = q * q;
  const std::uint64_t group_order = order - 1;
  const auto primes = prime_divisors(group_order);
  auto slow_pow = [&](FieldElem a, std::uint64_t e) {
    FieldElem r{1};
    while (e) {
      if (e & 1) r = t.mul_coordinates(r, a);
      a = t.mul_coordinates(a, a);
      e >>= 1;
    }
    return r;
  };
  FieldElem gen{0};
  for (std::uint32_t g = 1; g < order; ++g) {
    bool primitive = true;
    for (auto r : primes) {
      if (slow_pow({g}, group_order / r).code == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = {g};
      break;
    }
  }
  if (gen.code == 0) throw std::logic_error("no generator of E^x found");

  t.exp_.resize(group_order);
  t.log_.assign(order, 0);
  FieldElem x{1};
  for (std::uint64_t i = 0; i < group_order; ++i) {
    t.exp_[i] = x;
    t.log_[x.code] = static_cast<std::uint32_t>(i);
    x = t.mul_coordinates(x, gen);
  }
  if (x.code != 1) throw std::logic_error("generator cycle did not close");

  if (order <= kFullTableLimit) {
    t.add_table_.resize(static_cast<std::size_t>(order) * order);
    t.mul_table_.resize(static_cast<std::size_t>(order) * order);
    for (std::uint32_t a = 0; a < order; ++a) {
      for (std::uint32_t b = 0; b < order; ++b) {
        const std::size_t at = static_cast<std::size_t>(a) * order + b;
        t.add_table_[at] = static_cast<std::uint16_t>(
            t.base_add(a % q, b % q) + q * t.base_add(a / q, b / q));
        t.mul_table_[at] = static_cast<std::uint16_t>(
            (a == 0 || b == 0) ? 0 : t.exp_[(t.log_[a] + t.log_[b]) % group_order].code);
      }
    }
  }
  return t;
}

FieldElem FieldTower::mul_coordinates(FieldElem a, FieldElem b) const {
  const std::uint32_t q = q_;
  const std::uint32_t a0 = a.code % q, a1 = a.code / q;
  const std::uint32_t b0 = b.code % q, b1 = b.code / q;
  // (a0 + a1 t)(b0 + b1 t) with t^2 = -c1 t - c0.
  const std::uint32_t c0 = ext_modulus_[0].code, c1 = ext_modulus_[1].code;
  const std::uint32_t hi = base_mul(a1, b1);
  std::uint32_t r0 = base_mul(a0, b0);
  std::uint32_t r1 = base_add(base_mul(a0, b1), base_mul(a1, b0));
  r0 = base_add(r0, base_neg_[base_mul(hi, c0)]);
  r1 = base_add(r1, base_neg_[base_mul(hi, c1)]);
  return {r0 + q * r1};
}

FieldElem FieldTower::from_code(std::uint32_t code) const {
  if (code >= order_e()) throw FieldError("field code " + std::to_string(code) + " out of range");
  return {code};
}

FieldElem FieldTower::from_coordinates(FieldElem c0, FieldElem c1) const {
  if (!in_base(c0) || !in_base(c1)) throw FieldError("tower coordinates must lie in F_q");
  return {c0.code + q_ * c1.code};
}

FieldElem FieldTower::add(FieldElem a, FieldElem b) const {
  if (!add_table_.empty()) return {add_table_[static_cast<std::size_t>(a.code) * order_e() + b.code]};
  return {base_add(a.code % q_, b.code % q_) + q_ * base_add(a.code / q_, b.code / q_)};
}

FieldElem FieldTower::neg(FieldElem a) const {
  return {base_neg_[a.code % q_] + q_ * base_neg_[a.code / q_]};
}

FieldElem FieldTower::mul(FieldElem a, FieldElem b) const {
  if (!mul_table_.empty()) return {mul_table_[static_cast<std::size_t>(a.code) * order_e() + b.code]};
  if (a.code == 0 || b.code == 0) return {0};
  return exp_[(static_cast<std::uint64_t>(log_[a.code]) + log_[b.code]) % (order_e() - 1)];
}

FieldElem FieldTower::inv(FieldElem a) const {
  if (a.code == 0) throw FieldError("inverse of zero");
  const std::uint32_t m = order_e() - 1;
  return exp_[(m - log_[a.code]) % m];
}

FieldElem FieldTower::pow(FieldElem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t m = order_e() - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a.code]) * (e % m)) % m];
}

std::uint32_t FieldTower::log(FieldElem x) const {
  if (x.code == 0) throw FieldError("log of zero");
  return log_[x.code];
}

std::uint32_t FieldTower::log_base(FieldElem x) const {
  if (!in_base(x)) throw FieldError("log_base of an element outside F");
  const std::uint32_t l = log(x);
  if (l % (q_ + 1) != 0) throw std::logic_error("F^x is not generated by generator_e^(q+1)");
  return l / (q_ + 1);
}

FieldElem FieldTower::frobenius(FieldElem x) const { return pow(x, q_); }

FieldElem FieldTower::norm(FieldElem x) const { return pow(x, static_cast<std::uint64_t>(q_) + 1); }

FieldElem FieldTower::trace(FieldElem x) const { return add(x, frobenius(x)); }

std::uint32_t FieldTower::absolute_trace(FieldElem x) const {
  FieldElem acc = zero();
  FieldElem y = x;
  for (std::uint32_t i = 0; i < 2 * k_; ++i) {
    acc = add(acc, y);
    y = pow(y, p_);
  }
  if (acc.code >= p_) throw std::logic_error("absolute trace left F_p");
  return acc.code;
}

std::uint64_t FieldTower::order(FieldElem x) const {
  const std::uint64_t m = order_e() - 1;
  return m / std::gcd<std::uint64_t>(m, log(x));
}

std::string FieldTower::to_string(FieldElem x) const {
  auto [c0, c1] = coordinates(x);
  if (c1.code == 0) return std::to_string(c0.code);
  return "(" + std::to_string(c0.code) + "+" + std::to_string(c1.code) + "t)";
}

}  // namespace sldist::ff
