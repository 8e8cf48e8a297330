#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sldist::ff {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of E = F_{q^2}, stored by its tower coordinates.
///
/// The code packs the coordinates (c0, c1) of c0 + c1*t, where t is the root
/// of the quadratic modulus, as c0 + q*c1.  Each F_q coordinate is itself the
/// base-p digit string of its F_p[s]/(base_modulus) representative.  Elements
/// of the subfield F_q are exactly the codes below q.
struct FieldElem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// The pair F_q subset E = F_{q^2} built as a quadratic tower over F_q.
///
/// Immutable after construction.  All arithmetic goes through the tower.
class FieldTower {
 public:
  /// Lexicographically least moduli, least generators.  Throws FieldError for
  /// a non-prime p, k == 0, or a field too large for the lookup tables.
  static FieldTower build(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// |E| = q^2.
  std::uint32_t order_e() const { return q_ * q_; }

  /// Monic, low degree first, coefficients in F_p.  Degree k.
  const std::vector<std::uint32_t>& base_modulus() const { return base_modulus_; }
  /// Monic quadratic over F_q: {c0, c1, 1} for t^2 + c1 t + c0.
  const std::vector<FieldElem>& ext_modulus() const { return ext_modulus_; }

  FieldElem generator_e() const { return exp(1); }
  FieldElem generator_f() const { return exp(q_ + 1); }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem from_code(std::uint32_t code) const;
  FieldElem from_coordinates(FieldElem c0, FieldElem c1) const;
  std::pair<FieldElem, FieldElem> coordinates(FieldElem x) const { return {{x.code % q_}, {x.code / q_}}; }
  bool in_base(FieldElem x) const { return x.code < q_; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  /// Discrete log to base generator_e(); x must be nonzero.
  std::uint32_t log(FieldElem x) const;
  /// generator_e()^i for i taken mod q^2 - 1.
  FieldElem exp(std::uint64_t i) const { return exp_[i % (order_e() - 1)]; }
  /// Discrete log in F^x to base generator_f(); x must be a nonzero element of F.
  std::uint32_t log_base(FieldElem x) const;

  FieldElem frobenius(FieldElem x) const;
  FieldElem norm(FieldElem x) const;
  FieldElem trace(FieldElem x) const;
  /// Absolute trace E -> F_p, returned as an integer in [0, p).
  std::uint32_t absolute_trace(FieldElem x) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(FieldElem x) const;

  std::string to_string(FieldElem x) const;

 private:
  FieldTower() = default;

  std::uint32_t base_add(std::uint32_t a, std::uint32_t b) const { return base_add_[a * q_ + b]; }
  std::uint32_t base_mul(std::uint32_t a, std::uint32_t b) const { return base_mul_[a * q_ + b]; }
  FieldElem mul_coordinates(FieldElem a, FieldElem b) const;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> base_modulus_;
  std::vector<FieldElem> ext_modulus_;
  std::vector<std::uint32_t> base_add_;
  std::vector<std::uint32_t> base_mul_;
  std::vector<std::uint32_t> base_neg_;
  std::vector<FieldElem> exp_;
  std::vector<std::uint32_t> log_;
  // Full E tables when q^2 is small enough.
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
};

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Splits q = p^k; throws FieldError if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q);

}  // namespace sldist::ff
