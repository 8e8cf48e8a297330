#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sldist::chartab {

/// Exact p/q with q > 0 and gcd(p, q) = 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) n = -n, d = -d;
    const std::int64_t g = std::gcd(n, d);
    return {n / g, d / g};
  }
  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
/// Sum of zeta_n^{ak} over k coprime to n, i.e. the trace of zeta_n^a down to Q.
std::int64_t ramanujan_sum(std::uint64_t n, std::uint64_t a);
/// Phi_n, low degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n);

/// Shared data for Q(zeta_n): the modulus Phi_n.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(std::uint64_t n);

  std::uint64_t order() const { return n_; }
  std::size_t degree() const { return phi_.size() - 1; }
  const std::vector<std::int64_t>& modulus() const { return phi_; }

  explicit CyclotomicField(std::uint64_t n) : n_(n), phi_(cyclotomic_polynomial(n)) {}

 private:
  std::uint64_t n_;
  std::vector<std::int64_t> phi_;
};

/// An element of Q(zeta_n) as (sum_i c_i zeta_n^i) / den over the power basis
/// 1, zeta, ..., zeta^{phi(n)-1}.  Always stored reduced: coefficients taken
/// modulo Phi_n, gcd(c, den) = 1, den > 0.
template <std::signed_integral Int = std::int64_t>
class Cyclotomic {
 public:
  using Coeffs = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

  explicit Cyclotomic(std::uint64_t n) : field_(CyclotomicField::get(n)), c_(Coeffs::Zero(field_->degree())) {}

  static Cyclotomic integer(std::uint64_t n, Int value) {
    Cyclotomic z(n);
    if (z.c_.size() > 0) z.c_(0) = value;
    return z;
  }
  /// coeff * zeta_n^k.
  static Cyclotomic root(std::uint64_t n, std::uint64_t k, Int coeff = 1) {
    std::vector<Int> ring(n, 0);
    ring[k % n] = coeff;
    return from_group_ring(n, ring);
  }
  /// sum_k ring[k] zeta_n^k.
  static Cyclotomic from_group_ring(std::uint64_t n, std::vector<Int> ring) {
    Cyclotomic z(n);
    z.reduce_into(ring);
    return z;
  }

  std::uint64_t order() const { return field_->order(); }
  const Coeffs& coeffs() const { return c_; }
  Int denominator() const { return den_; }

  bool is_zero() const { return c_.isZero(); }
  bool is_rational() const { return c_.size() <= 1 || c_.tail(c_.size() - 1).isZero(); }
  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic: not rational");
    return Rational::make(c_.size() ? static_cast<std::int64_t>(c_(0)) : 0, static_cast<std::int64_t>(den_));
  }

  Cyclotomic operator-() const {
    Cyclotomic z = *this;
    z.c_ = -z.c_;
    return z;
  }
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    Cyclotomic z(a.order());
    z.c_ = a.c_ * b.den_ + b.c_ * a.den_;
    z.den_ = a.den_ * b.den_;
    z.normalize();
    return z;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    const auto d = a.c_.size();
    std::vector<Int> prod(d == 0 ? 0 : 2 * d - 1, 0);
    for (Eigen::Index i = 0; i < d; ++i) {
      if (a.c_(i) == 0) continue;
      for (Eigen::Index j = 0; j < d; ++j) prod[i + j] += a.c_(i) * b.c_(j);
    }
    Cyclotomic z(a.order());
    z.reduce_poly(prod);
    z.den_ = a.den_ * b.den_;
    z.normalize();
    return z;
  }
  Cyclotomic divided_by(Int d) const {
    Cyclotomic z = *this;
    z.den_ *= d;
    z.normalize();
    return z;
  }

  /// zeta -> zeta^j, gcd(j, n) = 1.
  Cyclotomic galois(std::uint64_t j) const {
    const std::uint64_t n = order();
    if (std::gcd(j % n, n) != 1 && n > 1) throw std::invalid_argument("Cyclotomic::galois: exponent not a unit");
    std::vector<Int> ring(n, 0);
    for (Eigen::Index i = 0; i < c_.size(); ++i) ring[(static_cast<std::uint64_t>(i) * j) % n] += c_(i);
    Cyclotomic z(n);
    z.reduce_into(ring);
    z.den_ = den_;
    z.normalize();
    return z;
  }
  Cyclotomic conj() const { return galois(order() - 1); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order() == b.order() && a.den_ == b.den_ && a.c_ == b.c_;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (Eigen::Index i = 0; i < c_.size(); ++i) {
      if (c_(i) == 0) continue;
      if (!first) os << " + ";
      os << static_cast<long long>(c_(i));
      if (i > 0) os << "*z^" << i;
      first = false;
    }
    if (first) os << "0";
    if (den_ != 1) os << " / " << static_cast<long long>(den_);
    return os.str();
  }

 private:
  void check_same(const Cyclotomic& b) const {
    if (order() != b.order()) throw std::invalid_argument("Cyclotomic: different fields");
  }
  // Long division by the monic Phi_n.
  void reduce_poly(std::vector<Int>& poly) {
    const auto& phi = field_->modulus();
    const std::size_t d = field_->degree();
    for (std::size_t top = poly.size(); top-- > d;) {
      const Int lead = poly[top];
      if (lead == 0) continue;
      for (std::size_t k = 0; k <= d; ++k) poly[top - d + k] -= lead * static_cast<Int>(phi[k]);
    }
    for (std::size_t i = 0; i < d; ++i) c_(static_cast<Eigen::Index>(i)) = i < poly.size() ? poly[i] : 0;
  }
  void reduce_into(std::vector<Int>& ring) { reduce_poly(ring); }
  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      c_ = -c_;
    }
    Int g = den_;
    for (Eigen::Index i = 0; i < c_.size(); ++i) g = std::gcd(g, c_(i));
    if (g > 1) {
      c_ /= g;
      den_ /= g;
    }
  }

  std::shared_ptr<const CyclotomicField> field_;
  Coeffs c_;
  Int den_ = 1;
};

/// An element of the group ring Z[Z/n], accumulated term by term and
/// evaluated at zeta_n only at the end.
class CyclicAccumulator {
 public:
  explicit CyclicAccumulator(std::uint64_t n) : n_(n), acc_(n, 0) {}

  void add(std::uint64_t exponent, std::int64_t count) { acc_[exponent % n_] += count; }
  std::uint64_t order() const { return n_; }
  const std::vector<std::int64_t>& terms() const { return acc_; }

  /// True if a -> u a fixes the accumulator for every u in units.
  bool invariant_under(const std::vector<std::uint64_t>& units) const;
  /// The value at zeta_n.  Uses the trace when the accumulator is invariant
  /// under the listed generators of (Z/n)^x, and reduction modulo Phi_n
  /// otherwise; throws std::domain_error if the value is irrational.
  Rational rational_value(const std::vector<std::uint64_t>& unit_generators) const;
  Cyclotomic<std::int64_t> value() const;

 private:
  std::uint64_t n_;
  std::vector<std::int64_t> acc_;
};

/// A small generating set of (Z/n)^x.
std::vector<std::uint64_t> unit_group_generators(std::uint64_t n);

}  // namespace sldist::chartab
