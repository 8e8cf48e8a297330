#include "sldist/chartab/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sldist/chartab/modular.hpp"

namespace sldist::chartab {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// A subspace of F_l^r by a basis in reduced row echelon form.
struct Subspace {
  ModMatrix basis;
  std::vector<Eigen::Index> pivots;
  bool full = false;
};

Subspace make_subspace(ModMatrix rows, std::uint64_t l) {
  Subspace s;
  s.pivots = rref_mod(rows, l);
  s.basis = rows.topRows(static_cast<Eigen::Index>(s.pivots.size()));
  return s;
}

// (M)_{jk} = #{y in C_{inv(i)} : class(y g_k) = j}; the vectors
// (|C_j| chi(g_j) / chi(1))_j are its right eigenvectors.
ModMatrix class_matrix(const GroupView& view, const ConjugacyData& cls, std::size_t i, std::uint64_t l) {
  const auto r = static_cast<Eigen::Index>(cls.size());
  ModMatrix m = ModMatrix::Zero(r, r);
  const auto& g = view.group();
  for (std::uint32_t y : cls.class_members(cls.inverse_class[i])) {
    for (Eigen::Index k = 0; k < r; ++k) m(cls.class_index(g.multiply(y, cls.representative[k])), k) += 1;
  }
  return m.unaryExpr([l](std::uint64_t x) { return x % l; });
}

bool is_scalar(const ModMatrix& b) {
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if ((i == j && b(i, j) != b(0, 0)) || (i != j && b(i, j) != 0)) return false;
  return true;
}

// Splits F_l^r into the common eigenlines of the class matrices.
std::vector<ModVector> common_eigenvectors(const GroupView& view, const ConjugacyData& cls, std::uint64_t l) {
  const auto r = static_cast<Eigen::Index>(cls.size());
  std::vector<ModVector> lines;
  std::vector<Subspace> pending;
  if (r == 1) {
    lines.push_back(ModVector::Ones(1));
    return lines;
  }
  {
    Subspace all;
    all.basis = ModMatrix::Identity(r, r);
    all.pivots.resize(static_cast<std::size_t>(r));
    std::iota(all.pivots.begin(), all.pivots.end(), 0);
    all.full = true;
    pending.push_back(std::move(all));
  }
  for (std::size_t i = 0; i < cls.size() && !pending.empty(); ++i) {
    if (i == cls.identity_class) continue;
    const ModMatrix m = class_matrix(view, cls, i, l);
    std::vector<Subspace> next;
    for (auto& s : pending) {
      const auto dim = static_cast<Eigen::Index>(s.pivots.size());
      ModMatrix b;
      if (s.full) {
        b = m;
      } else {
        ModMatrix sel(dim, r);
        for (Eigen::Index a = 0; a < dim; ++a) sel.row(a) = m.row(s.pivots[a]);
        b = mat_mul_mod(sel, s.basis.transpose(), l);
      }
      if (is_scalar(b)) {
        next.push_back(std::move(s));
        continue;
      }
      const auto roots = roots_mod(charpoly_mod(b, l), l);
      Eigen::Index total = 0;
      for (auto lambda : roots) {
        ModMatrix shifted = b;
        for (Eigen::Index a = 0; a < dim; ++a) shifted(a, a) = sub_mod(shifted(a, a), lambda, l);
        const ModMatrix coords = nullspace_mod(std::move(shifted), l);
        total += coords.rows();
        Subspace piece = make_subspace(mat_mul_mod(coords, s.basis, l), l);
        if (piece.pivots.size() == 1) {
          lines.push_back(piece.basis.row(0).transpose());
        } else {
          next.push_back(std::move(piece));
        }
      }
      if (total != dim) throw std::logic_error("dixon_schneider: class matrix not diagonalizable mod l");
    }
    pending = std::move(next);
  }
  if (!pending.empty()) throw std::logic_error("dixon_schneider: class matrices did not separate the characters");
  return lines;
}

}  // namespace

CharTable::CharTable(std::shared_ptr<const ConjugacyData> classes, std::uint64_t prime,
                     std::vector<std::vector<RootSum>> rows)
    : classes_(std::move(classes)), prime_(prime), rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end(), [this](const auto& a, const auto& b) {
    const auto da = a[classes_->identity_class].degree(), db = b[classes_->identity_class].degree();
    if (da != db) return da < db;
    return a < b;
  });
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    degrees_.push_back(rows_[i][classes_->identity_class].degree());
    index_.emplace(hash_row(rows_[i]), i);
  }
}

std::optional<std::size_t> CharTable::find_row(const std::vector<RootSum>& values) const {
  auto [lo, hi] = index_.equal_range(hash_row(values));
  for (auto it = lo; it != hi; ++it)
    if (rows_[it->second] == values) return it->second;
  return std::nullopt;
}

std::vector<std::uint32_t> power_map(const GroupView& view, const ConjugacyData& classes, std::uint64_t u) {
  std::vector<std::uint32_t> out(classes.size());
  for (std::uint32_t k = 0; k < classes.size(); ++k) out[k] = groups::class_power(view, classes, k, u % classes.element_order[k]);
  return out;
}

CharTable dixon_schneider(const GroupView& view, std::shared_ptr<const ConjugacyData> classes_ptr,
                          const TableOptions& options) {
  const ConjugacyData& cls = *classes_ptr;
  const std::size_t r = cls.size();
  if (r > options.max_classes)
    throw groups::SizeGuardError("dixon_schneider: " + std::to_string(r) + " classes exceed the limit of " +
                                 std::to_string(options.max_classes));
  const std::uint64_t order = cls.group_order;
  const std::uint64_t e = cls.exponent;
  const std::uint64_t l = least_prime_one_mod(e, isqrt(4 * order));
  const std::uint64_t w = primitive_root_of_unity(e, l);
  const auto& g = view.group();

  const auto lines = common_eigenvectors(view, cls, l);
  if (lines.size() != r) throw std::logic_error("dixon_schneider: wrong number of eigenlines");

  // Values mod l: chi(g_k) = omega_k d / |C_k|, omega normalised at the identity.
  const std::uint64_t root_bound = isqrt(order);
  ModMatrix values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  std::vector<std::uint64_t> degrees(r);
  for (std::size_t i = 0; i < r; ++i) {
    const ModVector& v = lines[i];
    const std::uint64_t at_one = v(cls.identity_class);
    if (at_one == 0) throw std::logic_error("dixon_schneider: eigenvector vanishes at the identity");
    const std::uint64_t scale = inv_mod(at_one, l);
    ModVector omega = v.unaryExpr([&](std::uint64_t x) { return mul_mod(x, scale, l); });
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint64_t term = mul_mod(omega(k), omega(cls.inverse_class[k]), l);
      s = add_mod(s, mul_mod(term, inv_mod(cls.class_size[k] % l, l), l), l);
    }
    const std::uint64_t d2 = mul_mod(order % l, inv_mod(s, l), l);
    std::uint64_t d = 0;
    for (std::uint64_t c = 1; c <= root_bound; ++c) {
      if (c * c % l == d2) {
        d = c;
        break;
      }
    }
    if (d == 0) throw std::logic_error("dixon_schneider: no integral degree");
    degrees[i] = d;
    for (std::size_t k = 0; k < r; ++k)
      values(i, k) = mul_mod(mul_mod(omega(k), d, l), inv_mod(cls.class_size[k] % l, l), l);
  }

  // Lift: eigenvalue multiplicities m_t = (1/o) sum_j chi(g^j) w_o^{-jt}, once
  // per rational class, then transported along g -> g^s.
  std::vector<std::vector<RootSum>> rows(r, std::vector<RootSum>(r));
  std::vector<bool> lifted(r, false);
  for (std::size_t k0 = 0; k0 < r; ++k0) {
    if (lifted[k0]) continue;
    const std::uint64_t o = cls.element_order[k0];
    std::vector<std::uint32_t> pc(o);
    std::uint32_t x = g.identity();
    for (std::uint64_t j = 0; j < o; ++j) {
      pc[j] = cls.class_index(x);
      x = g.multiply(x, cls.representative[k0]);
    }
    std::vector<std::uint32_t> distinct(pc.begin(), pc.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::uint32_t> slot(r, 0);
    for (std::size_t c = 0; c < distinct.size(); ++c) slot[distinct[c]] = static_cast<std::uint32_t>(c);

    const std::uint64_t w_inv = inv_mod(pow_mod(w, e / o, l), l);
    std::vector<std::uint64_t> w_pow(o);
    w_pow[0] = 1 % l;
    for (std::uint64_t s = 1; s < o; ++s) w_pow[s] = mul_mod(w_pow[s - 1], w_inv, l);
    ModMatrix pt = ModMatrix::Zero(static_cast<Eigen::Index>(distinct.size()), static_cast<Eigen::Index>(o));
    for (std::uint64_t j = 0; j < o; ++j) {
      const auto c = slot[pc[j]];
      for (std::uint64_t t = 0; t < o; ++t) pt(c, t) = add_mod(pt(c, t), w_pow[j * t % o], l);
    }
    ModMatrix sel(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(distinct.size()));
    for (std::size_t c = 0; c < distinct.size(); ++c) sel.col(c) = values.col(distinct[c]);
    const ModMatrix mult = mat_mul_mod(sel, pt, l);
    const std::uint64_t o_inv = inv_mod(o % l, l);

    std::vector<RootSum> base(r);
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
      std::uint64_t total = 0;
      for (std::uint64_t t = 0; t < o; ++t) {
        const std::uint64_t m_t = mul_mod(mult(i, t), o_inv, l);
        if (m_t == 0) continue;
        if (m_t > degrees[i]) throw std::logic_error("dixon_schneider: eigenvalue multiplicity out of range");
        total += m_t;
        terms.emplace_back(t * (e / o), m_t);
      }
      if (total != degrees[i]) throw std::logic_error("dixon_schneider: eigenvalue multiplicities do not sum to the degree");
      base[i] = make_root_sum(std::move(terms), e);
    }
    for (std::uint64_t s = 1; s < o || s == 1; ++s) {
      if (std::gcd(s, o) != 1) continue;
      const std::uint32_t k = pc[s % o];
      if (lifted[k]) continue;
      lifted[k] = true;
      for (std::size_t i = 0; i < r; ++i) rows[i][k] = s == 1 ? base[i] : scale_exponents(base[i], s, e);
    }
  }

  CharTable table(std::move(classes_ptr), l, std::move(rows));
  const auto cert = verify_table(view, table);
  if (!cert.ok()) throw std::logic_error("dixon_schneider: table failed verification: " + cert.failure);
  return table;
}

TableCertificate verify_table(const GroupView& view, const CharTable& table) {
  TableCertificate cert;
  const ConjugacyData& cls = table.classes();
  const std::size_t r = cls.size();
  const std::uint64_t e = table.exponent();
  const std::uint64_t order = cls.group_order;
  auto fail = [&](std::string why) {
    if (cert.failure.empty()) cert.failure = std::move(why);
    return cert;
  };

  cert.row_count = table.size() == r;
  if (!cert.row_count) return fail("row count differs from class count");
  for (std::size_t i = 0; i < r; ++i)
    if (table.row(i).size() != r) return fail("row of wrong length");

  std::uint64_t sum_sq = 0, d_max = 0;
  cert.identity_column = true;
  for (std::size_t i = 0; i < r; ++i) {
    const auto d = table.degree(i);
    sum_sq += d * d;
    d_max = std::max(d_max, d);
    const auto& at_one = table.value(i, cls.identity_class);
    if (at_one.terms.size() != 1 || at_one.terms[0].first != 0) cert.identity_column = false;
    for (std::size_t k = 0; k < r; ++k)
      if (table.value(i, k).degree() != d) cert.identity_column = false;
  }
  cert.degree_sum = sum_sq == order;
  if (!cert.degree_sum) return fail("sum of squared degrees " + std::to_string(sum_sq) + " != |G|");
  if (!cert.identity_column) return fail("identity column or eigenvalue counts inconsistent");

  cert.power_maps = true;
  cert.galois_closed = true;
  for (auto u : unit_group_generators(e)) {
    const auto pm = power_map(view, cls, u);
    for (std::size_t i = 0; i < r && cert.power_maps; ++i) {
      std::vector<RootSum> image(r);
      for (std::size_t k = 0; k < r; ++k) {
        image[k] = table.value(i, pm[k]);
        if (image[k] != scale_exponents(table.value(i, k), u, e)) {
          cert.power_maps = false;
          break;
        }
      }
      if (cert.power_maps && !table.find_row(image)) cert.galois_closed = false;
    }
  }
  if (!cert.power_maps) return fail("power maps inconsistent with values");
  if (!cert.galois_closed) return fail("row set not Galois stable");

  const std::uint64_t bound = std::max<std::uint64_t>(order * (d_max * d_max + 1), 2 * order);
  const std::uint64_t l = least_prime_one_mod(e, bound);
  cert.prime = l;
  const std::uint64_t w = primitive_root_of_unity(e, l);
  std::vector<std::uint64_t> powers(e);
  powers[0] = 1;
  for (std::uint64_t a = 1; a < e; ++a) powers[a] = mul_mod(powers[a - 1], w, l);

  const auto n = static_cast<Eigen::Index>(r);
  ModMatrix x(n, n), y(n, n), x_inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) {
      x(i, k) = evaluate_mod(table.value(i, k), powers, l);
      x_inv(i, k) = evaluate_mod(table.value(i, cls.inverse_class[k]), powers, l);
    }
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index j = 0; j < n; ++j) y(k, j) = mul_mod(cls.class_size[k] % l, x_inv(j, k), l);

  const ModMatrix rows = mat_mul_mod(x, y, l);
  cert.rows_orthogonal = true;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (rows(i, j) != (i == j ? order % l : 0)) cert.rows_orthogonal = false;
  if (!cert.rows_orthogonal) return fail("row orthogonality");

  const ModMatrix xt = x.transpose();
  const ModMatrix cols = mat_mul_mod(xt, x_inv, l);
  cert.columns_orthogonal = true;
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index j = 0; j < n; ++j)
      if (cols(k, j) != (k == j ? (order / cls.class_size[k]) % l : 0)) cert.columns_orthogonal = false;
  if (!cert.columns_orthogonal) return fail("column orthogonality");
  return cert;
}

}  // namespace sldist::chartab
