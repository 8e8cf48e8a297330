#include "sldist/groups/enumerated_group.hpp"

#include <limits>
#include <numeric>

namespace sldist::groups {

namespace {

constexpr std::size_t kindex(GroupKind k) { return static_cast<std::size_t>(k); }

constexpr std::uint32_t kTableLimit = 1024;

template <int N>
std::uint64_t product_code(const std::uint32_t* a, const std::uint32_t* b, const std::uint16_t* add,
                           const std::uint16_t* mul, std::uint32_t field_order) {
  std::uint64_t code = 0;
  for (int r = 0; r < N; ++r) {
    for (int c = 0; c < N; ++c) {
      std::uint32_t acc = 0;
      for (int t = 0; t < N; ++t) {
        const std::uint32_t m = mul[a[r * N + t] * field_order + b[t * N + c]];
        acc = add[acc * field_order + m];
      }
      code = code * field_order + acc;
    }
  }
  return code;
}

}  // namespace

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::GlE: return "gl-e";
    case GroupKind::SlE: return "sl-e";
    case GroupKind::GlF: return "gl-f";
    case GroupKind::SlF: return "sl-f";
    case GroupKind::GlPlus: return "gl-plus";
    case GroupKind::NE: return "n-e";
    case GroupKind::Center: return "center";
  }
  return "?";
}

GroupKind parse_group_kind(const std::string& name) {
  for (auto k : kAllGroupKinds) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown group kind '" + name + "'");
}

std::uint64_t gl_order(std::uint64_t field_order, int n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 qn = 1;
  for (int i = 0; i < n; ++i) {
    qn *= field_order;
    if (qn > kMax) return kMax;
  }
  unsigned __int128 order = 1;
  unsigned __int128 qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= (qn - qi);
    if (order > kMax) return kMax;
    qi *= field_order;
  }
  return static_cast<std::uint64_t>(order);
}

std::shared_ptr<const EnumeratedGroup> EnumeratedGroup::enumerate(std::shared_ptr<const FieldTower> tower, int n,
                                                                  std::uint64_t max_order) {
  if (n < 1) throw std::invalid_argument("matrix size n must be at least 1");
  const std::uint32_t field_order = tower->order_e();
  const std::uint64_t order = gl_order(field_order, n);
  if (order > max_order) {
    throw SizeGuardError("|GL_" + std::to_string(n) + "(F_" + std::to_string(field_order) + ")| = " +
                         (order == std::numeric_limits<std::uint64_t>::max() ? std::string("overflow")
                                                                             : std::to_string(order)) +
                         " exceeds the group-order guard " + std::to_string(max_order));
  }

  std::shared_ptr<EnumeratedGroup> g(new EnumeratedGroup());
  g->n_ = n;
  g->tower_ = tower;
  g->field_order_ = field_order;
  const FieldTower& t = *tower;
  const std::size_t nn = static_cast<std::size_t>(n) * n;

  if (field_order <= kTableLimit) {
    g->add_.resize(static_cast<std::size_t>(field_order) * field_order);
    g->mul_.resize(static_cast<std::size_t>(field_order) * field_order);
    for (std::uint32_t a = 0; a < field_order; ++a) {
      for (std::uint32_t b = 0; b < field_order; ++b) {
        g->add_[a * field_order + b] = static_cast<std::uint16_t>(t.add({a}, {b}).code);
        g->mul_[a * field_order + b] = static_cast<std::uint16_t>(t.mul({a}, {b}).code);
      }
    }
  }

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nn; ++i) total *= field_order;
  if (total > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
    throw SizeGuardError("matrix space of size " + std::to_string(total) + " is too large to index");
  }

  g->lookup_.assign(total, -1);
  g->entries_.reserve(order * nn);
  g->det_log_.reserve(order);
  std::vector<FieldElem> digits(nn);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = nn; i-- > 0;) {
      digits[i] = FieldElem{static_cast<std::uint32_t>(c % field_order)};
      c /= field_order;
    }
    const FieldElem det = groups::determinant(t, digits, n);
    if (det.code == 0) continue;
    g->lookup_[code] = static_cast<std::int32_t>(g->det_log_.size());
    g->det_log_.push_back(t.log(det));
    for (auto d : digits) g->entries_.push_back(d.code);
  }
  if (g->det_log_.size() != order) throw std::logic_error("enumerated order disagrees with the product formula");

  g->identity_ = g->index_of(Mat::identity(n));
  g->inverse_.resize(order);
  for (std::uint32_t i = 0; i < order; ++i) g->inverse_[i] = g->index_of(groups::inverse(t, g->element(i)));

  // Subgroup bitmaps.
  const std::uint32_t q = t.q();
  const std::uint32_t plus_step = std::gcd<std::uint32_t>(q + 1, static_cast<std::uint32_t>(n));
  for (auto kind : kAllGroupKinds) g->membership_[kindex(kind)].assign(order, 0);
  for (std::uint32_t i = 0; i < order; ++i) {
    const auto e = g->entries(i);
    bool rational = true, unitriangular = true, scalar = true;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        const std::uint32_t x = e[r * n + c];
        if (x >= q) rational = false;
        if (r > c && x != 0) unitriangular = false;
        if (r == c && x != 1) unitriangular = false;
        if (r != c && x != 0) scalar = false;
        if (r == c && x != e[0]) scalar = false;
      }
    }
    const bool special = g->det_log_[i] == 0;
    g->membership_[kindex(GroupKind::GlE)][i] = 1;
    g->membership_[kindex(GroupKind::SlE)][i] = special;
    g->membership_[kindex(GroupKind::GlF)][i] = rational;
    g->membership_[kindex(GroupKind::SlF)][i] = rational && special;
    g->membership_[kindex(GroupKind::GlPlus)][i] = g->det_log_[i] % plus_step == 0;
    g->membership_[kindex(GroupKind::NE)][i] = unitriangular;
    g->membership_[kindex(GroupKind::Center)][i] = scalar;
  }
  for (auto kind : kAllGroupKinds) {
    auto& members = g->members_[kindex(kind)];
    const auto& bits = g->membership_[kindex(kind)];
    for (std::uint32_t i = 0; i < order; ++i) {
      if (bits[i]) members.push_back(i);
    }
  }
  return g;
}

Mat EnumeratedGroup::element(std::uint32_t index) const {
  const auto e = entries(index);
  std::vector<FieldElem> v;
  v.reserve(e.size());
  for (auto x : e) v.push_back(FieldElem{x});
  return Mat(n_, std::move(v));
}

std::uint64_t EnumeratedGroup::code(std::uint32_t index) const {
  std::uint64_t c = 0;
  for (auto x : entries(index)) c = c * field_order_ + x;
  return c;
}

std::optional<std::uint32_t> EnumeratedGroup::find(const Mat& m) const {
  if (m.dim() != n_) return std::nullopt;
  std::uint64_t c = 0;
  for (auto x : m.entries()) c = c * field_order_ + x.code;
  if (c >= lookup_.size() || lookup_[c] < 0) return std::nullopt;
  return static_cast<std::uint32_t>(lookup_[c]);
}

std::uint32_t EnumeratedGroup::index_of(const Mat& m) const {
  auto idx = find(m);
  if (!idx) throw std::out_of_range("matrix is not an element of GL_n(E)");
  return *idx;
}

std::uint32_t EnumeratedGroup::multiply(std::uint32_t a, std::uint32_t b) const {
  const std::size_t nn = static_cast<std::size_t>(n_) * n_;
  const std::uint32_t* pa = entries_.data() + a * nn;
  const std::uint32_t* pb = entries_.data() + b * nn;
  std::uint64_t code = 0;
  if (!add_.empty()) {
    switch (n_) {
      case 1: code = product_code<1>(pa, pb, add_.data(), mul_.data(), field_order_); break;
      case 2: code = product_code<2>(pa, pb, add_.data(), mul_.data(), field_order_); break;
      case 3: code = product_code<3>(pa, pb, add_.data(), mul_.data(), field_order_); break;
      default: {
        for (int r = 0; r < n_; ++r) {
          for (int c = 0; c < n_; ++c) {
            std::uint32_t acc = 0;
            for (int t = 0; t < n_; ++t) {
              acc = add_[acc * field_order_ + mul_[pa[r * n_ + t] * field_order_ + pb[t * n_ + c]]];
            }
            code = code * field_order_ + acc;
          }
        }
      }
    }
  } else {
    const FieldTower& t = *tower_;
    for (int r = 0; r < n_; ++r) {
      for (int c = 0; c < n_; ++c) {
        FieldElem acc{0};
        for (int k = 0; k < n_; ++k) acc = t.add(acc, t.mul({pa[r * n_ + k]}, {pb[k * n_ + c]}));
        code = code * field_order_ + acc.code;
      }
    }
  }
  return static_cast<std::uint32_t>(lookup_[code]);
}

std::uint32_t EnumeratedGroup::power(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = identity_;
  std::uint32_t base = a;
  while (e) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t EnumeratedGroup::element_order(std::uint32_t a) const {
  std::uint64_t k = 1;
  std::uint32_t x = a;
  while (x != identity_) {
    x = multiply(x, a);
    ++k;
  }
  return k;
}

std::uint32_t EnumeratedGroup::frobenius(std::uint32_t a) const {
  return index_of(groups::frobenius(*tower_, element(a)));
}

GroupView EnumeratedGroup::view(GroupKind kind) const {
  return GroupView(this, kind, &membership_[kindex(kind)], &members_[kindex(kind)]);
}

UnipotentData unipotent_data(const EnumeratedGroup& group) {
  UnipotentData out;
  const int n = group.n();
  for (auto idx : group.view(GroupKind::NE).members()) {
    out.elements.push_back(idx);
    const auto e = group.entries(idx);
    std::vector<FieldElem> sd;
    for (int i = 0; i + 1 < n; ++i) sd.push_back(FieldElem{e[i * n + i + 1]});
    out.superdiagonal.push_back(std::move(sd));
  }
  return out;
}

GlPlusCosets glplus_cosets(const EnumeratedGroup& group) {
  const FieldTower& t = group.tower();
  const std::uint64_t m = t.order_e() - 1;
  GlPlusCosets out;
  out.index_from_groups = group.size() / group.view(GroupKind::GlPlus).size();

  // Subgroup of Z/m generated by q+1 (the image of F^x) and n (the n-th powers).
  std::vector<bool> in_sub(m, false);
  std::vector<std::uint64_t> stack = {0};
  in_sub[0] = true;
  const std::uint64_t gens[] = {(t.q() + 1) % m, static_cast<std::uint64_t>(group.n()) % m};
  std::uint64_t count = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (auto s : gens) {
      const auto y = (x + s) % m;
      if (!in_sub[y]) {
        in_sub[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  out.index_from_cyclic = m / count;
  if (out.index_from_cyclic != out.index_from_groups) {
    throw std::logic_error("GL_n(E)^+ index mismatch: " + std::to_string(out.index_from_groups) + " vs " +
                           std::to_string(out.index_from_cyclic));
  }
  std::vector<FieldElem> diag(group.n(), t.one());
  for (std::uint64_t i = 0; i < out.index_from_groups; ++i) {
    diag[0] = t.exp(i);
    out.representatives.push_back(group.index_of(Mat::diagonal(diag)));
  }
  return out;
}

std::optional<GlPlusFactorization> glplus_factorization(const EnumeratedGroup& group, std::uint32_t element) {
  const FieldTower& t = group.tower();
  const int n = group.n();
  const std::uint64_t m = t.order_e() - 1;
  const std::uint64_t d = group.det_log(element);
  for (std::uint64_t z = 0; z < m; ++z) {
    for (std::uint64_t a = 0; a + 1 < t.q(); ++a) {
      if ((z * n + a * (t.q() + 1)) % m != d) continue;
      std::vector<FieldElem> sdiag(n, t.exp(z));
      std::vector<FieldElem> hdiag(n, t.one());
      hdiag[0] = t.exp(a * (t.q() + 1));
      const auto scalar = group.index_of(Mat::diagonal(sdiag));
      const auto rational = group.index_of(Mat::diagonal(hdiag));
      const auto special =
          group.multiply(group.inverse(rational), group.multiply(group.inverse(scalar), element));
      if (group.det_log(special) != 0) continue;
      if (group.multiply(scalar, group.multiply(rational, special)) != element) continue;
      return GlPlusFactorization{scalar, rational, special};
    }
  }
  return std::nullopt;
}

}  // namespace sldist::groups
