#include "sldist/groups/conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sldist::groups {

namespace {

// Subgroup generated by gens, as a bitmap over the master index.
std::size_t closure_size(const EnumeratedGroup& g, const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint8_t> seen(g.size(), 0);
  std::vector<std::uint32_t> stack{g.identity()};
  seen[g.identity()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    for (std::uint32_t s : gens) {
      const std::uint32_t y = g.multiply(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace

std::vector<std::uint32_t> generating_set(const GroupView& view, std::uint64_t seed) {
  const auto members = view.members();
  const EnumeratedGroup& g = view.group();
  if (members.size() == 1) return {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  std::vector<std::uint32_t> gens;
  gens.push_back(members[pick(rng)]);
  gens.push_back(members[pick(rng)]);
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (closure_size(g, gens) == members.size()) return gens;
    gens.push_back(members[pick(rng)]);
  }
  throw std::runtime_error("generating_set: no generating set found for " + to_string(view.kind()));
}

std::uint64_t centralizer_order(const GroupView& view, std::uint32_t element) {
  const EnumeratedGroup& g = view.group();
  const FieldTower& t = g.tower();
  const int n = g.n();
  const auto basis = commutant_basis(t, g.element(element));
  const std::size_t d = basis.size();
  const std::uint64_t q_e = t.order_e();
  const std::uint64_t total = saturating_pow(q_e, d);
  if (total == UINT64_MAX) throw SizeGuardError("centralizer_order: commutant too large");
  std::uint64_t count = 0;
  std::vector<std::uint32_t> digits(d, 0);
  std::vector<FieldElem> entries(static_cast<std::size_t>(n) * n);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::fill(entries.begin(), entries.end(), t.zero());
    for (std::size_t i = 0; i < d; ++i) {
      if (digits[i] == 0) continue;
      const FieldElem coeff{digits[i]};
      const auto be = basis[i].entries();
      for (std::size_t j = 0; j < entries.size(); ++j) entries[j] = t.add(entries[j], t.mul(coeff, be[j]));
    }
    if (auto idx = g.find(Mat(n, entries)); idx && view.contains(*idx)) ++count;
    for (std::size_t i = 0; i < d; ++i) {
      if (++digits[i] < q_e) break;
      digits[i] = 0;
    }
  }
  return count;
}

ConjugacyData conjugacy_classes(const GroupView& view, std::uint64_t seed) {
  const EnumeratedGroup& g = view.group();
  const auto members = view.members();
  ConjugacyData out;
  out.kind = view.kind();
  out.group_order = members.size();
  out.generators = generating_set(view, seed);

  // Flood fill; members are sorted, so the first hit of each orbit is its least element.
  std::vector<std::int32_t> raw(g.size(), -1);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::uint32_t x : members) {
    if (raw[x] >= 0) continue;
    const auto id = static_cast<std::int32_t>(orbits.size());
    std::vector<std::uint32_t> orbit{x};
    raw[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::uint32_t s : out.generators) {
        const std::uint32_t y = g.conjugate(s, orbit[i]);
        if (raw[y] < 0) {
          raw[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<std::uint32_t> order(orbits.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
    return orbits[a].front() < orbits[b].front();
  });

  out.class_of.assign(g.size(), -1);
  out.member_offsets.push_back(0);
  for (std::uint32_t c = 0; c < order.size(); ++c) {
    const auto& orbit = orbits[order[c]];
    for (std::uint32_t x : orbit) out.class_of[x] = static_cast<std::int32_t>(c);
    out.members.insert(out.members.end(), orbit.begin(), orbit.end());
    out.member_offsets.push_back(static_cast<std::uint32_t>(out.members.size()));
    out.representative.push_back(orbit.front());
    out.class_size.push_back(orbit.size());
    const std::uint64_t ord = g.element_order(orbit.front());
    out.element_order.push_back(ord);
    out.exponent = std::lcm(out.exponent, ord);
  }
  out.identity_class = out.class_index(g.identity());

  // Full conjugation of every representative: the orbit must stay in its class
  // and the stabilizer must account for the class size.
  for (std::size_t c = 0; c < out.size(); ++c) {
    if (out.group_order % out.class_size[c] != 0) throw std::logic_error("conjugacy_classes: class size does not divide order");
    const std::uint32_t rep = out.representative[c];
    std::uint64_t stabilizer = 0;
    for (std::uint32_t x : members) {
      const std::uint32_t y = g.conjugate(x, rep);
      if (out.class_of[y] != static_cast<std::int32_t>(c)) throw std::logic_error("conjugacy_classes: class not closed");
      if (y == rep) ++stabilizer;
    }
    if (stabilizer * out.class_size[c] != out.group_order) throw std::logic_error("conjugacy_classes: orbit-stabilizer mismatch");
  }

  out.inverse_class = inverse_class_perm(view, out);
  out.galois_class = galois_class_perm(view, out);
  return out;
}

std::vector<std::uint32_t> galois_class_perm(const GroupView& view, const ConjugacyData& classes) {
  std::vector<std::uint32_t> perm(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::uint32_t image = view.group().frobenius(classes.representative[c]);
    if (!view.contains(image)) throw std::logic_error("galois_class_perm: view not Frobenius stable");
    perm[c] = classes.class_index(image);
  }
  return perm;
}

std::vector<std::uint32_t> inverse_class_perm(const GroupView& view, const ConjugacyData& classes) {
  std::vector<std::uint32_t> perm(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) perm[c] = classes.class_index(view.group().inverse(classes.representative[c]));
  return perm;
}

std::uint32_t class_power(const GroupView& view, const ConjugacyData& classes, std::uint32_t c, std::uint64_t e) {
  return classes.class_index(view.group().power(classes.representative[c], e));
}

}  // namespace sldist::groups
