#include "sldist/distinction/distinction.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace sldist::distinction {

namespace {

using chartab::SubgroupProfile;
using chartab::WhittakerCharacter;

bool contains(const std::vector<std::uint64_t>& sorted, std::uint64_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Every (n-1)-tuple drawn from pool.
std::vector<WhittakerCharacter> whittaker_tuples(const std::vector<ff::AddChar>& pool, int n) {
  std::vector<WhittakerCharacter> out{WhittakerCharacter{}};
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<WhittakerCharacter> next;
    for (const auto& w : out) {
      for (const auto& psi : pool) {
        auto v = w;
        v.components.push_back(psi);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<ff::AddChar> nontrivial(std::vector<ff::AddChar> v) {
  std::erase_if(v, [](const ff::AddChar& psi) { return psi.is_trivial(); });
  return v;
}

std::vector<std::vector<std::uint32_t>> orbits(const std::vector<std::uint32_t>& points,
                                               const std::vector<std::uint32_t>& perm) {
  std::set<std::uint32_t> left(points.begin(), points.end());
  std::vector<std::vector<std::uint32_t>> out;
  while (!left.empty()) {
    std::vector<std::uint32_t> orbit;
    for (std::uint32_t x = *left.begin(); left.erase(x) != 0; x = perm[x]) orbit.push_back(x);
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

std::shared_ptr<const DistinctionContext> DistinctionContext::build(int n, std::uint32_t q,
                                                                    const ContextOptions& options) {
  if (n < 1) throw std::invalid_argument("DistinctionContext: n must be at least 1");
  const auto [p, k] = ff::split_prime_power(q);
  auto tower = std::make_shared<const ff::FieldTower>(ff::FieldTower::build(p, k));

  std::shared_ptr<DistinctionContext> ctx(new DistinctionContext());
  ctx->group_ = EnumeratedGroup::enumerate(tower, n, options.max_order);
  const auto& group = *ctx->group_;
  const TableSource source = options.source ? options.source : [&options](const GroupView& v, auto classes) {
    return chartab::dixon_schneider(v, std::move(classes), options.table);
  };

  auto gl_classes = std::make_shared<const ConjugacyData>(groups::conjugacy_classes(ctx->gl_e(), options.seed));
  auto sl_classes = std::make_shared<const ConjugacyData>(groups::conjugacy_classes(ctx->sl_e(), options.seed));
  ctx->gl_table_ = std::make_unique<CharTable>(source(ctx->gl_e(), gl_classes));
  ctx->sl_table_ = std::make_unique<CharTable>(source(ctx->sl_e(), sl_classes));
  if (&ctx->gl_table_->classes() != gl_classes.get() || &ctx->sl_table_->classes() != sl_classes.get())
    throw std::logic_error("DistinctionContext: table source returned a table over other classes");

  ctx->actions_ = std::make_unique<chartab::RowActions>(ctx->gl_e(), *ctx->gl_table_);
  ctx->fusion_ = chartab::class_fusion(*sl_classes, *gl_classes);
  ctx->cosets_ = groups::glplus_cosets(group);

  for (std::uint64_t a = 0; a + 1 < q; ++a)
    ctx->alpha_profiles_.push_back(
        chartab::subgroup_profile(ctx->gl_f(), *gl_classes, chartab::DetCharacter{ff::char_of_e(*tower, a)}));

  const auto ne = group.view(groups::GroupKind::NE);
  const auto nondegenerate = whittaker_tuples(nontrivial(ff::addchars_of_e(*tower)), n);
  const auto relative = whittaker_tuples(nontrivial(ff::addchars_trivial_on_f(*tower)), n);
  ctx->gl_whittaker_ = chartab::subgroup_profile(ne, *gl_classes, nondegenerate.front());

  // SL rows.
  const auto& sl = *ctx->sl_table_;
  const auto sl_sigma = chartab::row_permutation(sl, sl_classes->galois_class);
  const auto sl_dual = chartab::row_permutation(sl, sl_classes->inverse_class);
  const auto sl_f_profile = chartab::subgroup_profile(ctx->sl_f(), *sl_classes, chartab::TrivialCharacter{});
  std::vector<SubgroupProfile> gg, rel;
  for (const auto& w : nondegenerate) gg.push_back(chartab::subgroup_profile(ne, *sl_classes, w));
  for (const auto& w : relative) rel.push_back(chartab::subgroup_profile(ne, *sl_classes, w));
  ctx->sl_rows_.resize(sl.size());
  for (std::uint32_t j = 0; j < sl.size(); ++j) {
    auto& r = ctx->sl_rows_[j];
    r.pi = Pi{j, sl.degree(j), sl_sigma[j], sl_dual[j]};
    r.sl_multiplicity = chartab::restriction_multiplicity(sl, j, sl_f_profile);
    for (const auto& prof : gg) {
      const auto m = chartab::restriction_multiplicity(sl, j, prof);
      r.max_gelfand_graev = std::max(r.max_gelfand_graev, m);
      if (m == 1) r.generic = true;
    }
    for (const auto& prof : rel) {
      if (chartab::restriction_multiplicity(sl, j, prof) >= 1) {
        r.whittaker_relative = true;
        break;
      }
    }
  }

  // GL_n(E)^+ is SL_n(E) extended by diag(g^s, 1, ..., 1) for the least such s.
  const auto plus = group.view(groups::GroupKind::GlPlus);
  std::optional<std::uint32_t> conj;
  for (std::uint64_t s = 1; s < tower->order_e() && !conj; ++s) {
    std::vector<ff::FieldElem> diag(n, ff::FieldElem{1});
    diag[0] = tower->exp(s);
    const auto c = group.index_of(groups::Mat::diagonal(diag));
    if (plus.contains(c)) conj = c;
  }
  if (!conj) throw std::logic_error("DistinctionContext: no diagonal generator of GL^+ found");
  std::vector<std::uint32_t> class_perm(sl_classes->size());
  for (std::size_t c = 0; c < sl_classes->size(); ++c)
    class_perm[c] =
        sl_classes->class_index(group.conjugate(group.inverse(*conj), sl_classes->representative[c]));
  ctx->glplus_action_ = chartab::row_permutation(sl, class_perm);
  return ctx;
}

bool gow_distinguished(const DistinctionContext& ctx, std::uint32_t row) {
  return ctx.actions().conjugate_self_dual(row);
}

std::uint64_t gow_multiplicity(const DistinctionContext& ctx, std::uint32_t row) {
  return chartab::restriction_multiplicity(ctx.gl_table(), row, ctx.gl_f_profile(0));
}

DistinctionData compute_sets(const DistinctionContext& ctx, std::uint32_t row) {
  const std::uint64_t q = ctx.q();
  const std::uint64_t m = ctx.actions().twist_modulus();
  DistinctionData d;
  d.pi_tilde = chartab::make_pi_tilde(ctx.gl_table(), ctx.actions(), row);
  d.gow_multiplicity = gow_multiplicity(ctx, row);
  for (std::uint64_t a = 0; a + 1 < q; ++a) {
    if (chartab::restriction_multiplicity(ctx.gl_table(), row, ctx.gl_f_profile(a)) > 0) d.X.push_back(a);
  }
  d.Xprime = d.X;
  for (std::uint64_t a = 0; a < m; ++a) {
    if (d.pi_tilde.twists[a] != row) continue;
    d.Z.push_back(a);
    if (a % (q - 1) == 0) d.Y.push_back(a);
  }

  // Z/Y acts through restriction to F^x.
  std::set<std::uint64_t> restrictions;
  for (auto z : d.Z) restrictions.insert(z % (q - 1));
  bool closed = true;
  for (auto x : d.X)
    for (auto r : restrictions) closed = closed && contains(d.X, (x + r) % (q - 1));
  d.free_action = closed && restrictions.size() == d.z_over_y() && d.X.size() % restrictions.size() == 0;

  d.norm_in_z = true;
  for (auto x : d.X) d.norm_in_z = d.norm_in_z && d.pi_tilde.twists[x * (q + 1) % m] == row;
  d.nm_kernel = norm_map_kernel(ctx, d);
  return d;
}

std::vector<std::uint64_t> norm_map_kernel(const DistinctionContext& ctx, const DistinctionData& data) {
  const std::uint64_t q = ctx.q();
  const std::uint64_t m = ctx.actions().twist_modulus();
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a + 1 < q; ++a) {
    if (2 * a % (q - 1) == 0 && data.pi_tilde.twists[a * (q + 1) % m] == data.pi_tilde.row) out.push_back(a);
  }
  return out;
}

Restriction restrict_to_sl(const DistinctionContext& ctx, std::uint32_t row) {
  Restriction out;
  std::vector<std::uint32_t> rows;
  for (std::uint32_t j = 0; j < ctx.sl_table().size(); ++j) {
    const auto mult = chartab::restricted_inner_product(ctx.gl_table(), row, ctx.sl_table(), j, ctx.fusion());
    if (mult == 0) continue;
    out.constituents.push_back({j, mult, 0});
    rows.push_back(j);
  }
  out.glplus_groups = orbits(rows, ctx.glplus_row_action());
  for (std::uint32_t g = 0; g < out.glplus_groups.size(); ++g) {
    for (auto j : out.glplus_groups[g]) {
      auto it = std::find_if(out.constituents.begin(), out.constituents.end(),
                             [j](const Constituent& c) { return c.sl_row == j; });
      if (it == out.constituents.end()) throw std::logic_error("restrict_to_sl: GL^+ orbit leaves the restriction");
      it->glplus_group = g;
    }
  }
  return out;
}

std::uint64_t sl_multiplicity(const DistinctionContext& ctx, std::uint32_t sl_row) {
  return ctx.sl_rows()[sl_row].sl_multiplicity;
}

std::uint64_t q_of(const DistinctionContext& ctx, std::uint32_t row) {
  const auto& act = ctx.actions();
  if (!act.conjugate_self_dual(row)) throw NotConjugateSelfDual("q_of: row is not conjugate self-dual");
  std::set<std::uint32_t> weak;
  for (std::uint64_t a = 0; a < act.twist_modulus(); ++a) {
    const auto t = act.twist(row, a);
    if (act.conjugate_self_dual(t)) weak.insert(t);
  }
  // Strong classes: orbits under twisting by characters trivial on F^x,
  // which the group of chi_{q-1} generates.
  const std::uint64_t step = ctx.q() - 1;
  std::uint64_t count = 0;
  while (!weak.empty()) {
    ++count;
    for (auto t = *weak.begin(); weak.erase(t) != 0;) t = act.twist(t, step);
  }
  return count;
}

bool genericity(const DistinctionContext& ctx, std::uint32_t sl_row) { return ctx.sl_rows()[sl_row].generic; }

bool whittaker_relative(const DistinctionContext& ctx, std::uint32_t sl_row) {
  return ctx.sl_rows()[sl_row].whittaker_relative;
}

bool generic_gl(const DistinctionContext& ctx, std::uint32_t row) {
  return chartab::restriction_multiplicity(ctx.gl_table(), row, ctx.gl_whittaker_profile()) == 1;
}

DistinctionData analyze(const DistinctionContext& ctx, std::uint32_t row) {
  auto d = compute_sets(ctx, row);
  auto r = restrict_to_sl(ctx, row);
  d.constituents = std::move(r.constituents);
  d.glplus_groups = std::move(r.glplus_groups);
  d.multiplicity_free =
      std::all_of(d.constituents.begin(), d.constituents.end(), [](const Constituent& c) { return c.multiplicity == 1; });
  if (d.pi_tilde.conjugate_self_dual()) d.q_value = q_of(ctx, row);
  d.generic = generic_gl(ctx, row);
  return d;
}

std::vector<DistinctionData> analyze_all(const DistinctionContext& ctx, unsigned threads) {
  const std::size_t rows = ctx.gl_table().size();
  std::vector<DistinctionData> out(rows);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows;) {
      try {
        out[i] = analyze(ctx, static_cast<std::uint32_t>(i));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<ProfileGroup> multiplicity_profiles(const DistinctionContext& ctx, const std::vector<DistinctionData>& data) {
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::vector<std::uint64_t>>,
           std::vector<std::uint32_t>>
      groups;
  for (const auto& d : data) {
    std::vector<std::uint64_t> mults;
    for (const auto& c : d.constituents) mults.push_back(ctx.sl_rows()[c.sl_row].sl_multiplicity);
    std::sort(mults.begin(), mults.end());
    groups[{d.X.size(), d.Z.size(), d.Y.size(), std::move(mults)}].push_back(d.pi_tilde.row);
  }
  std::vector<ProfileGroup> out;
  for (auto& [key, rows] : groups) {
    const auto& [x, z, y, mults] = key;
    out.push_back({x, z, y, mults, std::move(rows)});
  }
  return out;
}

}  // namespace sldist::distinction
