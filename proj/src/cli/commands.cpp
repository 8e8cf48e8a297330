#include "sldist/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <ostream>

#include "sldist/cli/cache.hpp"

namespace sldist::cli {

namespace {

void log_event(const CacheEvent& ev, std::ostream& log) {
  switch (ev.status) {
    case CacheStatus::Hit: log << "cache hit (verified): " << ev.path.string() << "\n"; break;
    case CacheStatus::Miss: log << "cache miss, computed: " << ev.path.string() << "\n"; break;
    case CacheStatus::Corrupt:
      log << "cache entry rejected (" << ev.reason << "), recomputed: " << ev.path.string() << "\n";
      break;
  }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path);
}

std::shared_ptr<const ff::FieldTower> tower_of(const RunConfig& config) {
  const auto [p, k] = ff::split_prime_power(config.q);
  return std::make_shared<const ff::FieldTower>(ff::FieldTower::build(p, k));
}

}  // namespace

void RunConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  try {
    ff::split_prime_power(q);
  } catch (const ff::FieldError& e) {
    throw std::invalid_argument(e.what());
  }
}

int cmd_build_table(const RunConfig& config, groups::GroupKind kind, std::ostream& out) {
  config.validate();
  const auto group = groups::EnumeratedGroup::enumerate(tower_of(config), config.n, config.max_group_order);
  const auto view = group->view(kind);
  auto classes = std::make_shared<const groups::ConjugacyData>(groups::conjugacy_classes(view, config.seed));
  CacheEvent ev;
  const auto table =
      cached_table(resolve_cache_dir(config.cache_dir), view, classes, config.seed, chartab::TableOptions{}, &ev);
  log_event(ev, out);
  std::uint64_t degree_sum = 0;
  for (auto d : table.degrees()) degree_sum += d * d;
  out << groups::to_string(kind) << " n=" << config.n << " q=" << config.q << ": order " << view.size() << ", "
      << table.size() << " rows, exponent " << table.exponent() << ", sum of squared degrees " << degree_sum << "\n";
  return kOk;
}

std::shared_ptr<const distinction::DistinctionContext> cached_context(const RunConfig& config, std::ostream& log) {
  config.validate();
  distinction::ContextOptions opts;
  opts.max_order = config.max_group_order;
  opts.seed = config.seed;
  const auto dir = resolve_cache_dir(config.cache_dir);
  opts.source = [&](const groups::GroupView& view, std::shared_ptr<const groups::ConjugacyData> classes) {
    CacheEvent ev;
    auto table = cached_table(dir, view, std::move(classes), config.seed, opts.table, &ev);
    log_event(ev, log);
    return table;
  };
  return distinction::DistinctionContext::build(config.n, config.q, opts);
}

int cmd_distinction(const RunConfig& config, std::ostream& out) {
  // Cache messages go to stderr when the report itself is on stdout.
  std::ostream& log = config.out.empty() ? std::cerr : out;
  const auto ctx = cached_context(config, log);
  const auto data = distinction::analyze_all(*ctx);
  write_output(config.out, render_distinction(*ctx, data, config.format), out);
  return kOk;
}

int cmd_verify(const RunConfig& config, const std::vector<distinction::Proposition>& props, std::ostream& out) {
  const auto ctx = cached_context(config, out);
  const auto data = distinction::analyze_all(*ctx);
  const auto report = distinction::verify_propositions(*ctx, data, props);
  out << "verify n=" << config.n << " q=" << config.q << "\n" << verification_text(report);
  if (!config.out.empty()) write_output(config.out, dump(verification_json(report)), out);
  return report.ok() ? kOk : kAssertionFailed;
}

}  // namespace sldist::cli
