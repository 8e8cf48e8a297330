// sldist: character tables of GL_n and SL_n over F_{q^2} and the
// SL_n(F)-distinction multiplicities computed from them.

#include <CLI11.hpp>
#include <iostream>

#include "sldist/cli/commands.hpp"

using namespace sldist;

namespace {

void add_common(CLI::App* cmd, cli::RunConfig& config) {
  cmd->add_option("--n", config.n, "matrix size")->required();
  cmd->add_option("--q", config.q, "order of F; E has order q^2")->required();
  cmd->add_option("--max-order", config.max_group_order, "refuse groups larger than this");
  cmd->add_option("--seed", config.seed, "seed for generating-set selection");
  cmd->add_option("--cache-dir", config.cache_dir, "table cache (default $SLDIST_CACHE_DIR or ./.sldist-cache)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinction of SL_n(E) representations by SL_n(F) over finite fields"};
  app.require_subcommand(1);

  cli::RunConfig config;
  std::string group = "gl-e";
  std::string format = "json";
  std::vector<std::string> props = {"all"};

  auto* build = app.add_subcommand("build-table", "build or reload one character table");
  add_common(build, config);
  build->add_option("--group", group, "gl-e, sl-e, gl-f, sl-f, gl-plus, n-e, center");

  auto* dist = app.add_subcommand("distinction", "per-representation distinction report");
  add_common(dist, config);
  dist->add_option("--format", format, "json, csv or md");
  dist->add_option("--out", config.out, "write the report here instead of stdout");

  auto* verify = app.add_subcommand("verify", "check the multiplicity statements");
  add_common(verify, config);
  verify->add_option("--prop", props, "gow sumrule qpi qpii corollary qpj thmqpi whittaker structure all")
      ->delimiter(',');
  verify->add_option("--out", config.out, "also write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return cli::cmd_build_table(config, groups::parse_group_kind(group), std::cout);
    if (*dist) {
      config.format = cli::parse_format(format);
      return cli::cmd_distinction(config, std::cout);
    }
    std::vector<distinction::Proposition> selected;
    for (const auto& p : props) {
      if (p == "all") {
        selected.assign(std::begin(distinction::kAllPropositions), std::end(distinction::kAllPropositions));
        break;
      }
      selected.push_back(distinction::parse_proposition(p));
    }
    return cli::cmd_verify(config, selected, std::cout);
  } catch (const groups::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kSizeGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  }
}
