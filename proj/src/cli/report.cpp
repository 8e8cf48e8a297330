#include "sldist/cli/report.hpp"

#include <sstream>

namespace sldist::cli {

using distinction::DistinctionContext;
using distinction::DistinctionData;
using nlohmann::ordered_json;

namespace {

ordered_json counterexample_json(const distinction::Counterexample& c) {
  ordered_json j;
  j["gl_row"] = c.gl_row >= 0 ? ordered_json(c.gl_row) : ordered_json(nullptr);
  j["sl_row"] = c.sl_row >= 0 ? ordered_json(c.sl_row) : ordered_json(nullptr);
  j["quantity"] = c.quantity;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  return j;
}

std::string counterexample_text(const distinction::Counterexample& c) {
  std::ostringstream s;
  if (c.gl_row >= 0) s << "gl_row=" << c.gl_row << " ";
  if (c.sl_row >= 0) s << "sl_row=" << c.sl_row << " ";
  s << c.quantity << ": " << c.lhs << " vs " << c.rhs;
  return s.str();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "md" || name == "markdown") return Format::Markdown;
  throw std::invalid_argument("unknown format '" + name + "' (json, csv, md)");
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json distinction_json(const DistinctionContext& ctx, const std::vector<DistinctionData>& data) {
  const auto& t = ctx.group().tower();
  ordered_json out;
  out["schema"] = 1;
  out["n"] = ctx.n();
  out["q"] = ctx.q();
  out["p"] = t.p();
  out["k"] = t.k();
  out["order"] = {{"gl_e", ctx.gl_e().size()},
                  {"sl_e", ctx.sl_e().size()},
                  {"gl_f", ctx.gl_f().size()},
                  {"sl_f", ctx.sl_f().size()}};
  out["gl_class_count"] = ctx.gl_table().size();
  out["sl_class_count"] = ctx.sl_table().size();

  auto& gl = out["gl_rows"] = ordered_json::array();
  for (const auto& d : data) {
    ordered_json r;
    r["row"] = d.pi_tilde.row;
    r["degree"] = d.pi_tilde.degree;
    r["sigma"] = d.pi_tilde.sigma;
    r["dual"] = d.pi_tilde.dual;
    r["conjugate_self_dual"] = d.pi_tilde.conjugate_self_dual();
    r["gow_multiplicity"] = d.gow_multiplicity;
    r["generic"] = d.generic;
    r["X"] = d.X;
    r["Xprime"] = d.Xprime;
    r["Z"] = d.Z;
    r["Y"] = d.Y;
    r["nm_kernel"] = d.nm_kernel;
    r["q_value"] = d.q_value ? ordered_json(*d.q_value) : ordered_json(nullptr);
    auto& cs = r["constituents"] = ordered_json::array();
    for (const auto& c : d.constituents) {
      cs.push_back({{"sl_row", c.sl_row},
                    {"multiplicity", c.multiplicity},
                    {"glplus_group", c.glplus_group},
                    {"sl_multiplicity", ctx.sl_rows()[c.sl_row].sl_multiplicity}});
    }
    gl.push_back(std::move(r));
  }

  auto& sl = out["sl_rows"] = ordered_json::array();
  for (const auto& r : ctx.sl_rows()) {
    sl.push_back({{"row", r.pi.row},
                  {"degree", r.pi.degree},
                  {"sigma", r.pi.sigma},
                  {"dual", r.pi.dual},
                  {"sl_multiplicity", r.sl_multiplicity},
                  {"generic", r.generic},
                  {"whittaker_relative", r.whittaker_relative},
                  {"max_gelfand_graev", r.max_gelfand_graev}});
  }

  auto& prof = out["profiles"] = ordered_json::array();
  for (const auto& g : distinction::multiplicity_profiles(ctx, data)) {
    prof.push_back({{"X", g.x}, {"Z", g.z}, {"Y", g.y}, {"sl_multiplicities", g.multiplicities}, {"rows", g.rows}});
  }
  return out;
}

std::string distinction_csv(const DistinctionContext& ctx, const std::vector<DistinctionData>& data) {
  std::ostringstream s;
  s << "n,q,gl_row,gl_degree,conjugate_self_dual,gow_multiplicity,X,Z,Y,nm_kernel,q_value,sl_row,sl_degree,"
       "sl_multiplicity,generic,whittaker_relative\n";
  for (const auto& d : data) {
    for (const auto& c : d.constituents) {
      const auto& r = ctx.sl_rows()[c.sl_row];
      s << ctx.n() << ',' << ctx.q() << ',' << d.pi_tilde.row << ',' << d.pi_tilde.degree << ','
        << d.pi_tilde.conjugate_self_dual() << ',' << d.gow_multiplicity << ',' << d.X.size() << ',' << d.Z.size()
        << ',' << d.Y.size() << ',' << d.nm_kernel.size() << ',';
      if (d.q_value) s << *d.q_value;
      s << ',' << c.sl_row << ',' << r.pi.degree << ',' << r.sl_multiplicity << ',' << r.generic << ','
        << r.whittaker_relative << '\n';
    }
  }
  return s.str();
}

std::string distinction_markdown(const DistinctionContext& ctx, const std::vector<DistinctionData>& data) {
  std::ostringstream s;
  const auto n = ctx.n();
  const auto q = ctx.q();
  s << "# Distinction for n = " << n << ", q = " << q << "\n\n";
  s << "|GL_" << n << "(F_" << q * q << ")| = " << ctx.gl_e().size() << ", |SL_" << n << "(F_" << q * q
    << ")| = " << ctx.sl_e().size() << ".\n\n";

  s << "## Irreducibles of SL_" << n << "(F_" << q * q << ")\n\n";
  s << "| row | degree | dim Hom_SL(F) | generic | relative Whittaker |\n";
  s << "|---:|---:|---:|:---:|:---:|\n";
  for (const auto& r : ctx.sl_rows()) {
    s << "| " << r.pi.row << " | " << r.pi.degree << " | " << r.sl_multiplicity << " | " << (r.generic ? "yes" : "no")
      << " | " << (r.whittaker_relative ? "yes" : "no") << " |\n";
  }

  s << "\n## Distinguished irreducibles of GL_" << n << "(F_" << q * q << ")\n\n";
  s << "| row | degree | X | Z | Y | nm_kernel | q | generic | constituents (sl_row:mult) |\n";
  s << "|---:|---:|---:|---:|---:|---:|---:|:---:|---|\n";
  for (const auto& d : data) {
    if (!d.distinguished()) continue;
    std::ostringstream c;
    for (std::size_t i = 0; i < d.constituents.size(); ++i) {
      const auto j = d.constituents[i].sl_row;
      c << (i ? ", " : "") << j << ":" << ctx.sl_rows()[j].sl_multiplicity;
    }
    s << "| " << d.pi_tilde.row << " | " << d.pi_tilde.degree << " | " << d.X.size() << " | " << d.Z.size() << " | "
      << d.Y.size() << " | " << d.nm_kernel.size() << " | " << d.q_value.value_or(0) << " | "
      << (d.generic ? "yes" : "no") << " | " << c.str() << " |\n";
  }
  return s.str();
}

std::string render_distinction(const DistinctionContext& ctx, const std::vector<DistinctionData>& data,
                               Format format) {
  switch (format) {
    case Format::Json: return dump(distinction_json(ctx, data));
    case Format::Csv: return distinction_csv(ctx, data);
    case Format::Markdown: return distinction_markdown(ctx, data);
  }
  return {};
}

ordered_json verification_json(const distinction::VerificationReport& report) {
  ordered_json out;
  out["schema"] = 1;
  out["n"] = report.n;
  out["q"] = report.q;
  out["ok"] = report.ok();
  auto& vs = out["verdicts"] = ordered_json::array();
  for (const auto& v : report.verdicts) {
    ordered_json j;
    j["id"] = to_string(v.id);
    j["statement"] = v.statement;
    j["asserted"] = v.asserted;
    j["instances"] = v.instances;
    j["status"] = to_string(v.status);
    auto& ce = j["counterexamples"] = ordered_json::array();
    for (const auto& c : v.counterexamples) ce.push_back(counterexample_json(c));
    auto& rep = j["reported"] = ordered_json::array();
    for (const auto& c : v.reported) rep.push_back(counterexample_json(c));
    vs.push_back(std::move(j));
  }
  return out;
}

std::string verification_text(const distinction::VerificationReport& report) {
  using distinction::Proposition;
  using distinction::Status;
  std::ostringstream s;
  for (const auto& v : report.verdicts) {
    s << "[" << to_string(v.status) << "] " << to_string(v.id) << " (" << v.instances << " instances"
      << (v.asserted ? "" : ", experimental") << "): " << v.statement << "\n";
    for (const auto& c : v.counterexamples) s << "    counterexample: " << counterexample_text(c) << "\n";
    for (const auto& c : v.reported) s << "    reported, not asserted: " << counterexample_text(c) << "\n";
    if (v.id == Proposition::Qpi && v.status != Status::NotApplicable) {
      const std::uint64_t cap = report.n % 2 == 1 || report.q % 2 == 0 ? 1 : 2;
      s << "all multiplicities ≤ " << cap << ": " << to_string(v.status) << "\n";
    }
    if (v.id == Proposition::Whittaker) {
      s << "experimental: " << (v.counterexamples.empty() ? "no counterexample" : "COUNTEREXAMPLE FOUND");
      if (v.asserted) s << " (asserted for n = 2)";
      s << "\n";
    }
  }
  s << "overall: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  return s.str();
}

}  // namespace sldist::cli
