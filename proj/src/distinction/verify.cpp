#include <algorithm>
#include <set>

#include "sldist/distinction/distinction.hpp"

namespace sldist::distinction {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

class VerdictBuilder {
 public:
  VerdictBuilder(Proposition id, std::string statement, bool asserted) {
    v_.id = id;
    v_.statement = std::move(statement);
    v_.asserted = asserted;
  }

  void check(bool ok, std::int64_t gl_row, std::int64_t sl_row, std::string quantity, std::uint64_t lhs,
             std::uint64_t rhs) {
    ++v_.instances;
    if (ok) return;
    failed_ = true;
    if (v_.counterexamples.size() < kMaxCounterexamples)
      v_.counterexamples.push_back({gl_row, sl_row, std::move(quantity), lhs, rhs});
  }

  /// Out-of-scope instance: recorded when it fails, never decides the verdict.
  void report(bool ok, std::int64_t gl_row, std::int64_t sl_row, std::string quantity, std::uint64_t lhs,
              std::uint64_t rhs) {
    if (!ok && v_.reported.size() < kMaxCounterexamples)
      v_.reported.push_back({gl_row, sl_row, std::move(quantity), lhs, rhs});
  }

  void not_applicable() { na_ = true; }

  Verdict finish() {
    if (na_) {
      v_.status = Status::NotApplicable;
    } else if (failed_) {
      v_.status = v_.asserted ? Status::Fail : Status::Warn;
    } else {
      v_.status = Status::Pass;
    }
    return std::move(v_);
  }

 private:
  Verdict v_;
  bool failed_ = false;
  bool na_ = false;
};

std::uint64_t square_classes(std::uint64_t q) { return q % 2 == 0 ? 1 : 2; }

// Calls f(d, constituent, sl_multiplicity) for constituents of distinguished
// rows that are themselves SL_n(F)-distinguished.
template <class Fn>
void for_distinguished_constituents(const DistinctionContext& ctx, const std::vector<DistinctionData>& data, Fn f) {
  for (const auto& d : data) {
    if (!d.distinguished()) continue;
    for (const auto& c : d.constituents) {
      const auto m = ctx.sl_rows()[c.sl_row].sl_multiplicity;
      if (m > 0) f(d, c, m);
    }
  }
}

Verdict verify_sumrule(const DistinctionContext& ctx, const std::vector<DistinctionData>& data) {
  VerdictBuilder b(Proposition::SumRule,
                   "distinguished pi~: sum of SL_n(F) multiplicities of constituents = |X|, and "
                   "|Z/Y| * mult <= |X| for each constituent",
                   true);
  for (const auto& d : data) {
    if (!d.distinguished()) continue;
    std::uint64_t sum = 0;
    for (const auto& c : d.constituents) {
      const auto m = ctx.sl_rows()[c.sl_row].sl_multiplicity;
      sum += c.multiplicity * m;
      b.check(d.z_over_y() * m <= d.X.size(), d.pi_tilde.row, c.sl_row, "|Z/Y|*mult <= |X|", d.z_over_y() * m,
              d.X.size());
    }
    b.check(sum == d.X.size(), d.pi_tilde.row, -1, "sum of mult = |X|", sum, d.X.size());
  }
  return b.finish();
}

Verdict verify_qpi(const DistinctionContext& ctx, const std::vector<DistinctionData>& data) {
  const bool odd = ctx.n() % 2 == 1;
  const std::uint64_t cap = odd ? 1 : square_classes(ctx.q());
  VerdictBuilder b(Proposition::Qpi,
                   odd ? "n odd: every SL_n(F) multiplicity <= 1"
                       : "n even: mult <= |nm_kernel| <= |F^x/F^x2|, so every multiplicity <= " + std::to_string(cap),
                   true);
  for (const auto& r : ctx.sl_rows())
    b.check(r.sl_multiplicity <= cap, -1, r.pi.row, "mult <= bound", r.sl_multiplicity, cap);
  if (!odd) {
    for_distinguished_constituents(ctx, data, [&](const DistinctionData& d, const Constituent& c, std::uint64_t m) {
      b.check(m <= d.nm_kernel.size(), d.pi_tilde.row, c.sl_row, "mult <= |nm_kernel|", m, d.nm_kernel.size());
      b.check(d.nm_kernel.size() <= cap, d.pi_tilde.row, c.sl_row, "|nm_kernel| <= |F^x/F^x2|", d.nm_kernel.size(),
              cap);
    });
  }
  return b.finish();
}

Verdict verify_qpii(const DistinctionContext& ctx, const std::vector<DistinctionData>& data) {
  VerdictBuilder b(Proposition::Qpii,
                   "n even: mult = |X'|/|Z/Y| = |Ker Nm|/|Coker Nm| = |nm_kernel|/|res(Z)/2X'|, and one GL^+ "
                   "summand carries all SL_n(F)-invariant forms",
                   true);
  if (ctx.n() % 2 == 1) {
    b.not_applicable();
    return b.finish();
  }
  const std::uint64_t q = ctx.q();
  const std::uint64_t f = q - 1;
  for_distinguished_constituents(ctx, data, [&](const DistinctionData& d, const Constituent& c, std::uint64_t m) {
    const auto row = d.pi_tilde.row;
    const auto& X = d.Xprime;
    b.check(m * d.z_over_y() == X.size(), row, c.sl_row, "mult*|Z/Y| = |X'|", m * d.z_over_y(), X.size());

    bool group = std::binary_search(X.begin(), X.end(), 0);
    for (auto x : X)
      for (auto y : X) group = group && std::binary_search(X.begin(), X.end(), (x + y) % f);
    b.check(group, row, c.sl_row, "X' is a group", group, 1);

    // Nm: X' -> Z/Y, alpha -> alpha o Nm; classes of Z/Y are read off by
    // restriction to F^x.
    std::set<std::uint64_t> image;
    std::uint64_t kernel = 0;
    for (auto x : X) {
      const std::uint64_t r = 2 * x % f;
      image.insert(r);
      if (r == 0) ++kernel;
    }
    const std::uint64_t coker = d.z_over_y() / image.size();
    b.check(kernel == d.nm_kernel.size(), row, c.sl_row, "|Ker Nm| = |nm_kernel|", kernel, d.nm_kernel.size());
    b.check(m * coker == kernel, row, c.sl_row, "mult*|Coker Nm| = |Ker Nm|", m * coker, kernel);

    std::set<std::uint64_t> res;
    for (auto z : d.Z) res.insert(z % f);
    const bool contained = std::all_of(image.begin(), image.end(), [&](auto r) { return res.count(r) > 0; });
    b.check(contained, row, c.sl_row, "2X' inside res(Z)", contained, 1);
    b.check(m * (res.size() / image.size()) == d.nm_kernel.size(), row, c.sl_row,
            "mult*|res(Z)/2X'| = |nm_kernel|", m * (res.size() / image.size()), d.nm_kernel.size());

    std::uint64_t carrying = 0;
    for (const auto& g : d.glplus_groups) {
      if (ctx.sl_rows()[g.front()].sl_multiplicity > 0) ++carrying;
    }
    b.check(carrying == 1, row, c.sl_row, "GL^+ summands with invariant forms", carrying, 1);
  });
  return b.finish();
}

Verdict verify_corollary(const DistinctionContext& ctx, const std::vector<DistinctionData>& data) {
  VerdictBuilder b(Proposition::Corollary,
                   "n even, pi~ distinguished: no self-twist by the order-2 character of E^x, or also a self-twist "
                   "chi with chi(-1) = -1, implies mult <= 1",
                   true);
  if (ctx.n() % 2 == 1) {
    b.not_applicable();
    return b.finish();
  }
  const std::uint64_t m_e = ctx.actions().twist_modulus();
  for_distinguished_constituents(ctx, data, [&](const DistinctionData& d, const Constituent& c, std::uint64_t m) {
    // chi_a(-1) = (-1)^a when q is odd; -1 = 1 otherwise.
    const bool eta = m_e % 2 == 0 && std::binary_search(d.Z.begin(), d.Z.end(), m_e / 2);
    const bool odd_twist = m_e % 2 == 0 && std::any_of(d.Z.begin(), d.Z.end(), [](auto z) { return z % 2 == 1; });
    if (!eta || odd_twist) b.check(m <= 1, d.pi_tilde.row, c.sl_row, "mult <= 1", m, 1);
  });
  return b.finish();
}

Verdict verify_formula(const DistinctionContext& ctx, const std::vector<DistinctionData>& data, bool use_q) {
  VerdictBuilder b(use_q ? Proposition::ThmQpi : Proposition::Qpj,
                   use_q ? "generic distinguished pi: mult = q(pi~), the number of strong classes in the weak class"
                         : "generic distinguished pi: mult = |X|/(|Z|/|Y|)",
                   true);
  if (use_q) {
    for (const auto& d : data) {
      if (!d.distinguished()) continue;
      const std::uint64_t qv = d.q_value.value_or(0);
      b.check(qv * d.Z.size() == d.X.size() * d.Y.size(), d.pi_tilde.row, -1, "q(pi~)*|Z| = |X|*|Y|",
              qv * d.Z.size(), d.X.size() * d.Y.size());
    }
  }
  for_distinguished_constituents(ctx, data, [&](const DistinctionData& d, const Constituent& c, std::uint64_t m) {
    const std::uint64_t lhs = use_q ? m : m * d.Z.size();
    const std::uint64_t rhs = use_q ? d.q_value.value_or(0) : d.X.size() * d.Y.size();
    const char* what = use_q ? "mult = q(pi~)" : "mult*|Z| = |X|*|Y|";
    if (ctx.sl_rows()[c.sl_row].generic) {
      b.check(lhs == rhs, d.pi_tilde.row, c.sl_row, what, lhs, rhs);
    } else {
      b.report(lhs == rhs, d.pi_tilde.row, c.sl_row, std::string(what) + " (non-generic)", lhs, rhs);
    }
  });
  return b.finish();
}

Verdict verify_whittaker(const DistinctionContext& ctx, const std::vector<DistinctionData>& data) {
  VerdictBuilder b(Proposition::Whittaker,
                   "distinguished generic pi has a Whittaker model for a nondegenerate psi trivial on N(F)",
                   ctx.n() == 2);
  std::set<std::uint32_t> seen;
  for_distinguished_constituents(ctx, data, [&](const DistinctionData& d, const Constituent& c, std::uint64_t) {
    const auto& r = ctx.sl_rows()[c.sl_row];
    if (!r.generic || !seen.insert(c.sl_row).second) return;
    b.check(r.whittaker_relative, d.pi_tilde.row, c.sl_row, "whittaker_relative", r.whittaker_relative, 1);
  });
  return b.finish();
}

Verdict verify_structure(const DistinctionContext& ctx, const std::vector<DistinctionData>& data) {
  VerdictBuilder b(Proposition::Structure,
                   "Y <= Z groups, Z/Y acts freely on X, alpha o Nm in Z for distinguished pi~, restriction to SL_n(E) multiplicity-free "
                   "with |Z| constituents in |Y| GL^+ orbits of size |Z/Y| and equal multiplicities, "
                   "Gelfand-Graev multiplicity <= 1",
                   true);
  const std::uint64_t m_e = ctx.actions().twist_modulus();
  for (const auto& d : data) {
    const auto row = d.pi_tilde.row;
    bool group = !d.Z.empty() && d.Z.front() == 0;
    for (auto x : d.Z)
      for (auto y : d.Z) group = group && std::binary_search(d.Z.begin(), d.Z.end(), (x + y) % m_e);
    b.check(group, row, -1, "Z is a group", group, 1);
    b.check(!d.Y.empty() && d.Z.size() % d.Y.size() == 0, row, -1, "|Y| divides |Z|", d.Y.size(), d.Z.size());
    b.check(d.free_action, row, -1, "Z/Y acts freely on X", d.free_action, 1);
    if (d.distinguished()) b.check(d.norm_in_z, row, -1, "alpha o Nm in Z", d.norm_in_z, 1);
    b.check(d.Xprime == d.X, row, -1, "X' = X", d.Xprime.size(), d.X.size());
    b.check(d.multiplicity_free, row, -1, "multiplicity-free restriction", d.multiplicity_free, 1);
    b.check(d.constituents.size() == d.Z.size(), row, -1, "constituents = |Z|", d.constituents.size(), d.Z.size());
    b.check(d.glplus_groups.size() == d.Y.size(), row, -1, "GL^+ orbits = |Y|", d.glplus_groups.size(), d.Y.size());
    for (const auto& g : d.glplus_groups) {
      b.check(g.size() == d.z_over_y(), row, g.front(), "GL^+ orbit size = |Z/Y|", g.size(), d.z_over_y());
      const auto m0 = ctx.sl_rows()[g.front()].sl_multiplicity;
      for (auto j : g) {
        const auto m = ctx.sl_rows()[j].sl_multiplicity;
        b.check(m == m0, row, j, "equal mult within GL^+ orbit", m, m0);
      }
    }
  }
  for (const auto& r : ctx.sl_rows())
    b.check(r.max_gelfand_graev <= 1, -1, r.pi.row, "Gelfand-Graev multiplicity <= 1", r.max_gelfand_graev, 1);
  return b.finish();
}

}  // namespace

std::string to_string(Proposition p) {
  switch (p) {
    case Proposition::Gow: return "gow";
    case Proposition::SumRule: return "sumrule";
    case Proposition::Qpi: return "qpi";
    case Proposition::Qpii: return "qpii";
    case Proposition::Corollary: return "corollary";
    case Proposition::Qpj: return "qpj";
    case Proposition::ThmQpi: return "thmqpi";
    case Proposition::Whittaker: return "whittaker";
    case Proposition::Structure: return "structure";
  }
  return "?";
}

Proposition parse_proposition(const std::string& name) {
  for (auto p : kAllPropositions)
    if (to_string(p) == name) return p;
  throw std::invalid_argument("unknown proposition '" + name + "'");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Warn: return "WARN";
    case Status::NotApplicable: return "N/A";
  }
  return "?";
}

bool VerificationReport::ok() const {
  return std::none_of(verdicts.begin(), verdicts.end(),
                      [](const Verdict& v) { return v.asserted && v.status == Status::Fail; });
}

Verdict verify_gow(const DistinctionContext& ctx, const std::vector<DistinctionData>& data) {
  VerdictBuilder b(Proposition::Gow, "dim Hom_{GL_n(F)}(pi~, 1) = 1 if pi~^sigma = pi~^vee, else 0", true);
  for (const auto& d : data) {
    const std::uint64_t expected = gow_distinguished(ctx, d.pi_tilde.row) ? 1 : 0;
    b.check(d.gow_multiplicity == expected, d.pi_tilde.row, -1, "GL_n(F) multiplicity", d.gow_multiplicity, expected);
  }
  return b.finish();
}

VerificationReport verify_propositions(const DistinctionContext& ctx, const std::vector<DistinctionData>& data,
                                       const std::vector<Proposition>& which) {
  VerificationReport report;
  report.n = ctx.n();
  report.q = ctx.q();
  for (auto p : which) {
    switch (p) {
      case Proposition::Gow: report.verdicts.push_back(verify_gow(ctx, data)); break;
      case Proposition::SumRule: report.verdicts.push_back(verify_sumrule(ctx, data)); break;
      case Proposition::Qpi: report.verdicts.push_back(verify_qpi(ctx, data)); break;
      case Proposition::Qpii: report.verdicts.push_back(verify_qpii(ctx, data)); break;
      case Proposition::Corollary: report.verdicts.push_back(verify_corollary(ctx, data)); break;
      case Proposition::Qpj: report.verdicts.push_back(verify_formula(ctx, data, false)); break;
      case Proposition::ThmQpi: report.verdicts.push_back(verify_formula(ctx, data, true)); break;
      case Proposition::Whittaker: report.verdicts.push_back(verify_whittaker(ctx, data)); break;
      case Proposition::Structure: report.verdicts.push_back(verify_structure(ctx, data)); break;
    }
  }
  return report;
}

}  // namespace sldist::distinction
