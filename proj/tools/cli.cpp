#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "flagcsm/bruhat.hpp"
#include "flagcsm/csm.hpp"
#include "flagcsm/errors.hpp"
#include "flagcsm/grassmann.hpp"
#include "flagcsm/parallel.hpp"
#include "flagcsm/rht.hpp"
#include "flagcsm/rules.hpp"
#include "flagcsm/schubert.hpp"

namespace flagcsm::cli {

namespace {

using nlohmann::json;

struct ClassFlags {
  int n = 0;
  int k = 0;
  std::string u;
  std::string basis = "csm";
  std::string equivariant = "on";
  std::string format = "table";
};

void add_class_flags(CLI::App* cmd, ClassFlags& f) {
  cmd->add_option("--n", f.n, "size of the symmetric group")->required()->check(CLI::Range(2, kMaxPermN));
  cmd->add_option("--k", f.k, "number of variables x_1..x_k")->required();
  cmd->add_option("--u", f.u, "permutation in one-line notation")->required();
  cmd->add_option("--basis", f.basis)->check(CLI::IsMember({"csm", "schubert"}));
  cmd->add_option("--equivariant", f.equivariant)->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--format", f.format)->check(CLI::IsMember({"table", "json"}));
}

Permutation read_perm(const ClassFlags& f) {
  Permutation u = Permutation::parse(f.u);
  if (u.n() != f.n) throw UsageError("--u has " + std::to_string(u.n()) + " letters but --n is " + std::to_string(f.n));
  if (f.k < 1 || f.k >= f.n) throw UsageError("--k must satisfy 1 <= k < n");
  return u;
}

void print_class(const CohClass& c, const Permutation& u, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json j;
    j["basis"] = basis_name(c.basis);
    j["equivariant"] = c.equivariant;
    j["diagonal"] = c.at(u).to_string();
    j["terms"] = json::array();
    for (const auto& [w, coeff] : c.coeffs)
      if (w != u) j["terms"].push_back({{"perm", w.to_string()}, {"coeff", coeff.to_string()}});
    out << j.dump(2) << "\n";
    return;
  }
  out << "diagonal " << u.to_string() << " : " << c.at(u).to_string() << "\n";
  for (const auto& [w, coeff] : c.coeffs)
    if (w != u) out << w.to_string() << " : " << coeff.to_string() << "\n";
}

// csm(u) * [Y(v)] with t = 0, through localizations.
CohClass noneq_csm_times_schubert(const Permutation& u, const Permutation& v) {
  const int n = u.n();
  const LocVector& a = csm_localizations(u);
  const LocVector& b = schubert_localization_table(n)[v.lex_rank()];
  LocVector prod(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) prod[i] = a[i] * b[i];
  return expand_in_csm(prod, n).nonequivariant();
}

bool nonneg_integral(const MPoly& c) {
  if (!c.is_constant()) return false;
  Rational v = c.constant_term();
  return v.get_den() == 1 && v >= 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact CSM and Schubert class calculator for type A flag varieties"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: FLAGCSM_THREADS or 1)")->check(CLI::NonNegativeNumber);

  ClassFlags pf;
  int alpha = 0, beta = 0, pr = 0;
  std::string factor = "schur";
  auto* pieri = app.add_subcommand("pieri", "multiply by a hook class or an e/h Grassmannian class");
  add_class_flags(pieri, pf);
  pieri->add_option("--alpha", alpha)->check(CLI::NonNegativeNumber);
  pieri->add_option("--beta", beta)->check(CLI::NonNegativeNumber);
  pieri->add_option("--factor", factor, "schur: s_hook(x_[k]); schubert-class: [Y(w_hook)]; column / row: e_r / h_r class")
      ->check(CLI::IsMember({"schur", "schubert-class", "column", "row"}));
  pieri->add_option("--r", pr, "degree for --factor column / row")->check(CLI::NonNegativeNumber);

  ClassFlags mf;
  int mr = 1;
  auto* mn = app.add_subcommand("mn", "multiply by the power sum p_r(x_1..x_k)");
  add_class_flags(mn, mf);
  mn->add_option("--r", mr)->required()->check(CLI::PositiveNumber);

  int gn = 0, gk = 0;
  bool covers_only = false, partitions = false;
  auto* graph = app.add_subcommand("graph", "DOT export of the k-Bruhat graph or the partition graph");
  graph->add_option("--n", gn)->required()->check(CLI::Range(2, 8));
  graph->add_option("--k", gk)->required();
  graph->add_flag("--covers-only", covers_only, "omit non-cover edges");
  graph->add_flag("--partitions", partitions, "partition graph of the k x (n-k) rectangle");

  std::string outer, inner = "empty", method = "all";
  int rr = 0;
  auto* rht = app.add_subcommand("rht", "count standard r-rim-hook tableaux");
  rht->add_option("--outer", outer)->required();
  rht->add_option("--inner", inner);
  rht->add_option("--r", rr)->required()->check(CLI::PositiveNumber);
  rht->add_option("--method", method)->check(CLI::IsMember({"enumerate", "limit", "maj", "hook", "all"}));

  int zn = 0, zk = 0, za = 0, zb = 0, zr = 0;
  std::string zlambda, zrule = "pieri";
  auto* gr = app.add_subcommand("grassmann", "parabolic Pieri / MN rules on Gr(k,n)");
  gr->add_option("--n", zn)->required();
  gr->add_option("--k", zk)->required();
  gr->add_option("--lambda", zlambda)->required();
  gr->add_option("--rule", zrule)->check(CLI::IsMember({"pieri", "mn"}));
  gr->add_option("--alpha", za)->check(CLI::NonNegativeNumber);
  gr->add_option("--beta", zb)->check(CLI::NonNegativeNumber);
  gr->add_option("--r", zr)->check(CLI::PositiveNumber);

  int sn = 0;
  std::string mode = "product";
  auto* scan = app.add_subcommand("scan-positivity", "search for negative CSM / Schubert coefficients");
  scan->add_option("--n", sn)->required()->check(CLI::Range(2, 6));
  scan->add_option("--mode", mode)->check(CLI::IsMember({"product", "schubert-expansion"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (threads > 0) set_thread_count(threads);

  try {
    if (*pieri) {
      Permutation u = read_perm(pf);
      const bool eq = pf.equivariant == "on";
      const Basis basis = parse_basis(pf.basis);
      CohClass c;
      if (factor == "schur") {
        c = basis == Basis::Csm ? pieri_hook_csm(u, pf.k, {alpha, beta}, eq) : pieri_hook_schubert(u, pf.k, {alpha, beta}, eq);
      } else {
        if (basis != Basis::Csm) throw UsageError("--factor " + factor + " is only available in the csm basis");
        if (factor == "schubert-class")
          c = pieri_schubertclass_csm(u, pf.k, {alpha, beta});
        else
          c = pieri_eh_localized(u, pf.k, pr, factor == "column" ? MolevKind::Column : MolevKind::Row);
        if (!eq) c = c.nonequivariant();
      }
      print_class(c, u, pf.format, out);
      return kOk;
    }
    if (*mn) {
      Permutation u = read_perm(mf);
      const bool eq = mf.equivariant == "on";
      CohClass c = parse_basis(mf.basis) == Basis::Csm ? mn_csm(u, mf.k, mr, eq) : mn_schubert(u, mf.k, mr, eq);
      print_class(c, u, mf.format, out);
      return kOk;
    }
    if (*graph) {
      if (gk < 1 || gk >= gn) throw UsageError("--k must satisfy 1 <= k < n");
      out << (partitions ? export_partition_dot(gk, gn) : export_dot(gn, gk, covers_only));
      return kOk;
    }
    if (*rht) {
      Partition Lambda = Partition::parse(outer), lambda = Partition::parse(inner);
      std::vector<std::pair<std::string, Integer>> results;
      auto want = [&](const char* m) { return method == m || method == "all"; };
      if (want("enumerate")) results.emplace_back("enumerate", Integer(count_rht(Lambda, lambda, rr)));
      if (want("limit")) results.emplace_back("limit", rht_count_limit(Lambda, lambda, rr));
      if (want("maj")) results.emplace_back("maj", rht_count_maj(Lambda, lambda, rr));
      if (want("hook")) {
        if (!lambda.empty()) {
          if (method == "hook") throw UsageError("the hook formula needs a straight shape (empty --inner)");
        } else {
          results.emplace_back("hook", rht_count_hook(Lambda, rr));
        }
      }
      bool agree = true;
      for (const auto& [name, v] : results) agree = agree && v == results.front().second;
      if (results.size() == 1) {
        out << results.front().second.get_str() << "\n";
      } else {
        for (const auto& [name, v] : results) out << name << " : " << v.get_str() << "\n";
      }
      if (!agree) {
        err << "error: counting methods disagree\n";
        return kInvariant;
      }
      return kOk;
    }
    if (*gr) {
      Partition lambda = Partition::parse(zlambda);
      if (zrule == "pieri") {
        for (const auto& [mu, c] : parabolic_pieri(lambda, zk, zn, {za, zb})) out << mu.to_string() << " : " << c.get_str() << "\n";
      } else {
        if (zr < 1) throw UsageError("--rule mn needs --r");
        for (const auto& [mu, c] : parabolic_mn(lambda, zk, zn, zr)) out << mu.to_string() << " : " << c.to_string() << "\n";
      }
      return kOk;
    }
    if (*scan) {
      const auto& perms = all_perms(sn);
      std::size_t checked = 0;
      if (mode == "product") {
        for (const auto& u : perms)
          for (const auto& v : perms) {
            ++checked;
            for (const auto& [w, c] : noneq_csm_times_schubert(u, v).coeffs)
              if (!nonneg_integral(c)) {
                out << "violation: u=" << u.to_string() << " v=" << v.to_string() << " at " << w.to_string() << " : "
                    << c.to_string() << "\n";
                return kConjecture;
              }
          }
      } else {
        for (const auto& w : perms) {
          ++checked;
          CohClass c = expand_in_schubert(csm_localizations(w), sn).nonequivariant();
          for (const auto& [v, coeff] : c.coeffs)
            if (!nonneg_integral(coeff)) {
              out << "violation: w=" << w.to_string() << " at " << v.to_string() << " : " << coeff.to_string() << "\n";
              return kConjecture;
            }
        }
      }
      out << "checked " << checked << " " << (mode == "product" ? "pairs" : "classes") << ", 0 violations\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeOverflow& e) {
    err << "shape overflow: " << e.what() << "\n";
    return kShape;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}

}  // namespace flagcsm::cli
