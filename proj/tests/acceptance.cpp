// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "flagcsm/bruhat.hpp"
#include "flagcsm/csm.hpp"
#include "flagcsm/grassmann.hpp"
#include "flagcsm/rht.hpp"
#include "flagcsm/rules.hpp"
#include "flagcsm/schubert.hpp"
#include "flagcsm/symfun.hpp"

using namespace flagcsm;

namespace {

// Collects the first few mismatches of a criterion.
struct Report {
  std::vector<std::string> failures;
  std::string note;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FLAGCSM_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  int c = flagcsm::cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

Permutation P(const char* s) { return Permutation::parse(s); }

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Report&)>& body) {
  Report rep;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const std::exception& e) {
    rep.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) rep.failures.push_back("runtime over budget");
  const bool ok = rep.failures.empty();
  failures += !ok;
  std::printf("%s %2d  %s  [%.2f s]%s%s\n", ok ? "PASS" : "FAIL", id, title, secs, rep.note.empty() ? "" : "  ",
              rep.note.c_str());
  for (const auto& f : rep.failures) std::printf("        %s\n", f.c_str());
  std::fflush(stdout);
}

void expect_class(Report& rep, const CohClass& got, const CohClass& want, const std::string& ctx) {
  rep.expect(got == want, ctx + ": " + got.first_difference(want));
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

int main() {
  const Permutation u0 = P("23154");

  criterion(1, "CSM hook Pieri table", 5, [&](Report& rep) {
    std::string out = run_cli({"pieri", "--n", "5", "--k", "2", "--u", "23154", "--alpha", "1", "--beta", "1", "--basis", "csm"});
    rep.expect(out == slurp("pieri_csm_23154_k2_hook21.txt"), "output differs from the transcribed table");
    rep.expect(count_lines(out) == 14, "expected 14 terms including the diagonal");
    auto c = pieri_hook_csm(u0, 2, {1, 1}, true);
    rep.expect(c.at(P("53124")) == MPoly::parse(5, "t2*t3 + t3^2 + t3*t5"), "coefficient at 53124");
    for (const char* w : {"45123", "54132", "35142"}) rep.expect(c.at(P(w)) == MPoly(5, 1), std::string("coefficient at ") + w);
    rep.expect(c.at(u0) == schur_hook(1, 1, VarSubset::t(5, {2, 3})), "diagonal");
    rep.note = std::to_string(c.coeffs.size() - 1) + " off-diagonal terms + diagonal";
  });

  criterion(2, "Schubert hook Pieri example", 5, [&](Report& rep) {
    std::string out =
        run_cli({"pieri", "--n", "5", "--k", "2", "--u", "23154", "--alpha", "1", "--beta", "1", "--basis", "schubert"});
    rep.expect(out == slurp("pieri_schubert_23154_k2_hook21.txt"), "output differs from the transcribed expansion");
    auto c = pieri_hook_schubert(u0, 2, {1, 1}, true);
    rep.expect(c.coeffs.size() == 8, "expected 8 terms");
    rep.expect(c.at(P("25143")) == MPoly::t(5, 2), "coefficient at 25143");
    rep.expect(c.at(P("45123")) == MPoly(5, 1) && c.at(P("35142")) == MPoly(5, 1), "unit coefficients");
  });

  criterion(3, "power sum tables", 5, [&](Report& rep) {
    std::string csm = run_cli({"mn", "--n", "5", "--k", "2", "--u", "23154", "--r", "3"});
    rep.expect(csm == slurp("mn_csm_23154_k2_r3.txt"), "CSM output differs from the transcribed table");
    rep.expect(count_lines(csm) == 12, "expected 12 CSM terms including the diagonal");
    auto c = mn_csm(u0, 2, 3, true);
    for (const char* w : {"54132", "35142", "45123"}) rep.expect(c.at(P(w)) == MPoly(5, -1), std::string("coefficient at ") + w);
    rep.expect(c.at(P("53142")) == MPoly::parse(5, "t2 + t4 + t5"), "coefficient at 53142");
    std::string sch = run_cli({"mn", "--n", "5", "--k", "2", "--u", "23154", "--r", "3", "--basis", "schubert"});
    rep.expect(sch == slurp("mn_schubert_23154_k2_r3.txt"), "Schubert output differs from the transcribed expansion");
    rep.expect(count_lines(sch) == 8, "expected 8 Schubert terms");
    rep.note = std::to_string(c.coeffs.size() - 1) + " off-diagonal CSM terms + diagonal";
  });

  criterion(4, "k-Bruhat graphs on S3", 0, [&](Report& rep) {
    rep.expect(run_cli({"graph", "--n", "3", "--k", "1"}) == slurp("bruhat_s3_k1.dot"), "k = 1");
    rep.expect(run_cli({"graph", "--n", "3", "--k", "2"}) == slurp("bruhat_s3_k2.dot"), "k = 2");
  });

  criterion(5, "rules equal direct products (S4 grid + 50 S5 samples)", 600, [&](Report& rep) {
    std::size_t checked = 0;
    auto check_all = [&](const Permutation& u, int k, HookShape h, int r) {
      const int n = u.n();
      const std::string ctx = u.to_string() + " k=" + std::to_string(k);
      MPoly g = hook_multiplier(n, k, h), p = powersum_multiplier(n, k, r);
      for (bool eq : {true, false}) {
        expect_class(rep, pieri_hook_csm(u, k, h, eq), oracle_product(u, g, Basis::Csm, eq), ctx + " hook csm");
        expect_class(rep, pieri_hook_schubert(u, k, h, eq), oracle_product(u, g, Basis::Schubert, eq), ctx + " hook schubert");
        expect_class(rep, mn_csm(u, k, r, eq), oracle_product(u, p, Basis::Csm, eq), ctx + " mn csm");
        expect_class(rep, mn_schubert(u, k, r, eq), oracle_product(u, p, Basis::Schubert, eq), ctx + " mn schubert");
        checked += 4;
      }
    };
    for (const auto& u : all_perms(4))
      for (int k = 1; k <= 3; ++k) {
        const int n = 4;
        for (int a = 0; a <= 2; ++a)
          for (int b = 0; a + b <= 2; ++b) {
            MPoly g = hook_multiplier(n, k, {a, b});
            for (bool eq : {true, false}) {
              expect_class(rep, pieri_hook_csm(u, k, {a, b}, eq), oracle_product(u, g, Basis::Csm, eq), "hook csm");
              expect_class(rep, pieri_hook_schubert(u, k, {a, b}, eq), oracle_product(u, g, Basis::Schubert, eq),
                           "hook schubert");
              checked += 2;
            }
            if (a + 1 <= n - k && b + 1 <= k) {
              MPoly cls = double_schubert(hook_permutation(a, b, k, n));
              expect_class(rep, pieri_schubertclass_csm(u, k, {a, b}), oracle_product(u, cls, Basis::Csm, true),
                           "hook Schubert class");
              ++checked;
            }
          }
        for (auto kind : {MolevKind::Column, MolevKind::Row})
          for (int r = 1; r <= (kind == MolevKind::Column ? k : n - k); ++r) {
            MPoly cls = double_schubert(molev_permutation(kind, k, r, n));
            expect_class(rep, pieri_eh_localized(u, k, r, kind), oracle_product(u, cls, Basis::Csm, true), "e/h class");
            ++checked;
          }
        for (int r = 1; r <= 3; ++r) {
          MPoly p = powersum_multiplier(n, k, r);
          for (bool eq : {true, false}) {
            expect_class(rep, mn_csm(u, k, r, eq), oracle_product(u, p, Basis::Csm, eq), "mn csm");
            expect_class(rep, mn_schubert(u, k, r, eq), oracle_product(u, p, Basis::Schubert, eq), "mn schubert");
            checked += 2;
          }
        }
      }
    std::mt19937 rng(20261016);
    for (int i = 0; i < 50; ++i) {
      const Permutation& u = all_perms(5)[rng() % 120];
      const int k = 1 + static_cast<int>(rng() % 4);
      const int a = static_cast<int>(rng() % 3);
      const int b = static_cast<int>(rng() % (3 - a));
      const int r = 1 + static_cast<int>(rng() % 3);
      check_all(u, k, {a, b}, r);
    }
    rep.note = std::to_string(checked) + " expansions compared";
  });

  criterion(6, "rigidity lifts and t = 0 specialization (S4 grid)", 0, [&](Report& rep) {
    const int n = 4;
    for (const auto& u : all_perms(n))
      for (int k = 1; k < n; ++k) {
        std::vector<int> A;
        for (int i = 1; i <= k; ++i) A.push_back(i);
        for (int a = 0; a <= 2; ++a)
          for (int b = 0; a + b <= 2; ++b) {
            auto lifted = rigidity_lift_hook(u, A, {a, b}, [&](HookShape h) { return pieri_hook_csm(u, k, h, false); });
            auto eq = pieri_hook_csm(u, k, {a, b}, true);
            expect_class(rep, lifted, eq, "hook lift");
            expect_class(rep, eq.nonequivariant(), pieri_hook_csm(u, k, {a, b}, false), "hook csm t=0");
            expect_class(rep, pieri_hook_schubert(u, k, {a, b}, true).nonequivariant(), pieri_hook_schubert(u, k, {a, b}, false),
                         "hook schubert t=0");
          }
        for (int r = 1; r <= 3; ++r) {
          auto lifted = rigidity_lift_powersum(u, A, r, [&](int rp) { return mn_csm(u, k, rp, false); });
          auto eq = mn_csm(u, k, r, true);
          expect_class(rep, lifted, eq, "power sum lift");
          expect_class(rep, eq.nonequivariant(), mn_csm(u, k, r, false), "mn csm t=0");
          expect_class(rep, mn_schubert(u, k, r, true).nonequivariant(), mn_schubert(u, k, r, false), "mn schubert t=0");
        }
      }
  });

  criterion(7, "path uniqueness, unimodal lifts, equidistribution", 0, [&](Report& rep) {
    std::size_t cycles = 0;
    for (int n : {4, 5})
      for (const auto& u : all_perms(n))
        for (int k = 1; k < n; ++k)
          for (int r = 1; r <= n - 1; ++r)
            for (auto spec : {PathSpec::decreasing(r), PathSpec::increasing(r)})
              for (const auto& [w, ps] : enumerate_paths(u, k, spec, false)) rep.expect(ps.size() == 1, "monotone path not unique");
    for (const auto& u : all_perms(5))
      for (int k = 1; k < 5; ++k)
        for (const auto& eta : cycles_through(u, k, 4)) {
          ++cycles;
          auto path = unique_unimodal_path(u, eta, k);
          const Permutation e = eta.as_permutation(5);
          rep.expect(path.end() == u * e && path.de_count == e.k_height(k), "unimodal path for " + eta.to_string());
        }
    for (const auto& u : all_perms(4))
      for (int k = 1; k < 4; ++k)
        for (int a = 0; a <= 3; ++a)
          for (int b = 0; a + b <= 3; ++b) {
            auto pk = enumerate_paths(u, k, PathSpec::peakless(a, b), false);
            auto um = enumerate_paths(u, k, PathSpec::unimodal(a, b), false);
            bool same = pk.size() == um.size();
            for (const auto& [w, ps] : pk) same = same && um.count(w) && um.at(w).size() == ps.size();
            rep.expect(same, "peakless/unimodal counts differ from " + u.to_string());
          }
    rep.note = std::to_string(cycles) + " admissible cycles in S5";
  });

  criterion(8, "Grassmannian rules", 0, [&](Report& rep) {
    auto lam = Partition::parse("3,2,0");
    const auto box = Partition::parse("4,4,4");
    rep.expect(parabolic_pieri(lam, 3, 7, {0, 2}).at(box) == 2, "e3");
    rep.expect(parabolic_pieri(lam, 3, 7, {2, 0}).at(box) == 4, "h3");
    rep.expect(parabolic_pieri(lam, 3, 7, {1, 1}).at(box) == 8, "s21");
    std::string mn = run_cli({"grassmann", "--n", "9", "--k", "4", "--lambda", "4,2,2,0", "--rule", "mn", "--r", "3"});
    rep.expect(mn == slurp("grassmann_mn_4220_r3.txt"), "MN display");
    rep.expect(parabolic_mn(Partition::parse("4,2,2,0"), 4, 9, 3).at(Partition::parse("4,4,3,0")) == MPoly(9, -1), "-1 at 4,4,3,0");
    const int k = 2, n = 5;
    for (const auto& l : partitions_in_rectangle(k, n)) {
      const auto wl = grassmannian_from_partition(l, k, n);
      for (int r = 1; r <= 3; ++r) {
        auto direct = parabolic_mn(l, k, n, r);
        auto pushed = pushforward(mn_schubert(wl, k, r, true), k);
        bool same = direct.size() == pushed.size();
        for (const auto& [mu, c] : pushed) same = same && direct.count(mu.padded(k)) && direct.at(mu.padded(k)) == c;
        rep.expect(same, "MN pushforward at " + l.to_string() + " r=" + std::to_string(r));
      }
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) {
          auto direct = parabolic_pieri(l, k, n, {a, b});
          auto pushed = pushforward(pieri_hook_csm(wl, k, {a, b}, false), k);
          bool same = direct.size() == pushed.size();
          for (const auto& [mu, c] : pushed)
            same = same && direct.count(mu.padded(k)) && MPoly(n, Rational(direct.at(mu.padded(k)))) == c;
          rep.expect(same, "Pieri pushforward at " + l.to_string());
        }
    }
  });

  criterion(9, "rim hook tableau counts", 120, [&](Report& rep) {
    const auto outer = Partition::parse("4,4,1"), inner = Partition::parse("1");
    rep.expect(count_rht(outer, inner, 2) == 4 && rht_count_limit(outer, inner, 2) == 4 && rht_count_maj(outer, inner, 2) == 4,
               "(4,4,1)/(1)");
    std::size_t shapes = 0;
    auto rect = partitions_in_rectangle(3, 7);
    for (int r : {2, 3})
      for (const auto& o : rect)
        for (const auto& i : rect) {
          if (!o.contains(i) || (o.size() - i.size()) % r) continue;
          ++shapes;
          const Integer cnt = static_cast<long>(count_rht(o, i, r));
          rep.expect(rht_count_limit(o, i, r) == cnt && rht_count_maj(o, i, r) == cnt,
                     o.to_string() + " / " + i.to_string() + " r=" + std::to_string(r));
        }
    std::size_t straight = 0, zeros = 0;
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& parts, int left, int cap) {
      const int size = [&] {
        int s = 0;
        for (int p : parts) s += p;
        return s;
      }();
      if (size > 0)
        for (int r : {2, 3}) {
          if (size % r) continue;
          Partition shape(parts);
          ++straight;
          const Integer cnt = static_cast<long>(count_rht(shape, Partition(), r));
          zeros += cnt == 0;
          rep.expect(rht_count_hook(shape, r) == cnt, "hook formula at " + shape.to_string() + " r=" + std::to_string(r));
        }
      for (int p = std::min(left, cap); p >= 1; --p) {
        parts.push_back(p);
        rec(parts, left - p, p);
        parts.pop_back();
      }
    };
    std::vector<int> parts;
    rec(parts, 12, 12);
    rep.note = std::to_string(shapes) + " skew shapes, " + std::to_string(straight) + " straight (" + std::to_string(zeros) +
               " zero counts)";
  });

  criterion(10, "localization certificates on S4", 0, [&](Report& rep) {
    const Permutation id = Permutation::identity(4);
    for (const auto& w : all_perms(4)) {
      MPoly at = localize(csm_class(w), id);
      rep.expect(w == id ? at == csm_identity_denominator(4) : at.is_zero(), "csm(" + w.to_string() + ") at id");
      MPoly c = csm_class(w);
      auto low = expand_in_schubert(c.homogeneous_part(c.min_degree()));
      rep.expect(low.coeffs.size() == 1 && low.at(w) == MPoly(4, 1), "lowest degree of csm(" + w.to_string() + ")");
    }
  });

  criterion(11, "positivity scans", 0, [&](Report& rep) {
    int code = 0;
    std::string s3 = run_cli({"scan-positivity", "--n", "3", "--mode", "product"}, &code);
    rep.expect(code == 0 && s3 == "checked 36 pairs, 0 violations\n", "product scan S3: " + s3);
    std::string s4 = run_cli({"scan-positivity", "--n", "4", "--mode", "product"}, &code);
    rep.expect(code == 0 && s4 == "checked 576 pairs, 0 violations\n", "product scan S4: " + s4);
    std::string e4 = run_cli({"scan-positivity", "--n", "4", "--mode", "schubert-expansion"}, &code);
    rep.expect(code == 0 && e4 == "checked 24 classes, 0 violations\n", "Schubert expansion scan S4: " + e4);
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
