#include "flagcsm/csm.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "flagcsm/errors.hpp"
#include "flagcsm/parallel.hpp"

namespace flagcsm {

MPoly dl_operator(const MPoly& f, int i) {
  if (i < 1 || i >= f.n()) throw UsageError("operator index out of range");
  return demazure_i(f, i) - swap_x(f, i, i + 1);
}

LocVector loc_dl(const LocVector& g, int i, int n) {
  const auto& perms = all_perms(n);
  const Permutation si = Permutation::simple(n, i);
  LocVector out(perms.size(), MPoly(n));
  for (std::size_t r = 0; r < perms.size(); ++r) {
    const Permutation& u = perms[r];
    const MPoly& swapped = g[(u * si).lex_rank()];
    MPoly diff = g[r] - swapped;
    out[r] = -swapped;
    if (!diff.is_zero()) out[r] += divide_exact_linear(diff, t_diff(n, u(i), u(i + 1)));
  }
  return out;
}

namespace {

int first_ascent(const Permutation& w) {
  for (int i = 1; i < w.n(); ++i)
    if (w(i) < w(i + 1)) return i;
  return 0;
}

int last_ascent(const Permutation& w) {
  for (int i = w.n() - 1; i >= 1; --i)
    if (w(i) < w(i + 1)) return i;
  return 0;
}

}  // namespace

MPoly csm_class(const Permutation& w) {
  static std::recursive_mutex mu;
  static std::map<Permutation, MPoly> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  int i = first_ascent(w);
  MPoly r = i == 0 ? top_double_schubert(w.n()) : dl_operator(csm_class(w * Permutation::simple(w.n(), i)), i);
  cache.emplace(w, r);
  return r;
}

MPoly csm_class_via(const Permutation& w, WordStrategy s) {
  std::vector<int> steps;
  Permutation v = w;
  for (;;) {
    int i = s == WordStrategy::FirstAscent ? first_ascent(v) : last_ascent(v);
    if (i == 0) break;
    steps.push_back(i);
    v = v * Permutation::simple(v.n(), i);
  }
  MPoly p = top_double_schubert(w.n());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) p = dl_operator(p, *it);
  return p;
}

const LocVector& csm_localizations(const Permutation& w) {
  static std::recursive_mutex mu;
  static std::map<Permutation, std::unique_ptr<LocVector>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto& slot = cache[w];
  if (slot) return *slot;
  const int n = w.n();
  int i = first_ascent(w);
  LocVector v;
  if (i == 0) {
    for (const auto& u : all_perms(n)) {
      MPoly p(n, 1);
      for (int a = 1; a <= n; ++a)
        for (int j = 1; a + j <= n; ++j) p *= t_diff(n, u(a), j);
      v.push_back(p);
    }
  } else {
    v = loc_dl(csm_localizations(w * Permutation::simple(n, i)), i, n);
  }
  slot = std::make_unique<LocVector>(std::move(v));
  return *slot;
}

MPoly csm_identity_denominator(int n) {
  MPoly d(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) d *= MPoly(n, 1) + t_diff(n, i, j);
  return d;
}

CohClass expand_in_csm(const LocVector& f, int n) {
  const auto& perms = all_perms(n);
  std::vector<MPoly> factors;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) factors.push_back(MPoly(n, 1) + t_diff(n, i, j));
  const std::size_t id = 0;  // identity has lex rank 0

  std::vector<std::vector<Permutation>> levels(n * (n - 1) / 2 + 1);
  for (const auto& w : perms) levels[w.length()].push_back(w);

  std::vector<MPoly> raw(perms.size(), MPoly(n));
  std::map<Permutation, LocVector> prev;
  prev.emplace(Permutation::identity(n), f);
  raw[id] = f[id];
  for (std::size_t len = 1; len < levels.size(); ++len) {
    const auto& level = levels[len];
    std::vector<LocVector> cur(level.size());
    // T_w = T_i T_{s_i w} for a left descent i of w.
    parallel_for(level.size(), [&](std::size_t j) {
      const Permutation& w = level[j];
      int i = w.left_descents().front();
      cur[j] = loc_dl(prev.at(Permutation::simple(n, i) * w), i, n);
    });
    std::map<Permutation, LocVector> next;
    for (std::size_t j = 0; j < level.size(); ++j) {
      raw[level[j].lex_rank()] = cur[j][id];
      next.emplace(level[j], std::move(cur[j]));
    }
    prev = std::move(next);
  }

  CohClass out(Basis::Csm, true, n);
  for (const auto& w : perms) {
    MPoly c = raw[w.lex_rank()];
    if (c.is_zero()) continue;
    for (const auto& d : factors) c = divide_exact_linear(c, d);
    out.add(w, c);
  }
  return out;
}

CohClass expand_in_csm(const MPoly& f) { return expand_in_csm(localize_all(f), f.n()); }

namespace {

using Values = std::vector<Rational>;

struct OperatorTables {
  // by_simple[i][r]: lex rank of perms[r] * s_i.
  std::vector<std::vector<std::size_t>> by_simple;
  // Ranks grouped by length, and for each w a left descent i with the rank of s_i w.
  std::vector<std::vector<std::size_t>> levels;
  std::vector<int> descent;
  std::vector<std::size_t> below;
};

const OperatorTables& operator_tables(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<OperatorTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (slot) return *slot;
  const auto& perms = all_perms(n);
  auto t = std::make_unique<OperatorTables>();
  t->by_simple.resize(n);
  for (int i = 1; i < n; ++i) {
    const Permutation si = Permutation::simple(n, i);
    for (const auto& u : perms) t->by_simple[i].push_back((u * si).lex_rank());
  }
  t->levels.resize(n * (n - 1) / 2 + 1);
  t->descent.assign(perms.size(), 0);
  t->below.assign(perms.size(), 0);
  for (std::size_t r = 0; r < perms.size(); ++r) {
    const Permutation& w = perms[r];
    t->levels[w.length()].push_back(r);
    if (w.length() == 0) continue;
    const int i = w.left_descents().front();
    t->descent[r] = i;
    t->below[r] = (Permutation::simple(n, i) * w).lex_rank();
  }
  slot = std::move(t);
  return *slot;
}

Values values_dl(const Values& g, int i, int n, const Values& pt) {
  const auto& perms = all_perms(n);
  const auto& swap = operator_tables(n).by_simple[i];
  Values out(g.size());
  for (std::size_t r = 0; r < g.size(); ++r) {
    const Rational& other = g[swap[r]];
    out[r] = -other;
    if (g[r] != other) out[r] += (g[r] - other) / (pt[perms[r](i)] - pt[perms[r](i + 1)]);
  }
  return out;
}

// f at x_i = pt[v(i)], t_i = pt[i].
Rational eval_at(const MPoly& f, const Permutation* v, const Values& pt) {
  const int n = f.n();
  std::vector<Rational> var(2 * n);
  for (int i = 1; i <= n; ++i) {
    var[MPoly::x_index(n, i)] = v ? pt[(*v)(i)] : Rational(0);
    var[MPoly::t_index(n, i)] = pt[i];
  }
  Rational sum = 0;
  for (const auto& term : f.terms()) {
    Rational p = term.c;
    for (int k = 0; k < 2 * n; ++k)
      for (int e = 0; e < term.m[k]; ++e) p *= var[k];
    sum += p;
  }
  return sum;
}

// T_w(f)|_id / prod_{i<j}(1 + t_i - t_j) at t = pt, by lex rank of w.
Values csm_coefficients_at(const Values& loc, int n, const Values& pt) {
  const auto& tab = operator_tables(n);
  Rational denom = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) denom *= 1 + pt[i] - pt[j];
  std::vector<Values> all(loc.size());
  all[0] = loc;
  Values out(loc.size());
  for (std::size_t len = 1; len < tab.levels.size(); ++len) {
    for (std::size_t r : tab.levels[len]) all[r] = values_dl(all[tab.below[r]], tab.descent[r], n, pt);
    for (std::size_t r : tab.levels[len - 1]) {
      out[r] = all[r][0] / denom;
      Values().swap(all[r]);
    }
  }
  for (std::size_t r : tab.levels.back()) out[r] = all[r][0] / denom;
  return out;
}

void lattice(int n, int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int a = 0; a <= left; ++a) {
    cur.push_back(a);
    lattice(n, left - a, cur, out);
    cur.pop_back();
  }
}

constexpr int kSpacing = 100;

Values lattice_point(const std::vector<int>& a) {
  Values pt(a.size() + 1);
  for (std::size_t i = 1; i <= a.size(); ++i) pt[i] = kSpacing * static_cast<long>(i) + a[i - 1];
  return pt;
}

}  // namespace

std::vector<Rational> csm_values_at(const Permutation& w, const std::vector<Rational>& pt) {
  const int n = w.n();
  std::vector<int> steps;
  for (Permutation v = w;;) {
    const int i = first_ascent(v);
    if (i == 0) break;
    steps.push_back(i);
    v = v * Permutation::simple(n, i);
  }
  const auto& perms = all_perms(n);
  Values vals(perms.size(), Rational(1));
  for (std::size_t r = 0; r < perms.size(); ++r)
    for (int a = 1; a <= n; ++a)
      for (int j = 1; a + j <= n; ++j) vals[r] *= pt[perms[r](a)] - pt[j];
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) vals = values_dl(vals, *it, n, pt);
  return vals;
}

CohClass expand_in_csm_sampled(int n, int max_degree, const SampledLocalizations& values) {
  CohClass out(Basis::Csm, true, n);
  if (max_degree < 0) return out;
  if (max_degree >= kSpacing - 1) throw UsageError("degree bound too large for the sample lattice");
  const auto& perms = all_perms(n);
  std::vector<std::vector<int>> pts;
  std::vector<int> cur;
  lattice(n, max_degree, cur, pts);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t p = 0; p < pts.size(); ++p) index.emplace(pts[p], p);

  // Extra point off the lattice for the consistency check.
  std::vector<int> extra(n, 0);
  extra[0] = max_degree + 1;
  if (n > 1) extra[1] = 1;

  std::vector<Values> samples(pts.size() + 1);  // samples[p][rank w]
  parallel_for(samples.size(), [&](std::size_t p) {
    const Values pt = lattice_point(p < pts.size() ? pts[p] : extra);
    Values loc = values(pt);
    if (loc.size() != perms.size()) throw UsageError("localization vector has the wrong length");
    samples[p] = csm_coefficients_at(loc, n, pt);
  });

  // Forward differences along each axis in place: table[a] becomes Delta^a f(base).
  std::vector<std::vector<std::size_t>> minus(n, std::vector<std::size_t>(pts.size()));
  std::vector<std::vector<std::size_t>> order(n);
  for (int i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < pts.size(); ++p) {
      if (pts[p][i] == 0) continue;
      auto b = pts[p];
      --b[i];
      minus[i][p] = index.at(b);
      order[i].push_back(p);
    }
    std::stable_sort(order[i].begin(), order[i].end(), [&](std::size_t a, std::size_t b) { return pts[a][i] > pts[b][i]; });
  }

  // Newton basis prod_i binom(t_i - base_i, a_i).
  std::vector<std::vector<MPoly>> binom(n + 1, std::vector<MPoly>(max_degree + 1));
  for (int i = 1; i <= n; ++i) {
    binom[i][0] = MPoly(n, 1);
    for (int e = 1; e <= max_degree; ++e)
      binom[i][e] = binom[i][e - 1] * (MPoly::t(n, i) - MPoly(n, Rational(kSpacing * i + e - 1))) * Rational(1, e);
  }
  std::vector<MPoly> newton(pts.size());
  for (std::size_t p = 0; p < pts.size(); ++p) {
    newton[p] = MPoly(n, 1);
    for (int i = 1; i <= n; ++i)
      if (pts[p][i - 1]) newton[p] *= binom[i][pts[p][i - 1]];
  }

  const Values check_pt = lattice_point(extra);
  std::vector<MPoly> coeffs(perms.size());
  parallel_for(perms.size(), [&](std::size_t r) {
    Values table(pts.size());
    for (std::size_t p = 0; p < pts.size(); ++p) table[p] = samples[p][r];
    for (int i = 0; i < n; ++i)
      for (int k = 1; k <= max_degree; ++k)
        for (std::size_t p : order[i])
          if (pts[p][i] >= k) table[p] -= table[minus[i][p]];
    MPoly c(n);
    for (std::size_t p = 0; p < pts.size(); ++p)
      if (table[p] != 0) c += newton[p] * table[p];
    if (eval_at(c, nullptr, check_pt) != samples.back()[r])
      throw InvariantViolation("sampled expansion exceeds its degree bound");
    coeffs[r] = std::move(c);
  });
  for (std::size_t r = 0; r < perms.size(); ++r) out.add(perms[r], coeffs[r]);
  return out;
}

CohClass oracle_product(const Permutation& u, const MPoly& g, Basis basis, bool equivariant) {
  if (u.n() != g.n()) throw UsageError("class and multiplier live in different rings");
  const int n = u.n();
  if (basis == Basis::Schubert) {
    CohClass c = expand_in_schubert(double_schubert(u) * g);
    return equivariant ? c : c.nonequivariant();
  }
  if (g.involves(VarKind::Q) || g.involves(VarKind::Z)) throw UsageError("multiplier must be a polynomial in x and t");
  // (csm(u) g)|_v = csm(u)|_v g|_v; csm_class(u) has degree <= n(n-1)/2, so
  // every coefficient has degree <= deg g.
  const auto& perms = all_perms(n);
  CohClass c = expand_in_csm_sampled(n, g.degree(), [&](const Values& pt) {
    Values v = csm_values_at(u, pt);
    for (std::size_t r = 0; r < v.size(); ++r)
      if (v[r] != 0) v[r] *= eval_at(g, &perms[r], pt);
    return v;
  });
  return equivariant ? c : c.nonequivariant();
}

}  // namespace flagcsm
