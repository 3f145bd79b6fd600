#include "flagcsm/schubert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "flagcsm/errors.hpp"
#include "flagcsm/symfun.hpp"

namespace flagcsm {

MPoly swap_x(const MPoly& f, int a, int b) {
  const int n = f.n();
  std::vector<int> target(f.nvars());
  for (int v = 0; v < f.nvars(); ++v) target[v] = v;
  std::swap(target[MPoly::x_index(n, a)], target[MPoly::x_index(n, b)]);
  return f.rename(target);
}

MPoly demazure_ab(const MPoly& f, int a, int b) {
  const int n = f.n();
  if (a < 1 || b < 1 || a > n || b > n || a == b) throw UsageError("divided difference indices out of range");
  const int va = MPoly::x_index(n, a), vb = MPoly::x_index(n, b);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    int p = t.m[va], q = t.m[vb];
    if (p == q) continue;
    Mono rest = t.m;
    rest.set(va, 0);
    rest.set(vb, 0);
    int hi = std::max(p, q), lo = std::min(p, q);
    Rational c = p > q ? t.c : Rational(-t.c);
    // p > q: sum_j x_a^{p-1-j} x_b^{q+j}; p < q: the negative with a, b exchanged.
    for (int j = 0; j < hi - lo; ++j) {
      Mono m = rest;
      int ea = hi - 1 - j, eb = lo + j;
      if (p > q) {
        m.set(va, ea);
        m.set(vb, eb);
      } else {
        m.set(va, eb);
        m.set(vb, ea);
      }
      out.push_back({m, c});
    }
  }
  return MPoly::from_terms(n, std::move(out));
}

MPoly demazure_i(const MPoly& f, int i) { return demazure_ab(f, i, i + 1); }

MPoly top_double_schubert(int n) {
  MPoly p(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) p *= MPoly::x(n, i) - MPoly::t(n, j);
  return p;
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

MPoly double_schubert(const Permutation& w) {
  static std::recursive_mutex mu;
  static std::map<Permutation, MPoly> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  MPoly r;
  int i = first_ascent(w);
  if (i == 0)
    r = top_double_schubert(w.n());
  else
    r = demazure_i(double_schubert(w * Permutation::simple(w.n(), i)), i);
  cache.emplace(w, r);
  return r;
}

MPoly double_schubert_via(const Permutation& w, WordStrategy s) {
  std::vector<int> steps;
  Permutation v = w;
  for (;;) {
    int i = s == WordStrategy::FirstAscent ? first_ascent(v) : last_ascent(v);
    if (i == 0) break;
    steps.push_back(i);
    v = v * Permutation::simple(v.n(), i);
  }
  MPoly p = top_double_schubert(w.n());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) p = demazure_i(p, *it);
  return p;
}

MPoly double_schubert_transition(const Permutation& w) {
  static std::recursive_mutex mu;
  static std::map<Permutation, MPoly> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  const int n = w.n();
  MPoly r(n, 1);
  if (!w.is_identity()) {
    int rr = 0;
    for (int i = 1; i < n; ++i)
      if (w(i) > w(i + 1)) rr = i;
    int s = 0;
    for (int j = rr + 1; j <= n; ++j)
      if (w(j) < w(rr)) s = j;
    Permutation v = w * Permutation::transposition(n, rr, s);
    r = (MPoly::x(n, rr) - MPoly::t(n, v(rr))) * double_schubert_transition(v);
    const int lv = v.length();
    for (int i = 1; i < rr; ++i) {
      Permutation vi = v * Permutation::transposition(n, i, rr);
      if (vi.length() == lv + 1) r += double_schubert_transition(vi);
    }
  }
  cache.emplace(w, r);
  return r;
}

MPoly localize(const MPoly& f, const Permutation& w) {
  const int n = f.n();
  if (w.n() != n) throw UsageError("localization point lives in a different S_n");
  std::vector<int> target(f.nvars());
  for (int v = 0; v < f.nvars(); ++v) target[v] = v;
  for (int i = 1; i <= n; ++i) target[MPoly::x_index(n, i)] = MPoly::t_index(n, w(i));
  return f.rename(target);
}

LocVector localize_all(const MPoly& f) {
  const auto& perms = all_perms(f.n());
  LocVector out;
  out.reserve(perms.size());
  for (const auto& u : perms) out.push_back(localize(f, u));
  return out;
}

LocVector loc_demazure(const LocVector& g, int i, int n) {
  const auto& perms = all_perms(n);
  const Permutation si = Permutation::simple(n, i);
  LocVector out(perms.size(), MPoly(n));
  for (std::size_t r = 0; r < perms.size(); ++r) {
    const Permutation& u = perms[r];
    MPoly diff = g[r] - g[(u * si).lex_rank()];
    if (!diff.is_zero()) out[r] = divide_exact_linear(diff, t_diff(n, u(i), u(i + 1)));
  }
  return out;
}

const std::vector<LocVector>& schubert_localization_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<LocVector>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (slot) return *slot;
  const auto& perms = all_perms(n);
  auto table = std::make_unique<std::vector<LocVector>>(perms.size());
  LocVector top;
  for (const auto& u : perms) {
    MPoly p(n, 1);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; i + j <= n; ++j) p *= t_diff(n, u(i), j);
    top.push_back(p);
  }
  std::vector<Permutation> order = perms;
  std::stable_sort(order.begin(), order.end(),
                   [](const Permutation& a, const Permutation& b) { return a.length() > b.length(); });
  for (const auto& w : order) {
    int i = first_ascent(w);
    if (i == 0) {
      (*table)[w.lex_rank()] = top;
    } else {
      const auto& parent = (*table)[(w * Permutation::simple(n, i)).lex_rank()];
      (*table)[w.lex_rank()] = loc_demazure(parent, i, n);
    }
  }
  for (const auto& u : perms) {
    MPoly prod(n, 1);
    for (const auto& f : schubert_self_localization_factors(u)) prod *= f;
    if ((*table)[u.lex_rank()][u.lex_rank()] != prod)
      throw InvariantViolation("diagonal Schubert localization is not the inversion product at " + u.to_string());
  }
  slot = std::move(table);
  return *slot;
}

std::vector<MPoly> schubert_self_localization_factors(const Permutation& u) {
  std::vector<MPoly> f;
  for (int i = 1; i <= u.n(); ++i)
    for (int j = i + 1; j <= u.n(); ++j)
      if (u(i) > u(j)) f.push_back(t_diff(u.n(), u(i), u(j)));
  return f;
}

namespace {

const std::vector<Permutation>& bruhat_linear_extension(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Permutation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& v = cache[n];
  if (v.empty()) {
    v = all_perms(n);
    std::stable_sort(v.begin(), v.end(),
                     [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
  }
  return v;
}

}  // namespace

CohClass expand_in_schubert(const LocVector& f, int n) {
  const auto& table = schubert_localization_table(n);
  const auto& order = bruhat_linear_extension(n);
  CohClass out(Basis::Schubert, true, n);
  std::vector<std::pair<std::size_t, MPoly>> found;
  for (const auto& u : order) {
    const std::size_t ru = u.lex_rank();
    MPoly val = f[ru];
    for (const auto& [rv, c] : found) {
      const MPoly& s = table[rv][ru];
      if (!s.is_zero()) val -= c * s;
    }
    if (val.is_zero()) continue;
    for (const auto& d : schubert_self_localization_factors(u)) val = divide_exact_linear(val, d);
    found.emplace_back(ru, val);
    out.add(u, val);
  }
  return out;
}

CohClass expand_in_schubert(const MPoly& f) { return expand_in_schubert(localize_all(f), f.n()); }

Permutation hook_permutation(int alpha, int beta, int k, int n) {
  if (alpha < 0 || beta < 0) throw UsageError("hook arm and leg must be nonnegative");
  if (beta + 1 > k || alpha + 1 > n - k)
    throw ShapeOverflow("hook (" + std::to_string(alpha + 1) + ",1^" + std::to_string(beta) + ") does not fit in " +
                        std::to_string(k) + "x" + std::to_string(n - k));
  std::vector<int> parts{alpha + 1};
  for (int i = 0; i < beta; ++i) parts.push_back(1);
  return grassmannian_from_partition(Partition(parts), k, n);
}

MPoly giambelli_hook(int alpha, int beta, int k, int n) {
  Permutation w = hook_permutation(alpha, beta, k, n);
  // S_{w^{-1}}(x) at x = -t
  MPoly single = double_schubert_transition(w.inverse()).drop(VarKind::T);
  std::map<int, MPoly> to_neg_t;
  for (int i = 1; i <= n; ++i) to_neg_t.emplace(MPoly::x_index(n, i), -MPoly::t(n, i));
  MPoly r = single.substitute(to_neg_t);
  const auto xk = VarSubset::x_first(n, k);
  const auto ta = VarSubset::t_first(n, k + alpha);
  const auto tb = VarSubset::t_first(n, k - beta);
  for (int a = 0; a <= alpha; ++a)
    for (int b = 0; b <= beta; ++b)
      r += schur_hook(a, b, xk) * elem_sym_neg(alpha - a, ta) * complete_sym_neg(beta - b, tb);
  return r;
}

Permutation molev_permutation(MolevKind kind, int k, int r, int n) {
  if (r == 0) return Permutation::identity(n);
  std::vector<int> parts;
  if (kind == MolevKind::Column)
    parts.assign(r, 1);
  else
    parts.push_back(r);
  if (kind == MolevKind::Column ? (r > k || k >= n) : (r > n - k || k < 1))
    throw ShapeOverflow("c[" + std::to_string(k) + "," + std::to_string(r) + "] is not in S_" + std::to_string(n));
  return grassmannian_from_partition(Partition(parts), k, n);
}

MPoly molev_class(MolevKind kind, int k, int r, int n) {
  if (r < 0) throw UsageError("r must be nonnegative");
  if (r == 0) return MPoly(n, 1);
  molev_permutation(kind, k, r, n);
  MPoly direct(n);
  std::vector<int> idx(r);
  // Enumerate i_1 (<|<=) ... (<|<=) i_r <= k.
  const bool strict = kind == MolevKind::Column;
  std::function<void(int, int, MPoly)> rec = [&](int j, int lo, MPoly acc) {
    if (j == r) {
      direct += acc;
      return;
    }
    for (int i = lo; i <= k; ++i) {
      int tj = strict ? i - j : i + j;  // j is 0-based here
      rec(j + 1, strict ? i + 1 : i, acc * (MPoly::x(n, i) - MPoly::t(n, tj)));
    }
  };
  rec(0, 1, MPoly(n, 1));
  MPoly eh(n);
  const auto xk = VarSubset::x_first(n, k);
  for (int i = 0; i <= r; ++i) {
    if (strict)
      eh += elem_sym(i, xk) * complete_sym_neg(r - i, VarSubset::t_first(n, k - r + 1));
    else
      eh += complete_sym(i, xk) * elem_sym_neg(r - i, VarSubset::t_first(n, k + r - 1));
  }
  if (direct != eh) throw InvariantViolation("the two forms of the Grassmannian class disagree");
  return direct;
}

}  // namespace flagcsm
