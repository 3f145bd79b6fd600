#include "flagcsm/symfun.hpp"

#include <algorithm>
#include <functional>

#include "flagcsm/errors.hpp"

namespace flagcsm {

VarSubset::VarSubset(VarKind kind_, int n_, std::vector<int> idx) : kind(kind_), n(n_), indices(std::move(idx)) {
  if (kind != VarKind::X && kind != VarKind::T) throw UsageError("variable subsets hold x or t variables");
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw UsageError("repeated index in variable subset");
  for (int i : indices)
    if (i < 1 || i > n) throw UsageError("variable subset index out of range");
}

VarSubset VarSubset::x_first(int n, int k) {
  std::vector<int> v;
  for (int i = 1; i <= k; ++i) v.push_back(i);
  return x(n, std::move(v));
}

VarSubset VarSubset::t_first(int n, int k) {
  std::vector<int> v;
  for (int i = 1; i <= k; ++i) v.push_back(i);
  return t(n, std::move(v));
}

MPoly VarSubset::var(int i) const {
  return kind == VarKind::X ? MPoly::x(n, indices[i]) : MPoly::t(n, indices[i]);
}

MPoly elem_sym(int r, const VarSubset& vars) {
  if (r < 0 || r > vars.size()) return MPoly(vars.n);
  // e[j] over the variables seen so far
  std::vector<MPoly> e(r + 1, MPoly(vars.n));
  e[0] = MPoly(vars.n, 1);
  for (int i = 0; i < vars.size(); ++i) {
    MPoly v = vars.var(i);
    for (int j = std::min(r, i + 1); j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e[r];
}

MPoly complete_sym(int r, const VarSubset& vars) {
  if (r < 0) return MPoly(vars.n);
  if (r == 0) return MPoly(vars.n, 1);
  std::vector<MPoly> h(r + 1, MPoly(vars.n));
  h[0] = MPoly(vars.n, 1);
  for (int i = 0; i < vars.size(); ++i) {
    MPoly v = vars.var(i);
    for (int j = 1; j <= r; ++j) h[j] += v * h[j - 1];
  }
  return h[r];
}

MPoly power_sum(int r, const VarSubset& vars) {
  if (r < 1) throw UsageError("power sums need r >= 1");
  MPoly p(vars.n);
  for (int i = 0; i < vars.size(); ++i) p += vars.var(i).pow(r);
  return p;
}

MPoly schur_hook(int alpha, int beta, const VarSubset& vars) {
  if (alpha < 0 || beta < 0) throw UsageError("hook arm and leg must be nonnegative");
  if (beta + 1 > vars.size()) return MPoly(vars.n);
  MPoly s(vars.n);
  for (int j = 0; j <= beta; ++j) {
    MPoly term = complete_sym(alpha + 1 + j, vars) * elem_sym(beta - j, vars);
    if (j % 2)
      s -= term;
    else
      s += term;
  }
  return s;
}

MPoly schur_general(const Partition& lambda, const VarSubset& vars) {
  const int m = vars.size();
  if (lambda.length() > m) return MPoly(vars.n);
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) cells.push_back({i, j});
  std::vector<std::vector<int>> fill(lambda.length());
  for (int i = 0; i < lambda.length(); ++i) fill[i].assign(lambda[i], -1);
  std::vector<MPoly> vs;
  for (int i = 0; i < m; ++i) vs.push_back(vars.var(i));
  std::vector<Term> out;
  std::vector<int> count(m, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      MPoly mono(vars.n, 1);
      for (int i = 0; i < m; ++i)
        if (count[i]) mono *= vs[i].pow(count[i]);
      for (const auto& t : mono.terms()) out.push_back(t);
      return;
    }
    auto [i, j] = cells[c];
    int lo = 0;
    if (j > 0) lo = std::max(lo, fill[i][j - 1]);
    if (i > 0) lo = std::max(lo, fill[i - 1][j] + 1);
    for (int v = lo; v < m; ++v) {
      fill[i][j] = v;
      ++count[v];
      rec(c + 1);
      --count[v];
    }
    fill[i][j] = -1;
  };
  rec(0);
  return MPoly::from_terms(vars.n, std::move(out));
}

MPoly elem_sym_neg(int r, const VarSubset& vars) {
  MPoly e = elem_sym(r, vars);
  return r % 2 ? -e : e;
}

MPoly complete_sym_neg(int r, const VarSubset& vars) {
  MPoly h = complete_sym(r, vars);
  return r % 2 ? -h : h;
}

MPoly truncate_qz(const MPoly& p, int trunc) {
  const int n = p.n();
  const int qi = MPoly::q_index(n), zi = MPoly::z_index(n);
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (t.m[qi] + t.m[zi] <= trunc) out.push_back(t);
  return MPoly::from_terms(n, std::move(out));
}

MPoly qz_series(SeriesKind kind, const VarSubset& vars, int trunc) {
  if (trunc < 0) throw UsageError("truncation degree must be nonnegative");
  const int n = vars.n;
  const MPoly q = MPoly::q(n), z = MPoly::z(n);
  MPoly s(n);
  switch (kind) {
    case SeriesKind::Q:
      for (int r = 0; r <= std::min(trunc, vars.size()); ++r) s += q.pow(r) * elem_sym(r, vars);
      break;
    case SeriesKind::Z:
      for (int r = 0; r <= std::min(trunc, vars.size()); ++r) s += (-z).pow(r) * elem_sym(r, vars);
      break;
    case SeriesKind::ZInv:
      for (int r = 0; r <= trunc; ++r) s += z.pow(r) * complete_sym(r, vars);
      break;
    case SeriesKind::E:
      for (int a = 0; a <= trunc; ++a)
        for (int b = 0; a + b <= trunc; ++b) s += z.pow(a) * q.pow(b) * schur_hook(a, b, vars);
      break;
  }
  return s;
}

}  // namespace flagcsm
