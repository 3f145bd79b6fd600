#include "flagcsm/rules.hpp"

#include <algorithm>
#include <set>

#include "flagcsm/bruhat.hpp"
#include "flagcsm/errors.hpp"
#include "flagcsm/symfun.hpp"

namespace flagcsm {

namespace {

std::vector<int> first_k(int k) {
  std::vector<int> A;
  for (int i = 1; i <= k; ++i) A.push_back(i);
  return A;
}

void check_k(const Permutation& u, int k) {
  if (k < 1 || k >= u.n()) throw UsageError("k must satisfy 1 <= k < n");
}

VarSubset tset(int n, const std::vector<int>& s) { return VarSubset::t(n, s); }

// Shared by the CSM and Schubert hook rules.
CohClass hook_rule(const Permutation& u, int k, HookShape hook, bool equivariant, Basis basis) {
  check_k(u, k);
  if (hook.alpha < 0 || hook.beta < 0) throw UsageError("hook arm and leg must be nonnegative");
  const int n = u.n();
  const bool covers = basis == Basis::Schubert;
  CohClass out(basis, equivariant, n);
  if (!equivariant) {
    auto paths = enumerate_paths(u, k, PathSpec::peakless(hook.alpha, hook.beta), covers);
    for (const auto& [w, ps] : paths) out.add(w, MPoly(n, static_cast<long>(ps.size())));
    return out;
  }
  out.add(u, schur_hook(hook.alpha, hook.beta, tset(n, u.image(first_k(k)))));
  auto paths = enumerate_paths(u, k, PathSpec::peakless_up_to(hook.alpha, hook.beta), covers);
  for (const auto& [w, ps] : paths) {
    auto sd = sigma_delta(u, w, first_k(k));
    MPoly c(n);
    for (const auto& p : ps)
      c += complete_sym(hook.alpha - p.in_count, tset(n, sd.sigma)) * elem_sym(hook.beta - p.de_count, tset(n, sd.delta));
    out.add(w, c);
  }
  return out;
}

CohClass mn_rule(const Permutation& u, int k, int r, bool equivariant, Basis basis) {
  check_k(u, k);
  if (r < 1) throw UsageError("power sums need r >= 1");
  const int n = u.n();
  CohClass out(basis, equivariant, n);
  if (equivariant) out.add(u, power_sum(r, tset(n, u.image(first_k(k)))));
  const int lu = u.length();
  for (const auto& eta : cycles_through(u, k, r)) {
    const int rp = eta.size() - 1;
    if (!equivariant && rp != r) continue;
    Permutation pe = eta.as_permutation(n);
    Permutation w = u * pe;
    if (basis == Basis::Schubert && w.length() != lu + rp) continue;
    MPoly c = complete_sym(r - rp, tset(n, u.image(pe.nonfixed_set())));
    if (pe.k_height(k) % 2) c = -c;
    out.add(w, c);
  }
  return out;
}

// Permutation sending [m] onto the sorted set S and the rest increasingly.
Permutation block_permutation(int n, const std::vector<int>& S) {
  std::vector<int> v = S;
  std::vector<bool> used(n + 1);
  for (int s : S) used[s] = true;
  for (int i = 1; i <= n; ++i)
    if (!used[i]) v.push_back(i);
  return Permutation(v);
}

}  // namespace

MPoly hook_multiplier(int n, int k, HookShape hook) { return schur_hook(hook.alpha, hook.beta, VarSubset::x_first(n, k)); }

MPoly powersum_multiplier(int n, int k, int r) { return power_sum(r, VarSubset::x_first(n, k)); }

CohClass pieri_hook_csm(const Permutation& u, int k, HookShape hook, bool equivariant) {
  return hook_rule(u, k, hook, equivariant, Basis::Csm);
}

CohClass pieri_hook_schubert(const Permutation& u, int k, HookShape hook, bool equivariant) {
  return hook_rule(u, k, hook, equivariant, Basis::Schubert);
}

CohClass pieri_schubertclass_csm(const Permutation& u, int k, HookShape hook) {
  check_k(u, k);
  const int n = u.n();
  const int alpha = hook.alpha, beta = hook.beta;
  Permutation wg = hook_permutation(alpha, beta, k, n);
  CohClass out(Basis::Csm, true, n);
  out.add(u, localize(double_schubert_transition(wg), u));
  const auto ta = VarSubset::t_first(n, k + alpha);
  const auto tb = VarSubset::t_first(n, k - beta);
  auto paths = enumerate_paths(u, k, PathSpec::peakless_up_to(alpha, beta), false);
  for (const auto& [w, ps] : paths) {
    auto sd = sigma_delta(u, w, first_k(k));
    MPoly c(n);
    for (const auto& p : ps) {
      const int da = alpha - p.in_count, db = beta - p.de_count;
      for (int a1 = 0; a1 <= da; ++a1)
        for (int b1 = 0; b1 <= db; ++b1)
          c += complete_sym(a1, tset(n, sd.sigma)) * elem_sym(b1, tset(n, sd.delta)) * elem_sym_neg(da - a1, ta) *
               complete_sym_neg(db - b1, tb);
    }
    out.add(w, c);
  }
  return out;
}

CohClass pieri_eh_localized(const Permutation& u, int k, int r, MolevKind kind) {
  check_k(u, k);
  const int n = u.n();
  if (r < 0) throw UsageError("r must be nonnegative");
  if (kind == MolevKind::Column ? r > k : r > n - k)
    throw ShapeOverflow("the Grassmannian class for r = " + std::to_string(r) + " does not exist in this S_n");
  CohClass out(Basis::Csm, true, n);
  for (int rp = 0; rp <= r; ++rp) {
    auto spec = kind == MolevKind::Column ? PathSpec::decreasing(rp) : PathSpec::increasing(rp);
    auto paths = enumerate_paths(u, k, spec, false);
    for (const auto& [w, ps] : paths) {
      auto sd = sigma_delta(u, w, first_k(k));
      MPoly cls = kind == MolevKind::Column ? molev_class(kind, k - rp, r - rp, n) : molev_class(kind, k + rp, r - rp, n);
      Permutation at = block_permutation(n, kind == MolevKind::Column ? sd.delta : sd.sigma);
      MPoly c = localize(cls, at);
      for (std::size_t i = 0; i < ps.size(); ++i) out.add(w, c);
    }
  }
  return out;
}

CohClass mn_csm(const Permutation& u, int k, int r, bool equivariant) { return mn_rule(u, k, r, equivariant, Basis::Csm); }

CohClass mn_schubert(const Permutation& u, int k, int r, bool equivariant) {
  return mn_rule(u, k, r, equivariant, Basis::Schubert);
}

CohClass rigidity_lift_hook(const Permutation& u, const std::vector<int>& A, HookShape hook,
                            const std::function<CohClass(HookShape)>& noneq) {
  const int n = u.n();
  CohClass out(Basis::Csm, true, n);
  out.add(u, schur_hook(hook.alpha, hook.beta, tset(n, u.image(A))));
  for (int a = 0; a <= hook.alpha; ++a)
    for (int b = 0; b <= hook.beta; ++b) {
      CohClass base = noneq({a, b});
      for (const auto& [w, c] : base.coeffs) {
        if (w == u) continue;
        if (!c.is_constant()) throw UsageError("rigidity lift expects nonequivariant constants");
        auto sd = sigma_delta(u, w, A);
        out.add(w, c * complete_sym(hook.alpha - a, tset(n, sd.sigma)) * elem_sym(hook.beta - b, tset(n, sd.delta)));
      }
    }
  return out;
}

CohClass rigidity_lift_powersum(const Permutation& u, const std::vector<int>& A, int r,
                                const std::function<CohClass(int)>& noneq) {
  const int n = u.n();
  CohClass out(Basis::Csm, true, n);
  out.add(u, power_sum(r, tset(n, u.image(A))));
  for (int rp = 1; rp <= r; ++rp) {
    CohClass base = noneq(rp);
    for (const auto& [w, c] : base.coeffs) {
      if (w == u) continue;
      if (!c.is_constant()) throw UsageError("rigidity lift expects nonequivariant constants");
      std::vector<int> moved;
      for (int i = 1; i <= n; ++i)
        if (u(i) != w(i)) moved.push_back(u(i));
      out.add(w, c * complete_sym(r - rp, tset(n, moved)));
    }
  }
  return out;
}

}  // namespace flagcsm
