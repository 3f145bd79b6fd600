#pragma once

// Closed-form product rules by hook Schur polynomials, hook Schubert classes
// and power sums, in the CSM and Schubert bases.

#include <functional>
#include <vector>

#include "flagcsm/cohclass.hpp"
#include "flagcsm/perm.hpp"
#include "flagcsm/schubert.hpp"

namespace flagcsm {

struct HookShape {
  int alpha = 0;  // arm: first row has alpha+1 boxes
  int beta = 0;   // leg: beta boxes below the corner
};

// csm(u) * s_Gamma(x_[k]) in the CSM basis (peakless paths, extended order).
CohClass pieri_hook_csm(const Permutation& u, int k, HookShape hook, bool equivariant);
// [Y(u)] * s_Gamma(x_[k]) in the Schubert basis (peakless paths, covers only).
CohClass pieri_hook_schubert(const Permutation& u, int k, HookShape hook, bool equivariant);
// csm(u) * [Y(w_Gamma)] in the CSM basis.
CohClass pieri_schubertclass_csm(const Permutation& u, int k, HookShape hook);
// csm(u) * [Y(c[k,r])] (Column) or [Y(c'[k,r])] (Row) via localizations of
// smaller Grassmannian classes along decreasing / increasing paths.
CohClass pieri_eh_localized(const Permutation& u, int k, int r, MolevKind kind);

// csm(u) * p_r(x_[k]) via cycles eta with u <=_k u*eta.
CohClass mn_csm(const Permutation& u, int k, int r, bool equivariant);
// [Y(u)] * p_r(x_[k]); only cycles with l(u eta) = l(u) + r'.
CohClass mn_schubert(const Permutation& u, int k, int r, bool equivariant);

// Equivariant CSM-basis constants assembled from nonequivariant ones.
// noneq(alpha', beta') must return the t = 0 expansion of csm(u) * s_{Gamma'}(x_A).
CohClass rigidity_lift_hook(const Permutation& u, const std::vector<int>& A, HookShape hook,
                            const std::function<CohClass(HookShape)>& noneq);
// noneq(r') must return the t = 0 expansion of csm(u) * p_{r'}(x_A).
CohClass rigidity_lift_powersum(const Permutation& u, const std::vector<int>& A, int r,
                                const std::function<CohClass(int)>& noneq);

// The hook multiplier s_Gamma(x_[k]) and the power sum p_r(x_[k]) as polynomials.
MPoly hook_multiplier(int n, int k, HookShape hook);
MPoly powersum_multiplier(int n, int k, int r);

}  // namespace flagcsm
