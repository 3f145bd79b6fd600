#pragma once

#include <vector>

#include "flagcsm/arith.hpp"
#include "flagcsm/cohclass.hpp"
#include "flagcsm/perm.hpp"

namespace flagcsm {

// f with x_a and x_b interchanged.
MPoly swap_x(const MPoly& f, int a, int b);

// (f - t_ab f) / (x_a - x_b), computed monomial by monomial.
MPoly demazure_ab(const MPoly& f, int a, int b);
MPoly demazure_i(const MPoly& f, int i);

// prod_{i+j<=n} (x_i - t_j)
MPoly top_double_schubert(int n);

// Divided differences from the top class, cached.
MPoly double_schubert(const Permutation& w);

enum class WordStrategy { FirstAscent, LastAscent };
// Uncached variant choosing which ascent to peel; for word-independence checks.
MPoly double_schubert_via(const Permutation& w, WordStrategy s);

// Transition recursion; does not touch the top class, so it scales to
// larger n when only a few polynomials are needed.
MPoly double_schubert_transition(const Permutation& w);

// x_i -> t_{w(i)}
MPoly localize(const MPoly& f, const Permutation& w);

// Localizations at every fixed point, indexed by lex rank.
using LocVector = std::vector<MPoly>;
LocVector localize_all(const MPoly& f);
// Localization vector of the divided difference d_i g.
LocVector loc_demazure(const LocVector& g, int i, int n);

// table[rank v][rank u] = S_v(x,t)|_u; built once per n.
const std::vector<LocVector>& schubert_localization_table(int n);

// S_u|_u = prod over inversions i<j of (t_{u(i)} - t_{u(j)}), as factors.
std::vector<MPoly> schubert_self_localization_factors(const Permutation& u);

// Triangular interpolation over fixed points in (length, lex) order.
CohClass expand_in_schubert(const MPoly& f);
CohClass expand_in_schubert(const LocVector& f, int n);

// Hook Giambelli representative of [Y(w_Gamma)]; ShapeOverflow unless
// beta+1 <= k and alpha+1 <= n-k.
MPoly giambelli_hook(int alpha, int beta, int k, int n);
Permutation hook_permutation(int alpha, int beta, int k, int n);

enum class MolevKind { Column, Row };
// Column: sum_{i1<...<ir<=k} prod (x_{ij} - t_{ij-j+1})
// Row:    sum_{i1<=...<=ir<=k} prod (x_{ij} - t_{ij+j-1})
// The e/h form is computed as well and must agree.
MPoly molev_class(MolevKind kind, int k, int r, int n);
// The Grassmannian permutation c[k,r] or c'[k,r].
Permutation molev_permutation(MolevKind kind, int k, int r, int n);

}  // namespace flagcsm
