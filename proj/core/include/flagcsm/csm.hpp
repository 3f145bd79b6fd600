#pragma once

#include <functional>
#include <vector>

#include "flagcsm/arith.hpp"
#include "flagcsm/cohclass.hpp"
#include "flagcsm/perm.hpp"
#include "flagcsm/schubert.hpp"

namespace flagcsm {

// -s_i + d_i
MPoly dl_operator(const MPoly& f, int i);
// Same operator on localization vectors.
LocVector loc_dl(const LocVector& g, int i, int n);

// Representative of the equivariant CSM class of the open cell, obtained from
// the top class by Demazure-Lusztig operators; cached.
MPoly csm_class(const Permutation& w);
MPoly csm_class_via(const Permutation& w, WordStrategy s);
// Localization vector of csm_class(w), computed without the polynomial.
const LocVector& csm_localizations(const Permutation& w);

// prod_{i<j} (1 + t_i - t_j)
MPoly csm_identity_denominator(int n);

// Coefficients T_w(f)|_id / prod_{i<j}(1 + t_i - t_j) for every w.
CohClass expand_in_csm(const MPoly& f);
CohClass expand_in_csm(const LocVector& f, int n);

// Localizations of a class at one integer point t = pt (pt[0] unused), lex order of v.
using SampledLocalizations = std::function<std::vector<Rational>(const std::vector<Rational>& pt)>;

// Localizations of csm_class(w) at t = pt.
std::vector<Rational> csm_values_at(const Permutation& w, const std::vector<Rational>& pt);

// expand_in_csm for a class given only by its localization values, when every
// coefficient has total degree <= max_degree. The operator formula is run at
// the points t_i = 100 i + a_i with |a| <= max_degree and interpolated; one
// extra point is checked (InvariantViolation on mismatch).
CohClass expand_in_csm_sampled(int n, int max_degree, const SampledLocalizations& values);

// The class at u times g, expanded. Schubert basis: raw polynomial product.
// CSM basis: localizations of the product fed to expand_in_csm_sampled.
CohClass oracle_product(const Permutation& u, const MPoly& g, Basis basis, bool equivariant);

}  // namespace flagcsm
