#pragma once

#include <map>
#include <string>

#include "flagcsm/arith.hpp"
#include "flagcsm/perm.hpp"

namespace flagcsm {

enum class Basis { Schubert, Csm };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

// Finite expansion sum_w coeff(w) * b_w with t-polynomial coefficients.
struct CohClass {
  Basis basis = Basis::Csm;
  bool equivariant = true;
  int n = 0;
  std::map<Permutation, MPoly> coeffs;  // no zero entries

  CohClass() = default;
  CohClass(Basis b, bool eq, int n_) : basis(b), equivariant(eq), n(n_) {}

  void add(const Permutation& w, const MPoly& c);
  MPoly at(const Permutation& w) const;
  // t := 0
  CohClass nonequivariant() const;

  bool operator==(const CohClass& o) const;
  bool operator!=(const CohClass& o) const { return !(*this == o); }
  // First differing coefficient, for diagnostics; empty when equal.
  std::string first_difference(const CohClass& o) const;
};

}  // namespace flagcsm
