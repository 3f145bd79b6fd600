#include "flagcsm/cohclass.hpp"

#include <set>

#include "flagcsm/errors.hpp"

namespace flagcsm {

std::string basis_name(Basis b) { return b == Basis::Schubert ? "schubert" : "csm"; }

Basis parse_basis(const std::string& s) {
  if (s == "schubert") return Basis::Schubert;
  if (s == "csm") return Basis::Csm;
  throw UsageError("unknown basis '" + s + "' (expected csm or schubert)");
}

void CohClass::add(const Permutation& w, const MPoly& c) {
  if (c.is_zero()) return;
  auto it = coeffs.find(w);
  if (it == coeffs.end()) {
    coeffs.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

MPoly CohClass::at(const Permutation& w) const {
  auto it = coeffs.find(w);
  return it == coeffs.end() ? MPoly(n) : it->second;
}

CohClass CohClass::nonequivariant() const {
  CohClass r(basis, false, n);
  for (const auto& [w, c] : coeffs) r.add(w, c.drop(VarKind::T));
  return r;
}

bool CohClass::operator==(const CohClass& o) const {
  return basis == o.basis && equivariant == o.equivariant && n == o.n && coeffs == o.coeffs;
}

std::string CohClass::first_difference(const CohClass& o) const {
  if (basis != o.basis) return "basis differs";
  if (equivariant != o.equivariant) return "equivariance differs";
  if (n != o.n) return "rank differs";
  std::set<Permutation> keys;
  for (const auto& [w, c] : coeffs) keys.insert(w);
  for (const auto& [w, c] : o.coeffs) keys.insert(w);
  for (const auto& w : keys)
    if (at(w) != o.at(w))
      return w.to_string() + ": " + at(w).to_string() + " vs " + o.at(w).to_string();
  return "";
}

}  // namespace flagcsm
