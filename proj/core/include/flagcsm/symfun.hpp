#pragma once

// Symmetric polynomials on subsets of the x or t variables.

#include <vector>

#include "flagcsm/arith.hpp"
#include "flagcsm/partition.hpp"

namespace flagcsm {

struct VarSubset {
  VarKind kind = VarKind::X;
  int n = 0;
  std::vector<int> indices;  // sorted, 1-based

  VarSubset() = default;
  VarSubset(VarKind kind, int n, std::vector<int> indices);
  static VarSubset x(int n, std::vector<int> indices) { return {VarKind::X, n, std::move(indices)}; }
  static VarSubset t(int n, std::vector<int> indices) { return {VarKind::T, n, std::move(indices)}; }
  // x_{[k]} / t_{[k]}
  static VarSubset x_first(int n, int k);
  static VarSubset t_first(int n, int k);

  int size() const { return static_cast<int>(indices.size()); }
  MPoly var(int i) const;  // the i-th variable of the subset (0-based)
};

MPoly elem_sym(int r, const VarSubset& vars);
MPoly complete_sym(int r, const VarSubset& vars);
MPoly power_sum(int r, const VarSubset& vars);
// s_{(1+alpha, 1^beta)} = sum_j (-1)^j h_{alpha+1+j} e_{beta-j}
MPoly schur_hook(int alpha, int beta, const VarSubset& vars);
// Sum over semistandard tableaux; meant for small test cases.
MPoly schur_general(const Partition& lambda, const VarSubset& vars);

// f(-t) style evaluations: e_r(-v) = (-1)^r e_r(v), h_r(-v) = (-1)^r h_r(v).
MPoly elem_sym_neg(int r, const VarSubset& vars);
MPoly complete_sym_neg(int r, const VarSubset& vars);

enum class SeriesKind { Q, Z, ZInv, E };

// Generating series in q and z, truncated to total (q,z)-degree <= trunc:
//   Q    = prod (1 + q v)
//   Z    = prod (1 - z v)
//   ZInv = sum_r z^r h_r
//   E    = sum_{a,b} z^a q^b s_{(1+a,1^b)}
MPoly qz_series(SeriesKind kind, const VarSubset& vars, int trunc);

// Drops every term whose combined q,z-degree exceeds trunc.
MPoly truncate_qz(const MPoly& p, int trunc);

}  // namespace flagcsm
