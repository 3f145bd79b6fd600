#pragma once

// Standard r-rim-hook tableaux of skew shapes, counted by direct stripping,
// by a cyclotomic limit of Schubert localizations, by the major index at a
// primitive root of unity, and (straight shapes) by the hook quotient.

#include <vector>

#include "flagcsm/arith.hpp"
#include "flagcsm/partition.hpp"
#include "flagcsm/upoly.hpp"

namespace flagcsm {

struct RimHookTableau {
  std::vector<Partition> chain;  // inner = chain.front() up to outer = chain.back()
  int r = 0;
  int total_height = 0;
};

// Throws UsageError unless lambda is inside Lambda and r divides the size.
std::vector<RimHookTableau> enumerate_rht(const Partition& Lambda, const Partition& lambda, int r);
std::size_t count_rht(const Partition& Lambda, const Partition& lambda, int r);

// (-1)^height shared by every tableau; 0 when there are none. An empty skew
// shape has sign +1. InvariantViolation if two tableaux disagree in parity.
int rht_sign(const Partition& Lambda, const Partition& lambda, int r);

struct StandardTableau {
  std::vector<std::vector<int>> rows;  // rows[i][j] for j >= lambda_i, 0 inside lambda
  int maj = 0;                         // sum of i with i+1 in a strictly lower row
};

std::vector<StandardTableau> enumerate_syt(const Partition& Lambda, const Partition& lambda);

// Localization of [Y(lambda)] at the fixed point of Lambda with t_i -> z^i,
// both read as Grassmannian permutations in S_n with descent at k.
UPoly y_poly(const Partition& lambda, const Partition& Lambda, int k, int n);

// r^d d! lim_{z->zeta} Y_{lambda,Lambda}(z^r-1)^d / Y_{Lambda,Lambda}; equals
// sgn * count. ExactnessError when the limit is not a rational integer.
Integer rht_limit_value(const Partition& Lambda, const Partition& lambda, int r, int k, int n);
// Same with the minimal rectangle k = length(Lambda), n = k + Lambda_1.
Integer rht_limit_value(const Partition& Lambda, const Partition& lambda, int r);
// Absolute value of the above: the tableau count.
Integer rht_count_limit(const Partition& Lambda, const Partition& lambda, int r, int k, int n);
Integer rht_count_limit(const Partition& Lambda, const Partition& lambda, int r);

// sum over SYT of zeta^maj in Q[z]/Phi_r; equals sgn * count.
Integer rht_maj_value(const Partition& Lambda, const Partition& lambda, int r);
Integer rht_count_maj(const Partition& Lambda, const Partition& lambda, int r);

// Straight shapes only: 0 unless exactly d hook lengths are divisible by r,
// otherwise r^d d! / prod_{r | h} h.
Integer rht_count_hook(const Partition& Lambda, int r);

}  // namespace flagcsm
