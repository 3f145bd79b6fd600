#include <doctest.h>

#include <random>

#include "flagcsm/schubert.hpp"
#include "flagcsm/symfun.hpp"

using namespace flagcsm;

TEST_CASE("elementary symmetric") {
  const int n = 5;
  CHECK(elem_sym(1, VarSubset::t(n, {3})) == MPoly::t(n, 3));
  CHECK(elem_sym(0, VarSubset::t(n, {})) == MPoly(n, 1));
  CHECK(elem_sym(1, VarSubset::t(n, {})).is_zero());
  CHECK(elem_sym(-1, VarSubset::x_first(n, 3)).is_zero());
  CHECK(elem_sym(4, VarSubset::x_first(n, 3)).is_zero());
  CHECK(elem_sym(2, VarSubset::x_first(n, 3)) == MPoly::parse(n, "x1*x2 + x1*x3 + x2*x3"));
}

TEST_CASE("complete homogeneous") {
  const int n = 5;
  CHECK(complete_sym(1, VarSubset::t(n, {2, 3, 5})) == MPoly::parse(n, "t2 + t3 + t5"));
  CHECK(complete_sym(2, VarSubset::t(n, {2, 5})) == MPoly::parse(n, "t2^2 + t2*t5 + t5^2"));
  CHECK(complete_sym(0, VarSubset::t(n, {4})) == MPoly(n, 1));
  CHECK(complete_sym(0, VarSubset::t(n, {})) == MPoly(n, 1));
  CHECK(complete_sym(2, VarSubset::t(n, {})).is_zero());
  CHECK(complete_sym(-1, VarSubset::t(n, {1})).is_zero());
}

TEST_CASE("power sums and the hook expansion") {
  const int n = 5;
  CHECK(power_sum(3, VarSubset::x_first(n, 2)) == MPoly::parse(n, "x1^3 + x2^3"));
  CHECK(power_sum(1, VarSubset::t(n, {4})) == MPoly::t(n, 4));
  for (int k = 1; k <= 4; ++k)
    for (int r = 1; r <= 5; ++r) {
      auto v = VarSubset::x_first(n, k);
      MPoly alt(n);
      for (int beta = 0; beta < r; ++beta) {
        MPoly s = schur_hook(r - 1 - beta, beta, v);
        alt += beta % 2 ? -s : s;
      }
      CHECK(alt == power_sum(r, v));
    }
}

TEST_CASE("hook Schur polynomials") {
  const int n = 4;
  auto x2 = VarSubset::x_first(n, 2);
  CHECK(schur_hook(0, 0, x2) == MPoly::parse(n, "x1 + x2"));
  CHECK(schur_hook(1, 1, x2) == MPoly::parse(n, "x1^2*x2 + x1*x2^2"));
  CHECK(schur_hook(0, 2, x2).is_zero());
  for (int k = 1; k <= 4; ++k) {
    auto v = VarSubset::x_first(n, k);
    for (int r = 1; r <= 4; ++r) {
      CHECK(schur_hook(0, r - 1, v) == elem_sym(r, v));
      CHECK(schur_hook(r - 1, 0, v) == complete_sym(r, v));
    }
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        std::vector<int> parts{a + 1};
        for (int i = 0; i < b; ++i) parts.push_back(1);
        CHECK(schur_general(Partition(parts), v) == schur_hook(a, b, v));
      }
  }
}

TEST_CASE("general Schur polynomials by tableaux") {
  const int n = 3;
  CHECK(schur_general(Partition({1}), VarSubset::x_first(n, 3)) == MPoly::parse(n, "x1 + x2 + x3"));
  CHECK(schur_general(Partition({2, 2}), VarSubset::x_first(n, 2)) == MPoly::parse(n, "x1^2*x2^2"));
}

TEST_CASE("classical Pieri h_r e_s") {
  // h_{a+1} e_b = s_{(a+1,1^b)} + s_{(a+2,1^{b-1})}
  const int n = 4;
  auto v = VarSubset::x_first(n, 3);
  for (int a = 0; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      CHECK(complete_sym(a + 1, v) * elem_sym(b, v) == schur_hook(a, b, v) + schur_hook(a + 1, b - 1, v));
}

TEST_CASE("generating series") {
  const int n = 3;
  const MPoly q = MPoly::q(n), z = MPoly::z(n);
  CHECK(qz_series(SeriesKind::Q, VarSubset::x(n, {1}), 2) == MPoly(n, 1) + q * MPoly::x(n, 1));
  MPoly e = qz_series(SeriesKind::E, VarSubset::x_first(n, 2), 2);
  const int qi = MPoly::q_index(n), zi = MPoly::z_index(n);
  CHECK(e.coefficient_of(qi, 0).coefficient_of(zi, 0) == MPoly::parse(n, "x1 + x2"));
  CHECK(e.coefficient_of(qi, 1).coefficient_of(zi, 1) == schur_hook(1, 1, VarSubset::x_first(n, 2)));

  // (q + z) E = Q / Z - 1 up to the truncation degree.
  for (int k = 1; k <= 3; ++k) {
    auto v = VarSubset::x_first(n, k);
    const int T = 4;
    MPoly lhs = truncate_qz((q + z) * qz_series(SeriesKind::E, v, T), T);
    MPoly rhs = truncate_qz(qz_series(SeriesKind::Q, v, T) * qz_series(SeriesKind::ZInv, v, T), T) - MPoly(n, 1);
    CHECK(lhs == rhs);
    // Z * ZInv = 1
    CHECK(truncate_qz(qz_series(SeriesKind::Z, v, T) * qz_series(SeriesKind::ZInv, v, T), T) == MPoly(n, 1));
  }
}

TEST_CASE("divided differences of Q(x_A) / Z(x_B)") {
  const int T = 3;
  std::mt19937 rng(11);
  for (int n = 2; n <= 4; ++n) {
    const MPoly q = MPoly::q(n), z = MPoly::z(n);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<int> A, B;
      for (int i = 1; i <= n; ++i) {
        const int c = rng() % 3;  // 0: outside B, 1: B \ A, 2: A
        if (c >= 1) B.push_back(i);
        if (c == 2) A.push_back(i);
      }
      const int a = 1 + rng() % n;
      int b = 1 + rng() % n;
      if (a == b) continue;
      auto in = [](const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); };
      MPoly lhs = demazure_ab(
          truncate_qz(qz_series(SeriesKind::Q, VarSubset::x(n, A), T) * qz_series(SeriesKind::ZInv, VarSubset::x(n, B), T), T),
          a, b);
      std::vector<int> A2, B2 = B;
      for (int x : A)
        if (x != a && x != b) A2.push_back(x);
      for (int x : {a, b})
        if (!in(B2, x)) B2.push_back(x);
      std::sort(B2.begin(), B2.end());
      MPoly coef = MPoly(n);
      if (in(A, a)) coef += q;
      if (in(A, b)) coef -= q;
      if (!in(B, a)) coef -= z;
      if (!in(B, b)) coef += z;
      MPoly rhs = truncate_qz(
          coef * qz_series(SeriesKind::Q, VarSubset::x(n, A2), T) * qz_series(SeriesKind::ZInv, VarSubset::x(n, B2), T), T);
      CHECK(lhs == rhs);
    }
  }
}
