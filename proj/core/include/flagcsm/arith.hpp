#pragma once

// Exact multivariate polynomials over Q in the variables
//   x1..xn, t1..tn, q, z
// (variable indices 0..n-1, n..2n-1, 2n, 2n+1).

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace flagcsm {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& c);

inline constexpr int kMaxVars = 31;
inline constexpr int kMaxN = (kMaxVars - 2) / 2;

// Exponent vector. Slot kMaxVars caches the total degree.
struct Mono {
  std::array<std::uint8_t, kMaxVars + 1> e{};

  int degree() const { return e[kMaxVars]; }
  int operator[](int v) const { return e[v]; }
  void set(int v, int p);
  Mono operator*(const Mono& o) const;
  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator!=(const Mono& o) const { return e != o.e; }
};

// Canonical order: total degree first, then the exponent of the largest
// variable (z > q > tn > ... > t1 > xn > ... > x1), and so on downward.
bool canonical_less(const Mono& a, const Mono& b);

struct MonoHash {
  std::size_t operator()(const Mono& m) const;
};

struct Term {
  Mono m;
  Rational c;
};

enum class VarKind { X, T, Q, Z };

class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(int n);
  MPoly(int n, const Rational& c);

  static MPoly var(int n, int index);
  static MPoly x(int n, int i);
  static MPoly t(int n, int i);
  static MPoly q(int n);
  static MPoly z(int n);
  // Sorts and merges; zero coefficients are dropped.
  static MPoly from_terms(int n, std::vector<Term> terms);
  // Inverse of to_string; variables beyond the ring raise UsageError.
  static MPoly parse(int n, std::string_view text);

  static int x_index(int /*n*/, int i) { return i - 1; }
  static int t_index(int n, int i) { return n + i - 1; }
  static int q_index(int n) { return 2 * n; }
  static int z_index(int n) { return 2 * n + 1; }

  int n() const { return n_; }
  int nvars() const { return 2 * n_ + 2; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  int degree() const;      // total degree, -1 for zero
  int min_degree() const;  // lowest total degree present, -1 for zero
  MPoly homogeneous_part(int d) const;
  // Largest exponent of one variable.
  int degree_in(int var) const;
  bool involves(VarKind kind) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly pow(int e) const;

  // Variable v is replaced by variable target[v] (a ring homomorphism that
  // sends variables to variables).
  MPoly rename(const std::vector<int>& target) const;
  // General substitution; variables absent from the map are kept.
  MPoly substitute(const std::map<int, MPoly>& assignment) const;
  // Sets every variable of the given kind to zero.
  MPoly drop(VarKind kind) const;
  // Coefficient extraction: all terms with exactly exponent p in variable v,
  // with that variable removed.
  MPoly coefficient_of(int var, int p) const;

  std::string to_string() const;

 private:
  void check_ring(const MPoly& o) const;
  int n_ = 0;
  std::vector<Term> terms_;
};

std::string var_name(int n, int index);
VarKind var_kind(int n, int index);

MPoly poly_add(const MPoly& a, const MPoly& b);
MPoly poly_sub(const MPoly& a, const MPoly& b);
MPoly poly_mul(const MPoly& a, const MPoly& b);

// Exact quotient p / form where form = c0 + c1*v1 + c2*v2 involves at most two
// variables. Throws ExactnessError when the division leaves a remainder.
MPoly divide_exact_linear(const MPoly& p, const MPoly& form);

// Convenience: the linear form t_i - t_j.
MPoly t_diff(int n, int i, int j);

}  // namespace flagcsm
