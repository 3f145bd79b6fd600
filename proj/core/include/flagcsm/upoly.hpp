#pragma once

// Dense univariate polynomials in z over Q and the cyclotomic residue rings
// Q[z]/Phi_r.

#include <string>
#include <utility>
#include <vector>

#include "flagcsm/arith.hpp"

namespace flagcsm {

class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int deg);
  static UPoly z();

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& c);
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return c_ != o.c_; }

  UPoly pow(int e) const;
  Rational eval(const Rational& z) const;
  // Quotient and remainder; divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// z^r - 1
UPoly z_pow_minus_one(int r);

// Phi_r, obtained by dividing z^r - 1 by Phi_d for every proper divisor d of r.
const UPoly& cyclotomic(int r);

// Element of Q[z]/Phi_r, i.e. a polynomial expression in a primitive r-th
// root of unity zeta.
class CycloElt {
 public:
  CycloElt() = default;
  CycloElt(int r, const UPoly& p);
  static CycloElt rational(int r, const Rational& c);
  static CycloElt zeta(int r);

  int r() const { return r_; }
  const UPoly& residue() const { return res_; }
  bool is_zero() const { return res_.is_zero(); }
  bool is_rational() const { return res_.degree() <= 0; }
  Rational rational_value() const;  // throws unless is_rational()

  CycloElt operator-() const;
  friend CycloElt operator+(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator-(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator*(const CycloElt& a, const CycloElt& b);
  bool operator==(const CycloElt& o) const { return r_ == o.r_ && res_ == o.res_; }

  CycloElt pow(long long e) const;
  // Extended Euclid against Phi_r; throws PoleError on zero.
  CycloElt inverse() const;

  std::string to_string() const;

 private:
  int r_ = 1;
  UPoly res_;
};

struct VanishingOrder {
  int order = 0;
  CycloElt unit;
};

// Multiplicity of Phi_r in f and the image of f / Phi_r^order in Q[z]/Phi_r.
VanishingOrder vanishing_order(const UPoly& f, int r);

// lim_{z -> zeta} num / den in Q[z]/Phi_r; zero when num vanishes to higher
// order, PoleError when den does.
CycloElt limit_ratio_at_root(const UPoly& num, const UPoly& den, int r);

}  // namespace flagcsm
