#include "flagcsm/upoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "flagcsm/errors.hpp"

namespace flagcsm {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int deg) {
  if (deg < 0) throw UsageError("negative degree");
  std::vector<Rational> v(deg + 1);
  v[deg] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::z() { return monomial(1, 1); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

UPoly UPoly::operator-() const {
  UPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const Rational& c) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= c;
  return UPoly(std::move(v));
}

UPoly UPoly::pow(int e) const {
  if (e < 0) throw UsageError("negative power");
  UPoly r = constant(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Rational UPoly::eval(const Rational& z) const {
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * z + c_[i];
  return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw UsageError("polynomial division by zero");
  std::vector<Rational> rem = c_;
  int dd = d.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rational> quo(degree() - dd + 1);
  for (int i = degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / d.leading();
    quo[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

std::string UPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    Rational c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    if (mono.empty())
      os << c.get_str();
    else if (c == 1)
      os << mono;
    else
      os << c.get_str() << "*" << mono;
  }
  return os.str();
}

UPoly z_pow_minus_one(int r) { return UPoly::monomial(1, r) - UPoly::constant(1); }

const UPoly& cyclotomic(int r) {
  if (r < 1) throw UsageError("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, UPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
  }
  UPoly p = z_pow_minus_one(r);
  for (int d = 1; d < r; ++d) {
    if (r % d) continue;
    auto [q, rem] = p.divmod(cyclotomic(d));
    if (!rem.is_zero()) throw InvariantViolation("cyclotomic division left a remainder");
    p = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(r, std::move(p)).first->second;
}

CycloElt::CycloElt(int r, const UPoly& p) : r_(r), res_(p.divmod(cyclotomic(r)).second) {}

CycloElt CycloElt::rational(int r, const Rational& c) { return CycloElt(r, UPoly::constant(c)); }

CycloElt CycloElt::zeta(int r) { return CycloElt(r, UPoly::z()); }

Rational CycloElt::rational_value() const {
  if (!is_rational()) throw InvariantViolation("cyclotomic element is not rational: " + to_string());
  return res_.coeff(0);
}

CycloElt CycloElt::operator-() const { return CycloElt(r_, -res_); }

namespace {
void same_root(const CycloElt& a, const CycloElt& b) {
  if (a.r() != b.r()) throw UsageError("cyclotomic elements over different roots");
}
}  // namespace

CycloElt operator+(const CycloElt& a, const CycloElt& b) {
  same_root(a, b);
  return CycloElt(a.r_, a.res_ + b.res_);
}
CycloElt operator-(const CycloElt& a, const CycloElt& b) {
  same_root(a, b);
  return CycloElt(a.r_, a.res_ - b.res_);
}
CycloElt operator*(const CycloElt& a, const CycloElt& b) {
  same_root(a, b);
  return CycloElt(a.r_, a.res_ * b.res_);
}

CycloElt CycloElt::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElt r = rational(r_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

CycloElt CycloElt::inverse() const {
  if (is_zero()) throw PoleError("inverse of zero in cyclotomic field");
  // Track s with s*res == r0 (mod Phi).
  UPoly r0 = cyclotomic(r_), r1 = res_;
  UPoly s0, s1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, rem] = r0.divmod(r1);
    UPoly s2 = s0 - q * s1;
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  if (r0.degree() != 0) throw InvariantViolation("cyclotomic polynomial is not irreducible");
  return CycloElt(r_, s0 * (Rational(1) / r0.leading()));
}

std::string CycloElt::to_string() const { return res_.to_string(); }

VanishingOrder vanishing_order(const UPoly& f, int r) {
  if (f.is_zero()) throw UsageError("vanishing order of the zero polynomial is undefined");
  const UPoly& phi = cyclotomic(r);
  UPoly g = f;
  int order = 0;
  for (;;) {
    auto [q, rem] = g.divmod(phi);
    if (!rem.is_zero()) break;
    g = q;
    ++order;
  }
  return {order, CycloElt(r, g)};
}

CycloElt limit_ratio_at_root(const UPoly& num, const UPoly& den, int r) {
  auto d = vanishing_order(den, r);
  if (num.is_zero()) return CycloElt::rational(r, 0);
  auto nm = vanishing_order(num, r);
  if (nm.order < d.order) throw PoleError("limit has a pole at the root of unity");
  if (nm.order > d.order) return CycloElt::rational(r, 0);
  return nm.unit * d.unit.inverse();
}

}  // namespace flagcsm
