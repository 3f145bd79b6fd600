#include "flagcsm/arith.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

#include "flagcsm/errors.hpp"

namespace flagcsm {

std::string to_string(const Rational& c) { return c.get_str(); }

void Mono::set(int v, int p) {
  if (p < 0 || p > 255) throw InvariantViolation("exponent out of range");
  int d = e[kMaxVars] - e[v] + p;
  if (d > 255) throw InvariantViolation("total degree out of range");
  e[v] = static_cast<std::uint8_t>(p);
  e[kMaxVars] = static_cast<std::uint8_t>(d);
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  for (int v = 0; v <= kMaxVars; ++v) {
    int s = e[v] + o.e[v];
    if (s > 255) throw InvariantViolation("exponent overflow");
    r.e[v] = static_cast<std::uint8_t>(s);
  }
  return r;
}

bool canonical_less(const Mono& a, const Mono& b) {
  if (a.e[kMaxVars] != b.e[kMaxVars]) return a.e[kMaxVars] < b.e[kMaxVars];
  for (int v = kMaxVars - 1; v >= 0; --v)
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
  return false;
}

std::size_t MonoHash::operator()(const Mono& m) const {
  std::uint64_t w[4];
  std::memcpy(w, m.e.data(), sizeof(w));
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : w) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    h = (h ^ x) * 0xc4ceb9fe1a85ec53ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string var_name(int n, int index) {
  if (index < n) return "x" + std::to_string(index + 1);
  if (index < 2 * n) return "t" + std::to_string(index - n + 1);
  if (index == 2 * n) return "q";
  if (index == 2 * n + 1) return "z";
  throw UsageError("variable index out of range");
}

VarKind var_kind(int n, int index) {
  if (index < n) return VarKind::X;
  if (index < 2 * n) return VarKind::T;
  if (index == 2 * n) return VarKind::Q;
  return VarKind::Z;
}

MPoly::MPoly(int n) : n_(n) {
  if (n < 0 || n > kMaxN) throw UsageError("ring size out of range");
}

MPoly::MPoly(int n, const Rational& c) : MPoly(n) {
  if (c != 0) terms_.push_back({Mono{}, c});
}

MPoly MPoly::var(int n, int index) {
  MPoly p(n);
  if (index < 0 || index >= p.nvars()) throw UsageError("variable index out of range");
  Mono m;
  m.set(index, 1);
  p.terms_.push_back({m, Rational(1)});
  return p;
}

MPoly MPoly::x(int n, int i) {
  if (i < 1 || i > n) throw UsageError("x index out of range");
  return var(n, x_index(n, i));
}
MPoly MPoly::t(int n, int i) {
  if (i < 1 || i > n) throw UsageError("t index out of range");
  return var(n, t_index(n, i));
}
MPoly MPoly::q(int n) { return var(n, q_index(n)); }
MPoly MPoly::z(int n) { return var(n, z_index(n)); }

MPoly MPoly::from_terms(int n, std::vector<Term> terms) {
  MPoly p(n);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return canonical_less(a.m, b.m); });
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
    } else {
      if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
  return p;
}

void MPoly::check_ring(const MPoly& o) const {
  if (n_ != o.n_) throw UsageError("polynomials live in different rings");
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.degree() == 0);
}

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].m.degree() == 0) return terms_[0].c;
  return 0;
}

int MPoly::degree() const { return terms_.empty() ? -1 : terms_.back().m.degree(); }
int MPoly::min_degree() const { return terms_.empty() ? -1 : terms_.front().m.degree(); }

MPoly MPoly::homogeneous_part(int d) const {
  MPoly p(n_);
  for (const auto& t : terms_)
    if (t.m.degree() == d) p.terms_.push_back(t);
  return p;
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m[var]);
  return d;
}

bool MPoly::involves(VarKind kind) const {
  for (const auto& t : terms_)
    for (int v = 0; v < nvars(); ++v)
      if (t.m[v] && var_kind(n_, v) == kind) return true;
  return false;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

namespace {

void merge_into(std::vector<Term>& out, const std::vector<Term>& a, const std::vector<Term>& b,
                bool subtract) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_less(a[i].m, b[j].m))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_less(b[j].m, a[i].m)) {
      out.push_back(b[j++]);
      if (subtract) out.back().c = -out.back().c;
    } else {
      Rational c = subtract ? Rational(a[i].c - b[j].c) : Rational(a[i].c + b[j].c);
      if (c != 0) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  check_ring(o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  merge_into(out, terms_, o.terms_, false);
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_ring(o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  merge_into(out, terms_, o.terms_, true);
  terms_ = std::move(out);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return MPoly(a.n_);
  if (b.is_constant()) return a * b.terms_[0].c;
  if (a.is_constant()) return b * a.terms_[0].c;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.m * t.m, s.c * t.c});
  return MPoly::from_terms(a.n_, std::move(prod));
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.c *= c;
  }
  return *this;
}

bool MPoly::operator==(const MPoly& o) const {
  if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw UsageError("negative power");
  MPoly r(n_, 1);
  MPoly b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

MPoly MPoly::rename(const std::vector<int>& target) const {
  if (static_cast<int>(target.size()) != nvars()) throw UsageError("rename map has wrong arity");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Mono m;
    for (int v = 0; v < nvars(); ++v)
      if (t.m[v]) m.set(target[v], m[target[v]] + t.m[v]);
    out.push_back({m, t.c});
  }
  return from_terms(n_, std::move(out));
}

MPoly MPoly::substitute(const std::map<int, MPoly>& assignment) const {
  for (const auto& [v, p] : assignment) {
    if (v < 0 || v >= nvars()) throw UsageError("substitution variable out of range");
    check_ring(p);
  }
  std::map<int, std::vector<MPoly>> powers;
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Mono kept;
    MPoly factor(n_, t.c);
    for (int v = 0; v < nvars(); ++v) {
      int e = t.m[v];
      if (!e) continue;
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        kept.set(v, e);
        continue;
      }
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(MPoly(n_, 1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * it->second);
      factor *= pw[e];
    }
    for (const auto& s : factor.terms_) out.push_back({s.m * kept, s.c});
  }
  return from_terms(n_, std::move(out));
}

MPoly MPoly::drop(VarKind kind) const {
  MPoly p(n_);
  for (const auto& t : terms_) {
    bool keep = true;
    for (int v = 0; v < nvars() && keep; ++v)
      if (t.m[v] && var_kind(n_, v) == kind) keep = false;
    if (keep) p.terms_.push_back(t);
  }
  return p;
}

MPoly MPoly::coefficient_of(int var, int p) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.m[var] != p) continue;
    Term s = t;
    s.m.set(var, 0);
    out.push_back(std::move(s));
  }
  return from_terms(n_, std::move(out));
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (int v = 0; v < nvars(); ++v) {
      int e = t.m[v];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(n_, v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << c.get_str();
    } else if (c == 1) {
      os << mono;
    } else {
      os << c.get_str() << "*" << mono;
    }
  }
  return os.str();
}

MPoly MPoly::parse(int n, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw UsageError("empty polynomial");
  std::vector<Term> out;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& k) {
    std::size_t start = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (start == k) throw UsageError("expected a number in polynomial '" + s + "'");
    return s.substr(start, k - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw UsageError("malformed polynomial '" + s + "'");
    }
    Rational c(sign);
    Mono m;
    bool need_factor = true;
    while (need_factor) {
      if (i >= s.size()) throw UsageError("dangling operator in '" + s + "'");
      char ch = s[i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        Integer num(read_int(i));
        Integer den(1);
        if (i < s.size() && s[i] == '/') {
          ++i;
          den = Integer(read_int(i));
        }
        Rational r(num, den);
        r.canonicalize();
        c *= r;
      } else {
        int v;
        if (ch == 'x' || ch == 't') {
          ++i;
          int idx = std::stoi(read_int(i));
          if (idx < 1 || idx > n) throw UsageError("variable index out of range in '" + s + "'");
          v = ch == 'x' ? x_index(n, idx) : t_index(n, idx);
        } else if (ch == 'q') {
          ++i;
          v = q_index(n);
        } else if (ch == 'z') {
          ++i;
          v = z_index(n);
        } else {
          throw UsageError("unexpected character in '" + s + "'");
        }
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = std::stoi(read_int(i));
        }
        m.set(v, m[v] + e);
      }
      if (i < s.size() && s[i] == '*') {
        ++i;
      } else {
        need_factor = false;
      }
    }
    out.push_back({m, c});
  }
  return from_terms(n, std::move(out));
}

MPoly poly_add(const MPoly& a, const MPoly& b) { return a + b; }
MPoly poly_sub(const MPoly& a, const MPoly& b) { return a - b; }
MPoly poly_mul(const MPoly& a, const MPoly& b) { return a * b; }

MPoly divide_exact_linear(const MPoly& p, const MPoly& form) {
  if (p.n() != form.n()) throw UsageError("polynomials live in different rings");
  const int n = p.n();
  if (form.is_zero()) throw ExactnessError("division by zero form");
  if (form.degree() > 1) throw UsageError("divisor is not linear");
  int v1 = -1;
  Rational c1;
  int nv = 0;
  for (const auto& t : form.terms()) {
    if (t.m.degree() == 0) continue;
    ++nv;
    for (int v = 0; v < form.nvars(); ++v)
      if (t.m[v] && v > v1) {
        v1 = v;
        c1 = t.c;
      }
  }
  if (nv > 2) throw UsageError("divisor involves more than two variables");
  if (p.is_zero()) return MPoly(n);
  if (v1 < 0) {
    Rational inv = 1 / form.constant_term();
    return p * inv;
  }
  MPoly rest = form - MPoly::var(n, v1) * c1;
  Rational inv = 1 / c1;

  const int D = p.degree_in(v1);
  if (D == 0) throw ExactnessError("non-divisible polynomial: " + p.to_string() + " by " + form.to_string());
  std::vector<std::vector<Term>> groups(D + 1);
  for (const auto& t : p.terms()) {
    Term s = t;
    int e = s.m[v1];
    s.m.set(v1, 0);
    groups[e].push_back(std::move(s));
  }
  std::vector<MPoly> pj(D + 1);
  for (int j = 0; j <= D; ++j) pj[j] = MPoly::from_terms(n, std::move(groups[j]));

  // p_j = c1 q_{j-1} + rest * q_j
  std::vector<MPoly> qj(D + 1, MPoly(n));
  qj[D - 1] = pj[D] * inv;
  for (int j = D - 1; j >= 1; --j) qj[j - 1] = (pj[j] - rest * qj[j]) * inv;
  if (pj[0] != rest * qj[0])
    throw ExactnessError("non-divisible polynomial: " + p.to_string() + " by " + form.to_string());

  std::vector<Term> out;
  for (int j = 0; j < D; ++j)
    for (const auto& t : qj[j].terms()) {
      Term s = t;
      s.m.set(v1, j);
      out.push_back(std::move(s));
    }
  return MPoly::from_terms(n, std::move(out));
}

MPoly t_diff(int n, int i, int j) { return MPoly::t(n, i) - MPoly::t(n, j); }

}  // namespace flagcsm
