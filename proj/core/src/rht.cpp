#include "flagcsm/rht.hpp"

#include <algorithm>
#include <functional>

#include "flagcsm/errors.hpp"
#include "flagcsm/parallel.hpp"
#include "flagcsm/perm.hpp"
#include "flagcsm/schubert.hpp"

namespace flagcsm {

namespace {

int check_skew(const Partition& Lambda, const Partition& lambda, int r) {
  if (r < 1) throw UsageError("r must be positive");
  if (!Lambda.contains(lambda))
    throw UsageError(lambda.to_string() + " is not contained in " + Lambda.to_string());
  const int m = Lambda.size() - lambda.size();
  if (m % r) throw UsageError("r = " + std::to_string(r) + " does not divide the skew size " + std::to_string(m));
  return m / r;
}

// Beta-set of mu on `beads` beads: mu_i + beads - i for i = 1..beads.
std::vector<int> beta_set(const Partition& mu, int beads) {
  std::vector<int> b(beads);
  for (int i = 1; i <= beads; ++i) b[i - 1] = mu[i - 1] + beads - i;
  return b;
}

Partition from_beta_set(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  const int beads = static_cast<int>(b.size());
  std::vector<int> parts(beads);
  for (int i = 1; i <= beads; ++i) parts[i - 1] = b[i - 1] - (beads - i);
  return Partition(parts);
}

struct Strip {
  Partition inner;
  int height;
};

// Every r-rim hook removable from mu that leaves a partition containing floor.
std::vector<Strip> removable_hooks(const Partition& mu, const Partition& floor, int r, int beads) {
  auto b = beta_set(mu, beads);
  std::vector<Strip> out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int p = b[i], q = p - r;
    if (q < 0 || std::find(b.begin(), b.end(), q) != b.end()) continue;
    int between = 0;
    for (int v : b)
      if (v > q && v < p) ++between;
    auto nb = b;
    nb[i] = q;
    Partition inner = from_beta_set(nb);
    if (inner.contains(floor)) out.push_back({inner, between});
  }
  return out;
}

void strip_all(const Partition& floor, int r, int beads, std::vector<Partition>& chain, int height,
               std::vector<RimHookTableau>& out) {
  const Partition& top = chain.back();
  if (top.size() == floor.size()) {
    RimHookTableau t;
    t.chain.assign(chain.rbegin(), chain.rend());
    t.r = r;
    t.total_height = height;
    out.push_back(std::move(t));
    return;
  }
  for (const auto& s : removable_hooks(top, floor, r, beads)) {
    chain.push_back(s.inner);
    strip_all(floor, r, beads, chain, height + s.height, out);
    chain.pop_back();
  }
}

Partition trimmed(const Partition& p) { return p.padded(p.length()); }

// Calls leaf(maj) once per standard filling of Lambda / filled.
void fill_syt(const Partition& Lambda, std::vector<int>& filled, int next, int last_row, int m, int maj,
              const std::function<void(int)>& leaf) {
  if (next > m) {
    leaf(maj);
    return;
  }
  const int rows = Lambda.length();
  for (int i = 0; i < rows; ++i) {
    if (filled[i] >= Lambda[i]) continue;
    if (i > 0 && filled[i - 1] <= filled[i]) continue;
    ++filled[i];
    // next-1 contributes when next sits strictly below it.
    int add = (next > 1 && i > last_row) ? next - 1 : 0;
    fill_syt(Lambda, filled, next + 1, i, m, maj + add, leaf);
    --filled[i];
  }
}

UPoly t_to_z(const MPoly& f) {
  const int n = f.n();
  std::vector<Rational> c;
  for (const auto& term : f.terms()) {
    int deg = 0;
    for (int v = 0; v < f.nvars(); ++v) {
      const int e = term.m.e[v];
      if (!e) continue;
      if (var_kind(n, v) != VarKind::T) throw UsageError("expected a polynomial in t only");
      deg += e * (v - n + 1);
    }
    if (static_cast<int>(c.size()) <= deg) c.resize(deg + 1);
    c[deg] += term.c;
  }
  return UPoly(std::move(c));
}

// prod over inversions i<j of w_Lambda of (z^{w(i)} - z^{w(j)}).
UPoly self_y_poly(const Permutation& w) {
  UPoly out = UPoly::constant(1);
  const int n = w.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) out = out * (UPoly::monomial(1, w(i)) - UPoly::monomial(1, w(j)));
  return out;
}

Integer as_integer(const Rational& v) {
  if (v.get_den() != 1) throw ExactnessError("expected an integer, got " + to_string(v));
  return v.get_num();
}

Integer factorial_z(int d) {
  Integer f = 1;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<RimHookTableau> enumerate_rht(const Partition& Lambda, const Partition& lambda, int r) {
  check_skew(Lambda, lambda, r);
  const int beads = std::max(Lambda.length(), 1);
  const Partition top = trimmed(Lambda), floor = trimmed(lambda);
  if (top.size() == floor.size()) return {RimHookTableau{{floor}, r, 0}};
  // Independent subtrees per first strip.
  auto first = removable_hooks(top, floor, r, beads);
  std::vector<std::vector<RimHookTableau>> parts(first.size());
  parallel_for(first.size(), [&](std::size_t i) {
    std::vector<Partition> chain{top, trimmed(first[i].inner)};
    strip_all(floor, r, beads, chain, first[i].height, parts[i]);
  });
  std::vector<RimHookTableau> out;
  for (auto& p : parts)
    for (auto& t : p) {
      for (auto& c : t.chain) c = trimmed(c);
      out.push_back(std::move(t));
    }
  return out;
}

std::size_t count_rht(const Partition& Lambda, const Partition& lambda, int r) {
  return enumerate_rht(Lambda, lambda, r).size();
}

int rht_sign(const Partition& Lambda, const Partition& lambda, int r) {
  auto all = enumerate_rht(Lambda, lambda, r);
  if (all.empty()) return 0;
  const int parity = all.front().total_height % 2;
  for (const auto& t : all)
    if (t.total_height % 2 != parity) throw InvariantViolation("rim hook tableaux of one shape disagree in sign");
  return parity ? -1 : 1;
}

std::vector<StandardTableau> enumerate_syt(const Partition& Lambda, const Partition& lambda) {
  if (!Lambda.contains(lambda)) throw UsageError(lambda.to_string() + " is not contained in " + Lambda.to_string());
  const int rows = Lambda.length();
  const int m = Lambda.size() - lambda.size();
  std::vector<StandardTableau> out;
  StandardTableau cur;
  cur.rows.resize(rows);
  for (int i = 0; i < rows; ++i) cur.rows[i].assign(Lambda[i], 0);
  std::vector<int> filled(rows);
  for (int i = 0; i < rows; ++i) filled[i] = lambda[i];
  std::function<void(int, int, int)> rec = [&](int next, int last_row, int maj) {
    if (next > m) {
      cur.maj = maj;
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < rows; ++i) {
      if (filled[i] >= Lambda[i]) continue;
      if (i > 0 && filled[i - 1] <= filled[i]) continue;
      cur.rows[i][filled[i]] = next;
      ++filled[i];
      rec(next + 1, i, maj + ((next > 1 && i > last_row) ? next - 1 : 0));
      --filled[i];
      cur.rows[i][filled[i]] = 0;
    }
  };
  rec(1, -1, 0);
  return out;
}

UPoly y_poly(const Partition& lambda, const Partition& Lambda, int k, int n) {
  if (!Lambda.fits(k, n - k)) throw ShapeOverflow(Lambda.to_string() + " does not fit the rectangle");
  if (!Lambda.contains(lambda)) return UPoly();
  if (lambda.empty()) return UPoly::constant(1);
  Permutation wL = grassmannian_from_partition(Lambda, k, n);
  if (lambda == Lambda) return self_y_poly(wL);
  Permutation wl = grassmannian_from_partition(lambda, k, n);
  return t_to_z(localize(double_schubert_transition(wl), wL));
}

Integer rht_limit_value(const Partition& Lambda, const Partition& lambda, int r, int k, int n) {
  const int d = check_skew(Lambda, lambda, r);
  if (d == 0) return 1;
  UPoly num = y_poly(lambda, Lambda, k, n) * z_pow_minus_one(r).pow(d);
  UPoly den = y_poly(Lambda, Lambda, k, n);
  CycloElt lim = limit_ratio_at_root(num, den, r);
  if (!lim.is_rational()) throw ExactnessError("limit " + lim.to_string() + " is not rational");
  Integer scale = factorial_z(d);
  for (int i = 0; i < d; ++i) scale *= r;
  return as_integer(lim.rational_value() * scale);
}

Integer rht_limit_value(const Partition& Lambda, const Partition& lambda, int r) {
  const int k = std::max(Lambda.length(), 1);
  return rht_limit_value(Lambda, lambda, r, k, k + std::max(Lambda[0], 1));
}

Integer rht_count_limit(const Partition& Lambda, const Partition& lambda, int r, int k, int n) {
  return abs(rht_limit_value(Lambda, lambda, r, k, n));
}

Integer rht_count_limit(const Partition& Lambda, const Partition& lambda, int r) {
  return abs(rht_limit_value(Lambda, lambda, r));
}

Integer rht_maj_value(const Partition& Lambda, const Partition& lambda, int r) {
  const int d = check_skew(Lambda, lambda, r);
  if (d == 0) return 1;
  const int rows = Lambda.length();
  std::vector<int> filled(rows);
  for (int i = 0; i < rows; ++i) filled[i] = lambda[i];
  std::vector<Integer> by_residue(r);
  fill_syt(Lambda, filled, 1, -1, Lambda.size() - lambda.size(), 0, [&](int maj) { by_residue[maj % r] += 1; });
  std::vector<Rational> c(r);
  for (int i = 0; i < r; ++i) c[i] = by_residue[i];
  CycloElt sum(r, UPoly(std::move(c)));
  if (!sum.is_rational()) throw ExactnessError("maj sum " + sum.to_string() + " is not rational");
  return as_integer(sum.rational_value());
}

Integer rht_count_maj(const Partition& Lambda, const Partition& lambda, int r) {
  return abs(rht_maj_value(Lambda, lambda, r));
}

Integer rht_count_hook(const Partition& Lambda, int r) {
  const int d = check_skew(Lambda, Partition(), r);
  int divisible = 0;
  Integer denom = 1;
  for (int i = 0; i < Lambda.length(); ++i)
    for (int j = 0; j < Lambda[i]; ++j) {
      const int h = Lambda.hook(i, j);
      if (h % r == 0) {
        ++divisible;
        denom *= h;
      }
    }
  if (divisible != d) return 0;
  Integer num = factorial_z(d);
  for (int i = 0; i < d; ++i) num *= r;
  Rational q(num, denom);
  q.canonicalize();
  return as_integer(q);
}

}  // namespace flagcsm
