#include "flagcsm/grassmann.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "flagcsm/errors.hpp"
#include "flagcsm/symfun.hpp"

namespace flagcsm {

namespace {

void check_rect(const Partition& lambda, int k, int n) {
  if (k < 1 || k >= n) throw UsageError("rectangle needs 1 <= k < n");
  if (!lambda.fits(k, n - k))
    throw ShapeOverflow("partition " + lambda.to_string() + " does not fit in " + std::to_string(k) + "x" +
                        std::to_string(n - k));
}

Partition from_vertical_steps(const std::vector<bool>& vert, int k) {
  // Row i (1-based from the top) sits at the (k-i+1)-th vertical step.
  std::vector<int> parts(k);
  int seen = 0;
  for (std::size_t s = 1; s < vert.size(); ++s) {
    if (!vert[s]) continue;
    ++seen;
    int i = k - seen + 1;
    parts[i - 1] = static_cast<int>(s) - (k - i + 1);
  }
  return Partition(parts);
}

}  // namespace

std::vector<bool> boundary_vertical_steps(const Partition& lambda, int k, int n) {
  check_rect(lambda, k, n);
  std::vector<bool> vert(n + 1, false);
  for (int i = 1; i <= k; ++i) vert[lambda[i - 1] + k - i + 1] = true;
  return vert;
}

std::vector<RimHook> rim_hook_additions(const Partition& lambda, int k, int n, int min_size, int max_size) {
  auto vert = boundary_vertical_steps(lambda, k, n);
  std::vector<RimHook> out;
  Partition inner = lambda.padded(k);
  for (int a = 1; a <= n; ++a) {
    if (!vert[a]) continue;
    int between = 0;
    for (int b = a + 1; b <= n; ++b) {
      if (vert[b]) {
        ++between;
        continue;
      }
      int size = b - a;
      if (size < min_size || size > max_size) continue;
      auto v2 = vert;
      v2[a] = false;
      v2[b] = true;
      RimHook h;
      h.inner = inner;
      h.outer = from_vertical_steps(v2, k);
      h.size = size;
      h.height = between;
      for (int s = a; s <= b; ++s) h.labels.push_back(s);
      h.tau = a;
      int bottom = 0;
      for (int i = 1; i <= k; ++i)
        for (int j = h.inner[i - 1] + 1; j <= h.outer[i - 1]; ++j) {
          h.cells.push_back({i, j});
          bottom = std::max(bottom, i);
        }
      h.tail = {bottom, h.inner[bottom - 1] + 1};
      out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end(), [](const RimHook& x, const RimHook& y) { return x.outer < y.outer; });
  return out;
}

LabeledPath lift_path(const std::vector<Partition>& chain, const Permutation& u, int k) {
  const int n = u.n();
  if (chain.empty()) throw UsageError("empty partition chain");
  if (grassmannian_partition(u, k) != chain.front())
    throw UsageError("start permutation does not lie over the first partition");
  LabeledPath path;
  path.start = u;
  Permutation at = u;
  for (std::size_t s = 1; s < chain.size(); ++s) {
    int tau = -1;
    for (const auto& h : rim_hook_additions(chain[s - 1], k, n, 1, n))
      if (h.outer == chain[s]) tau = h.tau;
    if (tau < 0) throw UsageError("consecutive partitions do not differ by a rim hook");
    std::vector<LabeledEdge> matches;
    for (const auto& e : k_edges_from(at, k))
      if (e.tau == tau && grassmannian_partition(e.target, k) == chain[s]) matches.push_back(e);
    if (matches.size() != 1)
      throw InvariantViolation("partition edge has " + std::to_string(matches.size()) + " lifts");
    path.edges.push_back(matches.front());
    at = matches.front().target;
  }
  return path;
}

std::map<Partition, MPoly> pushforward(const CohClass& c, int k) {
  std::map<Partition, MPoly> out;
  for (const auto& [w, coeff] : c.coeffs) {
    auto dec = coset_decompose(w, k);
    if (c.basis == Basis::Schubert && !dec.v.is_identity())
      throw UsageError("Schubert expansion has a non-Grassmannian term at " + w.to_string());
    auto it = out.find(dec.lambda);
    if (it == out.end())
      out.emplace(dec.lambda, coeff);
    else
      it->second += coeff;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<Partition, Integer> parabolic_pieri(const Partition& lambda, int k, int n, HookShape hook) {
  check_rect(lambda, k, n);
  const int steps = hook.alpha + hook.beta + 1;
  std::map<Partition, Integer> out;
  std::function<void(const Partition&, int, std::pair<int, int>)> rec = [&](const Partition& at, int done,
                                                                           std::pair<int, int> tail) {
    if (done == steps) {
      out[at] += 1;
      return;
    }
    for (const auto& h : rim_hook_additions(at, k, n, 1, n)) {
      if (done >= 1) {
        // Transitions 1..beta move the tail down, the rest move it right.
        bool down = done <= hook.beta;
        if (down ? !(h.tail.first > tail.first) : !(h.tail.second > tail.second)) continue;
      }
      rec(h.outer, done + 1, h.tail);
    }
  };
  rec(lambda.padded(k), 0, {0, 0});
  return out;
}

std::map<Partition, MPoly> parabolic_mn(const Partition& lambda, int k, int n, int r) {
  check_rect(lambda, k, n);
  if (r < 1) throw UsageError("power sums need r >= 1");
  std::map<Partition, MPoly> out;
  Permutation wl = grassmannian_from_partition(lambda, k, n);
  std::vector<int> top;
  for (int i = 1; i <= k; ++i) top.push_back(wl(i));
  MPoly diag = power_sum(r, VarSubset::t(n, top));
  if (!diag.is_zero()) out.emplace(lambda.padded(k), diag);
  for (const auto& h : rim_hook_additions(lambda, k, n, 1, r)) {
    MPoly c = complete_sym(r - h.size, VarSubset::t(n, h.labels));
    if (h.height % 2) c = -c;
    if (!c.is_zero()) out.emplace(h.outer, c);
  }
  return out;
}

std::vector<Partition> partitions_in_rectangle(int k, int n) {
  std::vector<Partition> out;
  std::vector<int> parts(k);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == k) {
      out.emplace_back(parts);
      return;
    }
    for (int p = 0; p <= cap; ++p) {
      parts[i] = p;
      rec(i + 1, p);
    }
  };
  rec(0, n - k);
  std::sort(out.begin(), out.end());
  return out;
}

std::string export_partition_dot(int k, int n) {
  std::ostringstream os;
  os << "digraph partitions_k" << k << "_n" << n << " {\n";
  auto parts = partitions_in_rectangle(k, n);
  for (const auto& p : parts) os << "  \"" << p.to_string() << "\";\n";
  for (const auto& p : parts)
    for (const auto& h : rim_hook_additions(p, k, n, 1, n)) {
      os << "  \"" << p.to_string() << "\" -> \"" << h.outer.to_string() << "\" [label=\"" << h.tau << "\"";
      if (h.size > 1) os << ", style=dashed";
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace flagcsm
