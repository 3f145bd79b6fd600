#include "flagcsm/bruhat.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "flagcsm/errors.hpp"

namespace flagcsm {

std::vector<int> LabeledPath::labels() const {
  std::vector<int> l;
  for (const auto& e : edges) l.push_back(e.tau);
  return l;
}

std::vector<LabeledEdge> k_edges_from(const Permutation& u, int k) {
  const int n = u.n();
  if (k < 1 || k >= n) throw UsageError("k must satisfy 1 <= k < n");
  std::vector<LabeledEdge> out;
  for (int a = 1; a <= k; ++a)
    for (int b = k + 1; b <= n; ++b) {
      if (u(a) > u(b)) continue;
      bool cover = true;
      for (int c = a + 1; c < b && cover; ++c)
        if (u(a) < u(c) && u(c) < u(b)) cover = false;
      out.push_back({u, u * Permutation::transposition(n, a, b), a, b, u(a), cover});
    }
  std::sort(out.begin(), out.end(), [](const LabeledEdge& x, const LabeledEdge& y) { return x.target < y.target; });
  return out;
}

bool leq_k(const Permutation& u, const Permutation& w, int k) {
  if (u.n() != w.n()) throw UsageError("comparing permutations of different sizes");
  for (int a = 1; a <= k; ++a)
    if (u(a) > w(a)) return false;
  for (int b = k + 1; b <= u.n(); ++b)
    if (u(b) < w(b)) return false;
  return true;
}

SigmaDelta sigma_delta(const Permutation& u, const Permutation& w, const std::vector<int>& A) {
  std::set<int> uA, moved;
  for (int a : A) uA.insert(u(a));
  for (int i = 1; i <= u.n(); ++i)
    if (u(i) != w(i)) moved.insert(u(i));
  SigmaDelta sd;
  std::set_union(uA.begin(), uA.end(), moved.begin(), moved.end(), std::back_inserter(sd.sigma));
  std::set_difference(uA.begin(), uA.end(), moved.begin(), moved.end(), std::back_inserter(sd.delta));
  return sd;
}

namespace {

void set_peakless_stats(LabeledPath& p) {
  if (p.edges.empty()) return;
  auto l = p.labels();
  int idx = static_cast<int>(std::min_element(l.begin(), l.end()) - l.begin());
  p.de_count = idx;
  p.in_count = static_cast<int>(l.size()) - 1 - idx;
}

void set_unimodal_stats(LabeledPath& p) {
  if (p.edges.empty()) return;
  auto l = p.labels();
  int idx = static_cast<int>(std::max_element(l.begin(), l.end()) - l.begin());
  p.in_count = idx;
  p.de_count = static_cast<int>(l.size()) - 1 - idx;
}

void merge(PathsByEnd& into, PathsByEnd&& from) {
  for (auto& [w, ps] : from) {
    auto& dst = into[w];
    for (auto& p : ps) dst.push_back(std::move(p));
  }
}

}  // namespace

PathsByEnd enumerate_label_pattern(const Permutation& u, int k, const std::string& relations, bool cover_only) {
  PathsByEnd out;
  LabeledPath cur;
  cur.start = u;
  const std::size_t len = relations.empty() ? 0 : relations.size() + 1;
  std::function<void(const Permutation&)> rec = [&](const Permutation& at) {
    if (cur.edges.size() == len) {
      out[at].push_back(cur);
      return;
    }
    for (auto& e : k_edges_from(at, k)) {
      if (cover_only && !e.is_cover) continue;
      if (!cur.edges.empty()) {
        char rel = relations[cur.edges.size() - 1];
        int prev = cur.edges.back().tau;
        if (rel == '<' && !(prev < e.tau)) continue;
        if (rel == '>' && !(prev > e.tau)) continue;
      }
      cur.edges.push_back(e);
      rec(e.target);
      cur.edges.pop_back();
    }
  };
  rec(u);
  return out;
}

namespace {

PathsByEnd enumerate_length(const Permutation& u, int k, int len, const std::string& relations, bool cover_only) {
  if (len == 0) {
    PathsByEnd out;
    LabeledPath p;
    p.start = u;
    out[u].push_back(p);
    return out;
  }
  if (len == 1) {
    PathsByEnd out;
    for (auto& e : k_edges_from(u, k)) {
      if (cover_only && !e.is_cover) continue;
      LabeledPath p;
      p.start = u;
      p.edges.push_back(e);
      out[e.target].push_back(p);
    }
    return out;
  }
  return enumerate_label_pattern(u, k, relations, cover_only);
}

}  // namespace

PathsByEnd enumerate_paths(const Permutation& u, int k, const PathSpec& spec, bool cover_only) {
  if (spec.alpha < 0 || spec.beta < 0 || spec.r < 0) throw UsageError("path parameters must be nonnegative");
  PathsByEnd out;
  switch (spec.shape) {
    case PathShape::Decreasing:
      out = enumerate_length(u, k, spec.r, std::string(std::max(spec.r - 1, 0), '>'), cover_only);
      break;
    case PathShape::Increasing:
      out = enumerate_length(u, k, spec.r, std::string(std::max(spec.r - 1, 0), '<'), cover_only);
      break;
    case PathShape::Peakless:
      out = enumerate_length(u, k, spec.alpha + spec.beta + 1,
                             std::string(spec.beta, '>') + std::string(spec.alpha, '<'), cover_only);
      break;
    case PathShape::PeaklessUpTo:
      for (int a = 0; a <= spec.alpha; ++a)
        for (int b = 0; b <= spec.beta; ++b)
          merge(out, enumerate_paths(u, k, PathSpec::peakless(a, b), cover_only));
      break;
    case PathShape::Unimodal:
      out = enumerate_length(u, k, spec.alpha + spec.beta + 1,
                             std::string(spec.alpha, '<') + std::string(spec.beta, '>'), cover_only);
      for (auto& [w, ps] : out)
        for (auto& p : ps) set_unimodal_stats(p);
      return out;
    case PathShape::SignedUnimodal:
      if (spec.r == 0) return enumerate_length(u, k, 0, "", cover_only);
      for (int a = 0; a < spec.r; ++a) merge(out, enumerate_paths(u, k, PathSpec::unimodal(a, spec.r - 1 - a), cover_only));
      return out;
  }
  for (auto& [w, ps] : out)
    for (auto& p : ps) set_peakless_stats(p);
  return out;
}

std::vector<Cycle> cycles_through(const Permutation& u, int k, int max_len) {
  std::vector<Cycle> out;
  for (auto& c : all_cycles(u.n(), max_len + 1))
    if (leq_k(u, u * c.as_permutation(u.n()), k)) out.push_back(c);
  return out;
}

LabeledPath unique_unimodal_path(const Permutation& u, const Cycle& eta, int k) {
  Permutation w = u * eta.as_permutation(u.n());
  if (!leq_k(u, w, k)) throw UsageError("no path: u is not below u*eta in the extended k-Bruhat order");
  auto paths = enumerate_paths(u, k, PathSpec::signed_unimodal(eta.size() - 1), false);
  auto it = paths.find(w);
  if (it == paths.end() || it->second.size() != 1)
    throw InvariantViolation("expected exactly one unimodal path to " + w.to_string());
  return it->second.front();
}

std::string export_dot(int n, int k, bool covers_only) {
  std::ostringstream os;
  os << "digraph kbruhat_n" << n << "_k" << k << " {\n";
  for (const auto& u : all_perms(n)) os << "  \"" << u.to_string() << "\";\n";
  for (const auto& u : all_perms(n))
    for (const auto& e : k_edges_from(u, k)) {
      if (covers_only && !e.is_cover) continue;
      os << "  \"" << u.to_string() << "\" -> \"" << e.target.to_string() << "\" [label=\"" << e.tau << "\"";
      if (!e.is_cover) os << ", style=dashed";
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace flagcsm
