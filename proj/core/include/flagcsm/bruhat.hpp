#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagcsm/perm.hpp"

namespace flagcsm {

struct LabeledEdge {
  Permutation source;
  Permutation target;
  int a = 0;  // a <= k
  int b = 0;  // b > k
  int tau = 0;
  bool is_cover = false;
};

struct LabeledPath {
  Permutation start;
  std::vector<LabeledEdge> edges;
  int in_count = 0;
  int de_count = 0;

  const Permutation& end() const { return edges.empty() ? start : edges.back().target; }
  int size() const { return static_cast<int>(edges.size()); }
  std::vector<int> labels() const;
};

struct SigmaDelta {
  std::vector<int> sigma;
  std::vector<int> delta;
};

// u -> u t_ab with a <= k < b and u(a) < u(b), ordered by target.
std::vector<LabeledEdge> k_edges_from(const Permutation& u, int k);

// Extended k-Bruhat order, decided pointwise: u(a) <= w(a) for a <= k and
// u(b) >= w(b) for b > k.
bool leq_k(const Permutation& u, const Permutation& w, int k);

SigmaDelta sigma_delta(const Permutation& u, const Permutation& w, const std::vector<int>& A);

enum class PathShape { Decreasing, Increasing, Peakless, PeaklessUpTo, Unimodal, SignedUnimodal };

struct PathSpec {
  PathShape shape = PathShape::Decreasing;
  int alpha = 0;  // Peakless/Unimodal: in; PeaklessUpTo: max in
  int beta = 0;   // Peakless/Unimodal: de; PeaklessUpTo: max de
  int r = 0;      // Decreasing/Increasing/SignedUnimodal: length

  static PathSpec decreasing(int r) { return {PathShape::Decreasing, 0, 0, r}; }
  static PathSpec increasing(int r) { return {PathShape::Increasing, 0, 0, r}; }
  static PathSpec peakless(int a, int b) { return {PathShape::Peakless, a, b, 0}; }
  static PathSpec peakless_up_to(int a, int b) { return {PathShape::PeaklessUpTo, a, b, 0}; }
  static PathSpec unimodal(int a, int b) { return {PathShape::Unimodal, a, b, 0}; }
  static PathSpec signed_unimodal(int r) { return {PathShape::SignedUnimodal, 0, 0, r}; }
};

using PathsByEnd = std::map<Permutation, std::vector<LabeledPath>>;

// Label sequences: Decreasing/Increasing strictly monotone of length r;
// Peakless(a,b): beta descents then alpha ascents; PeaklessUpTo: every
// nonempty peakless path with in <= a, de <= b; Unimodal(a,b): alpha ascents
// then beta descents; SignedUnimodal(r): all unimodal paths of length r.
PathsByEnd enumerate_paths(const Permutation& u, int k, const PathSpec& spec, bool cover_only);

// Lowest-level enumerator: each consecutive label pair must satisfy
// relations[j] ('<' or '>') between edge j and edge j+1.
PathsByEnd enumerate_label_pattern(const Permutation& u, int k, const std::string& relations, bool cover_only);

// All cycles eta of length 2..max_len+1 with u <=_k u*eta.
std::vector<Cycle> cycles_through(const Permutation& u, int k, int max_len);

// The unique unimodal path from u to u*eta.
LabeledPath unique_unimodal_path(const Permutation& u, const Cycle& eta, int k);

// DOT digraph of the k-Bruhat graph on S_n; non-cover edges dashed unless
// covers_only, in which case they are omitted.
std::string export_dot(int n, int k, bool covers_only = false);

}  // namespace flagcsm
