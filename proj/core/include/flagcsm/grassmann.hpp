#pragma once

// Partitions in the k x (n-k) rectangle: rim hooks with boundary labels, the
// labeled partition graph, pushforward from the flag variety, and the
// parabolic Pieri / Murnaghan-Nakayama rules.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flagcsm/bruhat.hpp"
#include "flagcsm/cohclass.hpp"
#include "flagcsm/partition.hpp"
#include "flagcsm/rules.hpp"

namespace flagcsm {

// Boundary of lambda walked from the bottom-left corner; step s (1-based) is
// vertical iff s is a value of w_lambda on [k].
std::vector<bool> boundary_vertical_steps(const Partition& lambda, int k, int n);

struct RimHook {
  Partition inner;
  Partition outer;
  std::vector<std::pair<int, int>> cells;  // (row, col), 1-based
  std::pair<int, int> tail;                // leftmost cell of the bottom row
  int size = 0;
  int height = 0;           // rows spanned minus one
  std::vector<int> labels;  // L(outer/inner), a run of size+1 boundary steps
  int tau = 0;              // min of labels
};

// All rim hooks outer/inner with outer in the rectangle and size in range.
std::vector<RimHook> rim_hook_additions(const Partition& lambda, int k, int n, int min_size, int max_size);

// The unique k-Bruhat path from u whose edge labels and Grassmannian images
// follow the given chain of partitions.
LabeledPath lift_path(const std::vector<Partition>& chain, const Permutation& u, int k);

// Coefficient at mu: CSM basis sums the fiber over Gr(w) = mu; Schubert
// basis reads the coefficient at w_mu (the class must be a pullback).
std::map<Partition, MPoly> pushforward(const CohClass& c, int k);

// Nonequivariant CSM Pieri on Gr(k,n) by counting tail-constrained chains.
std::map<Partition, Integer> parabolic_pieri(const Partition& lambda, int k, int n, HookShape hook);

// Equivariant Schubert MN rule on Gr(k,n).
std::map<Partition, MPoly> parabolic_mn(const Partition& lambda, int k, int n, int r);

// DOT export of the labeled partition graph; edges with |mu/lambda| > 1 dashed.
std::string export_partition_dot(int k, int n);

// All partitions in the k x (n-k) rectangle (k entries each), lex order.
std::vector<Partition> partitions_in_rectangle(int k, int n);

}  // namespace flagcsm
