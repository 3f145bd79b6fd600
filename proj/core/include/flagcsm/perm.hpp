#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flagcsm/partition.hpp"

namespace flagcsm {

inline constexpr int kMaxPermN = 15;

// One-line notation; values and positions are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(const std::vector<int>& oneline);
  static Permutation identity(int n);
  static Permutation longest(int n);
  static Permutation transposition(int n, int a, int b);
  static Permutation simple(int n, int i) { return transposition(n, i, i + 1); }
  // "23154" (n <= 9) or "2,3,1,5,4".
  static Permutation parse(std::string_view text);

  int n() const { return n_; }
  int operator()(int i) const { return w_[i - 1]; }
  std::vector<int> oneline() const;

  int length() const;
  Permutation inverse() const;
  // (u * v)(i) = u(v(i))
  friend Permutation operator*(const Permutation& u, const Permutation& v);
  bool is_identity() const;

  // Left-to-right word: w = s_{word[0]} s_{word[1]} ...; built by peeling
  // the leftmost right descent first.
  std::vector<int> reduced_word() const;
  std::vector<int> right_descents() const;
  std::vector<int> left_descents() const;

  // Rank in the lexicographic order of one-line notation (Lehmer code).
  std::size_t lex_rank() const;
  static Permutation lex_unrank(int n, std::size_t rank);

  std::vector<int> nonfixed_set() const;
  // #{i <= k : w(i) != i} - 1
  int k_height(int k) const;
  // {w(a) : a in A}, sorted
  std::vector<int> image(const std::vector<int>& A) const;

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.w_ <=> b.w_;
  }

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxPermN> w_{};
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const;
};

std::size_t factorial(int n);

// All of S_n in lexicographic order.
const std::vector<Permutation>& all_perms(int n);

// w_lambda with descent at k: w(k-i+1) = lambda_i + k - i + 1.
Permutation grassmannian_from_partition(const Partition& lambda, int k, int n);
// Gr(w): partition of the minimal coset representative of w.
Partition grassmannian_partition(const Permutation& w, int k);

struct CosetDecomposition {
  Partition lambda;
  Permutation w_lambda;
  Permutation v;  // in S_k x S_{n-k}, w = w_lambda * v
};
CosetDecomposition coset_decompose(const Permutation& w, int k);

// Cycle (c0 c1 ... c_{m-1}) mapping c_i -> c_{i+1}; stored with the minimum
// element first.
struct Cycle {
  std::vector<int> elems;

  explicit Cycle(std::vector<int> e);
  static Cycle parse(std::string_view text);  // "(145)" or "(1,4,5)"
  int size() const { return static_cast<int>(elems.size()); }
  Permutation as_permutation(int n) const;
  std::string to_string() const;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

// All cycles in S_n of length 2..max_len, ordered by length then elements.
std::vector<Cycle> all_cycles(int n, int max_len);

}  // namespace flagcsm
