#include "flagcsm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "flagcsm/errors.hpp"

namespace flagcsm {

Permutation::Permutation(const std::vector<int>& oneline) {
  const int n = static_cast<int>(oneline.size());
  if (n < 1 || n > kMaxPermN) throw UsageError("permutation size out of range");
  std::vector<bool> seen(n + 1);
  for (int i = 0; i < n; ++i) {
    int v = oneline[i];
    if (v < 1 || v > n || seen[v]) throw UsageError("not a permutation");
    seen[v] = true;
    w_[i] = static_cast<std::uint8_t>(v);
  }
  n_ = static_cast<std::uint8_t>(n);
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(v);
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b) throw UsageError("bad transposition");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[a - 1], v[b - 1]);
  return Permutation(v);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  std::string tok;
  bool commas = text.find(',') != std::string_view::npos;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != ',')
      throw UsageError("malformed permutation '" + std::string(text) + "'");
    if (commas) {
      if (c == ',') {
        if (tok.empty()) throw UsageError("malformed permutation '" + std::string(text) + "'");
        v.push_back(std::stoi(tok));
        tok.clear();
      } else {
        tok += c;
      }
    } else {
      v.push_back(c - '0');
    }
  }
  if (commas) {
    if (tok.empty()) throw UsageError("malformed permutation '" + std::string(text) + "'");
    v.push_back(std::stoi(tok));
  }
  if (v.empty()) throw UsageError("empty permutation");
  return Permutation(v);
}

std::vector<int> Permutation::oneline() const { return std::vector<int>(w_.begin(), w_.begin() + n_); }

int Permutation::length() const {
  int l = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) l += w_[i] > w_[j];
  return l;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (int i = 0; i < n_; ++i) r.w_[w_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return r;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.n_ != v.n_) throw UsageError("composing permutations of different sizes");
  Permutation r = u;
  for (int i = 0; i < u.n_; ++i) r.w_[i] = u.w_[v.w_[i] - 1];
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (w_[i] != i + 1) return false;
  return true;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> peeled;
  Permutation w = *this;
  for (;;) {
    int i = 1;
    while (i < n_ && w(i) < w(i + 1)) ++i;
    if (i == n_) break;
    peeled.push_back(i);
    std::swap(w.w_[i - 1], w.w_[i]);
  }
  return std::vector<int>(peeled.rbegin(), peeled.rend());
}

std::vector<int> Permutation::right_descents() const {
  std::vector<int> d;
  for (int i = 1; i < n_; ++i)
    if (w_[i - 1] > w_[i]) d.push_back(i);
  return d;
}

std::vector<int> Permutation::left_descents() const { return inverse().right_descents(); }

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::size_t Permutation::lex_rank() const {
  std::size_t r = 0;
  for (int i = 0; i < n_; ++i) {
    int c = 0;
    for (int j = i + 1; j < n_; ++j) c += w_[j] < w_[i];
    r = r * (n_ - i) + c;
  }
  return r;
}

Permutation Permutation::lex_unrank(int n, std::size_t rank) {
  if (rank >= factorial(n)) throw UsageError("rank out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> v;
  for (int i = 0; i < n; ++i) {
    std::size_t f = factorial(n - 1 - i);
    std::size_t c = rank / f;
    rank %= f;
    v.push_back(pool[c]);
    pool.erase(pool.begin() + c);
  }
  return Permutation(v);
}

std::vector<int> Permutation::nonfixed_set() const {
  std::vector<int> m;
  for (int i = 1; i <= n_; ++i)
    if ((*this)(i) != i) m.push_back(i);
  return m;
}

int Permutation::k_height(int k) const {
  int c = 0;
  for (int i = 1; i <= std::min<int>(k, n_); ++i) c += (*this)(i) != i;
  return c - 1;
}

std::vector<int> Permutation::image(const std::vector<int>& A) const {
  std::vector<int> r;
  for (int a : A) r.push_back((*this)(a));
  std::sort(r.begin(), r.end());
  return r;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (n_ > 9 && i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s;
}

std::size_t PermutationHash::operator()(const Permutation& w) const {
  std::size_t h = w.n();
  for (int i = 1; i <= w.n(); ++i) h = h * 31 + w(i);
  return h;
}

const std::vector<Permutation>& all_perms(int n) {
  if (n < 1 || n > 8) throw UsageError("all_perms supports 1 <= n <= 8");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<Permutation>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<Permutation>>();
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
      slot->emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return *slot;
}

Permutation grassmannian_from_partition(const Partition& lambda, int k, int n) {
  if (k < 0 || k > n) throw UsageError("k out of range");
  if (!lambda.fits(k, n - k))
    throw ShapeOverflow("partition " + lambda.to_string() + " does not fit in " + std::to_string(k) + "x" +
                        std::to_string(n - k));
  std::vector<int> v(n);
  std::vector<bool> used(n + 1);
  for (int i = 1; i <= k; ++i) {
    int val = lambda[i - 1] + k - i + 1;
    v[k - i] = val;
    used[val] = true;
  }
  int pos = k;
  for (int val = 1; val <= n; ++val)
    if (!used[val]) v[pos++] = val;
  return Permutation(v);
}

Partition grassmannian_partition(const Permutation& w, int k) { return coset_decompose(w, k).lambda; }

CosetDecomposition coset_decompose(const Permutation& w, int k) {
  const int n = w.n();
  if (k < 0 || k > n) throw UsageError("k out of range");
  std::vector<int> top, bottom;
  for (int i = 1; i <= k; ++i) top.push_back(w(i));
  for (int i = k + 1; i <= n; ++i) bottom.push_back(w(i));
  std::sort(top.begin(), top.end());
  std::sort(bottom.begin(), bottom.end());
  std::vector<int> parts(k);
  for (int i = 1; i <= k; ++i) parts[i - 1] = top[k - i] - (k - i + 1);
  std::vector<int> m = top;
  m.insert(m.end(), bottom.begin(), bottom.end());
  Permutation wl(m);
  return {Partition(parts), wl, wl.inverse() * w};
}

Cycle::Cycle(std::vector<int> e) : elems(std::move(e)) {
  if (elems.size() < 2) throw UsageError("a cycle needs at least two elements");
  auto mn = std::min_element(elems.begin(), elems.end());
  std::rotate(elems.begin(), mn, elems.end());
  std::vector<int> s = elems;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw UsageError("repeated element in cycle");
}

Cycle Cycle::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
  std::vector<int> e;
  if (s.find(',') != std::string::npos) {
    std::string tok;
    for (char c : s) {
      if (c == ',') {
        e.push_back(std::stoi(tok));
        tok.clear();
      } else {
        tok += c;
      }
    }
    e.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw UsageError("malformed cycle");
      e.push_back(c - '0');
    }
  }
  return Cycle(e);
}

Permutation Cycle::as_permutation(int n) const {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    int a = elems[i], b = elems[(i + 1) % elems.size()];
    if (a < 1 || a > n) throw UsageError("cycle element out of range");
    v[a - 1] = b;
  }
  return Permutation(v);
}

std::string Cycle::to_string() const {
  bool big = false;
  for (int e : elems) big |= e > 9;
  std::string s = "(";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (big && i) s += ",";
    s += std::to_string(elems[i]);
  }
  return s + ")";
}

std::vector<Cycle> all_cycles(int n, int max_len) {
  std::vector<Cycle> out;
  for (int m = 2; m <= std::min(max_len, n); ++m) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + m, true);
    std::vector<std::vector<int>> subsets;
    do {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (pick[i]) s.push_back(i + 1);
      subsets.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(subsets.begin(), subsets.end());
    for (auto& s : subsets) {
      std::vector<int> rest(s.begin() + 1, s.end());
      do {
        std::vector<int> c{s[0]};
        c.insert(c.end(), rest.begin(), rest.end());
        out.emplace_back(c);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  return out;
}

}  // namespace flagcsm
