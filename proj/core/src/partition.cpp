#include "flagcsm/partition.hpp"

#include <algorithm>
#include <cctype>

#include "flagcsm/errors.hpp"

namespace flagcsm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw UsageError("partition has a negative part");
    if (i && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) throw UsageError("malformed partition '" + std::string(text) + "'");
    parts.push_back(std::stoi(tok));
    tok.clear();
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty() || s == "0" || s == "empty" || s == "()") return Partition(s == "0" ? std::vector<int>{0} : std::vector<int>{});
  if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok += c;
    } else if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw UsageError("malformed partition '" + std::string(text) + "'");
    }
  }
  flush();
  return Partition(std::move(parts));
}

int Partition::operator[](int i) const {
  return i >= 0 && i < static_cast<int>(parts_.size()) ? parts_[i] : 0;
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::length() const {
  int l = 0;
  for (int p : parts_) l += p > 0;
  return l;
}

bool Partition::contains(const Partition& inner) const {
  int rows = std::max(parts_.size(), inner.parts_.size());
  for (int i = 0; i < rows; ++i)
    if (inner[i] > (*this)[i]) return false;
  return true;
}

bool Partition::fits(int rows, int cols) const { return length() <= rows && (*this)[0] <= cols; }

Partition Partition::padded(int rows) const {
  if (length() > rows) throw ShapeOverflow("partition " + to_string() + " has more than " + std::to_string(rows) + " rows");
  std::vector<int> v(rows);
  for (int i = 0; i < rows; ++i) v[i] = (*this)[i];
  return Partition(std::move(v));
}

Partition Partition::conjugate() const {
  std::vector<int> v((*this)[0]);
  for (int j = 0; j < (*this)[0]; ++j)
    for (int p : parts_) v[j] += p > j;
  return Partition(std::move(v));
}

int Partition::hook(int i, int j) const {
  if (j >= (*this)[i]) throw UsageError("cell outside the partition");
  int leg = 0;
  while ((*this)[i + leg + 1] > j) ++leg;
  return (*this)[i] - j + leg;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool operator==(const Partition& a, const Partition& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  int rows = std::max(a.parts_.size(), b.parts_.size());
  for (int i = 0; i < rows; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace flagcsm
