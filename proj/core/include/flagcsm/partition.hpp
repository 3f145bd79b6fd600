#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace flagcsm {

// Weakly decreasing list of nonnegative parts. Trailing zeros are kept as
// given so that "4,2,2,0" prints back unchanged; comparisons ignore them.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const;  // 0-based row, 0 beyond the stored parts
  int size() const;              // number of boxes
  int length() const;            // number of nonzero parts
  bool empty() const { return size() == 0; }
  bool contains(const Partition& inner) const;
  bool fits(int rows, int cols) const;
  // Padded (or trimmed of zeros) to exactly `rows` entries.
  Partition padded(int rows) const;
  Partition conjugate() const;
  // Hook length of cell (row i, column j), both 0-based.
  int hook(int i, int j) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b);
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

}  // namespace flagcsm
