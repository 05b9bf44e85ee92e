#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "tileperm/errors.hpp"

namespace tileperm {

/// Shape of a tiling: the partition with one part |t|-2 per tile t,
/// so a λ-tiling of the n-gon has Σλ = n-2 and α_d tiles that are
/// (d+2)-gonal.
struct ShapePartition {
  std::vector<int> parts;  // weakly decreasing, positive

  ShapePartition() = default;
  explicit ShapePartition(std::vector<int> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    for (int x : parts)
      if (x <= 0) fail(errc::bad_partition, "parts must be positive");
  }

  friend auto operator<=>(const ShapePartition&, const ShapePartition&) = default;

  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int num_parts() const { return static_cast<int>(parts.size()); }
  int alpha(int d) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), d));
  }

  /// Remove the given parts (each must be present) and add `add`; the
  /// λ 2 1^{-2}-style substitutions of the reduction formulas.
  ShapePartition replace(const std::vector<int>& remove, const std::vector<int>& add) const {
    std::vector<int> p = parts;
    for (int r : remove) {
      auto it = std::find(p.begin(), p.end(), r);
      if (it == p.end()) fail(errc::bad_partition, "part not present: " + std::to_string(r));
      p.erase(it);
    }
    p.insert(p.end(), add.begin(), add.end());
    return ShapePartition(std::move(p));
  }

  std::string str() const {
    std::string s;
    for (int x : parts) {
      if (!s.empty()) s += ' ';
      s += std::to_string(x);
    }
    return s;
  }
};

/// Parse "2,2,1,1" (commas or spaces).
inline ShapePartition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      parts.push_back(std::stoi(cur));
    } catch (const std::exception&) {
      fail(errc::bad_partition, "bad part: " + cur);
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ')
      flush();
    else
      cur += c;
  }
  flush();
  if (parts.empty()) fail(errc::bad_partition, "empty partition");
  return ShapePartition(std::move(parts));
}

/// All partitions of `total` into exactly `k` parts, lexicographically
/// descending (the row order of the λ-tables).
inline std::vector<ShapePartition> partitions_with_parts(int total, int k) {
  std::vector<ShapePartition> out;
  if (k <= 0 || total < k) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int slots, int max_part) -> void {
    if (slots == 0) {
      if (remaining == 0) out.emplace_back(ShapePartition{cur});
      return;
    }
    for (int p = std::min(max_part, remaining - (slots - 1)); p >= 1; --p) {
      if (remaining - p < slots - 1) continue;
      cur.push_back(p);
      self(self, remaining - p, slots - 1, p);
      cur.pop_back();
    }
  };
  rec(rec, total, k, total);
  return out;
}

}  // namespace tileperm
