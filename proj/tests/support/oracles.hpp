#pragma once

// Independent reference computations the unit tests check the library
// against. Everything here recomputes from first principles and must
// not reuse the library's derivation paths.

#include <algorithm>
#include <set>
#include <vector>

#include "tileperm/tiling.hpp"

namespace oracles {

/// Every set of pairwise non-crossing diagonals, grown lexicographically
/// by backtracking. Independent of the recursive list construction.
inline std::vector<std::set<std::pair<int, int>>> noncrossing_sets(int n) {
  std::vector<std::pair<int, int>> all;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 2; b <= n; ++b)
      if (!(a == 1 && b == n)) all.emplace_back(a, b);
  auto crosses = [](std::pair<int, int> p, std::pair<int, int> q) {
    return (p.first < q.first && q.first < p.second && p.second < q.second) ||
           (q.first < p.first && p.first < q.second && q.second < p.second);
  };
  std::vector<std::set<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    out.emplace_back(chosen.begin(), chosen.end());
    for (std::size_t i = from; i < all.size(); ++i) {
      bool ok = true;
      for (const auto& c : chosen) ok &= !crosses(c, all[i]);
      if (!ok) continue;
      chosen.push_back(all[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Tiles by recursive splitting along diagonals; independent of the
/// face-tracing derivation.
inline std::vector<std::vector<int>> tiles_by_splitting(
    const std::vector<int>& polygon, const std::vector<std::pair<int, int>>& diagonals) {
  if (diagonals.empty()) {
    std::vector<int> tile = polygon;
    std::sort(tile.begin(), tile.end());
    return {tile};
  }
  auto [a, b] = diagonals.front();
  auto ia = std::find(polygon.begin(), polygon.end(), a);
  auto ib = std::find(polygon.begin(), polygon.end(), b);
  if (ia > ib) std::swap(ia, ib);
  std::vector<int> left(ia, ib + 1);
  std::vector<int> right(ib, polygon.end());
  right.insert(right.end(), polygon.begin(), ia + 1);
  auto side_of = [&](const std::vector<int>& part, std::pair<int, int> d) {
    return std::count(part.begin(), part.end(), d.first) &&
           std::count(part.begin(), part.end(), d.second);
  };
  std::vector<std::pair<int, int>> dl, dr;
  for (std::size_t i = 1; i < diagonals.size(); ++i) {
    if (side_of(left, diagonals[i]))
      dl.push_back(diagonals[i]);
    else
      dr.push_back(diagonals[i]);
  }
  std::vector<std::vector<int>> tiles = tiles_by_splitting(left, dl);
  for (auto& t : tiles_by_splitting(right, dr)) tiles.push_back(std::move(t));
  return tiles;
}

inline std::vector<std::vector<int>> tiles_of_oracle(const tileperm::Tiling& t) {
  std::vector<int> polygon(t.n());
  for (int i = 0; i < t.n(); ++i) polygon[i] = i + 1;
  std::vector<std::pair<int, int>> ds;
  for (const auto& d : t.diagonals()) ds.emplace_back(d.a, d.b);
  auto tiles = tiles_by_splitting(polygon, ds);
  std::sort(tiles.begin(), tiles.end());
  return tiles;
}

}  // namespace oracles
