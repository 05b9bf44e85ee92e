#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tileperm/bigint.hpp"
#include "tileperm/enumerate.hpp"
#include "tileperm/errors.hpp"
#include "tileperm/partition.hpp"
#include "tileperm/scott.hpp"
#include "tileperm/tiling.hpp"

namespace tileperm {

/// Canonical invariant of a flip-equivalence class: the tiles of size
/// at least 4, sorted. Two tilings are flip equivalent iff their keys
/// are equal.
struct FlipClassKey {
  int n = 0;
  std::vector<Tile> big_tiles;
  friend auto operator<=>(const FlipClassKey&, const FlipClassKey&) = default;
};

inline FlipClassKey class_key(const Tiling& t) {
  FlipClassKey key{t.n(), {}};
  for (Tile& tile : tiles_of(t))
    if (tile.size() >= 4) key.big_tiles.push_back(std::move(tile));
  std::sort(key.big_tiles.begin(), key.big_tiles.end());
  return key;
}

inline bool same_class(const Tiling& a, const Tiling& b) {
  if (a.n() != b.n()) fail(errc::rank_mismatch, "tilings of different rank");
  return class_key(a) == class_key(b);
}

/// Number of flip classes of A_n, counted by distinct class keys.
inline std::uint64_t count_classes(int n, int max_rank = kDefaultMaxRank) {
  std::set<FlipClassKey> keys;
  for (const Tiling& t : generate_all(n, max_rank)) keys.insert(class_key(t));
  return keys.size();
}

/// The same count via distinct Scott permutations (the main theorem
/// makes the two agree; both are exposed so tests can compare them).
inline std::uint64_t count_scott_images(int n, int max_rank = kDefaultMaxRank) {
  std::set<std::vector<int>> images;
  for (const Tiling& t : generate_all(n, max_rank)) images.insert(scott_perm(t).images);
  return images.size();
}

inline std::uint64_t count_classes_by_lambda(int n, const ShapePartition& lambda,
                                             int max_rank = kDefaultMaxRank) {
  std::set<FlipClassKey> keys;
  for (const Tiling& t : generate_by_lambda(n, lambda, max_rank)) keys.insert(class_key(t));
  return keys.size();
}

/// |AE_n(λ)| for every λ at once, from a single enumeration pass.
inline std::map<ShapePartition, std::uint64_t> lambda_class_counts(
    int n, int max_rank = kDefaultMaxRank) {
  std::map<ShapePartition, std::set<FlipClassKey>> keys;
  for (const Tiling& t : generate_all(n, max_rank)) keys[shape_of(t)].insert(class_key(t));
  std::map<ShapePartition, std::uint64_t> counts;
  for (const auto& [lam, ks] : keys) counts[lam] = ks.size();
  return counts;
}

/// |AE_n((r-2) 1^{n-r})| = C(n, r): one r-gon, triangles elsewhere.
inline BigUint binomial_class_count(int n, int r) {
  if (r <= 3 || r > n) fail(errc::out_of_range, "need 3 < r <= n");
  return binomial(n, r);
}

/// Closed-form |AE_n(λ)| from |A_n(λ)| by the reduction rules, valid
/// for at most four triangles:
///   α1 < 2: |AE(λ)| = a(λ)
///   α1 = 2: a(λ) - (α2+1) a(λ 2 1^-2)
///   α1 = 3: a(λ) - (α2+1) a(λ 2 1^-2) + (α3+1) a(λ 3 1^-3)
///   α1 = 4: a(λ) - (α4+1) a(λ 4 1^-4) + (α3+1) a(λ 3 1^-3)
///           + C(α2+2, 2) a(λ 2 2 1^-4) - (α2+1) a(λ 2 1^-2)
template <typename CountFn>
inline std::uint64_t reduction_formula_with(int n, const ShapePartition& lambda, CountFn&& a_raw) {
  if (lambda.sum() != n - 2) fail(errc::bad_partition, "partition must sum to n-2");
  int a1 = lambda.alpha(1);
  if (a1 > 4)
    fail(errc::unsupported_alpha_one,
         "no closed form for five or more triangles; use count_classes_by_lambda");
  auto a = [&](const ShapePartition& mu) -> std::int64_t {
    return static_cast<std::int64_t>(a_raw(mu));
  };
  std::int64_t total = a(lambda);
  if (a1 < 2) return static_cast<std::uint64_t>(total);
  std::int64_t a2 = lambda.alpha(2), a3 = lambda.alpha(3), a4 = lambda.alpha(4);
  if (a1 == 2) total -= (a2 + 1) * a(lambda.replace({1, 1}, {2}));
  if (a1 == 3)
    total += -(a2 + 1) * a(lambda.replace({1, 1}, {2})) +
             (a3 + 1) * a(lambda.replace({1, 1, 1}, {3}));
  if (a1 == 4)
    total += -(a4 + 1) * a(lambda.replace({1, 1, 1, 1}, {4})) +
             (a3 + 1) * a(lambda.replace({1, 1, 1}, {3})) +
             (a2 + 2) * (a2 + 1) / 2 * a(lambda.replace({1, 1, 1, 1}, {2, 2})) -
             (a2 + 1) * a(lambda.replace({1, 1}, {2}));
  return static_cast<std::uint64_t>(total);
}

inline std::uint64_t reduction_formula(int n, const ShapePartition& lambda,
                                       int max_rank = kDefaultMaxRank) {
  return reduction_formula_with(n, lambda, [&](const ShapePartition& mu) {
    return generate_by_lambda(n, mu, max_rank).size();
  });
}

/// Canonical representative per class: keep the big tiles, fan
/// triangulate every leftover region from its minimal vertex.
inline std::map<FlipClassKey, Tiling> class_representatives(int n,
                                                            int max_rank = kDefaultMaxRank) {
  std::map<FlipClassKey, Tiling> reps;
  for (const Tiling& t : generate_all(n, max_rank)) {
    FlipClassKey key = class_key(t);
    if (reps.count(key)) continue;
    // Diagonals bounding big tiles.
    std::set<Diagonal> ds;
    for (const Tile& big : key.big_tiles)
      for (int v : big.vertices) {
        int w = big.succ(v);
        if (w != cyc_next(v, n)) ds.insert({std::min(v, w), std::max(v, w)});
      }
    Tiling frame(n, {ds.begin(), ds.end()});
    for (const Tile& region : tiles_of(frame)) {
      if (region.size() < 4) continue;
      if (std::binary_search(key.big_tiles.begin(), key.big_tiles.end(), region)) continue;
      int apex = region.vertices.front();
      for (std::size_t i = 2; i + 1 < region.vertices.size(); ++i)
        ds.insert({apex, region.vertices[i]});
    }
    reps.emplace(std::move(key), Tiling(n, {ds.begin(), ds.end()}));
  }
  return reps;
}

}  // namespace tileperm
