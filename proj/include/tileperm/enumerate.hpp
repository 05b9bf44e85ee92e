#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "tileperm/bigint.hpp"
#include "tileperm/errors.hpp"
#include "tileperm/partition.hpp"
#include "tileperm/tiling.hpp"

namespace tileperm {

inline constexpr int kDefaultMaxRank = 12;

/// a_n(m) = C(n+m-1, m) C(n-3, m) / (m+1): tilings of the n-gon with
/// m diagonals.
inline BigUint a_n_m_formula(int n, int m) {
  if (n < 3 || m < 0 || m > n - 3) fail(errc::out_of_range, "need 0 <= m <= n-3");
  return (binomial(n + m - 1, m) * binomial(n - 3, m)).div_exact(static_cast<std::uint32_t>(m + 1));
}

/// a_n = Σ_m a_n(m), the little Schroeder numbers.
inline BigUint a_n_formula(int n) {
  if (n < 3) fail(errc::out_of_range, "rank must be at least 3");
  BigUint total;
  for (int m = 0; m <= n - 3; ++m) total += a_n_m_formula(n, m);
  return total;
}

namespace detail {

// The recursive list construction:
//   A_n = A_{n-1} + J(A_{n-1}) + J_{n-1}(A_{n-1})
//         + sum over r=2..n-3 of 2.K(A_{r+1}) . A_{n-r}
// split by the diagonal at vertex n nearest to n-1. Union is list
// concatenation; within a meld the left factor varies outermost.
inline std::vector<Tiling> build_ordered_lists(int n, std::vector<std::vector<Tiling>>& memo) {
  if (!memo[n].empty() || n == 3) {
    if (n == 3 && memo[3].empty()) memo[3] = {Tiling(3, {})};
    return memo[n];
  }
  const std::vector<Tiling>& prev = build_ordered_lists(n - 1, memo);
  std::vector<Tiling> out;

  // Vertex n simple, no diagonal [1, n-1].
  for (const Tiling& t : prev) out.emplace_back(n, t.diagonals());

  // Vertex n simple, diagonal [1, n-1] present.
  for (const Tiling& t : prev) {
    std::vector<Diagonal> ds = t.diagonals();
    ds.push_back({1, n - 1});
    out.emplace_back(n, std::move(ds));
  }

  // Diagonal [n-2, n] present: relabel n-1 -> n in A_{n-1}.
  for (const Tiling& t : prev) {
    std::vector<Diagonal> ds;
    for (const Diagonal& d : t.diagonals())
      ds.push_back({d.a, d.b == n - 1 ? n : d.b});
    ds.push_back({n - 2, n});
    out.emplace_back(n, std::move(ds));
  }

  // Nearest diagonal from n is [n-r-1, n]: factor through the
  // subpolygons {n-r-1..n-1} (+ optional closing diagonal) and
  // {1..n-r-1, n}.
  for (int r = 2; r <= n - 3; ++r) {
    const std::vector<Tiling>& left = build_ordered_lists(r + 1, memo);
    const std::vector<Tiling>& right = build_ordered_lists(n - r, memo);
    int shift = n - r - 2;
    for (int close = 0; close <= 1; ++close) {
      for (const Tiling& a : left) {
        std::vector<Diagonal> base;
        for (const Diagonal& d : a.diagonals()) base.push_back({d.a + shift, d.b + shift});
        if (close) base.push_back({n - r - 1, n - 1});
        base.push_back({n - r - 1, n});
        for (const Tiling& b : right) {
          std::vector<Diagonal> ds = base;
          for (const Diagonal& d : b.diagonals())
            ds.push_back({d.a, d.b == n - r ? n : d.b});
          out.emplace_back(n, std::move(ds));
        }
      }
    }
  }
  memo[n] = std::move(out);
  return memo[n];
}

}  // namespace detail

/// All tilings of the n-gon, in the order of the recursive construction.
inline std::vector<Tiling> generate_all(int n, int max_rank = kDefaultMaxRank) {
  if (n < 3) fail(errc::out_of_range, "rank must be at least 3");
  if (n > max_rank) fail(errc::rank_too_large, "rank " + std::to_string(n) + " exceeds limit");
  std::vector<std::vector<Tiling>> memo(n + 1);
  return detail::build_ordered_lists(n, memo);
}

/// Tilings with exactly m diagonals, in generate_all order.
inline std::vector<Tiling> generate_by_m(int n, int m, int max_rank = kDefaultMaxRank) {
  if (n < 3 || m < 0 || m > n - 3) fail(errc::out_of_range, "need 0 <= m <= n-3");
  std::vector<Tiling> out;
  for (Tiling& t : generate_all(n, max_rank))
    if (t.m() == m) out.push_back(std::move(t));
  return out;
}

/// Sorted multiset of |t|-2 over the tiles of T.
inline ShapePartition shape_of(const Tiling& t) {
  std::vector<int> parts;
  for (const Tile& tile : tiles_of(t)) parts.push_back(tile.size() - 2);
  return ShapePartition(std::move(parts));
}

/// Tilings whose tile-size multiset is {λ_i + 2}.
inline std::vector<Tiling> generate_by_lambda(int n, const ShapePartition& lambda,
                                              int max_rank = kDefaultMaxRank) {
  if (lambda.sum() != n - 2)
    fail(errc::bad_partition, "partition must sum to n-2");
  std::vector<Tiling> out;
  for (Tiling& t : generate_all(n, max_rank))
    if (shape_of(t) == lambda) out.push_back(std::move(t));
  return out;
}

/// |A_n(λ)| for every λ at once, from a single enumeration pass.
inline std::map<ShapePartition, std::uint64_t> lambda_counts(int n,
                                                             int max_rank = kDefaultMaxRank) {
  std::map<ShapePartition, std::uint64_t> counts;
  for (const Tiling& t : generate_all(n, max_rank)) ++counts[shape_of(t)];
  return counts;
}

}  // namespace tileperm
