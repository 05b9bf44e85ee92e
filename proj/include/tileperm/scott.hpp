#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tileperm/errors.hpp"
#include "tileperm/tiling.hpp"

namespace tileperm {

/// Permutation of {1..n}; 1-indexed semantics throughout.
struct Permutation {
  int n = 0;
  std::vector<int> images;  // images[i-1] = sigma(i)

  Permutation() = default;
  Permutation(int rank, std::vector<int> img) : n(rank), images(std::move(img)) {}

  int operator()(int i) const { return images[i - 1]; }
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  static Permutation identity(int rank) {
    std::vector<int> img(rank);
    for (int i = 0; i < rank; ++i) img[i] = i + 1;
    return {rank, std::move(img)};
  }

  bool is_bijection() const {
    std::vector<char> hit(n + 1, 0);
    for (int v : images) {
      if (v < 1 || v > n || hit[v]) return false;
      hit[v] = 1;
    }
    return static_cast<int>(images.size()) == n;
  }
};

/// Disjoint cycle string: cycles start at their minimum, sorted by
/// minimum, fixed points omitted. Elements are separated by commas
/// only when some label needs more than one digit.
inline std::string to_cycles(const Permutation& p) {
  std::vector<char> used(p.n + 1, 0);
  std::string out;
  bool commas = p.n > 9;
  for (int i = 1; i <= p.n; ++i) {
    if (used[i] || p(i) == i) continue;
    std::string cyc = "(" + std::to_string(i);
    used[i] = 1;
    for (int j = p(i); j != i; j = p(j)) {
      used[j] = 1;
      cyc += commas ? "," + std::to_string(j) : std::to_string(j);
    }
    out += cyc + ")";
  }
  return out;
}

/// One step of a strand: the tile it passes through and the tile side
/// (p -> q, clockwise) its segment runs along.
struct StrandStep {
  Tile tile;
  std::pair<int, int> side;
  friend auto operator<=>(const StrandStep&, const StrandStep&) = default;
};

/// An oriented strand x ~> y with its full trace through the tiling.
struct Strand {
  int start = 0;
  int end = 0;
  std::vector<StrandStep> steps;
};

namespace detail {

/// Trace the strand leaving vertex x. The segment alongside side
/// (p -> q) starts at the umbral point after q and ends just before p;
/// when the side before it is a diagonal the strand continues in the
/// neighbouring tile, alongside that tile's side ending at p.
inline Strand trace_strand(const TileComplex& cx, int x) {
  Strand s;
  s.start = x;
  int ti = cx.boundary_tile[x];
  int q = x;
  while (true) {
    const Tile& tile = cx.tiles[ti];
    int p = tile.pred(q);
    s.steps.push_back({tile, {p, q}});
    int o = tile.pred(p);
    if (cx.is_boundary_side(o, p)) {
      s.end = p;
      return s;
    }
    ti = cx.across(o, p, ti);
    q = p;
  }
}

}  // namespace detail

/// The n strands of Sigma(T), indexed by start vertex.
inline std::vector<Strand> scott_strands(const Tiling& t) {
  detail::TileComplex cx(t);
  std::vector<Strand> out;
  out.reserve(t.n());
  for (int x = 1; x <= t.n(); ++x) out.push_back(detail::trace_strand(cx, x));
  return out;
}

/// The Scott permutation: sigma(x) = y for each strand x ~> y.
inline Permutation scott_perm(const Tiling& t) {
  detail::TileComplex cx(t);
  std::vector<int> img(t.n());
  for (int x = 1; x <= t.n(); ++x) img[x - 1] = detail::trace_strand(cx, x).end;
  return {t.n(), std::move(img)};
}

enum class StrandTileRelation { Long, Short, NotIncident };

/// Long: the strand uses a strand segment of Q. Short: it does not,
/// but its trace touches at least one vertex of Q. NotIncident: the
/// trace is vertex-disjoint from Q.
inline StrandTileRelation strand_class(const Strand& s, const Tile& q) {
  bool touches = false;
  for (const StrandStep& step : s.steps) {
    if (step.tile == q) return StrandTileRelation::Long;
    for (int v : step.tile.vertices)
      if (q.contains(v)) touches = true;
  }
  return touches ? StrandTileRelation::Short : StrandTileRelation::NotIncident;
}

/// Number of vertices of Q strictly covered by the strand (between
/// start and end, clockwise).
inline int covered_vertices(const Strand& s, const Tile& q, int n) {
  int cnt = 0;
  for (int v : q.vertices)
    if (cyc_between(s.start, v, s.end, n)) ++cnt;
  return cnt;
}

/// Crossings between two strands: they cross once in every tile where
/// both have segments and the two sides share a corner.
inline int strand_crossings(const Strand& a, const Strand& b) {
  int cnt = 0;
  for (const StrandStep& sa : a.steps)
    for (const StrandStep& sb : b.steps) {
      if (sa.tile != sb.tile || sa.side == sb.side) continue;
      int shared = (sa.side.first == sb.side.first) + (sa.side.first == sb.side.second) +
                   (sa.side.second == sb.side.first) + (sa.side.second == sb.side.second);
      if (shared >= 1) ++cnt;
    }
  return cnt;
}

/// Maximal runs j-1, j-2, ..., j-r+1 (descending by one inside a
/// cycle), reported as (j, r); runs of fewer than two elements are not
/// reported. A fully descending permutation is the single n-run at 1.
inline std::vector<std::pair<int, int>> detect_runs(const Permutation& p) {
  int n = p.n;
  auto desc = [&](int v) { return p(v) == cyc_prev(v, n); };  // sigma(v) = v-1
  bool all = true;
  for (int v = 1; v <= n && all; ++v) all = desc(v);
  if (all) return {{1, n}};
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= n; ++j) {
    if (desc(j)) continue;   // sigma(j) = j-1 would extend the run upward
    int m = 1;               // elements j-1, ..., j-m
    int v = cyc_prev(j, n);  // v = j-1
    while (m < n - 1 && desc(v)) {
      v = cyc_prev(v, n);
      ++m;
    }
    if (m >= 2) out.emplace_back(j, m + 1);
  }
  return out;
}

/// Restriction of the Scott permutation to the two subpolygons cut off
/// by a diagonal d = [i,j] of T: P' on {i..j} relabelled from i, and
/// P'' on {j..i} relabelled from j.
inline std::pair<Permutation, Permutation> restrict_scott(const Tiling& t, const Diagonal& d) {
  if (!t.has(d)) fail(errc::not_present, "diagonal not in tiling");
  int n = t.n();
  int k1 = d.b - d.a + 1;
  int k2 = n - (d.b - d.a) + 1;
  std::vector<std::pair<int, int>> inner, outer;
  for (const Diagonal& e : t.diagonals()) {
    if (e == d) continue;
    bool a_in = e.a >= d.a && e.a <= d.b;
    bool b_in = e.b >= d.a && e.b <= d.b;
    if (a_in && b_in)
      inner.emplace_back(e.a - d.a + 1, e.b - d.a + 1);
    else
      outer.emplace_back(cyc_dist(d.b, e.a, n) + 1, cyc_dist(d.b, e.b, n) + 1);
  }
  return {scott_perm(make_tiling(k1, inner)), scott_perm(make_tiling(k2, outer))};
}

}  // namespace tileperm
