#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tileperm/errors.hpp"

namespace tileperm {

/// Vertex after v, clockwise, in 1..n.
inline int cyc_next(int v, int n) { return v % n + 1; }
/// Vertex before v.
inline int cyc_prev(int v, int n) { return (v + n - 2) % n + 1; }
/// Clockwise distance from a to b: number of boundary steps a -> b.
inline int cyc_dist(int a, int b, int n) { return ((b - a) % n + n) % n; }
/// Is q strictly inside the clockwise open interval (a, b)?
inline bool cyc_between(int a, int q, int b, int n) {
  return q != a && q != b && cyc_dist(a, q, n) < cyc_dist(a, b, n);
}

/// A diagonal [a,b] of the n-gon, stored normalized with a < b.
struct Diagonal {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

inline Diagonal make_diagonal(int n, int x, int y) {
  if (x > y) std::swap(x, y);
  if (x < 1 || y > n) fail(errc::invalid_diagonal, "endpoint out of range");
  int gap = y - x;
  if (gap < 2 || gap > n - 2)
    fail(errc::invalid_diagonal,
         "[" + std::to_string(x) + "," + std::to_string(y) + "] is not a diagonal");
  return Diagonal{x, y};
}

/// Do [a,b] and [c,d] cross in the interior?
inline bool diagonals_cross(const Diagonal& p, const Diagonal& q) {
  return (p.a < q.a && q.a < p.b && p.b < q.b) || (q.a < p.a && p.a < q.b && q.b < p.b);
}

/// A tile, identified with its vertex set listed strictly increasing
/// (which is the clockwise order starting from the minimum).
struct Tile {
  std::vector<int> vertices;
  friend auto operator<=>(const Tile&, const Tile&) = default;

  int size() const { return static_cast<int>(vertices.size()); }
  bool contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
  /// Corner after v in the clockwise traversal of the tile.
  int succ(int v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    ++it;
    return it == vertices.end() ? vertices.front() : *it;
  }
  /// Corner before v.
  int pred(int v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    return it == vertices.begin() ? vertices.back() : *(it - 1);
  }
};

/// A tiling of the n-gon: a set of pairwise non-crossing diagonals.
/// Immutable after construction; equality is set equality of diagonals.
class Tiling {
 public:
  Tiling() = default;
  Tiling(int n, std::vector<Diagonal> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
    std::sort(diagonals_.begin(), diagonals_.end());
  }

  int n() const { return n_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  int m() const { return static_cast<int>(diagonals_.size()); }
  bool has(const Diagonal& d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
  }

  friend auto operator<=>(const Tiling&, const Tiling&) = default;

 private:
  int n_ = 0;
  std::vector<Diagonal> diagonals_;
};

/// Validating constructor from raw vertex pairs.
inline Tiling make_tiling(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 3) fail(errc::out_of_range, "rank must be at least 3");
  std::vector<Diagonal> ds;
  ds.reserve(pairs.size());
  for (auto [x, y] : pairs) ds.push_back(make_diagonal(n, x, y));
  std::sort(ds.begin(), ds.end());
  for (std::size_t i = 1; i < ds.size(); ++i)
    if (ds[i] == ds[i - 1])
      fail(errc::duplicate_diagonal,
           "[" + std::to_string(ds[i].a) + "," + std::to_string(ds[i].b) + "]");
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      if (diagonals_cross(ds[i], ds[j]))
        fail(errc::crossing_diagonals, "[" + std::to_string(ds[i].a) + "," +
                                           std::to_string(ds[i].b) + "] crosses [" +
                                           std::to_string(ds[j].a) + "," +
                                           std::to_string(ds[j].b) + "]");
  return Tiling(n, std::move(ds));
}

namespace detail {

/// Face tracing over the planar subdivision cut out by the diagonals.
/// Rotations at each vertex order neighbours by clockwise distance;
/// faces are dart orbits, the ascending boundary orbit being the
/// outer face. No coordinates anywhere.
inline std::vector<Tile> trace_tiles(const Tiling& t) {
  int n = t.n();
  std::vector<std::vector<int>> nb(n + 1);
  for (int v = 1; v <= n; ++v) {
    nb[v].push_back(cyc_next(v, n));
    nb[v].push_back(cyc_prev(v, n));
  }
  for (const auto& d : t.diagonals()) {
    nb[d.a].push_back(d.b);
    nb[d.b].push_back(d.a);
  }
  for (int v = 1; v <= n; ++v)
    std::sort(nb[v].begin(), nb[v].end(),
              [&](int x, int y) { return cyc_dist(v, x, n) < cyc_dist(v, y, n); });

  auto slot_of = [&](int v, int u) {
    const auto& r = nb[v];
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] == u) return i;
    fail(errc::malformed_input, "dart lookup failed");
  };

  // Dart (v, slot) points from v to nb[v][slot]. Discovery starts at the
  // dart 1 -> 2, whose orbit is the outer face; every other orbit is a tile.
  std::vector<std::vector<char>> seen(n + 1);
  for (int v = 1; v <= n; ++v) seen[v].assign(nb[v].size(), 0);

  std::vector<Tile> tiles;
  bool outer_orbit = true;
  for (int v0 = 1; v0 <= n; ++v0) {
    for (std::size_t s0 = 0; s0 < nb[v0].size(); ++s0) {
      if (seen[v0][s0]) continue;
      std::vector<int> walk;
      int v = v0;
      std::size_t s = s0;
      while (!seen[v][s]) {
        seen[v][s] = 1;
        walk.push_back(v);
        int u = nb[v][s];
        std::size_t back = slot_of(u, v);
        v = u;
        s = (back + 1) % nb[u].size();
      }
      if (outer_orbit) {
        outer_orbit = false;
        continue;
      }
      // Interior orbits traverse tiles counterclockwise; reverse for
      // the clockwise convention, then rotate the minimum to front.
      std::reverse(walk.begin(), walk.end());
      auto mn = std::min_element(walk.begin(), walk.end());
      std::rotate(walk.begin(), mn, walk.end());
      tiles.push_back(Tile{std::move(walk)});
    }
  }
  std::sort(tiles.begin(), tiles.end());
  return tiles;
}

/// Cached incidence structure for one tiling: tiles plus the side and
/// vertex lookups the strand and plabic constructions need.
struct TileComplex {
  int n = 0;
  std::vector<Tile> tiles;
  // Boundary edge [v, v+1] -> tile index.
  std::vector<int> boundary_tile;
  // Diagonal -> (tile traversing a->b, tile traversing b->a), a < b.
  std::map<Diagonal, std::pair<int, int>> diagonal_tiles;
  // Tiles incident at v, ordered from the [v-1,v] side around to the
  // [v,v+1] side (descending clockwise distance of the corner after v).
  std::vector<std::vector<int>> tiles_at;

  explicit TileComplex(const Tiling& t) : n(t.n()), tiles(trace_tiles(t)) {
    boundary_tile.assign(n + 1, -1);
    tiles_at.assign(n + 1, {});
    for (int ti = 0; ti < static_cast<int>(tiles.size()); ++ti) {
      const Tile& tile = tiles[ti];
      for (int v : tile.vertices) {
        int w = tile.succ(v);
        if (w == cyc_next(v, n)) {
          boundary_tile[v] = ti;
        } else {
          Diagonal d{std::min(v, w), std::max(v, w)};
          auto& slot = diagonal_tiles[d];
          if (v == d.a)
            slot.first = ti;
          else
            slot.second = ti;
        }
        tiles_at[v].push_back(ti);
      }
    }
    for (int v = 1; v <= n; ++v)
      std::sort(tiles_at[v].begin(), tiles_at[v].end(), [&](int x, int y) {
        return cyc_dist(v, tiles[x].succ(v), n) > cyc_dist(v, tiles[y].succ(v), n);
      });
  }

  /// The tile on the other side of diagonal {x,y} from tile ti.
  int across(int x, int y, int ti) const {
    Diagonal d{std::min(x, y), std::max(x, y)};
    auto it = diagonal_tiles.find(d);
    if (it == diagonal_tiles.end()) fail(errc::not_present, "no such diagonal");
    return it->second.first == ti ? it->second.second : it->second.first;
  }

  bool is_boundary_side(int p, int q) const { return q == cyc_next(p, n) || p == cyc_next(q, n); }
};

}  // namespace detail

/// All tiles, sorted lexicographically by vertex list.
inline std::vector<Tile> tiles_of(const Tiling& t) { return detail::trace_tiles(t); }

struct DualTree {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // tile indices into tiles_of(T)
};

/// Dual tree of the tiling: one node per tile, one edge per diagonal.
inline DualTree dual_tree(const Tiling& t) {
  detail::TileComplex cx(t);
  DualTree g;
  g.node_count = static_cast<int>(cx.tiles.size());
  for (const auto& [d, pr] : cx.diagonal_tiles)
    g.edges.emplace_back(std::min(pr.first, pr.second), std::max(pr.first, pr.second));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// Number of diagonal sides of a tile.
inline int diagonal_side_count(const Tiling& t, const Tile& tile) {
  int cnt = 0;
  for (int v : tile.vertices)
    if (tile.succ(v) != cyc_next(v, t.n())) ++cnt;
  return cnt;
}

/// Ears: tiles with exactly one diagonal side. Empty for the untile.
inline std::vector<Tile> ears(const Tiling& t) {
  std::vector<Tile> tiles = tiles_of(t);
  if (tiles.size() < 2) return {};
  std::vector<Tile> out;
  for (const auto& tile : tiles)
    if (diagonal_side_count(t, tile) == 1) out.push_back(tile);
  return out;
}

/// Is v the endpoint of any diagonal?
inline bool is_simple_vertex(const Tiling& t, int v) {
  for (const auto& d : t.diagonals())
    if (d.a == v || d.b == v) return false;
  return true;
}

/// Boundary edges [i, i+1] with both endpoints simple; [n,1] appears as (n,1).
inline std::vector<std::pair<int, int>> simple_edges(const Tiling& t) {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v <= t.n(); ++v)
    if (is_simple_vertex(t, v) && is_simple_vertex(t, cyc_next(v, t.n())))
      out.emplace_back(v, cyc_next(v, t.n()));
  return out;
}

/// Flip the diagonal of a triangulated quadrilateral.
inline Tiling flip(const Tiling& t, const Diagonal& d) {
  if (!t.has(d)) fail(errc::not_present, "diagonal not in tiling");
  detail::TileComplex cx(t);
  auto [t_ab, t_ba] = cx.diagonal_tiles.at(d);
  const Tile& s = cx.tiles[t_ab];
  const Tile& u = cx.tiles[t_ba];
  if (s.size() != 3 || u.size() != 3)
    fail(errc::not_flippable, "an incident tile is not a triangle");
  auto third = [&](const Tile& tr) {
    for (int v : tr.vertices)
      if (v != d.a && v != d.b) return v;
    fail(errc::not_flippable, "degenerate triangle");
  };
  Diagonal nd = make_diagonal(t.n(), third(s), third(u));
  std::vector<Diagonal> ds;
  for (const auto& e : t.diagonals())
    if (e != d) ds.push_back(e);
  ds.push_back(nd);
  return Tiling(t.n(), std::move(ds));
}

/// The two cyclic-interval partitions a tile corner set induces on 1..n:
/// I_i = [q_i .. q_{i+1}) and J_i = (q_i .. q_{i+1}].
struct TilePartitions {
  std::vector<std::vector<int>> I;
  std::vector<std::vector<int>> J;
};

inline TilePartitions tile_partitions(const Tile& q, int n) {
  TilePartitions out;
  int r = q.size();
  for (int i = 0; i < r; ++i) {
    int a = q.vertices[i];
    int b = q.vertices[(i + 1) % r];
    std::vector<int> ival{a}, jval;
    for (int v = cyc_next(a, n); v != b; v = cyc_next(v, n)) {
      ival.push_back(v);
      jval.push_back(v);
    }
    jval.push_back(b);
    out.I.push_back(std::move(ival));
    out.J.push_back(std::move(jval));
  }
  return out;
}

/// Index (0-based) of the I-part containing v, and likewise for J.
inline int i_part_of(const Tile& q, int n, int v) {
  int r = q.size();
  for (int i = 0; i < r; ++i) {
    int a = q.vertices[i];
    int b = q.vertices[(i + 1) % r];
    if (v == a || cyc_between(a, v, b, n)) return i;
  }
  fail(errc::out_of_range, "vertex not covered");
}

inline int j_part_of(const Tile& q, int n, int v) {
  int r = q.size();
  for (int i = 0; i < r; ++i) {
    int a = q.vertices[i];
    int b = q.vertices[(i + 1) % r];
    if (v == b || cyc_between(a, v, b, n)) return i;
  }
  fail(errc::out_of_range, "vertex not covered");
}

/// Parse the CLI diagonal syntax "2-8,3-5,5-8" (empty string = untile).
inline Tiling parse_tiling_flag(int n, const std::string& flag) {
  std::vector<std::pair<int, int>> pairs;
  std::size_t pos = 0;
  while (pos < flag.size()) {
    std::size_t comma = flag.find(',', pos);
    if (comma == std::string::npos) comma = flag.size();
    std::string item = flag.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    std::size_t dash = item.find('-');
    if (dash == std::string::npos) fail(errc::malformed_input, "expected a-b: " + item);
    try {
      pairs.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      fail(errc::malformed_input, "bad diagonal: " + item);
    }
  }
  return make_tiling(n, pairs);
}

inline std::string format_diagonals(const Tiling& t) {
  std::string s;
  for (const auto& d : t.diagonals()) {
    if (!s.empty()) s += ',';
    s += std::to_string(d.a) + "-" + std::to_string(d.b);
  }
  return s;
}

}  // namespace tileperm
