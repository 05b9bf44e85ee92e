#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tileperm/enumerate.hpp"
#include "tileperm/flipclasses.hpp"
#include "tileperm/plabic.hpp"
#include "tileperm/scott.hpp"
#include "tileperm/strandmap.hpp"
#include "tileperm/tiling.hpp"

namespace tileperm {

struct VerifyFailure {
  std::string property;
  std::string counterexample;
};

struct VerifySuiteResult {
  std::string suite;
  long long checks = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

namespace detail {

struct SuiteRunner {
  VerifySuiteResult res;
  explicit SuiteRunner(std::string name) { res.suite = std::move(name); }
  void check(bool ok, const std::string& property, const std::string& counterexample) {
    ++res.checks;
    if (!ok) res.failures.push_back({property, counterexample});
  }
  std::string tag(const Tiling& t) {
    return "n=" + std::to_string(t.n()) + " [" + format_diagonals(t) + "]";
  }
};

inline bool tree_connected(const DualTree& g) {
  if (g.node_count == 0) return false;
  std::vector<int> parent(g.node_count);
  for (int i = 0; i < g.node_count; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : g.edges) parent[find(a)] = find(b);
  for (int i = 1; i < g.node_count; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

/// Does T contain the triangle tile {v-1, v, v+1} (a 3-ear at v once
/// the tiling is proper)?
inline bool has_corner_triangle(const std::vector<Tile>& tiles, int v, int n) {
  std::vector<int> tri{cyc_prev(v, n), v, cyc_next(v, n)};
  std::sort(tri.begin(), tri.end());
  return std::binary_search(tiles.begin(), tiles.end(), Tile{tri});
}

}  // namespace detail

/// The main theorem: equal Scott permutations iff equal class keys,
/// exhaustively per rank.
inline VerifySuiteResult verify_main_theorem(int max_n, int max_rank = kDefaultMaxRank) {
  detail::SuiteRunner run("main-theorem");
  for (int n = 3; n <= max_n; ++n) {
    std::map<std::vector<int>, FlipClassKey> perm_to_key;
    std::map<FlipClassKey, std::vector<int>> key_to_perm;
    for (const Tiling& t : generate_all(n, max_rank)) {
      Permutation sigma = scott_perm(t);
      FlipClassKey key = class_key(t);
      auto [it, fresh] = perm_to_key.emplace(sigma.images, key);
      run.check(fresh || it->second == key, "main-theorem/perm-determines-class", run.tag(t));
      auto [jt, fresh2] = key_to_perm.emplace(key, sigma.images);
      run.check(fresh2 || jt->second == sigma.images, "main-theorem/class-determines-perm",
                run.tag(t));
    }
  }
  return run.res;
}

/// The three bijection identities: shrink inverts Sigma, G' inverts G,
/// and trips through G give the Scott permutation.
inline VerifySuiteResult verify_bijections(int max_n, int max_rank = kDefaultMaxRank) {
  detail::SuiteRunner run("bijections");
  for (int n = 3; n <= max_n; ++n) {
    for (const Tiling& t : generate_all(n, max_rank)) {
      run.check(shrink(build_strand_map(t)) == t, "bijections/shrink-inverts-sigma", run.tag(t));
      PlabicGraph g = g_map(t);
      run.check(g_inverse(g) == t, "bijections/g-prime-inverts-g", run.tag(t));
      run.check(trip_perm(g) == scott_perm(t), "bijections/trip-equals-scott", run.tag(t));
    }
  }
  return run.res;
}

/// The lemma suite: every executable lemma of the paper's machinery,
/// exhaustive up to the given rank.
inline VerifySuiteResult verify_lemmas(int max_n, int max_rank = kDefaultMaxRank) {
  detail::SuiteRunner run("lemmas");
  for (int n = 3; n <= max_n; ++n) {
    std::vector<Tiling> all = generate_all(n, max_rank);

    // Class -> corner-triangle positions seen anywhere in the class.
    std::map<FlipClassKey, std::set<int>> class_ears;
    std::vector<FlipClassKey> keys;
    keys.reserve(all.size());
    for (const Tiling& t : all) {
      FlipClassKey key = class_key(t);
      std::vector<Tile> tiles = tiles_of(t);
      auto& ears_here = class_ears[key];
      for (int v = 1; v <= n; ++v)
        if (detail::has_corner_triangle(tiles, v, n)) ears_here.insert(v);
      keys.push_back(std::move(key));
    }

    std::map<std::vector<int>, std::vector<int>> by_perm;  // sigma -> tiling indices

    for (int idx = 0; idx < static_cast<int>(all.size()); ++idx) {
      const Tiling& t = all[idx];
      std::vector<Tile> tiles = tiles_of(t);
      std::vector<Strand> strands = scott_strands(t);
      Permutation sigma = scott_perm(t);
      by_perm[sigma.images].push_back(idx);
      bool triangulation = t.m() == n - 3;

      run.check(sigma.is_bijection(), "scott/bijection", run.tag(t));

      // No fixed points, no sigma(i) = i+1.
      for (int i = 1; i <= n; ++i) {
        run.check(sigma(i) != i, "scott/no-fixed-point", run.tag(t));
        run.check(sigma(i) != cyc_next(i, n), "scott/no-successor", run.tag(t));
      }

      // Strand i+1 ~> i iff the edge [i, i+1] is simple.
      for (int i = 1; i <= n; ++i) {
        bool simple = is_simple_vertex(t, i) && is_simple_vertex(t, cyc_next(i, n));
        run.check((sigma(cyc_next(i, n)) == i) == simple, "scott/simple-edge-rotation",
                  run.tag(t) + " edge " + std::to_string(i));
      }

      // sigma = ttt^2 iff triangulation.
      {
        bool shifted = true;
        for (int i = 1; i <= n; ++i) shifted &= sigma(i) == cyc_next(cyc_next(i, n), n);
        run.check(shifted == triangulation, "scott/triangle-case", run.tag(t));
      }

      // sigma(i) = i+2 iff some flip-equivalent tiling has a 3-ear at i+1.
      {
        const auto& ears_in_class = class_ears[keys[idx]];
        for (int i = 1; i <= n; ++i) {
          bool lhs = sigma(i) == cyc_next(cyc_next(i, n), n);
          bool rhs = ears_in_class.count(cyc_next(i, n)) > 0;
          run.check(lhs == rhs, "scott/tear", run.tag(t) + " i=" + std::to_string(i));
        }
      }

      // Proper tilings have at least two ears; the dual graph is a tree.
      if (tiles.size() >= 2)
        run.check(ears(t).size() >= 2, "tiling/two-ears", run.tag(t));
      {
        DualTree g = dual_tree(t);
        run.check(g.node_count == static_cast<int>(tiles.size()) &&
                      static_cast<int>(g.edges.size()) == g.node_count - 1 &&
                      detail::tree_connected(g),
                  "tiling/dual-tree", run.tag(t));
      }

      // Partition invariant.
      {
        int total = 0;
        for (const Tile& tile : tiles) total += tile.size() - 2;
        run.check(total == n - 2, "tiling/partition", run.tag(t));
      }

      // No strand revisits a (tile, side); two strands cross at most twice.
      for (const Strand& s : strands) {
        std::set<std::pair<std::vector<int>, std::pair<int, int>>> seen;
        bool repeat = false;
        for (const StrandStep& st : s.steps)
          repeat |= !seen.insert({st.tile.vertices, st.side}).second;
        run.check(!repeat, "scott/no-return", run.tag(t));
        // Tile-size bound along the strand.
        int k = cyc_dist(s.start, s.end, n);
        int weight = 0;
        for (const StrandStep& st : s.steps) weight += st.tile.size() - 3;
        run.check(weight <= k - 2, "scott/tile-weight-bound", run.tag(t));
      }
      for (std::size_t a = 0; a < strands.size(); ++a)
        for (std::size_t b = a + 1; b < strands.size(); ++b)
          run.check(strand_crossings(strands[a], strands[b]) <= 2, "scott/lensing",
                    run.tag(t) + " strands " + std::to_string(a + 1) + "," + std::to_string(b + 1));

      // I/J partitions; long-strand displacement; covering.
      for (const Tile& q : tiles) {
        int r = q.size();
        TilePartitions parts = tile_partitions(q, n);
        std::vector<char> in_i(n + 1, 0), in_j(n + 1, 0);
        bool disjoint = true;
        for (const auto& part : parts.I)
          for (int v : part) disjoint &= !in_i[v]++;
        for (const auto& part : parts.J)
          for (int v : part) disjoint &= !in_j[v]++;
        for (int v = 1; v <= n; ++v) disjoint &= in_i[v] == 1 && in_j[v] == 1;
        run.check(disjoint, "tiles/ij-partition", run.tag(t));
        for (const Strand& s : strands) {
          StrandTileRelation rel = strand_class(s, q);
          int i1 = i_part_of(q, n, s.start);
          int i2 = j_part_of(q, n, s.end);
          if (rel == StrandTileRelation::Long) {
            run.check(i1 == (i2 + 2) % r, "tiles/long-strand-displacement",
                      run.tag(t) + " strand " + std::to_string(s.start));
            run.check(covered_vertices(s, q, n) == r - 2, "tiles/long-strand-covering",
                      run.tag(t) + " strand " + std::to_string(s.start));
          } else {
            run.check(i1 == i2, "tiles/short-strand-displacement",
                      run.tag(t) + " strand " + std::to_string(s.start));
          }
        }
      }

      // Big-ear lemma. Runs anchored at j with elements j-1 .. j-r+1.
      {
        auto desc = [&](int v) { return sigma(v) == cyc_prev(v, n); };
        for (int j = 1; j <= n; ++j) {
          if (desc(j)) continue;
          for (int r = 2; r < n - 1; ++r) {
            bool chain = true;
            int v = j;
            for (int s = 1; s <= r - 2; ++s) {
              v = cyc_prev(v, n);
              chain &= desc(v);
            }
            if (!chain) break;
            int low = j;
            for (int s = 0; s < r - 1; ++s) low = cyc_prev(low, n);  // low = j-r+1
            if (desc(low)) continue;  // not maximal at this r
            // (i): the r-run corresponds to the maximal simple-edge chain.
            bool edges_simple = true;
            for (int s = 1; s <= r - 2; ++s) {
              int hi = j;
              for (int q = 0; q < s; ++q) hi = cyc_prev(hi, n);
              edges_simple &= is_simple_vertex(t, hi) && is_simple_vertex(t, cyc_prev(hi, n));
            }
            run.check(edges_simple, "scott/bigear-i",
                      run.tag(t) + " j=" + std::to_string(j) + " r=" + std::to_string(r));
            // (ii): (a) diagonal [j-r, j] in T <=> (b) {j-r..j} an ear
            // tile <=> (c) sigma(j-r) = j.
            int jr = low;
            jr = cyc_prev(jr, n);  // j - r
            bool a_holds = false;
            if (jr != j && cyc_next(jr, n) != j && cyc_next(j, n) != jr) {
              Diagonal d{std::min(jr, j), std::max(jr, j)};
              a_holds = t.has(d);
            }
            std::vector<int> earverts;
            for (int q = jr;; q = cyc_next(q, n)) {
              earverts.push_back(q);
              if (q == j) break;
            }
            std::sort(earverts.begin(), earverts.end());
            bool b_holds = std::binary_search(tiles.begin(), tiles.end(), Tile{earverts});
            bool c_holds = sigma(jr) == j;
            run.check(a_holds == b_holds && b_holds == c_holds, "scott/bigear-ii",
                      run.tag(t) + " j=" + std::to_string(j) + " r=" + std::to_string(r));
          }
        }
      }

      // Face census of Sigma(T).
      {
        StrandMap map = build_strand_map(t);
        run.check(static_cast<int>(map.crossings.size()) == n + 2 * t.m(),
                  "strandmap/crossing-count", run.tag(t));
        std::vector<FaceInfo> faces = classify_faces(map);
        detail::TileComplex cx(t);
        int cw = 0, alt_in = 0, ccw_in = 0, alt_edge = 0, other = 0, outer = 0;
        std::set<int> cw_labels;
        for (const FaceInfo& f : faces) {
          if (f.outer) {
            ++outer;
            continue;
          }
          switch (f.cls) {
            case FaceClass::Clockwise:
              ++cw;
              if (f.vertex_label > 0) {
                cw_labels.insert(f.vertex_label);
                run.check(f.strand_sides ==
                              1 + static_cast<int>(cx.tiles_at[f.vertex_label].size()),
                          "strandmap/vertex-face-sides", run.tag(t));
              }
              break;
            case FaceClass::Counterclockwise:
              ++ccw_in;
              run.check(f.interior && f.sides() >= 3, "strandmap/ccw-interior", run.tag(t));
              break;
            case FaceClass::Alternating:
              if (f.interior) {
                ++alt_in;
                run.check(f.sides() == 4, "strandmap/alternating-quad", run.tag(t));
              } else {
                ++alt_edge;
                run.check(f.strand_sides == 3 && f.arc_sides == 1,
                          "strandmap/boundary-alternating", run.tag(t));
              }
              break;
            case FaceClass::Other:
              ++other;
              break;
          }
        }
        run.check(cw == n && static_cast<int>(cw_labels.size()) == n, "strandmap/clockwise-count",
                  run.tag(t));
        run.check(alt_in == t.m(), "strandmap/alternating-count", run.tag(t));
        run.check(ccw_in == static_cast<int>(tiles.size()), "strandmap/ccw-count", run.tag(t));
        run.check(alt_edge == n, "strandmap/boundary-count", run.tag(t));
        run.check(other == 0 && outer == 1, "strandmap/no-other-faces", run.tag(t));
        run.check(is_absolute(map) && is_minimalist(map), "strandmap/image-in-Xn", run.tag(t));

        // Chequerboard: every strand edge separates an oriented face
        // from an alternating one.
        if (n <= 7) {
          std::vector<int> face_of(map.dart_count(), -1);
          for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            for (int d : faces[f].darts) face_of[d] = f;
          bool cheq = true;
          for (int e = 0; e < static_cast<int>(map.edges.size()); ++e) {
            if (map.edges[e].arc) continue;
            FaceClass c1 = faces[face_of[2 * e]].cls;
            FaceClass c2 = faces[face_of[2 * e + 1]].cls;
            bool oriented1 = c1 == FaceClass::Clockwise || c1 == FaceClass::Counterclockwise;
            bool oriented2 = c2 == FaceClass::Clockwise || c2 == FaceClass::Counterclockwise;
            cheq &= oriented1 != oriented2;
          }
          run.check(cheq, "strandmap/chequerboard", run.tag(t));
          for (const FaceInfo& f : faces) {
            if (!f.interior || f.cls != FaceClass::Alternating) continue;
            // Neighbours alternate clockwise / counterclockwise.
            std::vector<FaceClass> ring;
            for (int d : f.darts) ring.push_back(faces[face_of[d ^ 1]].cls);
            bool alternates = true;
            for (std::size_t i = 0; i < ring.size(); ++i) {
              bool cw1 = ring[i] == FaceClass::Clockwise;
              bool cw2 = ring[(i + 1) % ring.size()] == FaceClass::Clockwise;
              alternates &= cw1 != cw2;
            }
            run.check(alternates, "strandmap/alternating-ring", run.tag(t));
          }
        }
      }

      // Bouquets: non-star rhombic images have at least two.
      {
        PlabicGraph g = g_map(t);
        run.check(check_rhombic(g).passes, "plabic/image-rhombic", run.tag(t));
        if (tiles.size() >= 2)
          run.check(find_bouquets(g).size() >= 2, "plabic/two-bouquets", run.tag(t));
        else
          run.check(find_bouquets(g).empty(), "plabic/star-no-bouquet", run.tag(t));
      }

      // Flip is an involution; the diamond move commutes with it.
      for (const Diagonal& d : t.diagonals()) {
        auto [ta, tb] = detail::TileComplex(t).diagonal_tiles.at(d);
        bool flippable = tiles[ta].size() == 3 && tiles[tb].size() == 3;
        if (!flippable) continue;
        Tiling flipped = flip(t, d);
        const auto& nd = flipped.diagonals();
        Diagonal back{};
        for (const Diagonal& e : nd)
          if (!t.has(e)) back = e;
        run.check(flip(flipped, back) == t, "tiling/flip-involution", run.tag(t));
        if (n <= 7)
          run.check(equal_plabic(move_diamond(g_map(t), {d.a, d.b}), g_map(flipped)),
                    "plabic/move-flip-commutes", run.tag(t));
      }
    }

    // Factorisation lemma within each Scott fibre.
    for (const auto& [img, idxs] : by_perm) {
      for (std::size_t a = 0; a < idxs.size(); ++a)
        for (std::size_t b = a + 1; b < idxs.size(); ++b) {
          const Tiling& t1 = all[idxs[a]];
          const Tiling& t2 = all[idxs[b]];
          for (const Diagonal& d : t1.diagonals()) {
            if (!t2.has(d)) continue;
            auto [p1, q1] = restrict_scott(t1, d);
            auto [p2, q2] = restrict_scott(t2, d);
            run.check(p1 == p2 && q1 == q2, "scott/factorisation",
                      run.tag(t1) + " vs " + run.tag(t2));
          }
        }
    }

    // Pfim and diamond-move class counts in low rank.
    if (n <= 5) {
      std::set<std::string> images;
      for (const Tiling& t : all) images.insert(canonical_plabic(g_map(t)));
      static const std::map<int, std::size_t> expected{{3, 1}, {4, 3}, {5, 11}};
      run.check(images.size() == expected.at(n), "plabic/pfim-count", "n=" + std::to_string(n));
    }
    if (n <= 6) {
      // Classes of G(A_n) under the diamond move, by breadth-first search.
      std::map<std::string, int> comp;
      int classes = 0;
      for (const Tiling& t : all) {
        std::string start = canonical_plabic(g_map(t));
        if (comp.count(start)) continue;
        ++classes;
        std::vector<Tiling> queue{t};
        comp[start] = classes;
        while (!queue.empty()) {
          Tiling cur = queue.back();
          queue.pop_back();
          for (const Diagonal& d : cur.diagonals()) {
            detail::TileComplex cx(cur);
            auto [ta, tb] = cx.diagonal_tiles.at(d);
            if (cx.tiles[ta].size() != 3 || cx.tiles[tb].size() != 3) continue;
            PlabicGraph moved = move_diamond(g_map(cur), {d.a, d.b});
            std::string key = canonical_plabic(moved);
            if (!comp.count(key)) {
              comp[key] = classes;
              queue.push_back(g_inverse(moved));
            }
          }
        }
      }
      run.check(classes == static_cast<int>(count_classes(n, max_rank)), "plabic/move-classes",
                "n=" + std::to_string(n));
    }
  }
  return run.res;
}

inline std::vector<VerifySuiteResult> verify_all(int max_n, int max_rank = kDefaultMaxRank) {
  return {verify_lemmas(max_n, max_rank), verify_main_theorem(max_n, max_rank),
          verify_bijections(max_n, max_rank)};
}

}  // namespace tileperm
