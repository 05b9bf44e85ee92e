#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tileperm/errors.hpp"
#include "tileperm/scott.hpp"
#include "tileperm/tiling.hpp"

namespace tileperm {

/// Plabic graph as a rotation system. Rotations list the neighbours of
/// each node in clockwise order; tagged (boundary) nodes carry a kTag
/// entry where the half-edge to the boundary sits.
struct PlabicGraph {
  static constexpr int kTag = -1;
  struct Node {
    bool black = false;
    int label = 0;  // boundary label for tagged whites, else 0
    std::vector<int> rot;
  };
  int n = 0;
  std::vector<Node> nodes;

  int degree(int v) const {
    int d = 0;
    for (int x : nodes[v].rot)
      if (x != kTag) ++d;
    return d;
  }
  bool tagged(int v) const {
    return std::find(nodes[v].rot.begin(), nodes[v].rot.end(), kTag) != nodes[v].rot.end();
  }
  int node_of_label(int label) const {
    for (int v = 0; v < static_cast<int>(nodes.size()); ++v)
      if (!nodes[v].black && nodes[v].label == label) return v;
    fail(errc::malformed_input, "no white node labelled " + std::to_string(label));
  }
  int edge_count() const {
    int total = 0;
    for (const Node& nd : nodes) total += static_cast<int>(nd.rot.size());
    int tags = 0;
    for (const Node& nd : nodes) tags += static_cast<int>(std::count(nd.rot.begin(), nd.rot.end(), kTag));
    return (total - tags) / 2;
  }
};

namespace detail {

/// Dart-level face tracing of the rotation system. Tag half-edges
/// bounce, so an orbit touching a tag is an open (boundary) face.
struct PlabicFaces {
  struct Face {
    std::vector<std::pair<int, int>> darts;  // (node, slot) leaving the node
    bool open = false;                       // touches some tag half-edge
  };
  std::vector<Face> faces;
  std::vector<std::vector<int>> face_of;  // per (node, slot)

  explicit PlabicFaces(const PlabicGraph& g) {
    int V = static_cast<int>(g.nodes.size());
    // Partner slot of each dart; multi-edges pair up by occurrence order.
    std::vector<std::vector<std::pair<int, int>>> partner(V);
    for (int u = 0; u < V; ++u) partner[u].assign(g.nodes[u].rot.size(), {-1, -1});
    for (int u = 0; u < V; ++u) {
      const auto& rot = g.nodes[u].rot;
      for (int s = 0; s < static_cast<int>(rot.size()); ++s) {
        int v = rot[s];
        if (v == PlabicGraph::kTag || partner[u][s].first >= 0) continue;
        if (v < 0 || v >= V) fail(errc::malformed_input, "rotation references a missing node");
        int k = 0;
        for (int i = 0; i < s; ++i)
          if (rot[i] == v) ++k;
        int found = -1;
        const auto& rv = g.nodes[v].rot;
        for (int i = 0, seen = 0; i < static_cast<int>(rv.size()); ++i)
          if (rv[i] == u && seen++ == k) {
            found = i;
            break;
          }
        if (found < 0) fail(errc::malformed_input, "rotation system is not symmetric");
        partner[u][s] = {v, found};
        partner[v][found] = {u, s};
      }
    }
    face_of.assign(V, {});
    for (int u = 0; u < V; ++u) face_of[u].assign(g.nodes[u].rot.size(), -1);
    for (int u0 = 0; u0 < V; ++u0)
      for (int s0 = 0; s0 < static_cast<int>(g.nodes[u0].rot.size()); ++s0) {
        if (face_of[u0][s0] >= 0) continue;
        Face f;
        int u = u0, s = s0;
        while (face_of[u][s] < 0) {
          face_of[u][s] = static_cast<int>(faces.size());
          f.darts.emplace_back(u, s);
          if (g.nodes[u].rot[s] == PlabicGraph::kTag) {
            f.open = true;
            s = (s + 1) % static_cast<int>(g.nodes[u].rot.size());
          } else {
            auto [v, sv] = partner[u][s];
            u = v;
            s = (sv + 1) % static_cast<int>(g.nodes[u].rot.size());
          }
        }
        faces.push_back(std::move(f));
      }
  }
};

}  // namespace detail

/// Stellar replacement: a labelled white node per polygon vertex, a
/// black node per tile, an edge per (tile, corner). White rotations run
/// clockwise from the tag: first the tile on the [v, v+1] side, last
/// the tile on the [v-1, v] side. Black rotations list corners in
/// ascending label order (clockwise).
inline PlabicGraph g_map(const Tiling& t) {
  detail::TileComplex cx(t);
  PlabicGraph g;
  g.n = t.n();
  g.nodes.resize(t.n() + cx.tiles.size());
  for (int v = 1; v <= t.n(); ++v) {
    auto& nd = g.nodes[v - 1];
    nd.black = false;
    nd.label = v;
    nd.rot.push_back(PlabicGraph::kTag);
    // tiles_at is ordered from the [v-1,v] side to the [v,v+1] side.
    for (auto it = cx.tiles_at[v].rbegin(); it != cx.tiles_at[v].rend(); ++it)
      nd.rot.push_back(t.n() + *it);
  }
  for (int ti = 0; ti < static_cast<int>(cx.tiles.size()); ++ti) {
    auto& nd = g.nodes[t.n() + ti];
    nd.black = true;
    for (int v : cx.tiles[ti].vertices) nd.rot.push_back(v - 1);
  }
  return g;
}

struct RhombicViolation {
  char axiom;  // 's' structure, then 'a'..'e'
  std::string detail;
};

struct RhombicReport {
  bool passes = false;
  std::vector<RhombicViolation> violations;
};

/// Axioms of rhombic graphs: (a) tagged nodes white and all others
/// black, (b) black degree >= 3, (c) closed faces quadrilateral,
/// (d) adjacent edge pairs in a white fan lie on a quadrilateral, plus
/// the derived (e) two faces share at most one edge and the structural
/// requirements (connected, some black node, no unicolored edge, no
/// internal leaf).
inline RhombicReport check_rhombic(const PlabicGraph& g) {
  RhombicReport rep;
  auto violate = [&](char ax, const std::string& d) { rep.violations.push_back({ax, d}); };
  int V = static_cast<int>(g.nodes.size());

  // Structure.
  {
    std::vector<char> seen(V, 0);
    std::vector<int> stack{0};
    if (V > 0) seen[0] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.nodes[u].rot)
        if (v != PlabicGraph::kTag && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != V) violate('s', "graph is not connected");
    bool any_black = false;
    for (const auto& nd : g.nodes) any_black |= nd.black;
    if (!any_black) violate('s', "no black node");
    for (int u = 0; u < V; ++u)
      for (int v : g.nodes[u].rot)
        if (v != PlabicGraph::kTag && u < v && g.nodes[u].black == g.nodes[v].black)
          violate('s', "unicolored edge " + std::to_string(u) + "-" + std::to_string(v));
    for (int u = 0; u < V; ++u)
      if (!g.tagged(u) && g.degree(u) <= 1) violate('s', "internal leaf " + std::to_string(u));
  }

  for (int u = 0; u < V; ++u) {
    if (g.tagged(u) && g.nodes[u].black)
      violate('a', "tagged node " + std::to_string(u) + " is black");
    if (!g.tagged(u) && !g.nodes[u].black)
      violate('a', "internal node " + std::to_string(u) + " is white");
  }
  for (int u = 0; u < V; ++u)
    if (g.nodes[u].black && g.degree(u) < 3)
      violate('b', "black node " + std::to_string(u) + " has degree " + std::to_string(g.degree(u)));

  detail::PlabicFaces faces(g);
  for (const auto& f : faces.faces)
    if (!f.open && f.darts.size() != 4)
      violate('c', "closed face with " + std::to_string(f.darts.size()) + " sides");

  for (int u = 0; u < V; ++u) {
    if (g.nodes[u].black) continue;
    const auto& rot = g.nodes[u].rot;
    int deg = static_cast<int>(rot.size());
    for (int s = 0; s < deg; ++s) {
      int s2 = (s + 1) % deg;
      if (rot[s] == PlabicGraph::kTag || rot[s2] == PlabicGraph::kTag) continue;
      const auto& f = faces.faces[faces.face_of[u][s2]];
      if (f.open || f.darts.size() != 4)
        violate('d', "fan pair at white " + std::to_string(u) + " not on a quadrilateral");
    }
  }

  // (e) is implied by (a) and (b); verified as a diagnostic.
  {
    std::map<std::pair<int, int>, int> shared;
    for (int u = 0; u < V; ++u)
      for (int s = 0; s < static_cast<int>(g.nodes[u].rot.size()); ++s) {
        if (g.nodes[u].rot[s] == PlabicGraph::kTag) continue;
        if (g.nodes[u].rot[s] < u) continue;  // one side of each edge is enough
        int f1 = faces.face_of[u][s];
        // The other side of this edge: partner dart's face; recompute via
        // the face that the reversed dart belongs to.
        // Walk the rotation at the neighbour to find the partner slot.
        int v = g.nodes[u].rot[s];
        int k = 0;
        for (int i = 0; i < s; ++i)
          if (g.nodes[u].rot[i] == v) ++k;
        int sv = -1;
        for (int i = 0, seen = 0; i < static_cast<int>(g.nodes[v].rot.size()); ++i)
          if (g.nodes[v].rot[i] == u && seen++ == k) {
            sv = i;
            break;
          }
        int f2 = faces.face_of[v][sv];
        auto key = std::minmax(f1, f2);
        if (++shared[{key.first, key.second}] > 1 && f1 != f2)
          violate('e', "two faces share more than one edge");
      }
  }

  rep.passes = rep.violations.empty();
  return rep;
}

/// Closed quadrilateral faces, each as (white labels {i,j}, black node pair).
struct QuadFace {
  int white_i = 0, white_j = 0;
  int black_u = -1, black_v = -1;
};

inline std::vector<QuadFace> closed_quads(const PlabicGraph& g) {
  detail::PlabicFaces faces(g);
  std::vector<QuadFace> out;
  for (const auto& f : faces.faces) {
    if (f.open || f.darts.size() != 4) continue;
    QuadFace q;
    std::vector<int> whites;
    for (auto [u, s] : f.darts) {
      if (g.nodes[u].black)
        (q.black_u < 0 ? q.black_u : q.black_v) = u;
      else
        whites.push_back(g.nodes[u].label);
    }
    if (whites.size() != 2 || q.black_v < 0) continue;  // not a rhombic-style quad
    q.white_i = std::min(whites[0], whites[1]);
    q.white_j = std::max(whites[0], whites[1]);
    out.push_back(q);
  }
  std::sort(out.begin(), out.end(), [](const QuadFace& a, const QuadFace& b) {
    return std::tie(a.white_i, a.white_j) < std::tie(b.white_i, b.white_j);
  });
  return out;
}

/// Inverse of g_map: one diagonal per closed quadrilateral.
inline Tiling g_inverse(const PlabicGraph& g) {
  if (!check_rhombic(g).passes) fail(errc::not_rhombic, "input fails the rhombic axioms");
  std::vector<std::pair<int, int>> ds;
  for (const QuadFace& q : closed_quads(g)) ds.emplace_back(q.white_i, q.white_j);
  return make_tiling(g.n, ds);
}

/// Bouquets: black u of degree r+2 with r leaf neighbours, sharing a
/// quadrilateral with another black node.
inline std::vector<std::pair<int, int>> find_bouquets(const PlabicGraph& g) {
  std::vector<QuadFace> quads = closed_quads(g);
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(g.nodes.size()); ++u) {
    if (!g.nodes[u].black) continue;
    int leaves = 0;
    for (int v : g.nodes[u].rot)
      if (v != PlabicGraph::kTag && g.degree(v) == 1) ++leaves;
    if (leaves < 1 || g.degree(u) != leaves + 2) continue;
    bool on_quad = false;
    for (const QuadFace& q : quads) on_quad |= (q.black_u == u || q.black_v == u);
    if (on_quad) out.emplace_back(u, leaves);
  }
  return out;
}

namespace detail {

/// Restrict to the whites with labels in the cyclic run starting at
/// `anchor` of length `count`, relabelled 1..count, keeping `keep`.
inline PlabicGraph relabel_subgraph(const PlabicGraph& g, int anchor, int count,
                                    const std::vector<int>& keep_nodes) {
  PlabicGraph out;
  out.n = count;
  std::vector<int> newid(g.nodes.size(), -1);
  for (std::size_t i = 0; i < keep_nodes.size(); ++i) newid[keep_nodes[i]] = static_cast<int>(i);
  for (int old : keep_nodes) {
    PlabicGraph::Node nd;
    nd.black = g.nodes[old].black;
    if (!nd.black && g.nodes[old].label > 0)
      nd.label = cyc_dist(anchor, g.nodes[old].label, g.n) + 1;
    for (int v : g.nodes[old].rot) {
      if (v == PlabicGraph::kTag)
        nd.rot.push_back(PlabicGraph::kTag);
      else if (newid[v] >= 0)
        nd.rot.push_back(newid[v]);
      // dropped neighbours vanish from the rotation
    }
    out.nodes.push_back(std::move(nd));
  }
  return out;
}

}  // namespace detail

/// Split a bouquet at black node u into its star and the rest.
inline std::pair<PlabicGraph, PlabicGraph> split_bouquet(const PlabicGraph& g, int u) {
  auto bqs = find_bouquets(g);
  int r = -1;
  for (auto [node, leaves] : bqs)
    if (node == u) r = leaves;
  if (r < 0) fail(errc::no_bouquet_at, "no bouquet at node " + std::to_string(u));

  // The star's whites form a consecutive label run i .. i+r+1.
  std::set<int> star_labels;
  for (int v : g.nodes[u].rot) star_labels.insert(g.nodes[v].label);
  int first = 0;
  for (int l : star_labels)
    if (!star_labels.count(cyc_prev(l, g.n))) first = l;
  int star_rank = static_cast<int>(star_labels.size());

  std::vector<int> star_nodes, rest_nodes;
  star_nodes.push_back(u);
  for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
    if (v == u) continue;
    bool leaf_of_u = !g.nodes[v].black && g.degree(v) == 1 && star_labels.count(g.nodes[v].label);
    if (star_labels.count(g.nodes[v].label) && !g.nodes[v].black) star_nodes.push_back(v);
    if (!leaf_of_u && v != u) rest_nodes.push_back(v);
  }
  std::sort(star_nodes.begin(), star_nodes.end());
  PlabicGraph star = detail::relabel_subgraph(g, first, star_rank, star_nodes);
  int last = first;
  for (int k = 1; k < star_rank; ++k) last = cyc_next(last, g.n);
  PlabicGraph rest = detail::relabel_subgraph(g, last, g.n - r, rest_nodes);
  return {std::move(star), std::move(rest)};
}

/// The move that exchanges the diagonal of a quadrilateral: both black
/// nodes of the quad must have degree 3.
inline PlabicGraph move_diamond(const PlabicGraph& g, std::pair<int, int> quad_whites) {
  QuadFace quad;
  bool found = false;
  for (const QuadFace& q : closed_quads(g))
    if (q.white_i == std::min(quad_whites.first, quad_whites.second) &&
        q.white_j == std::max(quad_whites.first, quad_whites.second)) {
      quad = q;
      found = true;
    }
  if (!found) fail(errc::not_applicable, "no quadrilateral on those whites");
  int u1 = quad.black_u, u2 = quad.black_v;
  if (g.degree(u1) != 3 || g.degree(u2) != 3)
    fail(errc::not_applicable, "quadrilateral blacks must have degree 3");

  int p1n = g.node_of_label(quad.white_i), p3n = g.node_of_label(quad.white_j);
  auto third = [&](int u) {
    for (int v : g.nodes[u].rot)
      if (v != p1n && v != p3n) return v;
    fail(errc::not_applicable, "degenerate quadrilateral");
  };
  int xn = third(u1), yn = third(u2);
  // Orient so that x lies clockwise strictly between p1 and p3.
  int p1 = g.nodes[p1n].label, p3 = g.nodes[p3n].label;
  int x = g.nodes[xn].label, y = g.nodes[yn].label;
  if (!cyc_between(p1, x, p3, g.n)) {
    std::swap(p1, p3);
    std::swap(p1n, p3n);
  }

  PlabicGraph out = g;
  // New triangles: u1 = {x, p3, y}, u2 = {y, p1, x} (labels ascending).
  auto corners = [&](std::vector<int> labels) {
    std::vector<int> ids;
    std::sort(labels.begin(), labels.end());
    for (int l : labels) ids.push_back(g.node_of_label(l));
    return ids;
  };
  out.nodes[u1].rot = corners({x, p3, y});
  out.nodes[u2].rot = corners({y, p1, x});
  auto remove_neighbor = [&](int w, int b) {
    auto& rot = out.nodes[w].rot;
    rot.erase(std::find(rot.begin(), rot.end(), b));
  };
  auto insert_after = [&](int w, int b_at, int b_new) {
    auto& rot = out.nodes[w].rot;
    rot.insert(std::next(std::find(rot.begin(), rot.end(), b_at)), b_new);
  };
  remove_neighbor(p1n, u1);
  remove_neighbor(p3n, u2);
  insert_after(xn, u1, u2);
  insert_after(yn, u2, u1);
  return out;
}

/// Trip permutation: enter at a boundary tag, exit each black node one
/// step counterclockwise and each white node one step clockwise of the
/// entry, finish at a tag. For images of g_map this is the Scott
/// permutation of the underlying tiling.
inline Permutation trip_perm(const PlabicGraph& g) {
  if (!check_rhombic(g).passes) fail(errc::not_rhombic, "trips need a rhombic graph");
  std::vector<int> img(g.n);
  for (int i = 1; i <= g.n; ++i) {
    int u = g.node_of_label(i);
    int s = 0;
    while (g.nodes[u].rot[s] != PlabicGraph::kTag) ++s;
    while (true) {
      int deg = static_cast<int>(g.nodes[u].rot.size());
      s = g.nodes[u].black ? (s + deg - 1) % deg : (s + 1) % deg;
      int v = g.nodes[u].rot[s];
      if (v == PlabicGraph::kTag) {
        img[i - 1] = g.nodes[u].label;
        break;
      }
      // Arrive at v: locate the slot of this edge at v.
      int k = 0;
      for (int t = 0; t < s; ++t)
        if (g.nodes[u].rot[t] == v) ++k;
      int sv = -1;
      for (int t = 0, seen = 0; t < static_cast<int>(g.nodes[v].rot.size()); ++t)
        if (g.nodes[v].rot[t] == u && seen++ == k) {
          sv = t;
          break;
        }
      u = v;
      s = sv;
    }
  }
  return {g.n, std::move(img)};
}

// ---------------------------------------------------------------------------
// Export, parse, canonical form

inline std::string to_dot(const PlabicGraph& g) {
  std::string s = "graph plabic {\n";
  auto name = [&](int v) {
    return g.nodes[v].black ? "b" + std::to_string(v) : "w" + std::to_string(v);
  };
  for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
    if (g.nodes[v].black)
      s += "  " + name(v) + " [shape=circle style=filled fillcolor=black label=\"\"];\n";
    else
      s += "  " + name(v) + " [shape=circle label=\"" + std::to_string(g.nodes[v].label) +
           "\"];\n";
  }
  for (int u = 0; u < static_cast<int>(g.nodes.size()); ++u)
    for (int v : g.nodes[u].rot)
      if (v != PlabicGraph::kTag && u < v) s += "  " + name(u) + " -- " + name(v) + ";\n";
  s += "}\n";
  return s;
}

inline nlohmann::json to_json(const PlabicGraph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  auto& nodes = j["nodes"] = nlohmann::json::array();
  for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
    nlohmann::json nd;
    nd["id"] = v;
    nd["color"] = g.nodes[v].black ? "black" : "white";
    if (g.nodes[v].label > 0) nd["label"] = g.nodes[v].label;
    auto& rot = nd["rotation"] = nlohmann::json::array();
    for (int x : g.nodes[v].rot) {
      if (x == PlabicGraph::kTag)
        rot.push_back("tag");
      else
        rot.push_back(x);
    }
    nodes.push_back(std::move(nd));
  }
  return j;
}

inline PlabicGraph parse_plabic(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("nodes"))
    fail(errc::malformed_input, "expected n and nodes");
  PlabicGraph g;
  g.n = j["n"].get<int>();
  int V = static_cast<int>(j["nodes"].size());
  g.nodes.resize(V);
  for (const auto& nd : j["nodes"]) {
    int id = nd.at("id").get<int>();
    if (id < 0 || id >= V) fail(errc::malformed_input, "node id out of range");
    auto& node = g.nodes[id];
    node.black = nd.at("color").get<std::string>() == "black";
    node.label = nd.contains("label") ? nd["label"].get<int>() : 0;
    for (const auto& x : nd.at("rotation")) {
      if (x.is_string()) {
        if (x.get<std::string>() != "tag") fail(errc::malformed_input, "bad rotation entry");
        node.rot.push_back(PlabicGraph::kTag);
      } else {
        node.rot.push_back(x.get<int>());
      }
    }
  }
  // Labels 1..n exactly once, on tagged whites.
  std::vector<int> seen(g.n + 1, 0);
  for (const auto& nd : g.nodes)
    if (nd.label > 0) {
      if (nd.label > g.n || nd.black) fail(errc::malformed_input, "bad boundary label");
      ++seen[nd.label];
    }
  for (int v = 1; v <= g.n; ++v)
    if (seen[v] != 1) fail(errc::malformed_input, "boundary labels must be 1..n once each");
  // Euler relation over the traced faces certifies the disk embedding.
  detail::PlabicFaces faces(g);
  long long F = static_cast<long long>(faces.faces.size());
  if (static_cast<long long>(g.nodes.size()) - g.edge_count() + F != 2)
    fail(errc::non_planar, "face orbits violate the Euler relation");
  return g;
}

/// Canonical string under breadth-first relabelling from white 1.
inline std::string canonical_plabic(const PlabicGraph& g) {
  int V = static_cast<int>(g.nodes.size());
  std::vector<int> newid(V, -1);
  std::vector<int> order;
  int root = g.node_of_label(1);
  newid[root] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    for (int v : g.nodes[u].rot)
      if (v != PlabicGraph::kTag && newid[v] < 0) {
        newid[v] = static_cast<int>(order.size());
        order.push_back(v);
      }
  }
  std::string s = "n=" + std::to_string(g.n) + ";";
  for (int u : order) {
    const auto& nd = g.nodes[u];
    s += nd.black ? "B" : "W";
    if (nd.label > 0) s += std::to_string(nd.label);
    // Anchor the cyclic rotation at its lexicographically least turn.
    std::vector<int> ids;
    for (int v : nd.rot) ids.push_back(v == PlabicGraph::kTag ? -1 : newid[v]);
    int k = static_cast<int>(ids.size());
    std::vector<int> best = ids;
    for (int r = 1; r < k; ++r) {
      std::vector<int> cand(ids.begin() + r, ids.end());
      cand.insert(cand.end(), ids.begin(), ids.begin() + r);
      if (cand < best) best = cand;
    }
    s += "[";
    for (int x : best) s += std::to_string(x) + ",";
    s += "];";
  }
  return s;
}

inline bool equal_plabic(const PlabicGraph& a, const PlabicGraph& b) {
  return canonical_plabic(a) == canonical_plabic(b);
}

}  // namespace tileperm
