#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
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

enum class FaceClass { Clockwise, Counterclockwise, Alternating, Other };

inline const char* face_class_name(FaceClass c) {
  switch (c) {
    case FaceClass::Clockwise: return "clockwise";
    case FaceClass::Counterclockwise: return "counterclockwise";
    case FaceClass::Alternating: return "alternating";
    case FaceClass::Other: return "other";
  }
  return "?";
}

/// A strand diagram as a combinatorial planar map. Vertices are the
/// 4-valent crossings plus the 2n labelled boundary endpoints (i+ for
/// strand starts, i- for ends); the boundary circle is carried as arc
/// edges so that faces close up. Crossing slots are stored in
/// clockwise cyclic order and each strand enters and leaves through
/// opposite slots.
class StrandMap {
 public:
  enum class NodeKind { Crossing, Start, End };
  struct NodeRef {
    NodeKind kind = NodeKind::Crossing;
    int id = 0;  // crossing index, or vertex label for endpoints
    friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
  };
  struct Edge {
    NodeRef from, to;
    bool arc = false;  // boundary arc, not part of any strand
  };
  struct Slot {
    int edge = -1;
    bool into = false;  // does the edge point into this crossing here?
  };
  struct Crossing {
    std::array<Slot, 4> slots;  // clockwise
  };

  int n = 0;
  std::vector<Crossing> crossings;
  std::vector<Edge> edges;
  // Indexed by vertex label, entry 0 unused.
  std::vector<int> start_edge, end_edge, vertex_arc, edge_arc;

  int add_edge(NodeRef from, NodeRef to, bool arc = false) {
    edges.push_back({from, to, arc});
    return static_cast<int>(edges.size()) - 1;
  }

  /// Append the 2n boundary arcs; must be called once, after all
  /// strand edges exist.
  void close_boundary() {
    vertex_arc.assign(n + 1, -1);
    edge_arc.assign(n + 1, -1);
    for (int v = 1; v <= n; ++v)
      vertex_arc[v] = add_edge({NodeKind::End, v}, {NodeKind::Start, v}, true);
    for (int v = 1; v <= n; ++v)
      edge_arc[v] = add_edge({NodeKind::Start, v}, {NodeKind::End, cyc_next(v, n)}, true);
  }

  // Darts: 2*edge for the forward traversal (from -> to), 2*edge+1 reverse.
  int dart_count() const { return 2 * static_cast<int>(edges.size()); }
  NodeRef dart_head(int d) const { return d & 1 ? edges[d >> 1].from : edges[d >> 1].to; }
  NodeRef dart_tail(int d) const { return d & 1 ? edges[d >> 1].to : edges[d >> 1].from; }

  /// Clockwise slot list of any node: (edge, into-this-node).
  std::vector<Slot> node_slots(NodeRef v) const {
    switch (v.kind) {
      case NodeKind::Crossing: {
        const auto& s = crossings[v.id].slots;
        return {s.begin(), s.end()};
      }
      case NodeKind::Start:
        // [edge arc out, strand start out, vertex arc in]
        return {{edge_arc[v.id], false}, {start_edge[v.id], false}, {vertex_arc[v.id], true}};
      case NodeKind::End:
        // [vertex arc out, strand end in, previous edge arc in]
        return {{vertex_arc[v.id], false}, {end_edge[v.id], true},
                {edge_arc[cyc_prev(v.id, n)], true}};
    }
    fail(errc::malformed_input, "bad node");
  }

  /// Next dart around the face: step past the head node to the next
  /// clockwise slot.
  int face_next(int d) const {
    NodeRef v = dart_head(d);
    std::vector<Slot> slots = node_slots(v);
    int e = d >> 1;
    bool arriving_into = (d & 1) == 0;  // forward darts arrive at `to`
    int k = -1;
    for (int i = 0; i < static_cast<int>(slots.size()); ++i)
      if (slots[i].edge == e && slots[i].into == arriving_into) {
        k = i;
        break;
      }
    if (k < 0) fail(errc::malformed_input, "dart not attached at its head");
    const Slot& nxt = slots[(k + 1) % slots.size()];
    return nxt.into ? 2 * nxt.edge + 1 : 2 * nxt.edge;
  }
};

/// A traced strand or closed loop at the planar-map level.
struct MapStrand {
  int start = 0, end = 0;     // 0 for closed loops
  std::vector<int> crossing;  // crossings in traversal order
  std::vector<int> in_slot;   // slot entered at each crossing
  bool loop = false;
};

struct FaceInfo {
  FaceClass cls = FaceClass::Other;
  std::vector<int> darts;  // orbit, in traversal order
  int strand_sides = 0;
  int arc_sides = 0;
  bool interior = false;
  int vertex_label = 0;  // v if the face holds the boundary arc around vertex v
  int edge_label = 0;    // v if it holds the arc along boundary edge [v, v+1]
  bool outer = false;
  int sides() const { return static_cast<int>(darts.size()); }
};

namespace detail {

/// Walk all strands (from the boundary) and closed loops. At a
/// crossing a strand leaves through the slot opposite its entry.
inline std::vector<MapStrand> trace_map_strands(const StrandMap& m) {
  std::vector<MapStrand> out;
  std::vector<char> visited(m.edges.size(), 0);
  auto walk = [&](int e0, bool is_loop) {
    MapStrand s;
    s.loop = is_loop;
    int e = e0;
    while (true) {
      visited[e] = 1;
      StrandMap::NodeRef v = m.edges[e].to;
      if (v.kind == StrandMap::NodeKind::End) {
        s.end = v.id;
        return s;
      }
      const auto& slots = m.crossings[v.id].slots;
      int k = -1;
      for (int i = 0; i < 4; ++i)
        if (slots[i].edge == e && slots[i].into) k = i;
      if (k < 0) fail(errc::malformed_input, "strand edge not attached");
      s.crossing.push_back(v.id);
      s.in_slot.push_back(k);
      const auto& nxt = slots[(k + 2) % 4];
      if (nxt.into) fail(errc::malformed_input, "opposite slot not outgoing");
      e = nxt.edge;
      if (is_loop && e == e0) return s;
    }
  };
  for (int v = 1; v <= m.n; ++v) {
    MapStrand s = walk(m.start_edge[v], false);
    s.start = v;
    out.push_back(std::move(s));
  }
  for (int e = 0; e < static_cast<int>(m.edges.size()); ++e)
    if (!visited[e] && !m.edges[e].arc) out.push_back(walk(e, true));
  return out;
}

}  // namespace detail

/// All faces of the map, classified. The face listed with outer=true
/// is the one beyond the boundary circle.
inline std::vector<FaceInfo> classify_faces(const StrandMap& m) {
  std::vector<char> seen(m.dart_count(), 0);
  std::vector<FaceInfo> faces;
  for (int d0 = 0; d0 < m.dart_count(); ++d0) {
    if (seen[d0]) continue;
    FaceInfo f;
    int d = d0;
    do {
      seen[d] = 1;
      f.darts.push_back(d);
      d = m.face_next(d);
    } while (d != d0);
    // Orientation pattern: forward darts run with their strand, reverse
    // darts against; arcs are unoriented and break the alternation test.
    int with = 0, against = 0;
    for (int dd : f.darts) {
      const auto& e = m.edges[dd >> 1];
      if (e.arc) {
        ++f.arc_sides;
        if (dd & 1) {  // reverse arc dart: the face on the inner side
          if (e.from.kind == StrandMap::NodeKind::End && e.to.kind == StrandMap::NodeKind::Start &&
              e.from.id == e.to.id)
            f.vertex_label = e.from.id;
          else
            f.edge_label = e.from.id;
        } else {
          f.outer = true;
        }
      } else {
        ++f.strand_sides;
        ((dd & 1) ? against : with)++;
      }
    }
    f.interior = f.arc_sides == 0;
    if (f.strand_sides == 0)
      f.cls = FaceClass::Other;
    else if (against == 0)
      f.cls = FaceClass::Counterclockwise;
    else if (with == 0)
      f.cls = FaceClass::Clockwise;
    else {
      bool alternating = true;
      int k = f.sides();
      for (int i = 0; i < k; ++i) {
        int a = f.darts[i], b = f.darts[(i + 1) % k];
        if (m.edges[a >> 1].arc || m.edges[b >> 1].arc) continue;
        if ((a & 1) == (b & 1)) alternating = false;
      }
      f.cls = alternating ? FaceClass::Alternating : FaceClass::Other;
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

namespace detail {

/// Build the strand diagram of a tile complex. Only the tile vertex
/// lists matter: strand segments run antiparallel to each side, one
/// crossing sits at each (tile, corner), and at every polygon vertex
/// the incident tiles form a chain from the [v-1,v] side to the
/// [v,v+1] side through which strands pass from tile to tile.
inline StrandMap build_strand_map_from_tiles(int n, const std::vector<Tile>& tiles) {
  StrandMap m;
  m.n = n;
  m.start_edge.assign(n + 1, -1);
  m.end_edge.assign(n + 1, -1);

  // Crossing ids per (tile, corner).
  std::vector<std::map<int, int>> xid(tiles.size());
  for (std::size_t t = 0; t < tiles.size(); ++t)
    for (int v : tiles[t].vertices) {
      xid[t][v] = static_cast<int>(m.crossings.size());
      m.crossings.push_back({});
    }

  std::vector<std::vector<int>> tiles_at(n + 1);
  for (std::size_t t = 0; t < tiles.size(); ++t)
    for (int v : tiles[t].vertices) tiles_at[v].push_back(static_cast<int>(t));
  for (int v = 1; v <= n; ++v)
    std::sort(tiles_at[v].begin(), tiles_at[v].end(), [&](int x, int y) {
      return cyc_dist(v, tiles[x].succ(v), n) > cyc_dist(v, tiles[y].succ(v), n);
    });

  int c = static_cast<int>(m.crossings.size());
  std::vector<int> chain_in(c, -1), chain_out(c, -1), mid_in(c, -1), mid_out(c, -1);

  using NK = StrandMap::NodeKind;
  for (int v = 1; v <= n; ++v) {
    const auto& chain = tiles_at[v];  // from the [v-1,v] tile to the [v,v+1] tile
    int k = static_cast<int>(chain.size());
    if (k == 0) fail(errc::malformed_input, "vertex not covered by any tile");
    int last = xid[chain[k - 1]][v];
    chain_in[last] = m.add_edge({NK::Start, v}, {NK::Crossing, last});
    m.start_edge[v] = chain_in[last];
    for (int j = k - 1; j >= 1; --j) {
      int from = xid[chain[j]][v], to = xid[chain[j - 1]][v];
      int e = m.add_edge({NK::Crossing, from}, {NK::Crossing, to});
      chain_out[from] = e;
      chain_in[to] = e;
    }
    int first = xid[chain[0]][v];
    chain_out[first] = m.add_edge({NK::Crossing, first}, {NK::End, v});
    m.end_edge[v] = chain_out[first];
  }

  // Mid edges: the segment alongside side (p -> q) runs from the
  // corner crossing at q to the one at p.
  for (std::size_t t = 0; t < tiles.size(); ++t)
    for (int p : tiles[t].vertices) {
      int q = tiles[t].succ(p);
      int from = xid[t][q], to = xid[t][p];
      int e = m.add_edge({NK::Crossing, from}, {NK::Crossing, to});
      mid_out[from] = e;
      mid_in[to] = e;
    }

  for (int x = 0; x < c; ++x)
    m.crossings[x].slots = {StrandMap::Slot{chain_in[x], true}, {mid_in[x], true},
                            {mid_out[x], false}, {chain_out[x], false}};

  m.close_boundary();
  return m;
}

}  // namespace detail

/// The strand diagram Sigma(T).
inline StrandMap build_strand_map(const Tiling& t) {
  return detail::build_strand_map_from_tiles(t.n(), tiles_of(t));
}

/// Minimalist test: n clockwise faces at the boundary and no other
/// clockwise face, alternating faces four-sided (the boundary arc
/// counting as a side), interior oriented faces counterclockwise with
/// at least 3 sides, nothing else.
inline bool is_minimalist(const StrandMap& m) {
  std::vector<FaceInfo> faces = classify_faces(m);
  int vertex_faces = 0;
  for (const FaceInfo& f : faces) {
    if (f.outer) continue;
    if (f.vertex_label > 0) {
      if (f.cls != FaceClass::Clockwise) return false;
      if (f.edge_label > 0 || f.arc_sides != 1) return false;
      ++vertex_faces;
      continue;
    }
    if (f.cls == FaceClass::Clockwise) return false;  // beyond the n boundary ones
    if (f.cls == FaceClass::Other) return false;
    if (f.cls == FaceClass::Alternating) {
      if (f.sides() != 4) return false;
      continue;
    }
    // Counterclockwise: must be interior, at least 3 sides.
    if (!f.interior || f.sides() < 3) return false;
  }
  return vertex_faces == m.n;
}

/// Absolute strand diagram axioms, disk specialization: strands
/// crossing a given strand alternate in direction, double crossings
/// bound oriented lenses, no strand crosses itself, no closed loops.
inline bool is_absolute(const StrandMap& m) {
  std::vector<MapStrand> strands = detail::trace_map_strands(m);
  // Which strand passes each crossing on which axis (slot parity).
  int c = static_cast<int>(m.crossings.size());
  std::vector<std::array<int, 2>> owner(c, {-1, -1});
  for (int s = 0; s < static_cast<int>(strands.size()); ++s) {
    if (strands[s].loop) return false;  // cuts out a disk on the disk
    for (std::size_t i = 0; i < strands[s].crossing.size(); ++i) {
      int x = strands[s].crossing[i];
      owner[x][strands[s].in_slot[i] & 1] = s;
    }
  }
  for (int x = 0; x < c; ++x)
    if (owner[x][0] >= 0 && owner[x][0] == owner[x][1]) return false;  // self-crossing
  for (const MapStrand& s : strands) {
    int prev_sign = 0;
    for (std::size_t i = 0; i < s.crossing.size(); ++i) {
      int x = s.crossing[i];
      int k = s.in_slot[i];
      // The other strand enters one slot clockwise or counterclockwise.
      int sign = 0;
      const auto& slots = m.crossings[x].slots;
      if (slots[(k + 1) % 4].into)
        sign = +1;
      else if (slots[(k + 3) % 4].into)
        sign = -1;
      else
        fail(errc::malformed_input, "crossing without transversal partner");
      if (sign == prev_sign) return false;  // crossings must alternate
      prev_sign = sign;
    }
  }
  // Oriented lenses: crossings consecutive on both strands must come
  // in opposite order.
  for (std::size_t a = 0; a < strands.size(); ++a)
    for (std::size_t b = a + 1; b < strands.size(); ++b) {
      std::map<int, int> pos_b;
      for (std::size_t i = 0; i < strands[b].crossing.size(); ++i)
        pos_b[strands[b].crossing[i]] = static_cast<int>(i);
      std::vector<int> common_a;  // positions in a-order
      for (int x : strands[a].crossing)
        if (pos_b.count(x)) common_a.push_back(x);
      for (std::size_t i = 0; i + 1 < common_a.size(); ++i) {
        int x = common_a[i], y = common_a[i + 1];
        if (pos_b[x] + 1 == pos_b[y]) return false;  // same order: unoriented
      }
    }
  return true;
}

/// Recover the tiling from a minimalist diagram: one diagonal per
/// interior alternating quadrilateral, joining the labels of the two
/// clockwise faces across it.
inline Tiling shrink(const StrandMap& m) {
  if (!is_minimalist(m)) fail(errc::not_minimalist, "shrink needs a minimalist diagram");
  std::vector<FaceInfo> faces = classify_faces(m);
  std::vector<int> face_of(m.dart_count(), -1);
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (int d : faces[f].darts) face_of[d] = f;
  std::vector<std::pair<int, int>> diagonals;
  for (const FaceInfo& f : faces) {
    if (!f.interior || f.cls != FaceClass::Alternating) continue;
    std::set<int> labels;
    for (int d : f.darts) {
      const FaceInfo& g = faces[face_of[d ^ 1]];
      if (g.cls == FaceClass::Clockwise && g.vertex_label > 0) labels.insert(g.vertex_label);
    }
    if (labels.size() != 2) fail(errc::not_minimalist, "alternating face without two vertex faces");
    diagonals.emplace_back(*labels.begin(), *labels.rbegin());
  }
  return make_tiling(m.n, diagonals);
}

// ---------------------------------------------------------------------------
// JSON form and canonical equality

inline nlohmann::json to_json(const StrandMap& m) {
  nlohmann::json j;
  j["n"] = m.n;
  auto& cs = j["crossings"] = nlohmann::json::array();
  for (int x = 0; x < static_cast<int>(m.crossings.size()); ++x) {
    const auto& s = m.crossings[x].slots;
    nlohmann::json c;
    c["id"] = x;
    c["darts"] = {s[0].edge, s[1].edge, s[2].edge, s[3].edge};
    // [in, out] per strand; the two passes use opposite slot pairs.
    int in0 = s[0].into ? 0 : 2, in1 = s[1].into ? 1 : 3;
    c["strand_pairs"] = {{s[in0].edge, s[(in0 + 2) % 4].edge},
                         {s[in1].edge, s[(in1 + 2) % 4].edge}};
    cs.push_back(std::move(c));
  }
  auto& eps = j["endpoints"] = nlohmann::json::array();
  for (int v = 1; v <= m.n; ++v) {
    eps.push_back({{"label", std::to_string(v) + "+"}, {"dart", m.start_edge[v]}});
    eps.push_back({{"label", std::to_string(v) + "-"}, {"dart", m.end_edge[v]}});
  }
  return j;
}

/// Parse and validate the JSON form of a strand diagram.
inline StrandMap parse_strand_map(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("crossings") || !j.contains("endpoints"))
    fail(errc::malformed_input, "expected n, crossings, endpoints");
  StrandMap m;
  m.n = j["n"].get<int>();
  if (m.n < 1) fail(errc::malformed_input, "rank must be positive");

  // Where does each dart id attach? (out of, into) resolved separately.
  struct Attach {
    bool have_out = false, have_in = false;
    StrandMap::NodeRef out_at, in_at;
  };
  std::map<int, Attach> att;
  using NK = StrandMap::NodeKind;

  struct RawCrossing {
    std::array<int, 4> darts;
    std::array<bool, 4> into;
  };
  std::vector<RawCrossing> raw;
  for (const auto& c : j["crossings"]) {
    if (!c.contains("darts") || !c.contains("strand_pairs") || c["darts"].size() != 4 ||
        c["strand_pairs"].size() != 2)
      fail(errc::malformed_input, "crossing needs 4 darts and 2 strand pairs");
    RawCrossing rc{};
    for (int i = 0; i < 4; ++i) rc.darts[i] = c["darts"][i].get<int>();
    std::array<int, 4> role{0, 0, 0, 0};  // +1 in, -1 out
    for (const auto& pr : c["strand_pairs"]) {
      if (pr.size() != 2) fail(errc::malformed_input, "strand pair must be [in, out]");
      int din = pr[0].get<int>(), dout = pr[1].get<int>();
      int si = -1, so = -1;
      for (int i = 0; i < 4; ++i) {
        if (rc.darts[i] == din && role[i] == 0 && si < 0) si = i;
      }
      for (int i = 0; i < 4; ++i) {
        if (rc.darts[i] == dout && role[i] == 0 && so < 0 && i != si) so = i;
      }
      if (si < 0 || so < 0) fail(errc::malformed_input, "strand pair not among crossing darts");
      if ((si + 2) % 4 != so)
        fail(errc::malformed_input, "strand must pass through opposite slots");
      role[si] = +1;
      role[so] = -1;
    }
    for (int i = 0; i < 4; ++i) {
      if (role[i] == 0) fail(errc::malformed_input, "slot without strand role");
      rc.into[i] = role[i] > 0;
    }
    int id = static_cast<int>(raw.size());
    for (int i = 0; i < 4; ++i) {
      Attach& a = att[rc.darts[i]];
      if (rc.into[i]) {
        if (a.have_in) fail(errc::malformed_input, "dart enters two nodes");
        a.have_in = true;
        a.in_at = {NK::Crossing, id};
      } else {
        if (a.have_out) fail(errc::malformed_input, "dart leaves two nodes");
        a.have_out = true;
        a.out_at = {NK::Crossing, id};
      }
    }
    raw.push_back(rc);
  }

  std::map<int, int> starts, ends;  // label -> dart
  for (const auto& ep : j["endpoints"]) {
    if (!ep.contains("label") || !ep.contains("dart"))
      fail(errc::malformed_input, "endpoint needs label and dart");
    std::string label = ep["label"].get<std::string>();
    int dart = ep["dart"].get<int>();
    if (label.size() < 2) fail(errc::malformed_input, "bad endpoint label: " + label);
    char sign = label.back();
    int v = 0;
    try {
      v = std::stoi(label.substr(0, label.size() - 1));
    } catch (const std::exception&) {
      fail(errc::malformed_input, "bad endpoint label: " + label);
    }
    if (v < 1 || v > m.n || (sign != '+' && sign != '-'))
      fail(errc::bad_endpoints, "label out of range: " + label);
    auto& tbl = sign == '+' ? starts : ends;
    if (tbl.count(v)) fail(errc::bad_endpoints, "duplicate endpoint " + label);
    tbl[v] = dart;
    Attach& a = att[dart];
    if (sign == '+') {
      if (a.have_out) fail(errc::malformed_input, "start dart already leaves a node");
      a.have_out = true;
      a.out_at = {NK::Start, v};
    } else {
      if (a.have_in) fail(errc::malformed_input, "end dart already enters a node");
      a.have_in = true;
      a.in_at = {NK::End, v};
    }
  }
  if (static_cast<int>(starts.size()) != m.n || static_cast<int>(ends.size()) != m.n)
    fail(errc::bad_endpoints, "endpoint multiset must be {1+..n+, 1-..n-}");

  std::map<int, int> edge_id;
  for (auto& [dart, a] : att) {
    if (!a.have_in || !a.have_out)
      fail(errc::malformed_input, "dart " + std::to_string(dart) + " is dangling");
    edge_id[dart] = m.add_edge(a.out_at, a.in_at);
  }
  m.crossings.resize(raw.size());
  for (std::size_t x = 0; x < raw.size(); ++x)
    for (int i = 0; i < 4; ++i)
      m.crossings[x].slots[i] = {edge_id[raw[x].darts[i]], raw[x].into[i]};
  m.start_edge.assign(m.n + 1, -1);
  m.end_edge.assign(m.n + 1, -1);
  for (auto [v, d] : starts) m.start_edge[v] = edge_id[d];
  for (auto [v, d] : ends) m.end_edge[v] = edge_id[d];
  m.close_boundary();

  // Planarity: Euler relation over the traced faces.
  long long V = static_cast<long long>(m.crossings.size()) + 2 * m.n;
  long long E = static_cast<long long>(m.edges.size());
  long long F = static_cast<long long>(classify_faces(m).size());
  if (V - E + F != 2) fail(errc::non_planar, "face orbits violate the Euler relation");
  return m;
}

/// Canonical serialization; two maps are equal iff the strings match.
/// Crossings and edges are renumbered by strand traversal from 1+.
inline std::string canonical_string(const StrandMap& m) {
  std::vector<int> xnum(m.crossings.size(), -1), enum_(m.edges.size(), -1);
  int xn = 0, en = 0;
  std::vector<MapStrand> strands = detail::trace_map_strands(m);
  std::string s = "n=" + std::to_string(m.n) + ";";
  for (const MapStrand& st : strands) {
    if (st.loop) continue;
    int e = m.start_edge[st.start];
    s += std::to_string(st.start) + ":";
    for (std::size_t i = 0;; ++i) {
      if (enum_[e] < 0) enum_[e] = en++;
      s += "e" + std::to_string(enum_[e]);
      if (i >= st.crossing.size()) break;
      int x = st.crossing[i];
      if (xnum[x] < 0) xnum[x] = xn++;
      s += "x" + std::to_string(xnum[x]);
      e = m.crossings[x].slots[(st.in_slot[i] + 2) % 4].edge;
    }
    s += ">" + std::to_string(st.end) + ";";
  }
  for (const MapStrand& st : strands) {
    if (!st.loop) continue;
    s += "loop:";
    for (std::size_t i = 0; i < st.crossing.size(); ++i) {
      int x = st.crossing[i];
      if (xnum[x] < 0) xnum[x] = xn++;
      s += "x" + std::to_string(xnum[x]);
    }
    s += ";";
  }
  // Slot structure pins the cyclic order at each crossing.
  std::vector<int> order(m.crossings.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return xnum[a] < xnum[b]; });
  for (int x : order) {
    s += "[";
    // Rotate so the slot with the smallest renumbered in-edge comes first,
    // keeping the cyclic order itself.
    const auto& slots = m.crossings[x].slots;
    int best = 0;
    for (int i = 1; i < 4; ++i) {
      auto key = [&](int k) {
        return std::pair<int, int>(enum_[slots[k].edge], slots[k].into ? 0 : 1);
      };
      if (key(i) < key(best)) best = i;
    }
    for (int i = 0; i < 4; ++i) {
      const auto& sl = slots[(best + i) % 4];
      s += (sl.into ? "i" : "o") + std::to_string(enum_[sl.edge]) + ",";
    }
    s += "]";
  }
  return s;
}

inline bool equal_maps(const StrandMap& a, const StrandMap& b) {
  return canonical_string(a) == canonical_string(b);
}

}  // namespace tileperm
