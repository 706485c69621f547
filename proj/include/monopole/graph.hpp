#pragma once

// Coset graphs Gamma(G, H, C), reference polyhedral skeletons with rotation
// systems, face tracing and small-graph isomorphism.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/groups.hpp"

namespace monopole {

/// Undirected simple graph as sorted adjacency lists.
struct SimpleGraph {
  std::vector<std::vector<Index>> adjacency;

  std::size_t vertex_count() const { return adjacency.size(); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adjacency) twice += nb.size();
    return twice / 2;
  }
  bool adjacent(Index x, Index y) const {
    return std::binary_search(adjacency[x].begin(), adjacency[x].end(), y);
  }
  std::size_t degree(Index x) const { return adjacency[x].size(); }

  static SimpleGraph from_edges(std::size_t n, const std::vector<std::pair<Index, Index>>& edges) {
    SimpleGraph g;
    g.adjacency.resize(n);
    for (auto [x, y] : edges) {
      g.adjacency[x].push_back(y);
      g.adjacency[y].push_back(x);
    }
    for (auto& nb : g.adjacency) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
  }
};

enum class GraphMode { simple, multi };

struct GraphEdge {
  Index x = 0;
  Index y = 0;  // x < y
  std::size_t multiplicity = 1;
};

/// Gamma(G, H, C). Vertices are the left cosets; summand c joins x to c.x.
struct CosetGraph {
  std::size_t vertex_count = 0;
  GraphMode mode = GraphMode::simple;
  std::vector<GraphEdge> edges;            // sorted by (x, y)
  std::vector<std::size_t> loops;          // summands fixing each vertex
  // summand_map[x][y]: positions in C.summands of the summands c with c.x = y.
  std::vector<std::vector<std::vector<Index>>> summand_map;

  const std::vector<Index>& summands(Index x, Index y) const { return summand_map[x][y]; }

  SimpleGraph simple() const {
    std::vector<std::pair<Index, Index>> e;
    for (const auto& edge : edges) e.emplace_back(edge.x, edge.y);
    return SimpleGraph::from_edges(vertex_count, e);
  }

  /// Edge multiplicity between distinct vertices (0 when not adjacent).
  std::size_t multiplicity(Index x, Index y) const {
    if (x > y) std::swap(x, y);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair(x, y), [](const GraphEdge& e, const auto& key) {
      return std::pair(e.x, e.y) < key;
    });
    return (it != edges.end() && it->x == x && it->y == y) ? it->multiplicity : 0;
  }

  /// Common degree of the simple graph, or nullopt if not regular.
  std::optional<std::size_t> regular_degree() const {
    const SimpleGraph g = simple();
    if (g.vertex_count() == 0) return 0;
    const std::size_t d = g.degree(0);
    for (Index x = 1; x < g.vertex_count(); ++x)
      if (g.degree(x) != d) return std::nullopt;
    return d;
  }

  /// Sum of incident edge multiplicities at x (loops excluded).
  std::size_t weighted_degree(Index x) const {
    std::size_t total = 0;
    for (const auto& e : edges)
      if (e.x == x || e.y == x) total += e.multiplicity;
    return total;
  }
};

inline CosetGraph build_graph(const CosetSpace& cosets, const CasimirElement& C, GraphMode mode = GraphMode::simple) {
  if (!C.real) throw Error("coset graph needs an inverse-closed Casimir element");
  const std::size_t n = cosets.size();
  CosetGraph graph;
  graph.vertex_count = n;
  graph.mode = mode;
  graph.loops.assign(n, 0);
  graph.summand_map.assign(n, std::vector<std::vector<Index>>(n));
  for (Index x = 0; x < n; ++x)
    for (Index pos = 0; pos < C.summands.size(); ++pos) {
      const Index y = cosets.act(C.summands[pos], x);
      graph.summand_map[x][y].push_back(pos);
      if (y == x) ++graph.loops[x];
    }
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y) {
      const std::size_t m = graph.summand_map[x][y].size();
      if (m == 0) continue;
      graph.edges.push_back({x, y, mode == GraphMode::simple ? std::size_t{1} : m});
    }
  return graph;
}

/// True iff G acts transitively on the (non-empty) set of unordered edges.
inline bool is_good_triple(const CosetSpace& cosets, const CosetGraph& graph) {
  if (graph.edges.empty()) return false;
  std::set<std::pair<Index, Index>> orbit;
  const Index x0 = graph.edges.front().x;
  const Index y0 = graph.edges.front().y;
  for (Index g = 0; g < cosets.group_order(); ++g) {
    Index x = cosets.act(g, x0);
    Index y = cosets.act(g, y0);
    if (x > y) std::swap(x, y);
    orbit.emplace(x, y);
  }
  return orbit.size() == graph.edges.size();
}

/// Exact isomorphism by backtracking: returns phi with phi[v of a] = vertex of b.
inline std::optional<std::vector<Index>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto degree_profile = [](const SimpleGraph& g) {
    std::vector<std::size_t> d;
    for (Index x = 0; x < g.vertex_count(); ++x) d.push_back(g.degree(x));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degree_profile(a) != degree_profile(b)) return std::nullopt;
  if (n == 0) return std::vector<Index>{};

  // Visit a's vertices in BFS order so each new vertex has mapped neighbours.
  std::vector<Index> order;
  std::vector<bool> queued(n, false);
  for (Index s = 0; s < n; ++s) {
    if (queued[s]) continue;
    queued[s] = true;
    order.push_back(s);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h)
      for (Index nb : a.adjacency[order[h]])
        if (!queued[nb]) {
          queued[nb] = true;
          order.push_back(nb);
        }
  }

  std::vector<Index> phi(n, n);
  std::vector<bool> used(n, false);
  auto consistent = [&](Index v, Index w) {
    if (a.degree(v) != b.degree(w)) return false;
    for (Index u = 0; u < n; ++u) {
      if (phi[u] == n) continue;
      if (a.adjacent(v, u) != b.adjacent(w, phi[u])) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Index v = order[depth];
    for (Index w = 0; w < n; ++w) {
      if (used[w] || !consistent(v, w)) continue;
      phi[v] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      phi[v] = n;
      used[w] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return phi;
}

inline bool graph_isomorphic(const SimpleGraph& a, const SimpleGraph& b) { return find_isomorphism(a, b).has_value(); }
inline bool graph_isomorphic(const CosetGraph& a, const CosetGraph& b) { return graph_isomorphic(a.simple(), b.simple()); }

/// Rotation system (cyclic neighbour order at each vertex) and the faces it
/// determines.
struct PlanarEmbedding {
  std::vector<std::vector<Index>> rotation;
  std::vector<std::vector<Index>> faces;  // directed boundary cycles

  std::size_t vertex_count() const { return rotation.size(); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rotation) twice += r.size();
    return twice / 2;
  }
  long long euler_characteristic() const {
    return static_cast<long long>(vertex_count()) - static_cast<long long>(edge_count()) +
           static_cast<long long>(faces.size());
  }
};

/// Faces of a rotation system: the dart (u, v) is followed by (v, w) where w
/// precedes u in the rotation at v.
inline std::vector<std::vector<Index>> trace_faces(const std::vector<std::vector<Index>>& rotation) {
  std::set<std::pair<Index, Index>> visited;
  std::vector<std::vector<Index>> faces;
  for (Index u0 = 0; u0 < rotation.size(); ++u0) {
    for (Index v0 : rotation[u0]) {
      if (visited.count({u0, v0})) continue;
      std::vector<Index> face;
      Index u = u0;
      Index v = v0;
      while (visited.insert({u, v}).second) {
        face.push_back(u);
        const auto& rot = rotation[v];
        const auto pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), u) - rot.begin());
        if (pos == rot.size()) throw Error("rotation system is not symmetric");
        const Index w = rot[(pos + rot.size() - 1) % rot.size()];
        u = v;
        v = w;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

enum class Solid { tetrahedron, octahedron, cube, icosahedron, dodecahedron };

inline std::string_view solid_name(Solid s) {
  switch (s) {
    case Solid::tetrahedron: return "tetrahedron";
    case Solid::octahedron: return "octahedron";
    case Solid::cube: return "cube";
    case Solid::icosahedron: return "icosahedron";
    case Solid::dodecahedron: return "dodecahedron";
  }
  return "?";
}

inline std::optional<Solid> parse_solid(std::string_view name) {
  for (Solid s : {Solid::tetrahedron, Solid::octahedron, Solid::cube, Solid::icosahedron, Solid::dodecahedron})
    if (solid_name(s) == name) return s;
  return std::nullopt;
}

/// Counterclockwise rotation system (seen from outside) of each skeleton,
/// vertices labelled as in the usual coordinate listings.
inline const std::vector<std::vector<Index>>& reference_rotation(Solid s) {
  static const std::vector<std::vector<Index>> tetra = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  static const std::vector<std::vector<Index>> octa = {{2, 4, 3, 5}, {2, 5, 3, 4}, {0, 5, 1, 4},
                                                       {0, 4, 1, 5}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  static const std::vector<std::vector<Index>> cube = {{1, 2, 4}, {0, 5, 3}, {0, 3, 6}, {1, 7, 2},
                                                       {0, 6, 5}, {1, 4, 7}, {2, 7, 4}, {3, 5, 6}};
  static const std::vector<std::vector<Index>> icosa = {
      {1, 2, 6, 5, 7},  {7, 3, 8, 2, 0},  {0, 1, 8, 4, 6},  {7, 11, 9, 8, 1}, {8, 9, 10, 6, 2}, {6, 10, 11, 7, 0},
      {0, 2, 4, 10, 5}, {0, 5, 11, 3, 1}, {1, 3, 9, 4, 2},  {3, 11, 10, 4, 8}, {4, 9, 11, 5, 6}, {3, 7, 5, 10, 9}};
  static const std::vector<std::vector<Index>> dodeca = {
      {9, 10, 8},  {11, 16, 9}, {10, 12, 14}, {12, 16, 17}, {8, 13, 15}, {15, 19, 11}, {14, 18, 13},
      {17, 19, 18}, {0, 14, 4}, {0, 15, 1},   {16, 2, 0},   {5, 17, 1},  {2, 3, 18},   {4, 6, 19},
      {6, 8, 2},   {4, 5, 9},   {1, 3, 10},   {3, 11, 7},   {6, 12, 7},  {13, 7, 5}};
  switch (s) {
    case Solid::tetrahedron: return tetra;
    case Solid::octahedron: return octa;
    case Solid::cube: return cube;
    case Solid::icosahedron: return icosa;
    case Solid::dodecahedron: return dodeca;
  }
  return tetra;
}

inline SimpleGraph reference_skeleton(Solid s) {
  SimpleGraph g;
  g.adjacency = reference_rotation(s);
  for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
  return g;
}

inline PlanarEmbedding reference_embedding(Solid s) {
  PlanarEmbedding e;
  e.rotation = reference_rotation(s);
  e.faces = trace_faces(e.rotation);
  return e;
}

/// Transports the solid's reference rotation system onto `graph` through an
/// isomorphism and traces its faces.
inline PlanarEmbedding attach_embedding(const SimpleGraph& graph, Solid solid) {
  const SimpleGraph ref = reference_skeleton(solid);
  const auto phi = find_isomorphism(ref, graph);
  if (!phi) throw NotIsomorphic(std::string("graph is not the ") + std::string(solid_name(solid)) + " skeleton");
  PlanarEmbedding e;
  e.rotation.resize(graph.vertex_count());
  const auto& rot = reference_rotation(solid);
  for (Index v = 0; v < rot.size(); ++v)
    for (Index w : rot[v]) e.rotation[(*phi)[v]].push_back((*phi)[w]);
  e.faces = trace_faces(e.rotation);
  return e;
}

inline PlanarEmbedding attach_embedding(const CosetGraph& graph, Solid solid) {
  return attach_embedding(graph.simple(), solid);
}

}  // namespace monopole
