#include <map>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "monopole/graph.hpp"
#include "monopole/monopoles.hpp"

using namespace monopole;

namespace {

const Catalog& catalog() {
  static const Catalog c = build_catalog();
  return c;
}

SimpleGraph complete(std::size_t n) {
  std::vector<std::pair<Index, Index>> e;
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y) e.emplace_back(x, y);
  return SimpleGraph::from_edges(n, e);
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<Index>& perm) {
  std::vector<std::pair<Index, Index>> e;
  for (Index x = 0; x < g.vertex_count(); ++x)
    for (Index y : g.adjacency[x])
      if (x < y) e.emplace_back(perm[x], perm[y]);
  return SimpleGraph::from_edges(g.vertex_count(), e);
}

}  // namespace

TEST(CosetGraph, TetrahedronHitsEveryPairTwice) {
  const auto& mc = catalog().at(Solid::tetrahedron);
  EXPECT_TRUE(graph_isomorphic(mc.graph.simple(), complete(4)));
  for (Index x = 0; x < 4; ++x) {
    EXPECT_EQ(mc.graph.loops[x], 2u);
    for (Index y = 0; y < 4; ++y)
      if (x != y) { EXPECT_EQ(mc.graph.summands(x, y).size(), 2u); }
  }
}

TEST(CosetGraph, IcosahedronShape) {
  const auto& mc = catalog().at(Solid::icosahedron);
  EXPECT_EQ(mc.graph.vertex_count, 12u);
  EXPECT_EQ(mc.graph.regular_degree(), std::optional<std::size_t>(5));
  for (Index x = 0; x < 12; ++x) {
    EXPECT_EQ(mc.graph.loops[x], 2u);
    for (Index y = 0; y < 12; ++y)
      if (x != y && mc.graph.multiplicity(x, y)) { EXPECT_EQ(mc.graph.summands(x, y).size(), 2u); }
  }
}

TEST(CosetGraph, PentadodecahedralMultigraph) {
  const auto& mc = catalog().at(Solid::icosahedron);
  const auto& G = *mc.group;
  const auto H = cyclic_subgroups_of_order(G.group, 6).front();
  const auto g = build_graph(coset_space(G.group, H), mc.casimir, GraphMode::multi);
  EXPECT_EQ(g.vertex_count, 20u);
  for (Index x = 0; x < 20; ++x) {
    EXPECT_EQ(g.loops[x], 0u);
    EXPECT_EQ(g.weighted_degree(x), 12u);
    std::map<std::size_t, std::size_t> by_mult;
    for (Index y = 0; y < 20; ++y)
      if (y != x && g.multiplicity(x, y)) ++by_mult[g.multiplicity(x, y)];
    EXPECT_EQ(by_mult[2], 3u);
    EXPECT_EQ(by_mult[1], 6u);
  }
}

TEST(CosetGraph, SimpleModeCollapses) {
  const auto& mc = catalog().at(Solid::tetrahedron);
  const auto multi = build_graph(mc.cosets, mc.casimir, GraphMode::multi);
  for (const auto& e : mc.graph.edges) EXPECT_EQ(e.multiplicity, 1u);
  for (const auto& e : multi.edges) EXPECT_EQ(e.multiplicity, 2u);
}

TEST(CosetGraph, NonRealCasimirRejected) {
  const auto& G = *catalog().binary_tetrahedral;
  const auto& mc = catalog().at(Solid::tetrahedron);
  for (Index c = 0; c < G.classes.size(); ++c) {
    const auto C = casimir_from_classes(G.group, G.classes, {c});
    if (!C.real) { EXPECT_THROW(build_graph(mc.cosets, C), Error); }
  }
}

TEST(GoodTriple, CatalogCasesAndMinusOne) {
  for (const auto& mc : catalog().cases) EXPECT_TRUE(is_good_triple(mc.cosets, mc.graph));
  const auto& G = *catalog().binary_tetrahedral;
  const auto& mc = catalog().at(Solid::tetrahedron);
  const Index minus = G.table.class_of[G.group.find(-Quaternion::one())];
  const auto g = build_graph(mc.cosets, casimir_from_classes(G.group, G.classes, {minus}));
  EXPECT_TRUE(g.edges.empty());
  EXPECT_FALSE(is_good_triple(mc.cosets, g));
}

// Every inverse-closed class union gives a regular, undirected, vertex-transitive graph.
TEST(CosetGraph, RegularForEveryRealCasimir) {
  for (const auto& mc : catalog().cases) {
    const auto& G = *mc.group;
    const std::size_t k = G.classes.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<Index> ids;
      for (Index c = 0; c < k; ++c)
        if (mask >> c & 1u) ids.push_back(c);
      const auto C = casimir_from_classes(G.group, G.classes, ids);
      if (!C.real) continue;
      const auto g = build_graph(mc.cosets, C, GraphMode::multi);
      ASSERT_TRUE(g.regular_degree().has_value());
      for (Index x = 0; x < g.vertex_count; ++x)
        for (Index y = 0; y < g.vertex_count; ++y) ASSERT_EQ(g.summands(x, y).size(), g.summands(y, x).size());
    }
    std::set<Index> orbit;
    for (Index a = 0; a < G.group.order(); ++a) orbit.insert(mc.cosets.act(a, 0));
    EXPECT_EQ(orbit.size(), mc.cosets.size());
  }
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(graph_isomorphic(complete(4), catalog().at(Solid::tetrahedron).graph.simple()));
  EXPECT_FALSE(graph_isomorphic(reference_skeleton(Solid::icosahedron), reference_skeleton(Solid::dodecahedron)));
  std::mt19937_64 rng(23);
  const SimpleGraph cube = reference_skeleton(Solid::cube);
  for (int n = 0; n < 20; ++n) {
    std::vector<Index> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const SimpleGraph r = relabel(cube, perm);
    const auto phi = find_isomorphism(cube, r);
    ASSERT_TRUE(phi.has_value());
    for (Index x = 0; x < 8; ++x)
      for (Index y = 0; y < 8; ++y) ASSERT_EQ(cube.adjacent(x, y), r.adjacent((*phi)[x], (*phi)[y]));
  }
  // Two disjoint K4s: 3-regular on 8 vertices with 12 edges, but not the cube.
  std::vector<std::pair<Index, Index>> e;
  for (Index base : {0u, 4u})
    for (Index x = 0; x < 4; ++x)
      for (Index y = x + 1; y < 4; ++y) e.emplace_back(base + x, base + y);
  EXPECT_FALSE(graph_isomorphic(cube, SimpleGraph::from_edges(8, e)));
}

TEST(Embedding, FacesAndEuler) {
  const std::map<Solid, std::pair<std::size_t, std::size_t>> expect = {
      {Solid::tetrahedron, {4, 3}}, {Solid::octahedron, {8, 3}}, {Solid::cube, {6, 4}},
      {Solid::icosahedron, {20, 3}}, {Solid::dodecahedron, {12, 5}}};
  for (const auto& [s, fc] : expect) {
    const PlanarEmbedding e = reference_embedding(s);
    EXPECT_EQ(e.faces.size(), fc.first) << solid_name(s);
    EXPECT_EQ(e.euler_characteristic(), 2);
    std::set<std::pair<Index, Index>> darts;
    for (const auto& f : e.faces) {
      EXPECT_EQ(f.size(), fc.second);
      for (std::size_t i = 0; i < f.size(); ++i) EXPECT_TRUE(darts.emplace(f[i], f[(i + 1) % f.size()]).second);
    }
    EXPECT_EQ(darts.size(), 2 * e.edge_count());
  }
  EXPECT_EQ(reference_skeleton(Solid::dodecahedron).edge_count(), 30u);
}

TEST(Embedding, AttachedToCosetGraphs) {
  for (const auto& mc : catalog().cases) {
    EXPECT_EQ(mc.embedding.euler_characteristic(), 2);
    for (const auto& f : mc.embedding.faces)
      for (std::size_t i = 0; i < f.size(); ++i) EXPECT_TRUE(mc.graph.simple().adjacent(f[i], f[(i + 1) % f.size()]));
  }
  EXPECT_THROW(attach_embedding(complete(4), Solid::cube), NotIsomorphic);
  EXPECT_THROW(attach_embedding(reference_skeleton(Solid::cube), Solid::octahedron), NotIsomorphic);
}

TEST(Solids, NameRoundTrip) {
  for (Solid s : {Solid::tetrahedron, Solid::octahedron, Solid::cube, Solid::icosahedron, Solid::dodecahedron})
    EXPECT_EQ(parse_solid(solid_name(s)), s);
  EXPECT_FALSE(parse_solid("torus").has_value());
}
