#include <cmath>
#include <set>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "monopole/monopoles.hpp"
#include "monopole/reference.hpp"

using namespace monopole;

namespace {

const Catalog& catalog() {
  static const Catalog c = build_catalog();
  return c;
}

std::set<long long> chern_set(const MonopoleCase& mc) {
  std::set<long long> s;
  for (const auto& f : mc.characters)
    if (f.chern) s.insert(*f.chern);
  for (const auto& f : mc.derived) s.insert(*f.chern);
  return s;
}

std::set<long long> range(long long lo, long long hi) {
  std::set<long long> s;
  for (long long c = lo; c <= hi; ++c) s.insert(c);
  return s;
}

double ground_state(const MonopoleCase& mc, long long c) { return mc.find_chern(c)->laplacian_spectrum.front().value; }

}  // namespace

TEST(GoodCasimirs, TetrahedronSearch) {
  const auto G = make_group_data(GroupKind::binary_tetrahedral);
  const auto H = cyclic_subgroups_of_order(G->group, 6).front();
  const auto cosets = coset_space(G->group, H);
  const auto search = search_casimirs(*G, cosets, reference_skeleton(Solid::tetrahedron));
  EXPECT_EQ(search.candidates, 63u);  // 6 non-trivial classes
  EXPECT_FALSE(search.good.empty());
  for (const auto& C : search.good) {
    EXPECT_TRUE(C.real);
    EXPECT_TRUE(graph_isomorphic(build_graph(cosets, C, GraphMode::simple).simple(),
                                 reference_skeleton(Solid::tetrahedron)));
  }
  EXPECT_TRUE(find_good_casimirs(*G, cosets, reference_skeleton(Solid::cube)).empty());
}

TEST(Catalog, Shapes) {
  const auto& cat = catalog();
  ASSERT_EQ(cat.cases.size(), 4u);
  struct Want {
    Solid solid;
    std::size_t vertices, degree, faces, subgroup;
  };
  for (const Want& w : {Want{Solid::tetrahedron, 4, 3, 4, 6}, Want{Solid::octahedron, 6, 4, 8, 8},
                        Want{Solid::cube, 8, 3, 6, 6}, Want{Solid::icosahedron, 12, 5, 20, 10}}) {
    const auto& mc = cat.at(w.solid);
    EXPECT_EQ(mc.cosets.size(), w.vertices);
    EXPECT_EQ(mc.degree, w.degree);
    EXPECT_EQ(mc.face_count(), w.faces);
    EXPECT_EQ(mc.subgroup.order(), w.subgroup);
    EXPECT_TRUE(mc.good_triple);
    EXPECT_EQ(mc.characters.size(), w.subgroup);
  }
  EXPECT_THROW(cat.at(Solid::dodecahedron), OutOfRange);
  EXPECT_THROW(build_case(Solid::dodecahedron, cat.binary_icosahedral), CatalogInconsistent);
}

TEST(Catalog, CubeReusesOctahedralCasimir) {
  EXPECT_EQ(catalog().at(Solid::cube).casimir.class_ids, catalog().at(Solid::octahedron).casimir.class_ids);
}

TEST(Catalog, ChernSetsFillAdmissibleRange) {
  for (const auto& mc : catalog().cases) EXPECT_EQ(chern_set(mc), range(mc.chern_min(), mc.chern_max())) << solid_name(mc.solid);
  EXPECT_EQ(catalog().at(Solid::tetrahedron).chern_min(), -1);
  EXPECT_EQ(catalog().at(Solid::tetrahedron).chern_max(), 2);
  EXPECT_EQ(catalog().at(Solid::icosahedron).chern_min(), -9);
  EXPECT_EQ(catalog().at(Solid::icosahedron).chern_max(), 10);
}

TEST(Catalog, CharacterRoutes) {
  const auto& cat = catalog();
  EXPECT_TRUE(cat.at(Solid::octahedron).derived.empty());
  const auto& cube = cat.at(Solid::cube);
  ASSERT_EQ(cube.derived.size(), 1u);
  EXPECT_EQ(*cube.derived.front().chern, 3);
  EXPECT_EQ(cube.characters[3].status, FieldStatus::degenerate);
  const auto& ico = cat.at(Solid::icosahedron);
  EXPECT_EQ(ico.characters[5].status, FieldStatus::degenerate);
  std::set<long long> derived;
  for (const auto& f : ico.derived) derived.insert(*f.chern);
  std::set<long long> want = range(-9, -5);
  for (long long c = 5; c <= 10; ++c) want.insert(c);
  EXPECT_EQ(derived, want);
}

TEST(Catalog, ConjugateCharactersNegateChern) {
  for (const auto& mc : catalog().cases) {
    const long long n = static_cast<long long>(mc.subgroup.order());
    for (long long k = 1; k < n; ++k) {
      const auto& a = mc.characters[k];
      const auto& b = mc.characters[n - k];
      if (!a.chern) continue;
      if (*a.chern == mc.chern_max()) EXPECT_EQ(*b.chern, *a.chern);
      else EXPECT_EQ(*a.chern, -*b.chern);
    }
  }
}

TEST(Catalog, NumericAgreesWithFrobenius) {
  for (const auto& mc : catalog().cases)
    for (const auto& f : mc.characters) {
      if (f.status != FieldStatus::ok) continue;
      ASSERT_TRUE(f.frobenius_adjacency);
      EXPECT_NO_THROW(cross_validate(f.adjacency_spectrum, *f.frobenius_adjacency, 1e-9));
      EXPECT_NO_THROW(cross_validate(f.laplacian_spectrum, *f.frobenius_laplacian, 1e-9));
      std::size_t total = 0;
      for (const auto& t : f.frobenius_terms) total += t.multiplicity * t.dimension;
      EXPECT_EQ(total, mc.cosets.size());
    }
}

TEST(Catalog, NumericAgreesWithEigen) {
  for (const auto& mc : catalog().cases)
    for (const auto& f : mc.characters) {
      if (f.status != FieldStatus::ok) continue;
      Eigen::MatrixXcd E(f.adjacency.size(), f.adjacency.size());
      for (Index r = 0; r < f.adjacency.size(); ++r)
        for (Index c = 0; c < f.adjacency.size(); ++c) E(r, c) = f.adjacency(r, c);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(E, Eigen::EigenvaluesOnly);
      std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
      EXPECT_NO_THROW(cross_validate(cluster_multiplicities(v), f.adjacency_spectrum, 1e-9));
    }
}

TEST(Catalog, ReproducesReferenceTables) {
  for (const auto& mc : catalog().cases)
    for (const auto& row : reference_table(mc.solid).rows) {
      const FieldEntry* f = mc.find_chern(row.chern);
      ASSERT_NE(f, nullptr);
      EXPECT_NO_THROW(cross_validate(f->adjacency_spectrum, row.adjacency, 1e-9)) << solid_name(mc.solid) << " " << row.chern;
      EXPECT_NO_THROW(cross_validate(f->laplacian_spectrum, row.laplacian, 1e-9)) << solid_name(mc.solid) << " " << row.chern;
    }
}

TEST(Catalog, OppositeChernSameSpectrum) {
  for (const auto& mc : catalog().cases)
    for (long long c = 1; -c >= mc.chern_min(); ++c)
      EXPECT_NO_THROW(cross_validate(mc.find_chern(c)->adjacency_spectrum, mc.find_chern(-c)->adjacency_spectrum, 1e-9));
}

TEST(Catalog, LaplacianNonNegative) {
  for (const auto& mc : catalog().cases) {
    for (const auto& f : mc.characters)
      if (f.status != FieldStatus::degenerate) { EXPECT_GE(f.laplacian_spectrum.front().value, -1e-9); }
    for (const auto& f : mc.derived) EXPECT_GE(f.laplacian_spectrum.front().value, -1e-9);
  }
}

TEST(Catalog, GroundStateRisesWithCharge) {
  const auto& cat = catalog();
  auto rising = [&](Solid s, long long upto) {
    const auto& mc = cat.at(s);
    for (long long c = 0; c < upto; ++c) EXPECT_LT(ground_state(mc, c), ground_state(mc, c + 1) + 1e-12) << solid_name(s) << " " << c;
  };
  rising(Solid::tetrahedron, 2);
  rising(Solid::cube, 3);
  rising(Solid::octahedron, 3);
  rising(Solid::icosahedron, 5);
}

TEST(Catalog, IndependentOfSubgroupChoice) {
  const auto& cat = catalog();
  for (const auto& base : cat.cases) {
    const auto subgroups = cyclic_subgroups_of_order(base.group->group, base.subgroup.order());
    ASSERT_GT(subgroups.size(), 1u);
    CaseOptions opt;
    opt.subgroup_choice = subgroups.size() - 1;
    const MonopoleCase other = build_case(base.solid, base.group, opt);
    EXPECT_EQ(chern_set(other), chern_set(base));
    for (long long c = base.chern_min(); c <= base.chern_max(); ++c)
      EXPECT_NO_THROW(cross_validate(other.find_chern(c)->adjacency_spectrum, base.find_chern(c)->adjacency_spectrum, 1e-9));
  }
  CaseOptions bad;
  bad.subgroup_choice = 1000;
  EXPECT_THROW(build_case(Solid::tetrahedron, cat.binary_tetrahedral, bad), OutOfRange);
}

TEST(Catalog, IndependentOfSeed) {
  const Catalog other = build_catalog(7);
  for (const auto& mc : catalog().cases) {
    const auto& o = other.at(mc.solid);
    EXPECT_EQ(chern_set(o), chern_set(mc));
    EXPECT_EQ(o.casimir.class_ids.size(), mc.casimir.class_ids.size());
  }
}

TEST(NoGo, Certificate) {
  const auto cert = dodecahedron_no_go(catalog().binary_icosahedral);
  EXPECT_EQ(cert.search.candidates, 255u);
  EXPECT_EQ(cert.search.inverse_closed, 255u);
  EXPECT_EQ(cert.search.edge_transitive, 0u);
  EXPECT_EQ(cert.search.target_graphs, 0u);
  EXPECT_TRUE(cert.search.good.empty());
  EXPECT_EQ(cert.irrep_dimension, 4u);
  EXPECT_EQ(cert.multiplicity, 2u);
  EXPECT_EQ(cert.implied_multiplicity, 8u);
  EXPECT_EQ(cert.max_dodecahedral_multiplicity, 5u);
  EXPECT_NO_THROW(cross_validate(cert.dodecahedral_spectrum, reference_dodecahedral_spectrum(), 1e-9));
}

TEST(Pentadodecahedral, Spectrum) {
  const auto pc = pentadodecahedral_case(catalog().at(Solid::icosahedron));
  EXPECT_EQ(pc.graph.vertex_count, 20u);
  EXPECT_EQ(pc.casimir.size(), 12u);
  std::size_t doubles = 0;
  for (Index x = 0; x < 20; ++x) {
    EXPECT_EQ(pc.graph.weighted_degree(x), 12u);
    EXPECT_EQ(pc.graph.loops[x], 0u);
  }
  for (const auto& e : pc.graph.edges) doubles += e.multiplicity == 2;
  EXPECT_EQ(doubles, 30u);
  EXPECT_NO_THROW(cross_validate(pc.laplacian_spectrum, reference_pentadodecahedral_spectrum(), 1e-9));
  EXPECT_NO_THROW(cross_validate(pc.frobenius_laplacian, reference_pentadodecahedral_spectrum(), 1e-9));
  std::size_t copies = 0;
  for (const auto& t : pc.terms)
    if (std::abs(12.0 - t.casimir_value - 15.0) < 1e-9) {
      EXPECT_EQ(t.dimension, 4u);
      copies += t.multiplicity;
    }
  EXPECT_EQ(copies, 2u);
  EXPECT_EQ(pc.character_laplacian_spectra.size(), 6u);
  EXPECT_THROW(pentadodecahedral_case(catalog().at(Solid::cube)), OutOfRange);
}
