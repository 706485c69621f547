#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "monopole/groups.hpp"
#include "monopole/monopoles.hpp"

using namespace monopole;

namespace {

const GroupData& tetra() {
  static const auto g = make_group_data(GroupKind::binary_tetrahedral);
  return *g;
}
const GroupData& octa() {
  static const auto g = make_group_data(GroupKind::binary_octahedral);
  return *g;
}
const GroupData& icosa() {
  static const auto g = make_group_data(GroupKind::binary_icosahedral);
  return *g;
}

// Class sizes straight from quaternion conjugation, without the table.
std::multiset<std::size_t> orbit_sizes(const FiniteGroup& G) {
  std::set<Quaternion> seen;
  std::multiset<std::size_t> sizes;
  for (const auto& q : G.elements()) {
    if (seen.count(q)) continue;
    std::set<Quaternion> orbit;
    for (const auto& g : G.elements()) orbit.insert(g * q * g.conjugate());
    seen.insert(orbit.begin(), orbit.end());
    sizes.insert(orbit.size());
  }
  return sizes;
}

Index class_with(const GroupData& G, std::size_t size, std::size_t order) {
  for (Index c = 0; c < G.classes.size(); ++c)
    if (G.classes[c].size() == size && G.classes[c].element_order == order) return c;
  throw NoneFound("class");
}

Index minus_one_class(const GroupData& G) { return G.table.class_of[G.group.find(-Quaternion::one())]; }

}  // namespace

TEST(Generate, ClosureSizes) {
  EXPECT_EQ(generate_group(binary_tetrahedral_generators()).order(), 24u);
  EXPECT_EQ(generate_group(binary_octahedral_generators()).order(), 48u);
  EXPECT_EQ(generate_group(binary_icosahedral_generators()).order(), 120u);
  EXPECT_EQ(generate_group({Quaternion::one()}).order(), 1u);
}

TEST(Generate, IdentityFirstAndUnitNorm) {
  for (const GroupData* G : {&tetra(), &octa(), &icosa()}) {
    EXPECT_EQ(G->group.element(G->group.identity()), Quaternion::one());
    for (const auto& q : G->group.elements()) EXPECT_EQ(q.norm(), AlgebraicScalar(1));
  }
}

TEST(Generate, InfiniteOrderGeneratorOverflows) {
  const Quaternion q{AlgebraicScalar::rational(3, 5), AlgebraicScalar::rational(4, 5), 0, 0};
  EXPECT_THROW(generate_group({q}, 200), ClosureOverflow);
}

TEST(Generate, TableMatchesQuaternionProducts) {
  for (const GroupData* G : {&tetra(), &octa(), &icosa()}) {
    const auto& g = G->group;
    for (Index a = 0; a < g.order(); ++a) {
      ASSERT_EQ(g.multiply(a, g.inverse(a)), g.identity());
      for (Index b = 0; b < g.order(); ++b) ASSERT_EQ(g.element(g.multiply(a, b)), g.element(a) * g.element(b));
    }
  }
}

TEST(Generate, AssociativitySpotCheck) {
  const auto& g = icosa().group;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Index> pick(0, g.order() - 1);
  for (int n = 0; n < 100000; ++n) {
    const Index a = pick(rng), b = pick(rng), c = pick(rng);
    ASSERT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
  }
}

TEST(Classes, SizesAgreeWithQuaternionOrbits) {
  for (const GroupData* G : {&tetra(), &octa(), &icosa()}) {
    std::multiset<std::size_t> sizes;
    for (const auto& c : G->classes) sizes.insert(c.size());
    EXPECT_EQ(sizes, orbit_sizes(G->group));
  }
  EXPECT_EQ(tetra().classes.size(), 7u);
  EXPECT_EQ(orbit_sizes(tetra().group), (std::multiset<std::size_t>{1, 1, 6, 4, 4, 4, 4}));
  EXPECT_EQ(octa().classes.size(), 8u);
  EXPECT_EQ(icosa().classes.size(), 9u);
  EXPECT_EQ(conjugacy_classes(generate_group({Quaternion::one()})).size(), 1u);
}

TEST(Classes, ClosedUnderConjugationAndSorted) {
  for (const GroupData* G : {&tetra(), &octa(), &icosa()}) {
    std::size_t total = 0;
    for (const auto& c : G->classes) {
      total += c.size();
      for (Index g = 0; g < G->group.order(); ++g)
        for (Index m : c.members) ASSERT_TRUE(c.contains(G->group.conjugate(g, m)));
    }
    EXPECT_EQ(total, G->group.order());
    for (std::size_t i = 1; i < G->classes.size(); ++i)
      EXPECT_LE(std::pair(G->classes[i - 1].size(), G->classes[i - 1].element_order),
                std::pair(G->classes[i].size(), G->classes[i].element_order));
  }
}

TEST(Casimir, Examples) {
  const auto& T = tetra();
  const auto minus = casimir_from_classes(T.group, T.classes, {minus_one_class(T)});
  EXPECT_TRUE(minus.real);
  EXPECT_EQ(minus.size(), 1u);

  const auto& O = octa();
  const auto c8 = casimir_from_classes(O.group, O.classes, {class_with(O, 6, 8)});
  EXPECT_TRUE(c8.real);
  EXPECT_EQ(c8.size(), 6u);

  std::vector<Index> order3;
  for (Index c = 0; c < T.classes.size(); ++c)
    if (T.classes[c].element_order == 3) order3.push_back(c);
  ASSERT_EQ(order3.size(), 2u);
  EXPECT_FALSE(casimir_from_classes(T.group, T.classes, {order3[0]}).real);
  const auto c3 = casimir_from_classes(T.group, T.classes, order3);
  EXPECT_TRUE(c3.real);
  EXPECT_EQ(c3.size(), 8u);
  EXPECT_THROW(casimir_from_classes(T.group, T.classes, {99}), OutOfRange);
}

TEST(Casimir, EigenvalueExamples) {
  const auto& I = icosa();
  const Index id_class = I.table.class_of[I.group.identity()];
  const auto one = casimir_from_classes(I.group, I.classes, {id_class});
  const auto c10 = casimir_from_classes(I.group, I.classes, {class_with(I, 12, 10)});
  for (Index v = 0; v < I.table.irrep_count(); ++v) EXPECT_NEAR(std::abs(casimir_eigenvalue(one, v, I.table) - 1.0), 0, 1e-12);
  EXPECT_NEAR(casimir_eigenvalue(c10, 0, I.table).real(), 12.0, 1e-12);
  // A dim-4 irrep with chi = -1 on the order-10 class acts by -3.
  bool found = false;
  for (Index v = 0; v < I.table.irrep_count(); ++v) {
    if (I.table.irrep_dims[v] != 4) continue;
    if (std::abs(I.table.value(v, class_with(I, 12, 10)) - Complex(-1, 0)) > 1e-9) continue;
    EXPECT_NEAR(casimir_eigenvalue(c10, v, I.table).real(), -3.0, 1e-9);
    found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Subgroups, CyclicExamples) {
  const auto z6 = cyclic_subgroups_of_order(tetra().group, 6);
  ASSERT_FALSE(z6.empty());
  EXPECT_TRUE(z6.front().contains(tetra().group.find(-Quaternion::one())));
  EXPECT_EQ(z6.size(), 4u);
  EXPECT_FALSE(cyclic_subgroups_of_order(icosa().group, 10).empty());
  const auto trivial = cyclic_subgroups_of_order(octa().group, 1);
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_EQ(trivial.front().members, std::vector<Index>{octa().group.identity()});
  EXPECT_THROW(cyclic_subgroups_of_order(octa().group, 7), NoneFound);
  for (const auto& H : cyclic_subgroups_of_order(icosa().group, 10)) {
    EXPECT_EQ(H.order(), 10u);
    EXPECT_EQ(icosa().group.element_order(H.generator), 10u);
  }
}

TEST(Cosets, ExamplesAndAction) {
  const auto& T = tetra();
  const auto H = cyclic_subgroups_of_order(T.group, 6).front();
  const auto X = coset_space(T.group, H);
  EXPECT_EQ(X.size(), 4u);
  EXPECT_EQ(coset_space(octa().group, cyclic_subgroups_of_order(octa().group, 8).front()).size(), 6u);
  Subgroup all;
  all.members.resize(T.group.order());
  for (Index a = 0; a < T.group.order(); ++a) all.members[a] = a;
  EXPECT_EQ(coset_space(T.group, all).size(), 1u);

  for (Index x = 0; x < X.size(); ++x) EXPECT_EQ(X.representative(x), X.cosets()[x].front());
  for (Index g1 = 0; g1 < T.group.order(); ++g1)
    for (Index g2 = 0; g2 < T.group.order(); ++g2)
      for (Index x = 0; x < X.size(); ++x)
        ASSERT_EQ(X.act(T.group.multiply(g1, g2), x), X.act(g1, X.act(g2, x)));
  std::set<Index> orbit;
  for (Index g = 0; g < T.group.order(); ++g) orbit.insert(X.act(g, 0));
  EXPECT_EQ(orbit.size(), X.size());
}

TEST(CharacterTable, DimensionsAndOrthogonality) {
  const std::vector<std::pair<const GroupData*, std::vector<std::size_t>>> cases = {
      {&tetra(), {1, 1, 1, 2, 2, 2, 3}}, {&octa(), {1, 1, 2, 2, 2, 3, 3, 4}}, {&icosa(), {1, 2, 2, 3, 3, 4, 4, 5, 6}}};
  for (const auto& [G, dims] : cases) {
    const auto& t = G->table;
    EXPECT_EQ(t.irrep_dims, dims);
    std::size_t sum = 0;
    for (auto d : t.irrep_dims) sum += d * d;
    EXPECT_EQ(sum, G->group.order());
    const std::size_t k = t.irrep_count();
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_NEAR(std::abs(t.at_element(i, G->group.identity()) - Complex(t.irrep_dims[i], 0)), 0, 1e-9);
      const Complex at_minus = t.value(i, minus_one_class(*G));
      EXPECT_NEAR(std::abs(at_minus.real()), static_cast<double>(t.irrep_dims[i]), 1e-9);
      for (std::size_t j = 0; j < k; ++j) {
        Complex row = 0.0, col = 0.0;
        for (std::size_t s = 0; s < k; ++s) row += static_cast<double>(t.class_sizes[s]) * t.values[i][s] * std::conj(t.values[j][s]);
        for (std::size_t r = 0; r < k; ++r) col += t.values[r][i] * std::conj(t.values[r][j]);
        EXPECT_NEAR(std::abs(row / static_cast<double>(G->group.order()) - (i == j ? 1.0 : 0.0)), 0, 1e-9);
        const double expect = i == j ? static_cast<double>(G->group.order()) / static_cast<double>(t.class_sizes[i]) : 0.0;
        EXPECT_NEAR(std::abs(col - expect), 0, 1e-9);
      }
    }
  }
}

TEST(CharacterTable, IndependentOfSeed) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    std::mt19937_64 rng(seed);
    const auto t = character_table(octa().group, octa().classes, rng);
    EXPECT_EQ(t.irrep_dims, octa().table.irrep_dims);
    for (std::size_t i = 0; i < t.irrep_count(); ++i)
      for (std::size_t s = 0; s < t.irrep_count(); ++s) EXPECT_NEAR(std::abs(t.values[i][s] - octa().table.values[i][s]), 0, 1e-9);
  }
}

TEST(CharacterTable, TrivialGroup) {
  const auto G = generate_group({Quaternion::one()});
  std::mt19937_64 rng(1);
  const auto t = character_table(G, conjugacy_classes(G), rng);
  EXPECT_EQ(t.irrep_dims, std::vector<std::size_t>{1});
}

TEST(Induced, Examples) {
  const auto& I = icosa();
  const auto H = cyclic_subgroups_of_order(I.group, 6).front();
  std::size_t total = 0, dim4_twice = 0;
  for (const auto& p : induced_decomposition(I.group, H, {6, 0}, I.table)) {
    total += p.multiplicity * I.table.irrep_dims[p.irrep];
    if (I.table.irrep_dims[p.irrep] == 4 && p.multiplicity == 2) ++dim4_twice;
  }
  EXPECT_EQ(total, 20u);
  EXPECT_EQ(dim4_twice, 1u);

  const auto Ht = cyclic_subgroups_of_order(tetra().group, 6).front();
  for (long long k = 0; k < 6; ++k) {
    std::size_t dim = 0;
    for (const auto& p : induced_decomposition(tetra().group, Ht, {6, k}, tetra().table))
      dim += p.multiplicity * tetra().table.irrep_dims[p.irrep];
    EXPECT_EQ(dim, 4u);
  }

  const auto G = generate_group({Quaternion::i()});
  std::mt19937_64 rng(5);
  const auto t = character_table(G, conjugacy_classes(G), rng);
  const auto whole = cyclic_subgroups_of_order(G, 4).front();
  const auto parts = induced_decomposition(G, whole, {4, 0}, t);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts.front().multiplicity, 1u);
  EXPECT_EQ(parts.front().irrep, 0u);
  EXPECT_THROW(induced_decomposition(G, whole, {3, 0}, t), OutOfRange);
}

TEST(Induced, DimensionTwoWaysForEveryCharacter) {
  const std::vector<std::pair<const GroupData*, std::size_t>> pairs = {
      {&tetra(), 6}, {&octa(), 8}, {&octa(), 6}, {&icosa(), 10}, {&icosa(), 6}};
  for (const auto& [G, n] : pairs) {
    for (const auto& H : cyclic_subgroups_of_order(G->group, n)) {
      for (long long k = 0; k < static_cast<long long>(n); ++k) {
        std::size_t dim = 0;
        for (const auto& p : induced_decomposition(G->group, H, {n, k}, G->table)) dim += p.multiplicity * G->table.irrep_dims[p.irrep];
        ASSERT_EQ(dim, G->group.order() / n);
      }
    }
  }
}
