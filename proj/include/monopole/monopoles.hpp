#pragma once

// The monopole catalog: one good triple per Platonic solid (the dodecahedron
// excepted), every character of the vertex stabiliser, the no-go certificate
// for the dodecahedron and the pentadodecahedral multigraph.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/graph.hpp"
#include "monopole/groups.hpp"
#include "monopole/magnetic.hpp"
#include "monopole/spectra.hpp"

namespace monopole {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

enum class GroupKind { binary_tetrahedral, binary_octahedral, binary_icosahedral };

inline std::string group_name(GroupKind k) {
  switch (k) {
    case GroupKind::binary_tetrahedral: return "2T";
    case GroupKind::binary_octahedral: return "2O";
    case GroupKind::binary_icosahedral: return "2I";
  }
  return "?";
}

/// A generated group with its classes and character table.
struct GroupData {
  GroupKind kind{};
  FiniteGroup group;
  std::vector<ConjClass> classes;
  CharacterTable table;
};

inline std::shared_ptr<const GroupData> make_group_data(GroupKind kind, std::uint64_t seed = kDefaultSeed) {
  auto data = std::make_shared<GroupData>();
  data->kind = kind;
  std::size_t expected = 0;
  switch (kind) {
    case GroupKind::binary_tetrahedral:
      data->group = generate_group(binary_tetrahedral_generators());
      expected = 24;
      break;
    case GroupKind::binary_octahedral:
      data->group = generate_group(binary_octahedral_generators());
      expected = 48;
      break;
    case GroupKind::binary_icosahedral:
      data->group = generate_group(binary_icosahedral_generators());
      expected = 120;
      break;
  }
  if (data->group.order() != expected)
    throw CatalogInconsistent(group_name(kind) + " closed with " + std::to_string(data->group.order()) + " elements");
  data->classes = conjugacy_classes(data->group);
  std::mt19937_64 rng(seed);
  data->table = character_table(data->group, data->classes, rng);
  return data;
}

/// Outcome of enumerating inverse-closed unions of non-trivial classes.
struct CasimirSearch {
  std::size_t candidates = 0;        // non-empty unions examined
  std::size_t inverse_closed = 0;
  std::size_t edge_transitive = 0;   // good triples with d >= 1
  std::size_t target_graphs = 0;     // simple graph isomorphic to the target, transitive or not
  std::vector<CasimirElement> good;  // good triples matching the target (if any)
};

inline CasimirSearch search_casimirs(const GroupData& G, const CosetSpace& cosets,
                                     const std::optional<SimpleGraph>& target) {
  std::vector<Index> nontrivial;
  const Index identity_class = G.table.class_of[G.group.identity()];
  for (Index c = 0; c < G.classes.size(); ++c)
    if (c != identity_class) nontrivial.push_back(c);

  CasimirSearch out;
  const std::uint64_t subsets = std::uint64_t{1} << nontrivial.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    ++out.candidates;
    std::vector<Index> ids;
    for (std::size_t b = 0; b < nontrivial.size(); ++b)
      if (mask >> b & 1U) ids.push_back(nontrivial[b]);
    CasimirElement C = casimir_from_classes(G.group, G.classes, ids);
    if (!C.real) continue;
    ++out.inverse_closed;
    const CosetGraph graph = build_graph(cosets, C, GraphMode::simple);
    const SimpleGraph simple = graph.simple();
    const bool matches = !target || graph_isomorphic(simple, *target);
    if (target && matches) ++out.target_graphs;
    const auto d = graph.regular_degree();
    if (!d || *d == 0 || !is_good_triple(cosets, graph)) continue;
    ++out.edge_transitive;
    if (matches) out.good.push_back(std::move(C));
  }
  return out;
}

/// All inverse-closed unions of non-trivial classes giving an edge-transitive
/// regular graph of positive degree, optionally isomorphic to `target`.
inline std::vector<CasimirElement> find_good_casimirs(const GroupData& G, const CosetSpace& cosets,
                                                      const std::optional<SimpleGraph>& target = std::nullopt) {
  return search_casimirs(G, cosets, target).good;
}

enum class FieldStatus { ok, degenerate, phase_power };

inline std::string status_name(FieldStatus s) {
  switch (s) {
    case FieldStatus::ok: return "ok";
    case FieldStatus::degenerate: return "degenerate";
    case FieldStatus::phase_power: return "phase_power";
  }
  return "?";
}

/// One invariant magnetic field on a case's graph.
struct FieldEntry {
  long long exponent = 0;  // character exponent (of the base character for phase powers)
  long long power = 1;     // phase power applied to the base field
  FieldStatus status = FieldStatus::ok;
  std::optional<long long> chern;
  double p = 0.0;
  double q = 0.0;
  HermitianMatrix adjacency;
  Spectrum adjacency_spectrum;   // numeric
  Spectrum laplacian_spectrum;   // numeric
  std::optional<Spectrum> frobenius_adjacency;
  std::optional<Spectrum> frobenius_laplacian;
  std::vector<FrobeniusTerm> frobenius_terms;
  double cross_validation_delta = 0.0;
};

struct MonopoleCase {
  Solid solid{};
  std::shared_ptr<const GroupData> group;
  Subgroup subgroup;
  CosetSpace cosets;
  CasimirElement casimir;
  CosetGraph graph;
  PlanarEmbedding embedding;
  std::size_t degree = 0;
  bool good_triple = false;
  std::vector<FieldEntry> characters;  // exponent 0 .. |H|-1
  std::vector<FieldEntry> derived;     // phase powers for Chern values no character reaches

  std::size_t face_count() const { return embedding.faces.size(); }
  /// Chern numbers admissible for invariant fields: (-F/2, F/2].
  long long chern_min() const { return -static_cast<long long>(face_count() - 1) / 2; }
  long long chern_max() const { return static_cast<long long>(face_count()) / 2; }

  /// Field with the given Chern number; falls back to -chern (the sign depends
  /// on orientation). Character fields are preferred over phase powers.
  const FieldEntry* find_chern(long long c) const {
    for (long long target : {c, -c}) {
      for (const auto& f : characters)
        if (f.chern && *f.chern == target) return &f;
      for (const auto& f : derived)
        if (f.chern && *f.chern == target) return &f;
    }
    return nullptr;
  }
};

struct CaseOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t subgroup_choice = 0;  // index into cyclic_subgroups_of_order
  double tolerance = 1e-9;
};

namespace detail {

inline std::size_t subgroup_order_for(Solid s) {
  switch (s) {
    case Solid::tetrahedron: return 6;
    case Solid::octahedron: return 8;
    case Solid::cube: return 6;
    case Solid::icosahedron: return 10;
    case Solid::dodecahedron: return 6;
  }
  return 1;
}

inline GroupKind group_for(Solid s) {
  switch (s) {
    case Solid::tetrahedron: return GroupKind::binary_tetrahedral;
    case Solid::octahedron:
    case Solid::cube: return GroupKind::binary_octahedral;
    case Solid::icosahedron:
    case Solid::dodecahedron: return GroupKind::binary_icosahedral;
  }
  return GroupKind::binary_tetrahedral;
}

// Preference among good Casimirs for a target: no central summands (they only
// shift the diagonal), summands that fix a coset (rotations about vertex axes),
// then fewest summands, then largest element order, then class ids.
inline const CasimirElement& preferred_casimir(const GroupData& G, const CosetSpace& cosets,
                                               const std::vector<CasimirElement>& good) {
  auto key = [&](const CasimirElement& C) {
    const CosetGraph g = build_graph(cosets, C, GraphMode::simple);
    std::size_t max_order = 0;
    bool central = false;
    for (Index a : C.summands) max_order = std::max(max_order, G.group.element_order(a));
    for (Index id : C.class_ids) central = central || G.classes[id].members.size() == 1;
    return std::tuple(central, g.loops[0] == 0, C.size(), -static_cast<long long>(max_order), C.class_ids);
  };
  return *std::min_element(good.begin(), good.end(),
                           [&](const CasimirElement& a, const CasimirElement& b) { return key(a) < key(b); });
}

inline void fill_spectra(FieldEntry& f, std::size_t degree) {
  f.adjacency_spectrum = numeric_spectrum(f.adjacency);
  f.laplacian_spectrum = numeric_spectrum(magnetic_laplacian(f.adjacency, static_cast<double>(degree)));
}

}  // namespace detail

/// Builds the case for one solid. For the cube the Casimir element is the
/// octahedral one; for the others it is found by search against the solid's
/// skeleton.
inline MonopoleCase build_case(Solid solid, std::shared_ptr<const GroupData> group, const CaseOptions& opt = {}) {
  if (solid == Solid::dodecahedron) throw CatalogInconsistent("no good triple produces the dodecahedron");
  MonopoleCase mc;
  mc.solid = solid;
  mc.group = std::move(group);
  const GroupData& G = *mc.group;
  const auto subgroups = cyclic_subgroups_of_order(G.group, detail::subgroup_order_for(solid));
  if (opt.subgroup_choice >= subgroups.size()) throw OutOfRange("subgroup choice");
  mc.subgroup = subgroups[opt.subgroup_choice];
  mc.cosets = coset_space(G.group, mc.subgroup);

  if (solid == Solid::cube) {
    const auto octa_subgroups = cyclic_subgroups_of_order(G.group, 8);
    const CosetSpace octa_cosets = coset_space(G.group, octa_subgroups.front());
    const auto good = find_good_casimirs(G, octa_cosets, reference_skeleton(Solid::octahedron));
    if (good.empty()) throw CatalogInconsistent("no octahedral Casimir element");
    mc.casimir = detail::preferred_casimir(G, octa_cosets, good);
  } else {
    const auto good = find_good_casimirs(G, mc.cosets, reference_skeleton(solid));
    if (good.empty()) throw CatalogInconsistent("no Casimir element for the " + std::string(solid_name(solid)));
    mc.casimir = detail::preferred_casimir(G, mc.cosets, good);
  }

  mc.graph = build_graph(mc.cosets, mc.casimir, GraphMode::simple);
  mc.good_triple = is_good_triple(mc.cosets, mc.graph);
  if (!mc.good_triple) throw CatalogInconsistent(std::string(solid_name(solid)) + " triple is not edge-transitive");
  const auto degree = mc.graph.regular_degree();
  if (!degree) throw CatalogInconsistent("coset graph is not regular");
  mc.degree = *degree;
  mc.embedding = attach_embedding(mc.graph, solid);

  const std::size_t n = mc.subgroup.order();
  for (std::size_t k = 0; k < n; ++k) {
    FieldEntry f;
    f.exponent = static_cast<long long>(k);
    const CyclicCharacter rho{n, f.exponent};
    const InducedCasimirMatrix cm = induced_casimir_matrix(G.group, mc.subgroup, rho, mc.casimir, mc.cosets);
    f.p = cm.p;
    f.q = cm.q;
    if (cm.p <= 0.0) {
      f.status = FieldStatus::degenerate;
      mc.characters.push_back(std::move(f));
      continue;
    }
    f.adjacency = magnetic_adjacency(cm);
    f.chern = chern_number(MagneticPotential::from_adjacency(f.adjacency), mc.embedding);
    detail::fill_spectra(f, mc.degree);
    f.frobenius_terms = frobenius_terms(G.group, mc.subgroup, rho, mc.casimir, G.table, cm.p, cm.q);
    f.frobenius_adjacency = frobenius_spectrum(G.group, mc.subgroup, rho, mc.casimir, G.table, cm.p, cm.q);
    f.frobenius_laplacian = laplacian_from_adjacency(*f.frobenius_adjacency, static_cast<double>(mc.degree));
    try {
      f.cross_validation_delta = cross_validate(f.adjacency_spectrum, *f.frobenius_adjacency, opt.tolerance).max_delta;
    } catch (const Mismatch& e) {
      throw CatalogInconsistent(std::string(solid_name(solid)) + " character " + std::to_string(k) + ": " + e.what());
    }
    mc.characters.push_back(std::move(f));
  }

  // Chern values no character reaches come from entrywise powers of the
  // Chern +1 field.
  const FieldEntry* base = nullptr;
  for (const auto& f : mc.characters)
    if (f.chern && *f.chern == 1) base = &f;
  for (long long c = mc.chern_min(); c <= mc.chern_max(); ++c) {
    bool reached = false;
    for (const auto& f : mc.characters) reached = reached || (f.chern && *f.chern == c);
    if (reached) continue;
    if (!base) {
      std::string seen;
      for (const auto& f : mc.characters) seen += " " + (f.chern ? std::to_string(*f.chern) : std::string("-"));
      throw CatalogInconsistent(std::string(solid_name(solid)) + ": no Chern +1 field to raise to power " +
                                std::to_string(c) + " (characters give" + seen + ")");
    }
    FieldEntry f;
    f.exponent = base->exponent;
    f.power = c;
    f.status = FieldStatus::phase_power;
    f.adjacency = phase_power(base->adjacency, c);
    f.chern = chern_number(MagneticPotential::from_adjacency(f.adjacency), mc.embedding);
    if (*f.chern != c)
      throw CatalogInconsistent("phase power " + std::to_string(c) + " has Chern number " + std::to_string(*f.chern));
    detail::fill_spectra(f, mc.degree);
    mc.derived.push_back(std::move(f));
  }
  return mc;
}

struct Catalog {
  std::shared_ptr<const GroupData> binary_tetrahedral;
  std::shared_ptr<const GroupData> binary_octahedral;
  std::shared_ptr<const GroupData> binary_icosahedral;
  std::vector<MonopoleCase> cases;  // tetrahedron, octahedron, cube, icosahedron

  const MonopoleCase& at(Solid s) const {
    for (const auto& c : cases)
      if (c.solid == s) return c;
    throw OutOfRange(std::string(solid_name(s)) + " is not in the catalog");
  }
};

inline Catalog build_catalog(std::uint64_t seed = kDefaultSeed) {
  Catalog cat;
  cat.binary_tetrahedral = make_group_data(GroupKind::binary_tetrahedral, seed);
  cat.binary_octahedral = make_group_data(GroupKind::binary_octahedral, seed);
  cat.binary_icosahedral = make_group_data(GroupKind::binary_icosahedral, seed);
  CaseOptions opt;
  opt.seed = seed;
  cat.cases.push_back(build_case(Solid::tetrahedron, cat.binary_tetrahedral, opt));
  cat.cases.push_back(build_case(Solid::octahedron, cat.binary_octahedral, opt));
  cat.cases.push_back(build_case(Solid::cube, cat.binary_octahedral, opt));
  cat.cases.push_back(build_case(Solid::icosahedron, cat.binary_icosahedral, opt));
  return cat;
}

/// Why no good triple (2I, Z_6, C) yields the dodecahedron.
struct NoGoCertificate {
  CasimirSearch search;                // against the dodecahedral skeleton
  Index irrep = 0;                     // dim-4 irreducible repeated in ind(trivial)
  std::size_t irrep_dimension = 0;
  std::size_t multiplicity = 0;        // in ind(trivial)
  std::size_t implied_multiplicity = 0;
  Spectrum dodecahedral_spectrum;      // adjacency, reference skeleton
  std::size_t max_dodecahedral_multiplicity = 0;
  bool search_confirms = false;
  bool spectral_confirms = false;
};

inline NoGoCertificate dodecahedron_no_go(const std::shared_ptr<const GroupData>& icosahedral) {
  const GroupData& G = *icosahedral;
  const Subgroup H = cyclic_subgroups_of_order(G.group, 6).front();
  const CosetSpace cosets = coset_space(G.group, H);
  const SimpleGraph dodeca = reference_skeleton(Solid::dodecahedron);

  NoGoCertificate cert;
  cert.search = search_casimirs(G, cosets, dodeca);
  cert.search_confirms = cert.search.good.empty() && cert.search.target_graphs == 0;

  for (const auto& part : induced_decomposition(G.group, H, CyclicCharacter{6, 0}, G.table)) {
    if (G.table.irrep_dims[part.irrep] == 4 && part.multiplicity >= 2) {
      cert.irrep = part.irrep;
      cert.irrep_dimension = 4;
      cert.multiplicity = part.multiplicity;
      cert.implied_multiplicity = part.multiplicity * 4;
    }
  }
  HermitianMatrix A(dodeca.vertex_count());
  for (Index x = 0; x < dodeca.vertex_count(); ++x)
    for (Index y : dodeca.adjacency[x]) A(x, y) = 1.0;
  cert.dodecahedral_spectrum = numeric_spectrum(A);
  for (const auto& l : cert.dodecahedral_spectrum)
    cert.max_dodecahedral_multiplicity = std::max(cert.max_dodecahedral_multiplicity, l.multiplicity);
  cert.spectral_confirms = cert.implied_multiplicity > cert.max_dodecahedral_multiplicity;
  if (!cert.search_confirms || !cert.spectral_confirms)
    throw CertificateFailed(cert.search_confirms ? "spectral branch did not confirm" : "search found a candidate");
  return cert;
}

inline NoGoCertificate dodecahedron_no_go(std::uint64_t seed = kDefaultSeed) {
  return dodecahedron_no_go(make_group_data(GroupKind::binary_icosahedral, seed));
}

/// The multigraph from (2I, Z_6, icosahedral C) with L = s I - C_rho.
struct PentadodecahedralCase {
  CasimirElement casimir;
  Subgroup subgroup;
  CosetGraph graph;  // multi mode
  HermitianMatrix casimir_matrix;      // trivial character
  HermitianMatrix laplacian;
  Spectrum laplacian_spectrum;         // numeric
  Spectrum frobenius_laplacian;
  std::vector<FrobeniusTerm> terms;    // casimir_value = lambda_V, adjacency_value unused
  // Spectra of s I - C_rho for every character of Z_6 (exported, not asserted).
  std::vector<Spectrum> character_laplacian_spectra;
};

inline PentadodecahedralCase pentadodecahedral_case(const MonopoleCase& icosahedron) {
  if (icosahedron.solid != Solid::icosahedron) throw OutOfRange("needs the icosahedral case");
  const GroupData& G = *icosahedron.group;
  PentadodecahedralCase pc;
  pc.casimir = icosahedron.casimir;
  pc.subgroup = cyclic_subgroups_of_order(G.group, 6).front();
  const CosetSpace cosets = coset_space(G.group, pc.subgroup);
  pc.graph = build_graph(cosets, pc.casimir, GraphMode::multi);
  const double s = static_cast<double>(pc.casimir.size());

  for (long long k = 0; k < 6; ++k) {
    const HermitianMatrix C = casimir_representation(G.group, pc.subgroup, CyclicCharacter{6, k}, pc.casimir, cosets);
    HermitianMatrix L = HermitianMatrix::identity(C.size());
    L *= s;
    L -= C;
    pc.character_laplacian_spectra.push_back(numeric_spectrum(L));
    if (k == 0) {
      pc.casimir_matrix = C;
      pc.laplacian = L;
      pc.laplacian_spectrum = pc.character_laplacian_spectra.back();
    }
  }
  pc.terms = frobenius_terms(G.group, pc.subgroup, CyclicCharacter{6, 0}, pc.casimir, G.table, 1.0, 0.0);
  Spectrum lines;
  for (const auto& t : pc.terms) lines.push_back({s - t.casimir_value, t.multiplicity * t.dimension});
  pc.frobenius_laplacian = merge_lines(std::move(lines), 1e-9);
  return pc;
}

}  // namespace monopole
