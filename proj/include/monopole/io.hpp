#pragma once

// JSON and DOT exports. Floats are rounded to 12 decimals so that output is
// stable byte for byte; nlohmann's object type keeps keys sorted.

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "monopole/algebra.hpp"
#include "monopole/errors.hpp"
#include "monopole/graph.hpp"
#include "monopole/magnetic.hpp"
#include "monopole/monopoles.hpp"
#include "monopole/spectra.hpp"

namespace monopole {

using Json = nlohmann::json;

inline double round12(double v) {
  const double r = std::round(v * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;  // no "-0.0"
}

inline Json rational_json(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  auto as_json = [](const BigInt& v) -> Json {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
      return v.convert_to<long long>();
    return v.str();
  };
  return Json::array({as_json(num), as_json(den)});
}

inline Json scalar_json(const AlgebraicScalar& x) {
  Json out = Json::array();
  for (const auto& c : x.coeffs()) out.push_back(rational_json(c));
  return out;
}

inline Json quaternion_json(const Quaternion& q) {
  return Json::array({scalar_json(q.w), scalar_json(q.x), scalar_json(q.y), scalar_json(q.z)});
}

inline Json complex_json(std::complex<double> z) { return Json::array({round12(z.real()), round12(z.imag())}); }

inline Json group_json(const GroupData& G) {
  Json classes = Json::array();
  for (const auto& c : G.classes)
    classes.push_back({{"size", c.members.size()},
                       {"element_order", c.element_order},
                       {"representative", quaternion_json(G.group.element(c.representative))}});
  return {{"name", group_name(G.kind)},
          {"order", G.group.order()},
          {"classes", classes},
          {"irrep_dims", G.table.irrep_dims}};
}

inline Json character_table_json(const CharacterTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.values) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(complex_json(v));
    rows.push_back(row);
  }
  return {{"irrep_dims", t.irrep_dims}, {"class_sizes", t.class_sizes}, {"values", rows}};
}

inline Json spectrum_json(const Spectrum& s, const std::string& method, double tolerance) {
  Json lines = Json::array();
  for (const auto& l : s) lines.push_back({{"value", round12(l.value)}, {"multiplicity", l.multiplicity}});
  return {{"lines", lines}, {"method", method}, {"tolerance", tolerance}};
}

inline Spectrum spectrum_from_json(const Json& j) {
  Spectrum s;
  for (const auto& l : j.at("lines")) s.push_back({l.at("value").get<double>(), l.at("multiplicity").get<std::size_t>()});
  return s;
}

inline Json matrix_json(const HermitianMatrix& M) {
  Json rows = Json::array();
  for (Index r = 0; r < M.size(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < M.size(); ++c) row.push_back(complex_json(M(r, c)));
    rows.push_back(row);
  }
  return {{"size", M.size()}, {"entries", rows}};
}

inline HermitianMatrix matrix_from_json(const Json& j) {
  HermitianMatrix M(j.at("size").get<std::size_t>());
  const auto& rows = j.at("entries");
  for (Index r = 0; r < M.size(); ++r)
    for (Index c = 0; c < M.size(); ++c)
      M(r, c) = {rows[r][c][0].get<double>(), rows[r][c][1].get<double>()};
  return M;
}

inline Json embedding_json(const PlanarEmbedding& e) {
  return {{"vertices", e.vertex_count()},
          {"edges", e.edge_count()},
          {"rotation", e.rotation},
          {"faces", e.faces},
          {"euler_characteristic", e.euler_characteristic()}};
}

/// Directed edge phases as angles in turns, (-1/2, 1/2].
inline Json potential_json(const MagneticPotential& P) {
  Json edges = Json::array();
  for (Index x = 0; x < P.size(); ++x)
    for (Index y = 0; y < P.size(); ++y)
      if (P.has_edge(x, y))
        edges.push_back({{"from", x}, {"to", y}, {"turns", round12(principal_angle(P.angle(x, y)) / (2 * std::numbers::pi))}});
  return {{"vertices", P.size()}, {"edges", edges}};
}

inline Json field_json(const FieldEntry& f, double tolerance) {
  Json j = {{"exponent", f.exponent}, {"status", status_name(f.status)}};
  if (f.status == FieldStatus::phase_power) j["power"] = f.power;
  if (f.status == FieldStatus::degenerate) {
    j["chern"] = nullptr;
    return j;
  }
  j["chern"] = *f.chern;
  j["p"] = round12(f.p);
  j["q"] = round12(f.q);
  j["adjacency_spectrum"] = spectrum_json(f.adjacency_spectrum, "numeric", tolerance);
  j["laplacian_spectrum"] = spectrum_json(f.laplacian_spectrum, "numeric", tolerance);
  if (f.frobenius_adjacency) {
    j["frobenius_adjacency_spectrum"] = spectrum_json(*f.frobenius_adjacency, "frobenius", tolerance);
    j["cross_validation_delta"] = round12(f.cross_validation_delta);
  }
  return j;
}

inline Json case_json(const MonopoleCase& c, double tolerance) {
  Json chars = Json::array();
  for (const auto& f : c.characters) chars.push_back(field_json(f, tolerance));
  Json derived = Json::array();
  for (const auto& f : c.derived) derived.push_back(field_json(f, tolerance));
  return {{"solid", std::string(solid_name(c.solid))},
          {"group", group_name(c.group->kind)},
          {"group_order", c.group->group.order()},
          {"subgroup_order", c.subgroup.order()},
          {"vertices", c.cosets.size()},
          {"degree", c.degree},
          {"faces", c.face_count()},
          {"good_triple", c.good_triple},
          {"casimir", {{"summands", c.casimir.size()}, {"class_ids", c.casimir.class_ids}}},
          {"chern_range", Json::array({c.chern_min(), c.chern_max()})},
          {"characters", chars},
          {"derived", derived}};
}

inline Json no_go_json(const NoGoCertificate& cert) {
  return {{"candidates", cert.search.candidates},
          {"inverse_closed", cert.search.inverse_closed},
          {"edge_transitive", cert.search.edge_transitive},
          {"dodecahedral_hits", cert.search.target_graphs},
          {"irrep", cert.irrep},
          {"irrep_dimension", cert.irrep_dimension},
          {"multiplicity", cert.multiplicity},
          {"implied_multiplicity", cert.implied_multiplicity},
          {"max_dodecahedral_multiplicity", cert.max_dodecahedral_multiplicity},
          {"dodecahedral_spectrum", spectrum_json(cert.dodecahedral_spectrum, "numeric", 1e-7)},
          {"confirmed", cert.search_confirms && cert.spectral_confirms}};
}

inline Json pentadodecahedral_json(const PentadodecahedralCase& pc, double tolerance) {
  Json chars = Json::array();
  for (std::size_t k = 0; k < pc.character_laplacian_spectra.size(); ++k)
    chars.push_back({{"exponent", k}, {"laplacian_spectrum", spectrum_json(pc.character_laplacian_spectra[k], "numeric", tolerance)}});
  return {{"vertices", pc.graph.vertex_count},
          {"summands", pc.casimir.size()},
          {"laplacian_spectrum", spectrum_json(pc.laplacian_spectrum, "numeric", tolerance)},
          {"frobenius_laplacian_spectrum", spectrum_json(pc.frobenius_laplacian, "frobenius", tolerance)},
          {"characters", chars}};
}

/// Graphviz; multigraph edges carry their multiplicity as an attribute.
inline std::string graph_dot(const CosetGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Index x = 0; x < g.vertex_count; ++x) os << "  " << x << ";\n";
  for (const auto& e : g.edges) os << "  " << e.x << " -- " << e.y << " [multiplicity=" << e.multiplicity << "];\n";
  os << "}\n";
  return os.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace monopole
