#pragma once

// Checks behind `monopole verify`: the reference spectra tables,
// gauge invariance and the zero-mode criterion, the dodecahedron certificate,
// the pentadodecahedral spectrum, and the continuum monopole levels.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monopole/magnetic.hpp"
#include "monopole/monopoles.hpp"
#include "monopole/reference.hpp"
#include "monopole/spectra.hpp"

namespace monopole {

struct CheckResult {
  std::string scope;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
  }
  bool passed() const { return failures() == 0; }
  void add(std::string scope, std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(scope), std::move(name), ok, std::move(detail)});
  }
  void append(const VerifyReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

namespace detail {

// Runs cross_validate and turns a Mismatch into a failed check.
inline void compare_spectra(VerifyReport& r, const std::string& scope, const std::string& name, const Spectrum& got,
                            const Spectrum& want, double tol) {
  try {
    const auto rep = cross_validate(got, want, tol);
    std::ostringstream os;
    os.precision(3);
    os << "max delta " << rep.max_delta;
    r.add(scope, name, true, os.str());
  } catch (const Mismatch& e) {
    r.add(scope, name, false, e.what());
  }
}

}  // namespace detail

/// Every row of every table, for each sign of the Chern number that lies in
/// the admissible range, through the numeric route and (where a character
/// gives the field) the Frobenius route.
inline VerifyReport verify_tables(const Catalog& cat, double tol = 1e-9) {
  VerifyReport r;
  for (const auto& mc : cat.cases) {
    const ReferenceTable& table = reference_table(mc.solid);
    for (const auto& row : table.rows) {
      for (long long c : {row.chern, -row.chern}) {
        if (c == -row.chern && (c == row.chern || c < mc.chern_min())) continue;
        const std::string label = std::string(solid_name(mc.solid)) + " chern " + std::to_string(c);
        const FieldEntry* f = nullptr;
        for (const auto& e : mc.characters)
          if (!f && e.chern && *e.chern == c) f = &e;
        for (const auto& e : mc.derived)
          if (!f && e.chern && *e.chern == c) f = &e;
        if (!f) {
          r.add("tables", label, false, "no field with this Chern number");
          continue;
        }
        detail::compare_spectra(r, "tables", label + " adjacency", f->adjacency_spectrum, row.adjacency, tol);
        detail::compare_spectra(r, "tables", label + " laplacian", f->laplacian_spectrum, row.laplacian, tol);
        if (f->frobenius_adjacency) {
          detail::compare_spectra(r, "tables", label + " adjacency (frobenius)", *f->frobenius_adjacency,
                                  row.adjacency, tol);
          detail::compare_spectra(r, "tables", label + " laplacian (frobenius)", *f->frobenius_laplacian,
                                  row.laplacian, tol);
        }
      }
    }
  }
  return r;
}

/// Random gauge transformations leave face fluxes and spectra unchanged; the
/// Laplacian has a zero mode exactly when every face flux vanishes.
inline VerifyReport verify_gauge(const Catalog& cat, std::uint64_t seed = kDefaultSeed, std::size_t trials = 100) {
  VerifyReport r;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (const auto& mc : cat.cases) {
    std::vector<const FieldEntry*> fields;
    for (const auto& f : mc.characters)
      if (f.status == FieldStatus::ok) fields.push_back(&f);
    for (const auto& f : mc.derived) fields.push_back(&f);
    double worst_flux = 0.0, worst_spec = 0.0;
    bool zero_mode_ok = true;
    for (const FieldEntry* f : fields) {
      const MagneticPotential P = MagneticPotential::from_adjacency(f->adjacency);
      std::vector<double> base;
      for (const auto& face : mc.embedding.faces) base.push_back(flux(P, face));
      for (std::size_t t = 0; t < trials; ++t) {
        std::vector<double> sigma(P.size());
        for (auto& s : sigma) s = angle(rng);
        const MagneticPotential Q = gauge_transform(P, sigma);
        for (std::size_t i = 0; i < base.size(); ++i) {
          const double d = std::abs(principal_angle(flux(Q, mc.embedding.faces[i]) - base[i]));
          worst_flux = std::max(worst_flux, d);
        }
        const Spectrum s = numeric_spectrum(Q.to_adjacency());
        if (s.size() != f->adjacency_spectrum.size()) {
          worst_spec = INFINITY;
          continue;
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (s[i].multiplicity != f->adjacency_spectrum[i].multiplicity) worst_spec = INFINITY;
          worst_spec = std::max(worst_spec, std::abs(s[i].value - f->adjacency_spectrum[i].value));
        }
      }
      bool flat = true;
      for (double b : base) flat = flat && std::abs(b) <= 1e-9;
      const bool zero_mode = std::abs(f->laplacian_spectrum.front().value) <= 1e-9;
      zero_mode_ok = zero_mode_ok && (flat == zero_mode);
    }
    const std::string solid(solid_name(mc.solid));
    std::ostringstream fl, sp;
    fl.precision(3);
    sp.precision(3);
    fl << fields.size() << " fields x " << trials << " gauges, max flux change " << worst_flux;
    sp << "max eigenvalue change " << worst_spec;
    r.add("gauge", solid + " flux invariance", worst_flux <= 1e-12, fl.str());
    r.add("gauge", solid + " spectral invariance", worst_spec <= 1e-10, sp.str());
    r.add("gauge", solid + " zero mode iff flat", zero_mode_ok);
  }
  return r;
}

inline VerifyReport verify_no_go(const Catalog& cat) {
  VerifyReport r;
  try {
    const NoGoCertificate cert = dodecahedron_no_go(cat.binary_icosahedral);
    std::ostringstream search, spectral;
    search << cert.search.candidates << " candidates, " << cert.search.inverse_closed << " inverse-closed, "
           << cert.search.target_graphs << " produce the dodecahedral graph";
    spectral << "dim-" << cert.irrep_dimension << " irrep with multiplicity " << cert.multiplicity
             << " forces multiplicity " << cert.implied_multiplicity << " > "
             << cert.max_dodecahedral_multiplicity;
    r.add("nogo", "exhaustive search", cert.search_confirms && cert.search.candidates == 255, search.str());
    r.add("nogo", "multiplicity argument", cert.spectral_confirms, spectral.str());
    detail::compare_spectra(r, "nogo", "dodecahedral adjacency spectrum", cert.dodecahedral_spectrum,
                            reference_dodecahedral_spectrum(), 1e-9);
  } catch (const CertificateFailed& e) {
    r.add("nogo", "certificate", false, e.what());
  }
  return r;
}

inline VerifyReport verify_penta(const Catalog& cat, double tol = 1e-9) {
  VerifyReport r;
  const PentadodecahedralCase pc = pentadodecahedral_case(cat.at(Solid::icosahedron));
  r.add("penta", "20 vertices", pc.graph.vertex_count == 20);
  bool degrees = true;
  for (Index x = 0; x < pc.graph.vertex_count; ++x) degrees = degrees && pc.graph.weighted_degree(x) == 12;
  r.add("penta", "edge multiplicity 12 at every vertex", degrees);
  detail::compare_spectra(r, "penta", "laplacian spectrum", pc.laplacian_spectrum, reference_pentadodecahedral_spectrum(), tol);
  detail::compare_spectra(r, "penta", "laplacian spectrum (frobenius)", pc.frobenius_laplacian,
                          reference_pentadodecahedral_spectrum(), tol);
  std::size_t copies = 0;
  for (const auto& t : pc.terms)
    if (t.dimension == 4 && std::abs(12.0 - t.casimir_value - 15.0) <= tol) copies += t.multiplicity;
  r.add("penta", "eigenvalue 15 from two copies of a dim-4 irrep", copies == 2,
        std::to_string(copies) + " copies");
  return r;
}

/// Levels from the Casimir of V_k, k = 2l + |q|: k(k+2)/4 - q^2/4 on a space
/// of dimension k + 1, compared with the closed formula.
inline VerifyReport verify_wu_yang(long long q_max = 5, long long l_max = 10, std::optional<long long> only_q = {}) {
  VerifyReport r;
  const long long q_lo = only_q ? *only_q : 0;
  const long long q_hi = only_q ? *only_q : q_max;
  for (long long q = q_lo; q <= q_hi; ++q) {
    const auto lines = wu_yang_spectrum(q, l_max);
    bool ok = lines.size() == static_cast<std::size_t>(l_max + 1);
    std::ostringstream degs;
    for (const auto& l : lines) {
      const long long k = 2 * l.level + std::abs(q);
      const long long four_lambda = k * (k + 2) - q * q;
      ok = ok && 4.0 * l.eigenvalue == static_cast<double>(four_lambda) && l.degeneracy == k + 1;
      degs << (l.level ? "," : "") << l.degeneracy;
    }
    r.add("wuyang", "q=" + std::to_string(q) + " l<=" + std::to_string(l_max), ok, "degeneracies " + degs.str());
  }
  return r;
}

}  // namespace monopole
