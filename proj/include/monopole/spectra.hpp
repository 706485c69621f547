#pragma once

// Spectra with multiplicities: numerical clustering, the representation
// theoretic route through Frobenius reciprocity, the continuum monopole
// spectrum, and comparison between routes.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/groups.hpp"
#include "monopole/linalg.hpp"

namespace monopole {

struct SpectrumLine {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

using Spectrum = std::vector<SpectrumLine>;

inline std::size_t total_multiplicity(const Spectrum& s) {
  std::size_t n = 0;
  for (const auto& l : s) n += l.multiplicity;
  return n;
}

inline std::string format_spectrum(const Spectrum& s, int precision = 6) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(precision);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ", ";
    os << "[" << (std::abs(s[i].value) < 0.5 * std::pow(10.0, -precision) ? 0.0 : s[i].value) << "]^"
       << s[i].multiplicity;
  }
  return os.str();
}

/// Merges sorted values whose consecutive gaps are at most tol; each line
/// carries the cluster mean. A gap in (tol, 10 tol] throws AmbiguousClustering.
inline Spectrum cluster_multiplicities(const std::vector<double>& values, double tol = 1e-7) {
  if (!(tol > 0)) throw OutOfRange("clustering tolerance must be positive");
  Spectrum out;
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      const double gap = values[i] - values[i - 1];
      if (gap < 0) throw OutOfRange("values are not sorted");
      if (gap > tol && gap <= 10 * tol)
        throw AmbiguousClustering("gap " + std::to_string(gap) + " is within a decade of the tolerance");
      if (gap > tol) {
        out.back().value = sum / static_cast<double>(out.back().multiplicity);
        out.push_back({values[i], 0});
        sum = 0.0;
      }
    } else {
      out.push_back({values[i], 0});
    }
    sum += values[i];
    ++out.back().multiplicity;
  }
  if (!out.empty()) out.back().value = sum / static_cast<double>(out.back().multiplicity);
  return out;
}

inline Spectrum numeric_spectrum(const HermitianMatrix& M, double tol = 1e-7) {
  return cluster_multiplicities(hermitian_eigenvalues(M), tol);
}

/// lambda -> scale * lambda + shift, re-sorted.
inline Spectrum affine_map(const Spectrum& s, double scale, double shift) {
  Spectrum out;
  for (const auto& l : s) out.push_back({scale * l.value + shift, l.multiplicity});
  std::sort(out.begin(), out.end(), [](const SpectrumLine& a, const SpectrumLine& b) { return a.value < b.value; });
  return out;
}

/// Laplacian spectrum d - lambda from an adjacency spectrum.
inline Spectrum laplacian_from_adjacency(const Spectrum& adjacency, double degree) {
  return affine_map(adjacency, -1.0, degree);
}

/// Sorts lines and merges those within tol of each other.
inline Spectrum merge_lines(Spectrum s, double tol = 1e-9) {
  std::sort(s.begin(), s.end(), [](const SpectrumLine& a, const SpectrumLine& b) { return a.value < b.value; });
  Spectrum out;
  for (const auto& l : s) {
    if (!out.empty() && std::abs(out.back().value - l.value) <= tol) out.back().multiplicity += l.multiplicity;
    else out.push_back(l);
  }
  return out;
}

struct FrobeniusTerm {
  Index irrep = 0;
  std::size_t dimension = 0;
  std::size_t multiplicity = 0;  // in the induced representation
  double casimir_value = 0.0;    // lambda_V
  double adjacency_value = 0.0;  // (lambda_V - q) / p
};

/// Decomposition of ind(rho) together with the eigenvalue of C on each part.
inline std::vector<FrobeniusTerm> frobenius_terms(const FiniteGroup& G, const Subgroup& H, const CyclicCharacter& rho,
                                                  const CasimirElement& C, const CharacterTable& table, double p,
                                                  double q) {
  if (!(p > 0)) throw DegenerateSum("p must be positive");
  std::vector<FrobeniusTerm> terms;
  for (const auto& part : induced_decomposition(G, H, rho, table)) {
    const Complex lambda = casimir_eigenvalue(C, part.irrep, table);
    if (C.real && std::abs(lambda.imag()) > 1e-9) throw Error("real Casimir element has a complex eigenvalue");
    terms.push_back({part.irrep, table.irrep_dims[part.irrep], part.multiplicity, lambda.real(),
                     (lambda.real() - q) / p});
  }
  return terms;
}

/// Adjacency spectrum of a good triple from characters alone: eigenvalue
/// (lambda_V - q) / p with multiplicity i_V dim V for each constituent V.
inline Spectrum frobenius_spectrum(const FiniteGroup& G, const Subgroup& H, const CyclicCharacter& rho,
                                   const CasimirElement& C, const CharacterTable& table, double p, double q) {
  Spectrum lines;
  for (const auto& t : frobenius_terms(G, H, rho, C, table, p, q))
    lines.push_back({t.adjacency_value, t.multiplicity * t.dimension});
  return merge_lines(std::move(lines), 1e-9);
}

struct WuYangLine {
  long long charge = 0;
  long long level = 0;
  double eigenvalue = 0.0;
  long long degeneracy = 0;
};

/// Continuum monopole levels l(l+1) + |q|(l + 1/2) with degeneracy 2l + |q| + 1.
inline std::vector<WuYangLine> wu_yang_spectrum(long long charge, long long l_max) {
  if (l_max < 0) throw OutOfRange("l_max must be non-negative");
  const long long aq = charge < 0 ? -charge : charge;
  std::vector<WuYangLine> out;
  for (long long l = 0; l <= l_max; ++l) {
    // Twice the eigenvalue is an integer, so the division is exact.
    const long long twice = 2 * l * (l + 1) + aq * (2 * l + 1);
    out.push_back({charge, l, static_cast<double>(twice) / 2.0, 2 * l + aq + 1});
  }
  return out;
}

struct CrossValidationReport {
  std::vector<double> deltas;  // per line
  double max_delta = 0.0;
  bool passed = false;
};

/// Compares two spectra line by line. Throws Mismatch naming the first
/// offending line; on success returns the per-line deltas.
inline CrossValidationReport cross_validate(const Spectrum& numeric, const Spectrum& algebraic, double tol) {
  if (total_multiplicity(numeric) != total_multiplicity(algebraic))
    throw Mismatch("total multiplicities " + std::to_string(total_multiplicity(numeric)) + " and " +
                   std::to_string(total_multiplicity(algebraic)));
  if (numeric.size() != algebraic.size())
    throw Mismatch("line counts differ: {" + format_spectrum(numeric) + "} vs {" + format_spectrum(algebraic) + "}");
  CrossValidationReport report;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    const double d = std::abs(numeric[i].value - algebraic[i].value);
    if (numeric[i].multiplicity != algebraic[i].multiplicity || d > tol) {
      std::ostringstream os;
      os.precision(12);
      os << "line " << i << ": [" << numeric[i].value << "]^" << numeric[i].multiplicity << " vs ["
         << algebraic[i].value << "]^" << algebraic[i].multiplicity;
      throw Mismatch(os.str());
    }
    report.deltas.push_back(d);
    report.max_delta = std::max(report.max_delta, d);
  }
  report.passed = true;
  return report;
}

}  // namespace monopole
