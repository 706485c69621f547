#pragma once

// Invariant magnetic potentials on coset graphs: the matrix of a Casimir
// element in an induced representation, the U(1) edge phases it defines,
// gauge transformations, cycle fluxes and discrete Chern numbers.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "monopole/errors.hpp"
#include "monopole/graph.hpp"
#include "monopole/groups.hpp"
#include "monopole/linalg.hpp"

namespace monopole {

/// U(1) phases on the directed edges of a graph, stored as angles.
/// phase(x, y) is the entry A(x, y) of the magnetic adjacency matrix.
class MagneticPotential {
 public:
  MagneticPotential() = default;
  explicit MagneticPotential(std::size_t n) : n_(n), angle_(n * n, 0.0), edge_(n * n, false) {}

  /// Reads phases off the off-diagonal entries of a unit-modulus matrix.
  static MagneticPotential from_adjacency(const HermitianMatrix& A, double tol = 1e-9) {
    MagneticPotential P(A.size());
    for (Index x = 0; x < A.size(); ++x)
      for (Index y = 0; y < A.size(); ++y) {
        if (x == y || std::abs(A(x, y)) < tol) continue;
        if (std::abs(std::abs(A(x, y)) - 1.0) > tol)
          throw Error("adjacency entry (" + std::to_string(x) + "," + std::to_string(y) + ") is not a unit phase");
        P.set(x, y, std::arg(A(x, y)));
      }
    return P;
  }

  std::size_t size() const { return n_; }
  bool has_edge(Index x, Index y) const { return edge_[x * n_ + y]; }
  double angle(Index x, Index y) const { return angle_[x * n_ + y]; }
  std::complex<double> phase(Index x, Index y) const { return std::polar(1.0, angle(x, y)); }

  void set(Index x, Index y, double alpha) {
    angle_[x * n_ + y] = alpha;
    edge_[x * n_ + y] = true;
  }

  HermitianMatrix to_adjacency() const {
    HermitianMatrix A(n_);
    for (Index x = 0; x < n_; ++x)
      for (Index y = 0; y < n_; ++y)
        if (has_edge(x, y)) A(x, y) = phase(x, y);
    return A;
  }

  /// max |phase(x,y) phase(y,x) - 1| over edges; infinity if an edge is one-way.
  double antisymmetry_defect() const {
    double d = 0.0;
    for (Index x = 0; x < n_; ++x)
      for (Index y = 0; y < n_; ++y) {
        if (!has_edge(x, y)) continue;
        if (!has_edge(y, x)) return INFINITY;
        d = std::max(d, std::abs(phase(x, y) * phase(y, x) - 1.0));
      }
    return d;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> angle_;
  std::vector<bool> edge_;
};

/// Matrix of a Casimir element in ind_H^G(rho), with its diagonal value q and
/// the common modulus p of its off-diagonal entries on graph edges.
struct InducedCasimirMatrix {
  HermitianMatrix matrix;
  double p = 0.0;
  double q = 0.0;
  SimpleGraph graph;  // positions where some summand maps one coset to another
};

/// Entry (y, x) is the sum of rho(h) over summands c with c g_x = g_y h.
inline HermitianMatrix casimir_representation(const FiniteGroup& G, const Subgroup& H, const CyclicCharacter& rho,
                                              const CasimirElement& C, const CosetSpace& cosets) {
  if (rho.order != H.order()) throw OutOfRange("character order does not match subgroup order");
  HermitianMatrix M(cosets.size());
  for (Index x = 0; x < cosets.size(); ++x) {
    const Index gx = cosets.representative(x);
    for (Index c : C.summands) {
      const Index cgx = G.multiply(c, gx);
      const Index y = cosets.coset_of(cgx);
      const Index h = G.multiply(G.inverse(cosets.representative(y)), cgx);
      M(y, x) += rho(H, h);
    }
  }
  return M;
}

/// Builds C_rho for a good triple and extracts p and q. Throws
/// NonConstantModulus when the diagonal is not constant or the edge entries do
/// not share a modulus. A degenerate character yields p == 0.
inline InducedCasimirMatrix induced_casimir_matrix(const FiniteGroup& G, const Subgroup& H, const CyclicCharacter& rho,
                                                   const CasimirElement& C, const CosetSpace& cosets) {
  if (!C.real) throw Error("induced Casimir matrix needs an inverse-closed Casimir element");
  InducedCasimirMatrix out;
  out.matrix = casimir_representation(G, H, rho, C, cosets);
  out.graph = build_graph(cosets, C, GraphMode::simple).simple();
  const std::size_t n = cosets.size();
  const auto q = out.matrix(0, 0);
  if (std::abs(q.imag()) > 1e-9) throw NonConstantModulus("diagonal is not real");
  for (Index x = 0; x < n; ++x)
    if (std::abs(out.matrix(x, x) - q) > 1e-9) throw NonConstantModulus("diagonal is not constant");
  out.q = q.real();
  bool first = true;
  for (Index x = 0; x < n; ++x)
    for (Index y : out.graph.adjacency[x]) {
      const double m = std::abs(out.matrix(x, y));
      if (first) {
        out.p = m;
        first = false;
      } else if (std::abs(m - out.p) > 1e-9) {
        throw NonConstantModulus("edge moduli " + std::to_string(out.p) + " and " + std::to_string(m));
      }
    }
  if (out.p < 1e-9) out.p = 0.0;
  return out;
}

/// A = (C_rho - q I) / p. Throws DegenerateSum when p vanishes.
inline HermitianMatrix magnetic_adjacency(const InducedCasimirMatrix& cm) {
  if (cm.p <= 0.0) throw DegenerateSum("edge phase sum vanishes for this character");
  HermitianMatrix A = cm.matrix;
  for (Index x = 0; x < A.size(); ++x) A(x, x) -= cm.q;
  A *= 1.0 / cm.p;
  for (Index x = 0; x < A.size(); ++x)
    for (Index y = 0; y < A.size(); ++y)
      if (x != y && !cm.graph.adjacent(x, y)) A(x, y) = 0.0;
  return A;
}

inline MagneticPotential magnetic_potential(const InducedCasimirMatrix& cm) {
  return MagneticPotential::from_adjacency(magnetic_adjacency(cm));
}

/// Replaces every unit phase off the diagonal by its m-th power.
inline HermitianMatrix phase_power(const HermitianMatrix& A, long long m) {
  HermitianMatrix out(A.size());
  for (Index x = 0; x < A.size(); ++x)
    for (Index y = 0; y < A.size(); ++y) {
      if (x == y) {
        out(x, y) = A(x, y);
        continue;
      }
      const double mod = std::abs(A(x, y));
      if (mod < 1e-9) continue;
      if (std::abs(mod - 1.0) > 1e-9) throw Error("phase_power needs unit-modulus off-diagonal entries");
      out(x, y) = std::polar(1.0, static_cast<double>(m) * std::arg(A(x, y)));
    }
  return out;
}

/// L = d I - A.
inline HermitianMatrix magnetic_laplacian(const HermitianMatrix& A, double degree) {
  HermitianMatrix L = HermitianMatrix::identity(A.size());
  L *= degree;
  return L - A;
}

/// alpha_xy -> alpha_xy + sigma_y - sigma_x.
inline MagneticPotential gauge_transform(const MagneticPotential& P, const std::vector<double>& sigma) {
  if (sigma.size() != P.size()) throw OutOfRange("gauge function has wrong length");
  MagneticPotential out(P.size());
  for (Index x = 0; x < P.size(); ++x)
    for (Index y = 0; y < P.size(); ++y)
      if (P.has_edge(x, y)) out.set(x, y, P.angle(x, y) + sigma[y] - sigma[x]);
  return out;
}

/// Reduces an angle to (-pi, pi]; values within 1e-9 of -pi map to +pi.
inline double principal_angle(double alpha) {
  double r = std::remainder(alpha, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi + 1e-9) r += 2.0 * std::numbers::pi;
  return r;
}

/// Sum of edge angles around a closed walk, before reduction. The cycle is
/// given by its vertices; the closing edge back to the first vertex is
/// implied (a repeated first vertex at the end is accepted).
inline double unreduced_flux(const MagneticPotential& P, std::vector<Index> cycle) {
  if (cycle.size() >= 2 && cycle.front() == cycle.back()) cycle.pop_back();
  if (cycle.size() < 3) throw NotACycle("a cycle needs at least three vertices");
  double sum = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Index x = cycle[i];
    const Index y = cycle[(i + 1) % cycle.size()];
    if (x >= P.size() || y >= P.size() || !P.has_edge(x, y))
      throw NotACycle("no edge between " + std::to_string(x) + " and " + std::to_string(y));
    sum += P.angle(x, y);
  }
  return sum;
}

/// Flux through a cycle, in (-pi, pi].
inline double flux(const MagneticPotential& P, const std::vector<Index>& cycle) {
  return principal_angle(unreduced_flux(P, cycle));
}

/// (1 / 2 pi) * sum of face fluxes. Throws NonIntegerChern if the sum is not
/// within 1e-9 of an integer.
inline long long chern_number(const MagneticPotential& P, const PlanarEmbedding& emb) {
  double total = 0.0;
  for (const auto& face : emb.faces) total += flux(P, face);
  const double c = total / (2.0 * std::numbers::pi);
  const double r = std::round(c);
  if (std::abs(c - r) > 1e-9) throw NonIntegerChern("face fluxes sum to " + std::to_string(c) + " turns");
  return static_cast<long long>(r);
}

}  // namespace monopole
