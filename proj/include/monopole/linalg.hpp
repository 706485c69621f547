#pragma once

// Dense complex matrices and a cyclic Jacobi eigensolver for Hermitian ones.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include "monopole/errors.hpp"

namespace monopole {

/// Square complex matrix, row-major. Used for Hermitian operators; the
/// invariant is checked by is_hermitian() where it matters rather than
/// enforced on every write.
class HermitianMatrix {
 public:
  using value_type = std::complex<double>;

  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t n) : n_(n), data_(n * n, value_type(0.0, 0.0)) {}

  static HermitianMatrix identity(std::size_t n) {
    HermitianMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t size() const { return n_; }
  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  /// max |M(r,c) - conj(M(c,r))|
  double hermiticity_defect() const {
    double d = 0.0;
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = r; c < n_; ++c) d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return d;
  }
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol * std::max(1.0, max_abs()); }

  std::complex<double> trace() const {
    std::complex<double> t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  HermitianMatrix& operator+=(const HermitianMatrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  HermitianMatrix& operator-=(const HermitianMatrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  HermitianMatrix& operator*=(double s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

  friend HermitianMatrix operator*(const HermitianMatrix& a, const HermitianMatrix& b) {
    HermitianMatrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const auto aik = a(i, k);
        if (aik == value_type(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  HermitianMatrix adjoint() const {
    HermitianMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  HermitianMatrix conjugate() const {
    HermitianMatrix out(n_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
    return out;
  }

  const std::vector<value_type>& data() const { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<value_type> data_;
};

struct Eigensystem {
  std::vector<double> values;  // ascending
  HermitianMatrix vectors;     // column i is the unit eigenvector for values[i]
};

/// Cyclic complex Jacobi. Each rotation first removes the phase of the pivot
/// with a diagonal unitary, then applies a real plane rotation.
inline Eigensystem hermitian_eigensystem(const HermitianMatrix& M) {
  using C = std::complex<double>;
  const std::size_t n = M.size();
  HermitianMatrix A = M;
  HermitianMatrix V = HermitianMatrix::identity(n);
  const double scale = std::max(1.0, M.max_abs());

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) s += std::norm(A(r, c));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > 1e-15 * scale * static_cast<double>(n); ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const C g = A(p, q);
        const double mag = std::abs(g);
        if (mag < 1e-300) continue;
        const C e = g / mag;
        const double app = A(p, p).real();
        const double aqq = A(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = D P with D = diag(.., conj(e) at q, ..) and P the real rotation.
        const C jpp = c;
        const C jpq = s;
        const C jqp = -s * std::conj(e);
        const C jqq = c * std::conj(e);
        for (std::size_t k = 0; k < n; ++k) {  // A <- A J
          const C akp = A(k, p);
          const C akq = A(k, q);
          A(k, p) = akp * jpp + akq * jqp;
          A(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- J^H A
          const C apk = A(p, k);
          const C aqk = A(q, k);
          A(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          A(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        A(p, p) = A(p, p).real();
        A(q, q) = A(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {  // V <- V J
          const C vkp = V(k, p);
          const C vkq = V(k, q);
          V(k, p) = vkp * jpp + vkq * jqp;
          V(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return A(x, x).real() < A(y, y).real(); });
  Eigensystem out;
  out.vectors = HermitianMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.values.push_back(A(order[i], order[i]).real());
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, i) = V(k, order[i]);
  }
  return out;
}

/// All eigenvalues in ascending order. Throws NotHermitian when the input
/// deviates from Hermitian by more than 1e-12 (relative to its largest entry).
inline std::vector<double> hermitian_eigenvalues(const HermitianMatrix& M) {
  if (!M.is_hermitian(1e-12)) throw NotHermitian("defect " + std::to_string(M.hermiticity_defect()));
  return hermitian_eigensystem(M).values;
}

}  // namespace monopole
