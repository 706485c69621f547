#pragma once

// Exact arithmetic in Q(sqrt2, sqrt5) and quaternions over it. Every element of
// the binary tetrahedral, octahedral and icosahedral groups has coordinates in
// this field, so group elements can be compared and hashed exactly.

#include <array>
#include <compare>
#include <cmath>
#include <cstddef>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "monopole/errors.hpp"

namespace monopole {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline int sign_of(const Rational& r) { return r.sign(); }

// sign(p + q*sqrt2) for rational p, q.
inline int sign_sqrt2(const Rational& p, const Rational& q) {
  const int sp = sign_of(p);
  const int sq = sign_of(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 with 2 q^2.
  const int cmp = sign_of(p * p - 2 * q * q);
  return sp > 0 ? cmp : -cmp;
}

}  // namespace detail

/// a + b*sqrt2 + c*sqrt5 + d*sqrt10 with exact rational coefficients.
class AlgebraicScalar {
 public:
  enum Basis : std::size_t { kOne = 0, kSqrt2 = 1, kSqrt5 = 2, kSqrt10 = 3 };

  AlgebraicScalar() = default;
  AlgebraicScalar(long long value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT(implicit)
  AlgebraicScalar(Rational a, Rational b, Rational c, Rational d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static AlgebraicScalar sqrt2() { return {0, 1, 0, 0}; }
  static AlgebraicScalar sqrt5() { return {0, 0, 1, 0}; }
  static AlgebraicScalar sqrt10() { return {0, 0, 0, 1}; }
  /// Golden ratio (1 + sqrt5) / 2.
  static AlgebraicScalar golden() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }
  static AlgebraicScalar rational(long long num, long long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    if (den < 0) {  // boost's rational rejects a negative denominator
      num = -num;
      den = -den;
    }
    return {Rational(BigInt(num), BigInt(den)), 0, 0, 0};
  }

  const Rational& coeff(std::size_t basis) const { return c_[basis]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  double to_double() const {
    static const double kRoots[4] = {1.0, std::sqrt(2.0), std::sqrt(5.0), std::sqrt(10.0)};
    double acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) acc += c_[i].convert_to<double>() * kRoots[i];
    return acc;
  }

  /// Exact sign: writes the value as u + v*sqrt5 with u, v in Q(sqrt2).
  int sign() const {
    const int su = detail::sign_sqrt2(c_[0], c_[1]);
    const int sv = detail::sign_sqrt2(c_[2], c_[3]);
    if (sv == 0) return su;
    if (su == 0 || su == sv) return sv;
    // u^2 - 5 v^2 lies in Q(sqrt2).
    const Rational p = c_[0] * c_[0] + 2 * c_[1] * c_[1] - 5 * (c_[2] * c_[2] + 2 * c_[3] * c_[3]);
    const Rational q = 2 * c_[0] * c_[1] - 10 * c_[2] * c_[3];
    const int cmp = detail::sign_sqrt2(p, q);
    return su > 0 ? cmp : -cmp;
  }

  AlgebraicScalar operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

  AlgebraicScalar& operator+=(const AlgebraicScalar& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  AlgebraicScalar& operator-=(const AlgebraicScalar& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  AlgebraicScalar& operator*=(const AlgebraicScalar& o) { return *this = *this * o; }
  AlgebraicScalar& operator/=(const AlgebraicScalar& o) { return *this = *this / o; }

  friend AlgebraicScalar operator+(AlgebraicScalar a, const AlgebraicScalar& b) { return a += b; }
  friend AlgebraicScalar operator-(AlgebraicScalar a, const AlgebraicScalar& b) { return a -= b; }

  friend AlgebraicScalar operator*(const AlgebraicScalar& x, const AlgebraicScalar& y) {
    const auto& a = x.c_;
    const auto& b = y.c_;
    return {a[0] * b[0] + 2 * a[1] * b[1] + 5 * a[2] * b[2] + 10 * a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + 5 * (a[2] * b[3] + a[3] * b[2]),
            a[0] * b[2] + a[2] * b[0] + 2 * (a[1] * b[3] + a[3] * b[1]),
            a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1]};
  }

  AlgebraicScalar inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    // x = u + v sqrt5, 1/x = (u - v sqrt5) / (u^2 - 5 v^2); the norm n lies in
    // Q(sqrt2) and 1/n = (p - q sqrt2) / (p^2 - 2 q^2).
    const AlgebraicScalar conj5{c_[0], c_[1], -c_[2], -c_[3]};
    const AlgebraicScalar n = *this * conj5;
    const Rational& p = n.c_[0];
    const Rational& q = n.c_[1];
    const Rational denom = p * p - 2 * q * q;
    const AlgebraicScalar inv_n{p / denom, -q / denom, 0, 0};
    return conj5 * inv_n;
  }

  friend AlgebraicScalar operator/(const AlgebraicScalar& x, const AlgebraicScalar& y) {
    if (y.is_zero()) throw DivisionByZero("division by zero scalar");
    return x * y.inverse();
  }

  friend bool operator==(const AlgebraicScalar& x, const AlgebraicScalar& y) { return x.c_ == y.c_; }
  friend std::strong_ordering operator<=>(const AlgebraicScalar& x, const AlgebraicScalar& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& r : c_) {
      h ^= std::hash<double>{}(r.convert_to<double>()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::string to_string() const {
    static const char* kNames[4] = {"", "*sqrt2", "*sqrt5", "*sqrt10"};
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < 4; ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << (c_[i] > 0 ? " + " : " - ");
      else if (c_[i] < 0) os << "-";
      os << (c_[i] < 0 ? Rational(-c_[i]) : c_[i]) << kNames[i];
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& x) { return os << x.to_string(); }

 private:
  std::array<Rational, 4> c_{};
};

/// w + x i + y j + z k over AlgebraicScalar.
struct Quaternion {
  AlgebraicScalar w, x, y, z;

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  AlgebraicScalar norm() const { return w * w + x * x + y * y + z * z; }
  bool is_unit() const { return norm() == AlgebraicScalar(1); }

  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
  }
  friend Quaternion operator*(const AlgebraicScalar& s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }

  /// Hamilton product.
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
  }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
  // Lexicographic on (w, x, y, z) using exact scalar comparison.
  friend std::strong_ordering operator<=>(const Quaternion& p, const Quaternion& q) {
    if (auto c = p.w <=> q.w; c != 0) return c;
    if (auto c = p.x <=> q.x; c != 0) return c;
    if (auto c = p.y <=> q.y; c != 0) return c;
    return p.z <=> q.z;
  }

  std::array<double, 4> to_doubles() const { return {w.to_double(), x.to_double(), y.to_double(), z.to_double()}; }

  std::string to_string() const {
    std::ostringstream os;
    os << "(" << w << ", " << x << ", " << y << ", " << z << ")";
    return os.str();
  }
};

struct QuaternionHash {
  std::size_t operator()(const Quaternion& q) const {
    std::size_t h = q.w.hash();
    for (const auto* s : {&q.x, &q.y, &q.z}) h = h * 1000003u ^ s->hash();
    return h;
  }
};

inline Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

/// (1 + i + j + k) / 2, an element of order 6 in the binary tetrahedral group.
inline Quaternion hurwitz_unit() {
  const auto half = AlgebraicScalar::rational(1, 2);
  return {half, half, half, half};
}

}  // namespace monopole
