#pragma once

// Finite subgroups of the unit quaternions: closure, conjugacy classes, class
// sums, cyclic subgroups, coset spaces, character tables and Frobenius
// reciprocity.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monopole/algebra.hpp"
#include "monopole/errors.hpp"
#include "monopole/linalg.hpp"

namespace monopole {

using Index = std::size_t;
using Complex = std::complex<double>;

/// Group given by an explicit multiplication table over quaternion elements.
/// Elements are sorted in descending lexicographic (w, x, y, z) order, so the
/// identity is element 0.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::vector<Quaternion> elements, std::vector<Index> mul, std::vector<Index> inv, Index identity)
      : elements_(std::move(elements)), mul_(std::move(mul)), inv_(std::move(inv)), identity_(identity) {
    orders_.resize(elements_.size());
    for (Index a = 0; a < elements_.size(); ++a) {
      std::size_t n = 1;
      for (Index x = a; x != identity_; x = multiply(x, a)) ++n;
      orders_[a] = n;
    }
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<Quaternion>& elements() const { return elements_; }
  const Quaternion& element(Index a) const { return elements_[a]; }
  Index multiply(Index a, Index b) const { return mul_[a * elements_.size() + b]; }
  Index inverse(Index a) const { return inv_[a]; }
  Index identity() const { return identity_; }
  /// Order of the element a (smallest n > 0 with a^n = 1).
  std::size_t element_order(Index a) const { return orders_[a]; }
  Index conjugate(Index g, Index a) const { return multiply(multiply(g, a), inv_[g]); }

  /// Index of an exact quaternion, or order() if absent.
  Index find(const Quaternion& q) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), q,
                               [](const Quaternion& a, const Quaternion& b) { return a > b; });
    if (it != elements_.end() && *it == q) return static_cast<Index>(it - elements_.begin());
    return order();
  }

 private:
  std::vector<Quaternion> elements_;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
  std::vector<std::size_t> orders_;
  Index identity_ = 0;
};

/// Smallest set of quaternions closed under multiplication containing the
/// generators. Throws ClosureOverflow once more than `bound` elements appear.
///
/// Only the products element * generator are formed exactly; every other
/// table entry follows by associativity along the breadth-first spanning tree
/// (b = parent(b) * g  gives  a b = (a parent(b)) g).
inline FiniteGroup generate_group(const std::vector<Quaternion>& generators, std::size_t bound = 10000) {
  const std::size_t ngen = generators.size();
  std::unordered_map<Quaternion, Index, QuaternionHash> seen;
  std::vector<Quaternion> found{Quaternion::one()};
  std::vector<Index> parent{0};
  std::vector<Index> via{0};
  std::vector<Index> right;  // right[x * ngen + g] = x * generators[g], discovery indices
  seen.emplace(Quaternion::one(), 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t g = 0; g < ngen; ++g) {
      Quaternion p = found[head] * generators[g];
      auto [it, inserted] = seen.emplace(p, found.size());
      if (inserted) {
        found.push_back(std::move(p));
        parent.push_back(head);
        via.push_back(g);
        if (found.size() > bound) throw ClosureOverflow("closure exceeds " + std::to_string(bound) + " elements");
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = found.size();
  std::vector<Index> rank(n);  // discovery index -> canonical index
  {
    std::vector<Index> perm(n);
    for (Index a = 0; a < n; ++a) perm[a] = a;
    std::sort(perm.begin(), perm.end(), [&](Index a, Index b) { return found[a] > found[b]; });
    for (Index r = 0; r < n; ++r) rank[perm[r]] = r;
  }

  // Table in discovery indices, filled column by column in discovery order.
  std::vector<Index> disc(n * n);
  for (Index a = 0; a < n; ++a) disc[a * n + 0] = a;
  for (Index b = 1; b < n; ++b)
    for (Index a = 0; a < n; ++a) disc[a * n + b] = right[disc[a * n + parent[b]] * ngen + via[b]];

  std::vector<Index> mul(n * n);
  std::vector<Index> inv(n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index ab = disc[a * n + b];
      mul[rank[a] * n + rank[b]] = rank[ab];
      if (ab == 0) inv[rank[a]] = rank[b];
    }
  std::vector<Quaternion> elements(n);
  for (Index a = 0; a < n; ++a) elements[rank[a]] = std::move(found[a]);
  return FiniteGroup(std::move(elements), std::move(mul), std::move(inv), rank[0]);
}

struct ConjClass {
  std::vector<Index> members;  // sorted
  Index representative = 0;    // smallest member index
  std::size_t element_order = 1;

  std::size_t size() const { return members.size(); }
  bool contains(Index a) const { return std::binary_search(members.begin(), members.end(), a); }
};

/// Conjugacy classes sorted by (size, element order, representative).
inline std::vector<ConjClass> conjugacy_classes(const FiniteGroup& G) {
  const std::size_t n = G.order();
  std::vector<bool> done(n, false);
  std::vector<ConjClass> classes;
  for (Index a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::set<Index> orbit;
    for (Index g = 0; g < n; ++g) orbit.insert(G.conjugate(g, a));
    ConjClass c;
    c.members.assign(orbit.begin(), orbit.end());
    c.representative = c.members.front();
    c.element_order = G.element_order(a);
    for (Index m : c.members) done[m] = true;
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjClass& x, const ConjClass& y) {
    return std::tuple(x.size(), x.element_order, x.representative) <
           std::tuple(y.size(), y.element_order, y.representative);
  });
  return classes;
}

/// class_of[a] = position of the class containing element a.
inline std::vector<Index> class_index_map(const std::vector<ConjClass>& classes, std::size_t group_order) {
  std::vector<Index> class_of(group_order);
  for (Index c = 0; c < classes.size(); ++c)
    for (Index m : classes[c].members) class_of[m] = c;
  return class_of;
}

/// Formal sum of the members of a union of conjugacy classes.
struct CasimirElement {
  std::vector<Index> summands;   // sorted element indices, multiplicity one each
  std::vector<Index> class_ids;  // sorted
  bool real = false;             // closed under inversion

  std::size_t size() const { return summands.size(); }
};

inline CasimirElement casimir_from_classes(const FiniteGroup& G, const std::vector<ConjClass>& classes,
                                           std::vector<Index> class_ids) {
  std::sort(class_ids.begin(), class_ids.end());
  class_ids.erase(std::unique(class_ids.begin(), class_ids.end()), class_ids.end());
  CasimirElement C;
  C.class_ids = class_ids;
  for (Index c : class_ids) {
    if (c >= classes.size()) throw OutOfRange("class id " + std::to_string(c));
    C.summands.insert(C.summands.end(), classes[c].members.begin(), classes[c].members.end());
  }
  std::sort(C.summands.begin(), C.summands.end());
  C.real = std::all_of(C.summands.begin(), C.summands.end(), [&](Index a) {
    return std::binary_search(C.summands.begin(), C.summands.end(), G.inverse(a));
  });
  return C;
}

/// Cyclic subgroup together with the exponent bookkeeping needed to evaluate
/// characters on it.
struct Subgroup {
  std::vector<Index> members;  // sorted
  Index generator = 0;
  std::vector<Index> powers;   // powers[a] = generator^a
  std::size_t conjugacy_label = 0;

  std::size_t order() const { return members.size(); }
  bool contains(Index a) const { return std::binary_search(members.begin(), members.end(), a); }
  /// a with generator^a == h; order() if h is not a member.
  std::size_t exponent_of(Index h) const {
    auto it = std::find(powers.begin(), powers.end(), h);
    return static_cast<std::size_t>(it - powers.begin());
  }
};

inline Subgroup cyclic_subgroup(const FiniteGroup& G, Index generator) {
  Subgroup H;
  H.generator = generator;
  Index x = G.identity();
  do {
    H.powers.push_back(x);
    x = G.multiply(x, generator);
  } while (x != G.identity());
  H.members = H.powers;
  std::sort(H.members.begin(), H.members.end());
  return H;
}

/// All cyclic subgroups of order n, ordered by conjugacy label and then by
/// generator index. Each subgroup's generator is its smallest-index element of
/// order n.
inline std::vector<Subgroup> cyclic_subgroups_of_order(const FiniteGroup& G, std::size_t n) {
  std::map<std::vector<Index>, Subgroup> by_members;
  for (Index a = 0; a < G.order(); ++a) {
    if (G.element_order(a) != n) continue;
    Subgroup H = cyclic_subgroup(G, a);
    by_members.try_emplace(H.members, std::move(H));  // ascending a: first hit has the smallest generator
  }
  if (by_members.empty()) throw NoneFound("no element of order " + std::to_string(n));

  std::vector<Subgroup> subs;
  for (auto& [members, H] : by_members) subs.push_back(std::move(H));
  std::sort(subs.begin(), subs.end(), [](const Subgroup& x, const Subgroup& y) { return x.generator < y.generator; });

  std::vector<std::size_t> label(subs.size(), subs.size());
  std::size_t next = 0;
  for (std::size_t s = 0; s < subs.size(); ++s) {
    if (label[s] != subs.size()) continue;
    label[s] = next;
    for (Index g = 0; g < G.order(); ++g) {
      std::vector<Index> conj;
      for (Index m : subs[s].members) conj.push_back(G.conjugate(g, m));
      std::sort(conj.begin(), conj.end());
      for (std::size_t t = s + 1; t < subs.size(); ++t)
        if (label[t] == subs.size() && subs[t].members == conj) label[t] = next;
    }
    ++next;
  }
  for (std::size_t s = 0; s < subs.size(); ++s) subs[s].conjugacy_label = label[s];
  std::stable_sort(subs.begin(), subs.end(),
                   [](const Subgroup& x, const Subgroup& y) { return x.conjugacy_label < y.conjugacy_label; });
  return subs;
}

/// Left cosets gH with the translation action of G.
class CosetSpace {
 public:
  CosetSpace() = default;
  CosetSpace(const FiniteGroup& G, const Subgroup& H) : group_order_(G.order()) {
    coset_of_.assign(G.order(), G.order());
    for (Index g = 0; g < G.order(); ++g) {
      if (coset_of_[g] != G.order()) continue;
      const Index id = cosets_.size();
      std::vector<Index> members;
      for (Index h : H.members) {
        const Index gh = G.multiply(g, h);
        coset_of_[gh] = id;
        members.push_back(gh);
      }
      std::sort(members.begin(), members.end());
      representatives_.push_back(members.front());
      cosets_.push_back(std::move(members));
    }
    action_.resize(G.order() * cosets_.size());
    for (Index g = 0; g < G.order(); ++g)
      for (Index x = 0; x < cosets_.size(); ++x)
        action_[g * cosets_.size() + x] = coset_of_[G.multiply(g, representatives_[x])];
  }

  std::size_t size() const { return cosets_.size(); }
  const std::vector<std::vector<Index>>& cosets() const { return cosets_; }
  Index representative(Index x) const { return representatives_[x]; }
  Index coset_of(Index g) const { return coset_of_[g]; }
  /// g . x
  Index act(Index g, Index x) const { return action_[g * cosets_.size() + x]; }
  std::size_t group_order() const { return group_order_; }

 private:
  std::vector<std::vector<Index>> cosets_;
  std::vector<Index> representatives_;
  std::vector<Index> coset_of_;
  std::vector<Index> action_;
  std::size_t group_order_ = 0;
};

inline CosetSpace coset_space(const FiniteGroup& G, const Subgroup& H) { return CosetSpace(G, H); }

/// rho_k(generator^a) = exp(2 pi i k a / n).
struct CyclicCharacter {
  std::size_t order = 1;
  long long exponent = 0;

  Complex at_power(long long a) const {
    const long long n = static_cast<long long>(order);
    const long long r = (((exponent * a) % n) + n) % n;
    // Exact values for the quarter turns keep real characters exactly real.
    if (4 * r % n == 0) {
      switch (4 * r / n) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
      }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
  }
  Complex operator()(const Subgroup& H, Index h) const {
    return at_power(static_cast<long long>(H.exponent_of(h)));
  }
};

struct CharacterTable {
  std::vector<std::size_t> irrep_dims;
  std::vector<std::vector<Complex>> values;  // values[irrep][class]
  std::vector<std::size_t> class_sizes;
  std::vector<Index> class_of;               // element -> class

  std::size_t irrep_count() const { return irrep_dims.size(); }
  Complex value(Index irrep, Index cls) const { return values[irrep][cls]; }
  Complex at_element(Index irrep, Index element) const { return values[irrep][class_of[element]]; }
};

namespace detail {

// a[r][s][t]: coefficient of class sum K_t in K_r K_s.
inline std::vector<std::vector<std::vector<double>>> class_structure_constants(
    const FiniteGroup& G, const std::vector<ConjClass>& classes, const std::vector<Index>& class_of) {
  const std::size_t k = classes.size();
  std::vector<std::vector<std::vector<double>>> a(k, std::vector<std::vector<double>>(k, std::vector<double>(k, 0.0)));
  for (Index t = 0; t < k; ++t) {
    const Index z = classes[t].representative;
    for (Index x = 0; x < G.order(); ++x) {
      const Index y = G.multiply(G.inverse(x), z);
      a[class_of[x]][class_of[y]][t] += 1.0;
    }
  }
  return a;
}

}  // namespace detail

/// Character table by the Burnside class-matrix method.
///
/// The class multiplication matrices M_r (M_r)_{st} = a_{rst} commute and
/// their common right eigenvectors are the central characters
/// omega(K_s) = |C_s| chi(g_s) / dim. Conjugating by diag(|C_s|^{-1/2}) maps
/// M_r^T to M_{r^-1}, so a combination with coefficients c_{r^-1} = conj(c_r)
/// is Hermitian and one Jacobi diagonalisation separates all irreducibles when
/// its spectrum is simple.
template <class Rng>
CharacterTable character_table(const FiniteGroup& G, const std::vector<ConjClass>& classes, Rng& rng,
                               int max_retries = 10) {
  const std::size_t k = classes.size();
  const std::vector<Index> class_of = class_index_map(classes, G.order());
  const auto a = detail::class_structure_constants(G, classes, class_of);

  std::vector<Index> inverse_class(k);
  for (Index r = 0; r < k; ++r) inverse_class[r] = class_of[G.inverse(classes[r].representative)];
  std::vector<double> sizes(k);
  for (Index s = 0; s < k; ++s) sizes[s] = static_cast<double>(classes[s].size());
  const Index identity_class = class_of[G.identity()];

  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Complex> coeff(k);
    for (Index r = 0; r < k; ++r) {
      const Index rinv = inverse_class[r];
      if (rinv == r) coeff[r] = normal(rng);
      else if (rinv > r) coeff[r] = Complex(normal(rng), normal(rng));
    }
    for (Index r = 0; r < k; ++r)
      if (inverse_class[r] < r) coeff[r] = std::conj(coeff[inverse_class[r]]);

    HermitianMatrix N(k);
    for (Index s = 0; s < k; ++s)
      for (Index t = 0; t < k; ++t) {
        Complex v = 0.0;
        for (Index r = 0; r < k; ++r) v += coeff[r] * a[r][s][t];
        N(s, t) = v * std::sqrt(sizes[t] / sizes[s]);
      }
    const auto eig = hermitian_eigensystem(N);

    double scale = 1.0;
    for (double v : eig.values) scale = std::max(scale, std::abs(v));
    bool simple = true;
    for (std::size_t i = 1; i < k; ++i)
      if (eig.values[i] - eig.values[i - 1] < 1e-6 * scale) simple = false;
    if (!simple) continue;

    CharacterTable table;
    table.class_of = class_of;
    for (Index s = 0; s < k; ++s) table.class_sizes.push_back(classes[s].size());
    for (std::size_t col = 0; col < k; ++col) {
      std::vector<Complex> omega(k);
      for (Index s = 0; s < k; ++s) omega[s] = eig.vectors(s, col) * std::sqrt(sizes[s]);
      const Complex norm = omega[identity_class];
      for (auto& w : omega) w /= norm;
      double denom = 0.0;
      for (Index s = 0; s < k; ++s) denom += std::norm(omega[s]) / sizes[s];
      const double dim = std::sqrt(static_cast<double>(G.order()) / denom);
      const auto d = static_cast<std::size_t>(std::llround(dim));
      std::vector<Complex> chi(k);
      for (Index s = 0; s < k; ++s) {
        chi[s] = static_cast<double>(d) * omega[s] / sizes[s];
        if (std::abs(chi[s].real()) < 1e-13) chi[s].real(0.0);
        if (std::abs(chi[s].imag()) < 1e-13) chi[s].imag(0.0);
      }
      table.irrep_dims.push_back(d);
      table.values.push_back(std::move(chi));
    }

    // Deterministic irrep order: by dimension, then by descending character values.
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    auto key = [&](std::size_t i) {
      std::vector<long long> out{static_cast<long long>(table.irrep_dims[i])};
      for (const auto& v : table.values[i]) {
        out.push_back(-std::llround(v.real() * 1e6));
        out.push_back(-std::llround(v.imag() * 1e6));
      }
      return out;
    };
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
    CharacterTable sorted = table;
    for (std::size_t i = 0; i < k; ++i) {
      sorted.irrep_dims[i] = table.irrep_dims[perm[i]];
      sorted.values[i] = table.values[perm[i]];
    }

    // Row orthogonality.
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Complex ip = 0.0;
        for (Index s = 0; s < k; ++s) ip += sizes[s] * sorted.values[i][s] * std::conj(sorted.values[j][s]);
        ip /= static_cast<double>(G.order());
        if (std::abs(ip - (i == j ? 1.0 : 0.0)) > 1e-9)
          throw Error("character table fails row orthogonality");
      }
    return sorted;
  }
  throw DegenerateCombination("class-sum combination had a repeated eigenvalue after " +
                              std::to_string(max_retries) + " attempts");
}

/// Scalar by which C acts on the irreducible `irrep`:
/// sum over constituent classes of chi(c) |[c]| / dim.
inline Complex casimir_eigenvalue(const CasimirElement& C, Index irrep, const CharacterTable& table) {
  Complex sum = 0.0;
  for (Index c : C.class_ids) sum += table.value(irrep, c) * static_cast<double>(table.class_sizes[c]);
  return sum / static_cast<double>(table.irrep_dims[irrep]);
}

struct IrrepMultiplicity {
  Index irrep = 0;
  std::size_t multiplicity = 0;
};

/// Multiplicities of the irreducibles of G in ind_H^G(rho), via
/// <V, ind rho> = (1/|H|) sum_h chi_V(h) conj(rho(h)). Only non-zero
/// multiplicities are returned.
inline std::vector<IrrepMultiplicity> induced_decomposition(const FiniteGroup& G, const Subgroup& H,
                                                            const CyclicCharacter& rho, const CharacterTable& table) {
  if (rho.order != H.order()) throw OutOfRange("character order does not match subgroup order");
  std::vector<IrrepMultiplicity> out;
  std::size_t total_dim = 0;
  for (Index v = 0; v < table.irrep_count(); ++v) {
    Complex ip = 0.0;
    for (std::size_t a = 0; a < H.order(); ++a)
      ip += table.at_element(v, H.powers[a]) * std::conj(rho.at_power(static_cast<long long>(a)));
    ip /= static_cast<double>(H.order());
    const double rounded = std::round(ip.real());
    if (std::abs(ip - Complex(rounded, 0.0)) > 1e-6 || rounded < 0)
      throw NonIntegerMultiplicity("irrep " + std::to_string(v) + " has multiplicity " + std::to_string(ip.real()));
    if (rounded > 0) {
      const auto m = static_cast<std::size_t>(rounded);
      out.push_back({v, m});
      total_dim += m * table.irrep_dims[v];
    }
  }
  if (total_dim != G.order() / H.order())
    throw NonIntegerMultiplicity("induced dimension " + std::to_string(total_dim) + " != |G/H|");
  return out;
}

// Shipped generators. Closure sizes are checked in the tests and by the catalog.

inline std::vector<Quaternion> binary_tetrahedral_generators() { return {Quaternion::i(), hurwitz_unit()}; }

inline std::vector<Quaternion> binary_octahedral_generators() {
  const auto s = AlgebraicScalar::sqrt2() * AlgebraicScalar::rational(1, 2);  // 1/sqrt2
  return {Quaternion::i(), hurwitz_unit(), Quaternion{s, s, 0, 0}};
}

inline std::vector<Quaternion> binary_icosahedral_generators() {
  const auto half = AlgebraicScalar::rational(1, 2);
  const auto phi = AlgebraicScalar::golden();
  // (phi + phi^{-1} i + j) / 2
  return {Quaternion::i(), hurwitz_unit(), Quaternion{half * phi, half * (phi - 1), half, 0}};
}

}  // namespace monopole
