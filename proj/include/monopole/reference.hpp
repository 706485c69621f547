#pragma once

// Expected spectra, written out in closed form, and a helper that names a
// floating value when it matches one of the radicals that occur in them.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "monopole/graph.hpp"
#include "monopole/spectra.hpp"

namespace monopole {

struct ReferenceRow {
  long long chern = 0;  // row covers +chern and -chern
  Spectrum adjacency;
  Spectrum laplacian;
};

struct ReferenceTable {
  Solid solid{};
  std::size_t degree = 0;
  std::vector<ReferenceRow> rows;
};

namespace detail {

inline Spectrum sorted_lines(Spectrum s) { return merge_lines(std::move(s), 1e-12); }

inline ReferenceRow row(long long c, Spectrum adj, Spectrum lap) {
  return {c, sorted_lines(std::move(adj)), sorted_lines(std::move(lap))};
}

// Icosahedral Laplacian rows are 5 - lambda_A.
inline ReferenceRow icosa_row(long long c, Spectrum adj) {
  Spectrum lap = laplacian_from_adjacency(adj, 5.0);
  return row(c, std::move(adj), std::move(lap));
}

}  // namespace detail

inline std::vector<ReferenceTable> reference_tables() {
  using detail::row;
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0), r6 = std::sqrt(6.0);
  std::vector<ReferenceTable> t;

  t.push_back({Solid::tetrahedron, 3,
               {row(0, {{3, 1}, {-1, 3}}, {{0, 1}, {4, 3}}),
                row(1, {{r3, 2}, {-r3, 2}}, {{3 - r3, 2}, {3 + r3, 2}}),
                row(2, {{1, 3}, {-3, 1}}, {{2, 3}, {6, 1}})}});

  t.push_back({Solid::octahedron, 4,
               {row(0, {{4, 1}, {0, 3}, {-2, 2}}, {{0, 1}, {4, 3}, {6, 2}}),
                row(1, {{2 * r2, 2}, {-r2, 4}}, {{4 - 2 * r2, 2}, {4 + r2, 4}}),
                row(2, {{2, 3}, {-2, 3}}, {{2, 3}, {6, 3}}),
                row(3, {{r2, 4}, {-2 * r2, 2}}, {{4 - r2, 4}, {4 + 2 * r2, 2}}),
                row(4, {{2, 2}, {0, 3}, {-4, 1}}, {{2, 2}, {4, 3}, {8, 1}})}});

  // Row 2 Laplacian is 3 - {2, 0, -2}, so the top line is 5.
  t.push_back({Solid::cube, 3,
               {row(0, {{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}, {{0, 1}, {2, 3}, {4, 3}, {6, 1}}),
                row(1, {{r6, 2}, {0, 4}, {-r6, 2}}, {{3 - r6, 2}, {3, 4}, {3 + r6, 2}}),
                row(2, {{2, 3}, {0, 2}, {-2, 3}}, {{1, 3}, {3, 2}, {5, 3}}),
                row(3, {{r3, 4}, {-r3, 4}}, {{3 - r3, 4}, {3 + r3, 4}})}});

  const double a = std::sqrt((5 + r5) / 2);      // sqrt((5+sqrt5)/2)
  const double b = std::sqrt(5 - 2 * r5);        // sqrt(5-2sqrt5)
  const double c = std::sqrt(5 * (5 + r5) / 2);  // sqrt(5(5+sqrt5)/2)
  const double d = std::sqrt(5 * (5 - r5) / 2);
  const double e = std::sqrt((5 - r5) / 2);
  const double f = std::sqrt(5 + 2 * r5);
  using detail::icosa_row;
  t.push_back({Solid::icosahedron, 5,
               {icosa_row(0, {{-r5, 3}, {-1, 5}, {r5, 3}, {5, 1}}),
                icosa_row(1, {{-a, 6}, {b, 4}, {c, 2}}),
                icosa_row(2, {{-r5, 4}, {(-3 + r5) / 2, 5}, {(5 + r5) / 2, 3}}),
                icosa_row(3, {{-d, 2}, {-e, 6}, {f, 4}}),
                icosa_row(4, {{-r5, 4}, {(-5 + r5) / 2, 3}, {(3 + r5) / 2, 5}}),
                icosa_row(5, {{-r5, 6}, {r5, 6}}),
                icosa_row(6, {{-(3 + r5) / 2, 5}, {(5 - r5) / 2, 3}, {r5, 4}}),
                icosa_row(7, {{-f, 4}, {e, 6}, {d, 2}}),
                icosa_row(8, {{-(5 + r5) / 2, 3}, {(3 - r5) / 2, 5}, {r5, 4}}),
                icosa_row(9, {{-c, 2}, {-b, 4}, {a, 6}}),
                icosa_row(10, {{-5, 1}, {-r5, 3}, {1, 5}, {r5, 3}})}});
  return t;
}

inline const ReferenceTable& reference_table(Solid s) {
  static const std::vector<ReferenceTable> tables = reference_tables();
  for (const auto& t : tables)
    if (t.solid == s) return t;
  throw OutOfRange("no reference table for the " + std::string(solid_name(s)));
}

inline Spectrum reference_dodecahedral_spectrum() {
  const double r5 = std::sqrt(5.0);
  return detail::sorted_lines({{-r5, 3}, {-2, 4}, {0, 4}, {1, 5}, {r5, 3}, {3, 1}});
}

inline Spectrum reference_pentadodecahedral_spectrum() {
  const double r5 = std::sqrt(5.0);
  return detail::sorted_lines({{0, 1}, {10 - 2 * r5, 3}, {12, 5}, {10 + 2 * r5, 3}, {15, 8}});
}

/// Names v as k + m*X for a small integer k, m in {+-1, +-2} and X one of the
/// radicals above, or as an integer or half-integer combination (k + m sqrt5)/2.
inline std::optional<std::string> closed_form(double v, double tol = 1e-9) {
  const double r5 = std::sqrt(5.0);
  struct Named {
    const char* name;
    double value;
  };
  static const std::array<Named, 10> radicals{{
      {"√2", std::sqrt(2.0)},
      {"√3", std::sqrt(3.0)},
      {"√5", r5},
      {"√6", std::sqrt(6.0)},
      {"√((5+√5)/2)", std::sqrt((5 + r5) / 2)},
      {"√((5-√5)/2)", std::sqrt((5 - r5) / 2)},
      {"√(5+2√5)", std::sqrt(5 + 2 * r5)},
      {"√(5-2√5)", std::sqrt(5 - 2 * r5)},
      {"√(5(5+√5)/2)", std::sqrt(5 * (5 + r5) / 2)},
      {"√(5(5-√5)/2)", std::sqrt(5 * (5 - r5) / 2)},
  }};
  const double k = std::round(v);
  if (std::abs(v - k) <= tol) return std::to_string(static_cast<long long>(k));
  for (const auto& x : radicals) {
    for (int m : {1, -1, 2, -2}) {
      const double rest = v - m * x.value;
      const double kk = std::round(rest);
      if (std::abs(rest - kk) > tol || std::abs(kk) > 20) continue;
      std::string s = kk == 0 ? "" : std::to_string(static_cast<long long>(kk));
      s += m < 0 ? "-" : (kk == 0 ? "" : "+");
      if (std::abs(m) == 2) s += "2";
      return s + x.name;
    }
  }
  for (int m : {1, -1}) {
    const double twice = 2 * v - m * r5;
    const double kk = std::round(twice);
    if (std::abs(twice - kk) <= 2 * tol && std::abs(kk) <= 20)
      return "(" + std::to_string(static_cast<long long>(kk)) + (m < 0 ? "-" : "+") + "√5)/2";
  }
  return std::nullopt;
}

}  // namespace monopole
