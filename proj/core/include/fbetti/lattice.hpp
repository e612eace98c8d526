#pragma once

// Exact lattice-point counts. Each closed form has an `enumerate_*` twin that
// walks the points one by one; the two are compared in tests and by
// `fbetti verify --suite counts`.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fbetti/arith.hpp"

namespace fbetti {

struct LatticePoint {
  std::int64_t x;
  std::int64_t y;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Simple polygon with integer vertices, given in cyclic order (either orientation).
class LatticePolygon {
 public:
  /// Throws std::invalid_argument for fewer than three vertices, zero area,
  /// repeated vertices or self-intersections.
  explicit LatticePolygon(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }

  /// Shoelace area.
  Rational area() const;
  /// Lattice points on the boundary: sum of gcd(|dx|, |dy|) over the edges.
  Integer boundary_points() const;

 private:
  std::vector<LatticePoint> vertices_;
};

/// Lattice points in the closed polygon: area + boundary/2 + 1.
Integer pick_count(const LatticePolygon& poly);

/// #{i in [lo, hi) : i = residue mod modulus}.
Integer count_residue_in_range(std::int64_t lo, std::int64_t hi, std::int64_t modulus, std::int64_t residue);

/// Region {(i, j) in [0, q-1]^2 : i + j >= k} as a polygon; empty when it
/// degenerates (q = 1).
std::optional<LatticePolygon> pairs_sum_ge_polygon(std::int64_t q, std::int64_t k);

/// (q-1)^2 - k^2/2 + (4q - k - 4)/2 + 1: the Pick count of the polygon above.
Rational pairs_sum_ge_formula(std::int64_t q, std::int64_t k);

/// #{(i, j) : 0 <= i, j < q, i + j >= k} for 0 <= k <= q-1. Computed by the
/// Pick formula and by complement counting (q^2 - k(k+1)/2); throws
/// internal_error if they disagree, std::invalid_argument if k is out of range.
Integer count_pairs_sum_ge(std::int64_t q, std::int64_t k);

/// #{(i, j, k) in [0, q)^3 : i + j >= k} = (5q^3 + q)/6.
Integer count_halfbox3(std::int64_t q);

struct HalfOpenRange {
  std::int64_t lo;
  std::int64_t hi;
};

/// #{(i, j) in I x J : i + j = residue mod modulus}, in O(modulus).
Integer count_congruence_box(HalfOpenRange i_range, HalfOpenRange j_range, std::int64_t modulus,
                             std::int64_t residue);

/// #{(i, j, k) in [0, q)^3 : i + j + k = parity mod 2} for odd q:
/// (q^3 + 1)/2 for parity 0, (q^3 - 1)/2 for parity 1.
Integer count_parity_box3(std::int64_t q, int parity);

// Enumeration twins.
Integer enumerate_pairs_sum_ge(std::int64_t q, std::int64_t k);
Integer enumerate_halfbox3(std::int64_t q);
Integer enumerate_congruence_box(HalfOpenRange i_range, HalfOpenRange j_range, std::int64_t modulus,
                                 std::int64_t residue);
Integer enumerate_parity_box3(std::int64_t q, int parity);

}  // namespace fbetti
