#include "fbetti/lattice.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "fbetti/errors.hpp"

namespace fbetti {

namespace {

__extension__ typedef __int128 i128;

i128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<i128>(a.x - o.x) * (b.y - o.y) - static_cast<i128>(a.y - o.y) * (b.x - o.x);
}

int sign(i128 v) { return (v > 0) - (v < 0); }

bool on_segment(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b) {
  return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c, const LatticePoint& d) {
  const int d1 = sign(cross(c, d, a));
  const int d2 = sign(cross(c, d, b));
  const int d3 = sign(cross(a, b, c));
  const int d4 = sign(cross(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(a, c, d)) || (d2 == 0 && on_segment(b, c, d)) ||
         (d3 == 0 && on_segment(c, a, b)) || (d4 == 0 && on_segment(d, a, b));
}

Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

LatticePolygon::LatticePolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw std::invalid_argument("LatticePolygon: need at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices_[i] == vertices_[j]) throw std::invalid_argument("LatticePolygon: repeated vertex");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c = vertices_[j];
      const auto& d = vertices_[(j + 1) % n];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Consecutive edges share exactly one endpoint; they may not fold back.
        const auto& shared = j == i + 1 ? b : a;
        const auto& p = j == i + 1 ? a : b;
        const auto& r = j == i + 1 ? d : c;
        if (cross(shared, p, r) == 0 && on_segment(r, shared, p)) {
          throw std::invalid_argument("LatticePolygon: overlapping consecutive edges");
        }
        if (cross(shared, p, r) == 0 && on_segment(p, shared, r)) {
          throw std::invalid_argument("LatticePolygon: overlapping consecutive edges");
        }
      } else if (segments_intersect(a, b, c, d)) {
        throw std::invalid_argument("LatticePolygon: self-intersecting");
      }
    }
  }
  if (area() == Rational(0)) throw std::invalid_argument("LatticePolygon: zero area");
}

Rational LatticePolygon::area() const {
  Integer twice = 0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    twice += to_integer(a.x) * to_integer(b.y) - to_integer(b.x) * to_integer(a.y);
  }
  if (twice < 0) twice = -twice;
  return Rational(twice, 2);
}

Integer LatticePolygon::boundary_points() const {
  Integer total = 0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % n];
    total += to_integer(std::gcd(b.x - a.x, b.y - a.y));
  }
  return total;
}

Integer pick_count(const LatticePolygon& poly) {
  const Rational count = poly.area() + Rational(poly.boundary_points(), 2) + Rational(1);
  if (!count.is_integer()) throw internal_error("pick_count: non-integral count " + count.to_string());
  return count.num();
}

Integer count_residue_in_range(std::int64_t lo, std::int64_t hi, std::int64_t modulus, std::int64_t residue) {
  if (modulus < 1) throw std::invalid_argument("count_residue_in_range: modulus must be positive");
  if (hi <= lo) return 0;
  const std::int64_t r = mod(residue, modulus);
  // #{x < n : x = r mod m} = floor((n - r - 1)/m) + 1 counted from -infinity, differenced.
  const std::int64_t upto_hi = floor_div(hi - 1 - r, modulus);
  const std::int64_t upto_lo = floor_div(lo - 1 - r, modulus);
  return to_integer(upto_hi - upto_lo);
}

std::optional<LatticePolygon> pairs_sum_ge_polygon(std::int64_t q, std::int64_t k) {
  if (k < 0 || k > q - 1) throw std::invalid_argument("pairs_sum_ge_polygon: need 0 <= k <= q-1");
  if (q < 2) return std::nullopt;
  const std::int64_t m = q - 1;
  if (k == 0) return LatticePolygon({{0, 0}, {m, 0}, {m, m}, {0, m}});
  if (k == m) return LatticePolygon({{m, 0}, {m, m}, {0, m}});
  return LatticePolygon({{k, 0}, {m, 0}, {m, m}, {0, m}, {0, k}});
}

Rational pairs_sum_ge_formula(std::int64_t q, std::int64_t k) {
  const Rational qq(to_integer(q));
  const Rational kk(to_integer(k));
  return (qq - 1) * (qq - 1) - Rational(1, 2) * kk * kk + (4 * qq - kk - 4) / Rational(2) + 1;
}

Integer count_pairs_sum_ge(std::int64_t q, std::int64_t k) {
  if (q < 1 || k < 0 || k > q - 1) {
    throw std::invalid_argument("count_pairs_sum_ge: need 0 <= k <= q-1, got q=" + std::to_string(q) +
                                " k=" + std::to_string(k));
  }
  const Rational formula = pairs_sum_ge_formula(q, k);
  const Integer complement = to_integer(q) * to_integer(q) - to_integer(k) * to_integer(k + 1) / 2;
  if (!formula.is_integer() || formula.num() != complement) {
    throw internal_error("count_pairs_sum_ge: Pick formula " + formula.to_string() + " != complement count " +
                         to_string(complement));
  }
  return complement;
}

Integer count_halfbox3(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("count_halfbox3: q must be positive");
  const Integer qq = to_integer(q);
  const Integer numerator = 5 * qq * qq * qq + qq;
  if (numerator % 6 != 0) throw internal_error("count_halfbox3: (5q^3 + q)/6 not integral");
  return numerator / 6;
}

Integer count_congruence_box(HalfOpenRange i_range, HalfOpenRange j_range, std::int64_t modulus,
                             std::int64_t residue) {
  if (i_range.lo > i_range.hi || j_range.lo > j_range.hi) {
    throw std::invalid_argument("count_congruence_box: empty range with lo > hi");
  }
  if (modulus < 1) throw std::invalid_argument("count_congruence_box: modulus must be positive");
  Integer total = 0;
  for (std::int64_t c = 0; c < modulus; ++c) {
    const Integer ni = count_residue_in_range(i_range.lo, i_range.hi, modulus, c);
    if (ni == 0) continue;
    total += ni * count_residue_in_range(j_range.lo, j_range.hi, modulus, residue - c);
  }
  return total;
}

Integer count_parity_box3(std::int64_t q, int parity) {
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("count_parity_box3: q must be odd");
  if (parity != 0 && parity != 1) throw std::invalid_argument("count_parity_box3: parity must be 0 or 1");
  const Integer cube = to_integer(q) * to_integer(q) * to_integer(q);
  return parity == 0 ? Integer((cube + 1) / 2) : Integer((cube - 1) / 2);
}

Integer enumerate_pairs_sum_ge(std::int64_t q, std::int64_t k) {
  std::int64_t n = 0;
  for (std::int64_t i = 0; i < q; ++i) {
    for (std::int64_t j = 0; j < q; ++j) n += (i + j >= k);
  }
  return to_integer(n);
}

Integer enumerate_halfbox3(std::int64_t q) {
  std::int64_t n = 0;
  for (std::int64_t i = 0; i < q; ++i) {
    for (std::int64_t j = 0; j < q; ++j) {
      for (std::int64_t k = 0; k < q; ++k) n += (i + j >= k);
    }
  }
  return to_integer(n);
}

Integer enumerate_congruence_box(HalfOpenRange i_range, HalfOpenRange j_range, std::int64_t modulus,
                                 std::int64_t residue) {
  std::int64_t n = 0;
  const std::int64_t r = mod(residue, modulus);
  for (std::int64_t i = i_range.lo; i < i_range.hi; ++i) {
    for (std::int64_t j = j_range.lo; j < j_range.hi; ++j) n += (mod(i + j, modulus) == r);
  }
  return to_integer(n);
}

Integer enumerate_parity_box3(std::int64_t q, int parity) {
  std::int64_t n = 0;
  for (std::int64_t i = 0; i < q; ++i) {
    for (std::int64_t j = 0; j < q; ++j) {
      for (std::int64_t k = 0; k < q; ++k) n += ((i + j + k) % 2 == parity);
    }
  }
  return to_integer(n);
}

}  // namespace fbetti
