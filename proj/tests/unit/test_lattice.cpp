#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "brute_force.hpp"
#include "fbetti/lattice.hpp"

using fbetti::HalfOpenRange;
using fbetti::Integer;
using fbetti::LatticePoint;
using fbetti::LatticePolygon;

TEST(Pick, Examples) {
  EXPECT_EQ(fbetti::pick_count(LatticePolygon({{0, 0}, {1, 0}, {0, 1}})), 3);
  EXPECT_EQ(fbetti::pick_count(LatticePolygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}})), 9);
  EXPECT_EQ(fbetti::pick_count(LatticePolygon({{0, 0}, {4, 0}, {0, 4}})), 15);
  EXPECT_EQ(bf::lattice_points_in_convex({{0, 0}, {4, 0}, {0, 4}}), 15);
  // Clockwise input counts the same.
  EXPECT_EQ(fbetti::pick_count(LatticePolygon({{0, 0}, {0, 4}, {4, 0}})), 15);
}

TEST(Pick, RejectsDegeneratePolygons) {
  EXPECT_THROW(LatticePolygon({{0, 0}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(LatticePolygon({{0, 0}, {1, 1}, {2, 2}}), std::invalid_argument);
  EXPECT_THROW(LatticePolygon({{0, 0}, {2, 0}, {0, 2}, {2, 2}}), std::invalid_argument);
  EXPECT_THROW(LatticePolygon({{0, 0}, {2, 0}, {2, 0}, {0, 2}}), std::invalid_argument);
}

TEST(PickProperty, RandomConvexPolygonsMatchEnumeration) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::int64_t> coord(0, 12);
  int tested = 0;
  while (tested < 300) {
    std::vector<bf::P2> pts(3 + rng() % 8);
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    const auto hull = bf::convex_hull(pts);
    if (hull.size() < 3) continue;
    std::vector<LatticePoint> vertices;
    for (const auto& v : hull) vertices.push_back({v.x, v.y});
    EXPECT_EQ(fbetti::pick_count(LatticePolygon(vertices)), bf::lattice_points_in_convex(hull));
    ++tested;
  }
}

TEST(PairsSumGe, Examples) {
  EXPECT_EQ(fbetti::count_pairs_sum_ge(3, 2), 6);
  EXPECT_EQ(fbetti::count_pairs_sum_ge(3, 0), 9);
  EXPECT_EQ(fbetti::count_pairs_sum_ge(5, 4), 15);
  EXPECT_EQ(fbetti::count_pairs_sum_ge(1, 0), 1);
  EXPECT_THROW(fbetti::count_pairs_sum_ge(3, 3), std::invalid_argument);
  EXPECT_THROW(fbetti::count_pairs_sum_ge(3, -1), std::invalid_argument);
  EXPECT_FALSE(fbetti::pairs_sum_ge_polygon(1, 0).has_value());
}

TEST(PairsSumGe, MatchesEnumerationAndPolygon) {
  for (std::int64_t q = 1; q <= 31; ++q) {
    for (std::int64_t k = 0; k < q; ++k) {
      const Integer brute = bf::pairs_sum_ge(q, k);
      EXPECT_EQ(fbetti::count_pairs_sum_ge(q, k), brute) << q << " " << k;
      EXPECT_EQ(fbetti::pairs_sum_ge_formula(q, k), fbetti::Rational(brute)) << q << " " << k;
      EXPECT_EQ(fbetti::enumerate_pairs_sum_ge(q, k), brute);
      if (auto poly = fbetti::pairs_sum_ge_polygon(q, k)) {
        EXPECT_EQ(fbetti::pick_count(*poly), brute) << q << " " << k;
        if (k > 0 && k < q - 1) {
          EXPECT_EQ(poly->vertices().size(), 5u);
          EXPECT_EQ(poly->boundary_points(), 4 * q - k - 4);
        }
      }
    }
  }
}

TEST(Halfbox, Examples) {
  EXPECT_EQ(fbetti::count_halfbox3(3), 23);
  EXPECT_EQ(fbetti::count_halfbox3(1), 1);
  EXPECT_EQ(fbetti::count_halfbox3(5), 105);
  EXPECT_THROW(fbetti::count_halfbox3(0), std::invalid_argument);
}

TEST(HalfboxProperty, ReductionAndEnumeration) {
  for (std::int64_t q = 1; q <= 31; ++q) {
    Integer sum = 0;
    for (std::int64_t k = 0; k < q; ++k) sum += fbetti::count_pairs_sum_ge(q, k);
    EXPECT_EQ(fbetti::count_halfbox3(q), sum) << q;
    if (q <= 27) EXPECT_EQ(fbetti::count_halfbox3(q), bf::halfbox3(q)) << q;
  }
}

TEST(CongruenceBox, Examples) {
  EXPECT_EQ(fbetti::count_congruence_box({0, 3}, {0, 3}, 2, 0), 5);
  EXPECT_EQ(fbetti::count_congruence_box({3, 6}, {0, 3}, 2, 0), 4);
  for (std::int64_t q : {1, 4, 9}) EXPECT_EQ(fbetti::count_congruence_box({0, q}, {0, q}, 1, 0), q * q);
  EXPECT_EQ(fbetti::count_congruence_box({2, 2}, {0, 5}, 3, 1), 0);
  EXPECT_THROW(fbetti::count_congruence_box({3, 2}, {0, 5}, 3, 1), std::invalid_argument);
  EXPECT_THROW(fbetti::count_congruence_box({0, 2}, {0, 5}, 0, 0), std::invalid_argument);
  EXPECT_EQ(fbetti::count_residue_in_range(0, 10, 3, 1), 3);
  EXPECT_EQ(fbetti::count_residue_in_range(-5, 5, 4, 3), 3);
}

TEST(CongruenceBoxProperty, RandomBoxes) {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<std::int64_t> lo(0, 40);
  std::uniform_int_distribution<std::int64_t> len(0, 30);
  std::uniform_int_distribution<std::int64_t> mod(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t i0 = lo(rng);
    const std::int64_t j0 = lo(rng);
    const HalfOpenRange ii{i0, i0 + len(rng)};
    const HalfOpenRange jj{j0, j0 + len(rng)};
    const std::int64_t m = mod(rng);
    Integer total = 0;
    for (std::int64_t r = 0; r < m; ++r) {
      std::int64_t brute = 0;
      for (std::int64_t a = ii.lo; a < ii.hi; ++a) {
        for (std::int64_t b = jj.lo; b < jj.hi; ++b) brute += (a + b) % m == r ? 1 : 0;
      }
      const Integer c = fbetti::count_congruence_box(ii, jj, m, r);
      EXPECT_EQ(c, brute);
      EXPECT_EQ(fbetti::enumerate_congruence_box(ii, jj, m, r), brute);
      total += c;
    }
    EXPECT_EQ(total, (ii.hi - ii.lo) * (jj.hi - jj.lo));
  }
}

TEST(ParityBox, Examples) {
  EXPECT_EQ(fbetti::count_parity_box3(3, 0), 14);
  EXPECT_EQ(fbetti::count_parity_box3(3, 1), 13);
  EXPECT_EQ(fbetti::count_parity_box3(1, 0), 1);
  EXPECT_THROW(fbetti::count_parity_box3(4, 0), std::invalid_argument);
  EXPECT_THROW(fbetti::count_parity_box3(3, 2), std::invalid_argument);
}

TEST(ParityBoxProperty, PartitionAndEnumeration) {
  for (std::int64_t q = 1; q <= 41; q += 2) {
    const Integer even = fbetti::count_parity_box3(q, 0);
    const Integer odd = fbetti::count_parity_box3(q, 1);
    EXPECT_EQ(even + odd, q * q * q);
    EXPECT_EQ(even, fbetti::enumerate_parity_box3(q, 0));
    EXPECT_EQ(odd, fbetti::enumerate_parity_box3(q, 1));
  }
}
