#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "brute_force.hpp"
#include "fbetti/rings.hpp"

using fbetti::ExponentVector;
using fbetti::FrobeniusContext;
using fbetti::RingFamily;

namespace {

struct Case {
  RingFamily family;
  bf::Kind kind;
  int delta;
};

std::vector<Case> all_cases() {
  return {{RingFamily::scroll(2), bf::Kind::Scroll, 2}, {RingFamily::scroll(3), bf::Kind::Scroll, 3},
          {RingFamily::scroll(5), bf::Kind::Scroll, 5}, {RingFamily::scroll21(), bf::Kind::Scroll21, 0},
          {RingFamily::veronese2(), bf::Kind::Veronese2, 0}};
}

ExponentVector to_ev(const bf::Point& a, int n) { return ExponentVector(a.data(), static_cast<std::size_t>(n)); }

ExponentVector random_member(const RingFamily& family, std::mt19937_64& rng) {
  const auto gens = fbetti::algebra_generators(family);
  ExponentVector a = ExponentVector(std::vector<std::int64_t>(family.ambient_vars(), 0).data(), family.ambient_vars());
  const int steps = static_cast<int>(rng() % 8);
  for (int s = 0; s < steps; ++s) a = a.plus(gens[rng() % gens.size()]);
  return a;
}

}  // namespace

TEST(RingFamily, ParseAndDesignator) {
  EXPECT_EQ(RingFamily::parse("scroll:4"), RingFamily::scroll(4));
  EXPECT_EQ(RingFamily::parse("scroll21"), RingFamily::scroll21());
  EXPECT_EQ(RingFamily::parse("veronese2"), RingFamily::veronese2());
  EXPECT_EQ(RingFamily::scroll(7).designator(), "scroll:7");
  EXPECT_THROW(RingFamily::parse("scroll:1"), std::invalid_argument);
  EXPECT_THROW(RingFamily::parse("scroll:x"), std::invalid_argument);
  EXPECT_THROW(RingFamily::parse("quadric"), std::invalid_argument);
  EXPECT_EQ(RingFamily::scroll(4).torsion_index(), 4);
  EXPECT_EQ(RingFamily::scroll21().torsion_index(), 2);
  EXPECT_EQ(RingFamily::veronese2().krull_dim(), 3);
}

TEST(FrobeniusContext, Construction) {
  const FrobeniusContext ctx(3, 4);
  EXPECT_EQ(ctx.q(), 81);
  EXPECT_EQ(FrobeniusContext::from_q(27).p(), 3);
  EXPECT_EQ(FrobeniusContext::from_q(27).e(), 3);
  EXPECT_EQ(FrobeniusContext(5, 0).q(), 1);
  EXPECT_THROW(FrobeniusContext(4, 1), std::invalid_argument);
  EXPECT_THROW(FrobeniusContext::from_q(12), std::invalid_argument);
  EXPECT_THROW(FrobeniusContext(2, 70), std::invalid_argument);
  EXPECT_EQ(ctx.normalizer(RingFamily::veronese2()), 81 * 81 * 81);
  EXPECT_EQ(ctx.normalizer(RingFamily::scroll(3)), 81 * 81);
  EXPECT_THROW(FrobeniusContext::for_family(RingFamily::veronese2(), 2, 1), std::invalid_argument);
  EXPECT_NO_THROW(FrobeniusContext::for_family(RingFamily::scroll21(), 2, 1));
}

TEST(Membership, Examples) {
  EXPECT_TRUE(fbetti::semigroup_member(RingFamily::scroll(3), {2, 1}));
  EXPECT_FALSE(fbetti::semigroup_member(RingFamily::scroll21(), {0, 0, 2}));
  EXPECT_FALSE(fbetti::semigroup_member(RingFamily::veronese2(), {1, 1, 1}));
  EXPECT_THROW(fbetti::semigroup_member(RingFamily::scroll(2), {1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(ExponentVector({1, -1}), std::invalid_argument);
}

TEST(Membership, Generators) {
  EXPECT_EQ(fbetti::algebra_generators(RingFamily::scroll(2)),
            (std::vector<ExponentVector>{{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(fbetti::algebra_generators(RingFamily::scroll21()).size(), 5u);
  EXPECT_EQ(fbetti::algebra_generators(RingFamily::veronese2()).size(), 6u);
}

TEST(Membership, AgreesWithGeneratorClosure) {
  for (const auto& c : all_cases()) {
    const std::int64_t hi = c.family.ambient_vars() == 2 ? 30 : 14;
    const bf::SemigroupBox box(c.kind, c.delta, hi);
    const int n = box.n();
    bf::Point a = {0, 0, 0};
    for (a[0] = 0; a[0] < hi; ++a[0]) {
      for (a[1] = 0; a[1] < hi; ++a[1]) {
        for (a[2] = 0; a[2] < (n == 3 ? hi : 1); ++a[2]) {
          ASSERT_EQ(fbetti::semigroup_member(c.family, to_ev(a, n)), box.contains(a))
              << c.family.designator() << " " << to_ev(a, n).to_string();
        }
      }
    }
  }
}

TEST(FrobeniusPower, Examples) {
  const auto s2 = RingFamily::scroll(2);
  const FrobeniusContext q3(3, 1);
  EXPECT_TRUE(fbetti::frobenius_power_member(s2, q3, {6, 0}));
  EXPECT_TRUE(fbetti::frobenius_power_member(s2, q3, {4, 4}));
  EXPECT_FALSE(fbetti::frobenius_power_member(s2, q3, {2, 2}));
  EXPECT_THROW(fbetti::frobenius_power_member(s2, q3, {1, 0}), std::invalid_argument);
}

TEST(RingsProperty, MembershipIsMultiplicative) {
  std::mt19937_64 rng(4242);
  for (const auto& c : all_cases()) {
    const int n = c.family.ambient_vars();
    std::uniform_int_distribution<std::int64_t> coord(0, 12);
    int pairs = 0;
    for (int trial = 0; trial < 4000 && pairs < 300; ++trial) {
      std::int64_t x[3] = {coord(rng), coord(rng), coord(rng)};
      std::int64_t y[3] = {coord(rng), coord(rng), coord(rng)};
      const ExponentVector a(x, n), b(y, n);
      if (!fbetti::semigroup_member(c.family, a) || !fbetti::semigroup_member(c.family, b)) continue;
      EXPECT_TRUE(fbetti::semigroup_member(c.family, a.plus(b)));
      ++pairs;
    }
    EXPECT_GE(pairs, 100) << c.family.designator();
    for (const auto& g : fbetti::algebra_generators(c.family)) EXPECT_TRUE(fbetti::semigroup_member(c.family, g));
  }
}

TEST(RingsProperty, FrobeniusPowerIsAnIdeal) {
  std::mt19937_64 rng(9001);
  for (const auto& c : all_cases()) {
    for (std::int64_t q : {2, 3, 5}) {
      const auto ctx = FrobeniusContext::from_q(q);
      const auto gens = fbetti::algebra_generators(c.family);
      for (int trial = 0; trial < 200; ++trial) {
        const ExponentVector a = random_member(c.family, rng).plus(random_member(c.family, rng));
        if (!fbetti::frobenius_power_member(c.family, ctx, a)) continue;
        for (const auto& g : gens) EXPECT_TRUE(fbetti::frobenius_power_member(c.family, ctx, a.plus(g)));
      }
    }
  }
}

TEST(RingsProperty, FrobeniusPowerAgreesWithClosure) {
  for (const auto& c : all_cases()) {
    const std::int64_t q = 3;
    const std::int64_t hi = c.family.ambient_vars() == 2 ? 25 : 12;
    const bf::SemigroupBox box(c.kind, c.delta, hi);
    box.for_each([&](const bf::Point& a) {
      const bool expected = !box.minimal_in_pushforward(a, q);
      EXPECT_EQ(fbetti::frobenius_power_member(c.family, FrobeniusContext::from_q(q), to_ev(a, box.n())), expected);
    });
  }
}
