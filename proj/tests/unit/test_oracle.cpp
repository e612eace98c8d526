#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "fbetti/invariants.hpp"
#include "fbetti/mcm.hpp"
#include "fbetti/oracle.hpp"

using fbetti::FrobeniusContext;
using fbetti::Integer;
using fbetti::Rational;
using fbetti::RingFamily;

namespace {

struct Case {
  RingFamily family;
  bf::Kind kind;
  int delta;
};

std::vector<Case> cases() {
  return {{RingFamily::scroll(2), bf::Kind::Scroll, 2}, {RingFamily::scroll(3), bf::Kind::Scroll, 3},
          {RingFamily::scroll(5), bf::Kind::Scroll, 5}, {RingFamily::scroll21(), bf::Kind::Scroll21, 0},
          {RingFamily::veronese2(), bf::Kind::Veronese2, 0}};
}

}  // namespace

TEST(Colength, Examples) {
  const auto r = fbetti::oracle::lambda_frobenius_quotient(RingFamily::scroll(2), FrobeniusContext(3, 1));
  EXPECT_EQ(r.lambda, 13);
  EXPECT_EQ(r.normalized, Rational(13, 9));
  for (const auto& c : cases()) {
    EXPECT_EQ(fbetti::oracle::lambda_frobenius_quotient(c.family, FrobeniusContext(3, 0)).lambda, 1);
  }
  const auto v = fbetti::oracle::lambda_frobenius_quotient(RingFamily::veronese2(), FrobeniusContext(3, 1));
  EXPECT_EQ(v.lambda, 53);
  EXPECT_LE(fbetti::abs(v.normalized - Rational(2)), Rational(4, 3));
}

TEST(Colength, MatchesClosureEnumeration) {
  for (const auto& c : cases()) {
    for (std::int64_t q : {2, 3, 4, 5}) {
      const auto lam = fbetti::oracle::lambda_frobenius_quotient(c.family, FrobeniusContext::from_q(q));
      EXPECT_EQ(lam.lambda, bf::pushforward_generator_count(c.kind, c.delta, q)) << c.family.designator() << " " << q;
    }
  }
}

TEST(ColengthProperty, WithinEnvelope) {
  for (const auto& c : cases()) {
    for (std::int64_t q : {3, 5, 7, 9, 27}) {
      const auto lam = fbetti::oracle::lambda_frobenius_quotient(c.family, FrobeniusContext::from_q(q));
      EXPECT_LE(fbetti::abs(lam.normalized - fbetti::closed_form_ehk(c.family)), Rational(4, q))
          << c.family.designator() << " q=" << q;
    }
  }
}

TEST(MinGens, Examples) {
  const FrobeniusContext q3(3, 1);
  EXPECT_EQ(fbetti::oracle::min_gens_pushforward(RingFamily::scroll(2), q3), 13);
  EXPECT_EQ(fbetti::oracle::min_gens_pushforward(RingFamily::veronese2(), q3), 53);
  EXPECT_EQ(fbetti::oracle::min_gens_pushforward(RingFamily::scroll21(), q3), 45);
  EXPECT_THROW(fbetti::oracle::min_gens_pushforward(RingFamily::scroll(3), q3), std::invalid_argument);
  EXPECT_THROW(fbetti::oracle::min_gens_pushforward(RingFamily::scroll21(), FrobeniusContext(2, 1)),
               std::invalid_argument);
}

TEST(MinGensProperty, MatchesDecompositionAndColength) {
  for (const auto& c : cases()) {
    for (std::int64_t q : {3, 5, 7, 9}) {
      const auto ctx = FrobeniusContext::from_q(q);
      if (!fbetti::coprime_to_torsion(c.family, ctx)) continue;
      const Integer gens = fbetti::oracle::min_gens_pushforward(c.family, ctx);
      EXPECT_EQ(gens, fbetti::decompose(c.family, ctx, fbetti::Route::ResidueClasses).total_generators());
      EXPECT_EQ(gens, fbetti::oracle::lambda_frobenius_quotient(c.family, ctx).lambda);
    }
  }
}

TEST(ScrollSyzygy, Examples) {
  EXPECT_TRUE(fbetti::oracle::verify_scroll_syzygy(2, 1));
  EXPECT_EQ(fbetti::oracle::scroll_syzygy_span_dimensions(2, 1, 3), (std::vector<Integer>{2, 4, 6}));
  EXPECT_TRUE(fbetti::oracle::verify_scroll_syzygy(3, 2));
  EXPECT_EQ(fbetti::oracle::scroll_syzygy_span_dimensions(3, 1, 1), (std::vector<Integer>{3}));
  EXPECT_THROW(fbetti::oracle::verify_scroll_syzygy(3, 0), std::invalid_argument);
  EXPECT_THROW(fbetti::oracle::verify_scroll_syzygy(3, 3), std::invalid_argument);
}

TEST(ScrollSyzygyProperty, AllSmallScrolls) {
  for (int d = 2; d <= 6; ++d) {
    for (int l = 1; l < d; ++l) {
      EXPECT_TRUE(fbetti::oracle::verify_scroll_syzygy(d, l)) << d << " " << l;
      const auto dims = fbetti::oracle::scroll_syzygy_span_dimensions(d, l, 4);
      for (int k = 0; k < 4; ++k) EXPECT_EQ(dims[k], l * (k + 1) * d);
    }
  }
}

TEST(VeroneseSequences, Examples) {
  EXPECT_TRUE(fbetti::oracle::verify_veronese_sequences());
  EXPECT_EQ(fbetti::oracle::veronese_sequence_shifts(), std::make_pair(3, 1));
}
