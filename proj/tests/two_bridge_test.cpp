#include "itersplit/two_bridge.hpp"
#include "itersplit/grid.hpp"

#include <gtest/gtest.h>

using namespace itersplit;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

CfErrorCode cf_error(std::vector<int> a, std::vector<std::int64_t> b) {
  try {
    (void)validate_cf(std::move(a), std::move(b));
  } catch (const CfError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected CfError";
  return CfErrorCode::Empty;
}

}  // namespace

TEST(ValidateCf, Examples) {
  const ContinuedFraction2B cf = validate_cf({1, 1}, {1, 1});
  EXPECT_EQ(cf.depth(), 1u);
  EXPECT_EQ(cf.k(1), 3);
  EXPECT_EQ(validate_cf({-1}, {2}).depth(), 0u);
  EXPECT_EQ(validate_cf({-1, -1}, {1, 2}).k(1), 3);
  EXPECT_EQ(validate_cf({1, -1}, {1, 2}).k(1), 4);
}

TEST(ValidateCf, DistinctErrors) {
  EXPECT_EQ(cf_error({1, -1}, {1, 0}), CfErrorCode::ZeroK);
  EXPECT_EQ(cf_error({1, 2}, {1, 1}), CfErrorCode::SignNotUnit);
  EXPECT_EQ(cf_error({1}, {0}), CfErrorCode::ZeroB0);
  EXPECT_EQ(cf_error({1, 1}, {1}), CfErrorCode::LengthMismatch);
  EXPECT_EQ(cf_error({}, {}), CfErrorCode::Empty);
}

TEST(ValidateCf, ZeroBAllowedWhenSignsAgree) {
  const ContinuedFraction2B cf = validate_cf({1, 1}, {2, 0});
  EXPECT_EQ(cf.k(1), 1);
  EXPECT_TRUE(cf.has_zero_b());
  EXPECT_FALSE(validate_cf({1, 1}, {2, 1}).has_zero_b());
}

TEST(ContinuedFraction2B, DisplayOrder) {
  const ContinuedFraction2B cf = validate_cf({1, -1, 1}, {3, 2, -1});
  EXPECT_EQ(cf.to_string(), "[2,-2,-2,4,2,6]");
  EXPECT_EQ(ContinuedFraction2B::parse("[2,-2,-2,4,2,6]"), cf);
  EXPECT_EQ(validate_cf({1, 1}, {1, 1}).to_string(), "[2,2,2,2]");
  EXPECT_THROW(ContinuedFraction2B::parse("[2,3]"), ValidationError);
  EXPECT_THROW(ContinuedFraction2B::parse("[2,2,2]"), CfError);
  EXPECT_THROW(ContinuedFraction2B::parse("2,2"), ValidationError);
  EXPECT_THROW(ContinuedFraction2B::parse("[4,2]"), CfError);
}

TEST(SemisimpleSlopes, Examples) {
  const TunnelInvariants a = semisimple_slopes(validate_cf({1, 1}, {1, 1}));
  EXPECT_EQ(std::get<SimpleSlope>(a.first), simple_class(q(2, 5)));
  ASSERT_EQ(a.rest.size(), 1u);
  EXPECT_EQ(a.rest[0].value, q(-5, 3));
  EXPECT_EQ(a.binary, (std::vector<Bit>{0, 0}));

  EXPECT_EQ(std::get<SimpleSlope>(semisimple_slopes(validate_cf({-1}, {1})).first),
            simple_class(q(1, 3)));

  const TunnelInvariants c = semisimple_slopes(validate_cf({1, -1}, {1, 1}));
  EXPECT_EQ(c.rest[0].value, q(-3, 2));
}

TEST(SemisimpleSlopes, RestHasTheFormMinusTwoAPlusOneOverK) {
  for (const ContinuedFraction2B& cf : continued_fractions(3, {-2, -1, 0, 1, 2})) {
    const TunnelInvariants inv = semisimple_slopes(cf);
    for (std::size_t i = 1; i <= cf.depth(); ++i) {
      const Rational inverse_k = inv.rest[i - 1].value + Rational(2 * cf.a()[i - 1]);
      EXPECT_EQ(abs(inverse_k.numerator()), 1);
      EXPECT_EQ(inverse_k.reciprocal(), q(cf.k(i)));
    }
  }
}

TEST(CfToTwists, Examples) {
  EXPECT_EQ(cf_to_twists(validate_cf({1, 1}, {1, 1})), TwistSequence({2, 3}));
  EXPECT_EQ(cf_to_twists(validate_cf({-1}, {2})), TwistSequence({3}));
  EXPECT_EQ(cf_to_twists(validate_cf({-1, 1}, {1, 2})), TwistSequence({1, 4}));
}

TEST(TwistsToCf, Examples) {
  EXPECT_EQ(twists_to_cf(TwistSequence({2, 3})), validate_cf({1, 1}, {1, 1}));
  EXPECT_EQ(twists_to_cf(TwistSequence({1})), validate_cf({-1}, {1}));
  EXPECT_EQ(twists_to_cf(TwistSequence({4, -2})), validate_cf({1, -1}, {2, -1}));
  for (const auto& t : {TwistSequence({2, 3}), TwistSequence({1}), TwistSequence({4, -2})}) {
    EXPECT_EQ(cf_to_twists(twists_to_cf(t)), t);
  }
}

TEST(TwistsToCf, MinusOneFirstTwistIsTrivial) {
  try {
    (void)twists_to_cf(TwistSequence({-1, 2}));
    FAIL() << "expected CfError";
  } catch (const CfError& e) {
    EXPECT_EQ(e.code(), CfErrorCode::ZeroB0);
  }
}

TEST(RoundTrip, ExhaustiveSmall) {
  for (const TwistSequence& t : twist_sequences(4, nonzero_range(5))) {
    if (t[0] == -1) continue;
    EXPECT_EQ(cf_to_twists(twists_to_cf(t)), t) << t.to_string();
  }
  for (const ContinuedFraction2B& cf : continued_fractions(3, {-3, -2, -1, 0, 1, 2, 3})) {
    EXPECT_EQ(twists_to_cf(cf_to_twists(cf)), cf) << cf.to_string();
  }
}

TEST(BracketIdentity, FirstSlopeMatchesSplitting) {
  for (std::int64_t n0 = -50; n0 <= 50; ++n0) {
    if (n0 == 0) continue;
    const SimpleSlope from_twist = simple_class(q(n0, 2 * n0 + 1));
    EXPECT_EQ(slope_to_simple(q(2) + q(1, n0)), from_twist);
    if (n0 % 2 == 0) {
      const std::int64_t b0 = n0 / 2;
      EXPECT_EQ(from_twist, simple_class(q(2 * b0, 4 * b0 + 1))) << n0;
    } else {
      const std::int64_t b0 = (n0 + 1) / 2;
      EXPECT_EQ(from_twist, simple_class(q(2 * b0 - 1, 4 * b0 - 1))) << n0;
    }
  }
}

TEST(VerifyCorrespondence, Examples) {
  const CorrespondenceReport r = verify_correspondence(validate_cf({1, 1}, {1, 1}));
  EXPECT_TRUE(r.match);
  EXPECT_EQ(r.twists, TwistSequence({2, 3}));
  EXPECT_EQ(canonical_key(r.prop_invariants), "[2/5];-5/3;00");
  EXPECT_EQ(canonical_key(r.iter_invariants), "[2/5];-5/3;00");

  const CorrespondenceReport single = verify_correspondence(validate_cf({-1}, {1}));
  EXPECT_TRUE(single.match);
  EXPECT_EQ(std::get<SimpleSlope>(single.iter_invariants.first).to_string(), "[1/3]");

  const CorrespondenceReport again = verify_correspondence(validate_cf({1, 1}, {1, 1}));
  EXPECT_EQ(canonical_key(again.iter_invariants), canonical_key(r.iter_invariants));
}

TEST(VerifyCorrespondence, SmallGridIncludingZeroB) {
  for (const ContinuedFraction2B& cf : continued_fractions(3, {-2, -1, 0, 1, 2})) {
    EXPECT_TRUE(verify_correspondence(cf).match) << cf.to_string();
  }
}
