#include <gtest/gtest.h>

#include "layerrisk/probability.hpp"

namespace layerrisk {
namespace {

TEST(ParseRational, FractionsAndDecimals) {
  EXPECT_EQ(*parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(*parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(*parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(*parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(*parse_rational("1"), Rational(1));
  EXPECT_EQ(*parse_rational("3.0"), Rational(3));
}

TEST(ParseRational, RejectsMalformed) {
  for (const char* bad : {"", "0.5.1", "1/0", "1/", "/2", ".5", "5.", "-1/2", "1/2/3", "a", "1e3", "0.5/2"}) {
    EXPECT_FALSE(parse_rational(bad).has_value()) << bad;
  }
}

TEST(Probability, RangeIsEnforced) {
  EXPECT_THROW(Probability(3, 2), std::domain_error);
  EXPECT_THROW(Probability(Rational(-1, 3)), std::domain_error);
  EXPECT_THROW(Probability(1, 0), std::domain_error);
  EXPECT_FALSE(Probability::parse("3/2").has_value());
  EXPECT_EQ(Probability::parse("1")->str(), "1");
}

TEST(Probability, LowestTermsAndClosedOperations) {
  Probability p(6, 8);
  EXPECT_EQ(p.str(), "3/4");
  EXPECT_EQ(p.complement(), Probability(1, 4));
  EXPECT_EQ(p * Probability::half(), Probability(3, 8));
  EXPECT_LT(Probability(1, 3), Probability(1, 2));
  EXPECT_EQ(Probability().str(), "0");
}

}  // namespace
}  // namespace layerrisk
