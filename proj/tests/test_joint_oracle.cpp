#include <gtest/gtest.h>

#include <random>

#include "layerrisk/oracle.hpp"
#include "support/random_models.hpp"

namespace layerrisk {
namespace {

ChainModel uniform(std::size_t n) {
  ChainModel m;
  for (std::size_t i = 0; i < n; ++i) m.layers.push_back(Layer{"L" + std::to_string(i), "", std::nullopt, false});
  return m;
}

TEST(EnumerateOutcomes, UniformFourLayers) {
  auto d = enumerate_outcomes(uniform(4));
  EXPECT_EQ(d.survive_at, (std::vector<Probability>{Probability(1, 2), Probability(1, 4), Probability(1, 8),
                                                    Probability(1, 16)}));
  EXPECT_EQ(d.doom, Probability(1, 16));
  EXPECT_EQ(d.total(), 1);
}

TEST(EnumerateOutcomes, CertainFailure) {
  ChainModel m;
  m.layers.push_back(Layer{"L", "", Probability::one(), false});
  EXPECT_EQ(enumerate_outcomes(m).doom, Probability::one());
}

TEST(EnumerateOutcomes, RefinedTwoWay) {
  auto m = uniform(4);
  m.layers[3].id = "O";
  m.layers[2].id = "A";
  m.refinements.push_back({"O", {{"O1", std::nullopt}, {"O2", std::nullopt}}});
  m.constraints.emplace_back(Implies{"O1", "A"});
  EXPECT_EQ(enumerate_outcomes(m).doom, Probability(3, 32));
}

TEST(CheckEquivalence, Baseline) {
  auto r = check_equivalence(uniform(4));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.chain_doom, Probability(1, 16));
  EXPECT_EQ(r.oracle_doom, Probability(1, 16));
}

TEST(CheckEquivalence, DetectsCorruptedChainResult) {
  auto m = uniform(4);
  auto chain = eval_chain(m);
  chain.p_doom = Probability(1, 15);
  auto r = check_equivalence(enumerate_outcomes(m), chain);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.normalized);
}

TEST(CheckEquivalence, DetectsUnnormalizedOutcomes) {
  auto m = uniform(2);
  auto outcomes = enumerate_outcomes(m);
  outcomes.survive_at[0] = Probability(1, 3);
  EXPECT_FALSE(check_equivalence(outcomes, eval_chain(m)).pass);
}

TEST(OracleProperties, RandomModels) {
  std::mt19937_64 rng(500);
  for (int n = 0; n < 300; ++n) {
    auto m = testing::random_model(rng);
    auto d = enumerate_outcomes(m);
    auto chain = eval_chain(m);
    ASSERT_EQ(d.total(), 1);
    ASSERT_EQ(d.doom, chain.p_doom);
    Rational reach = 1;
    for (std::size_t k = 0; k < chain.breakdown.size(); ++k) {
      EXPECT_EQ(d.survive_at[k].value(), Rational(chain.breakdown[k].effective_success.value() * reach));
      reach *= chain.breakdown[k].fail.value();
    }
  }
}

}  // namespace
}  // namespace layerrisk
