#include <gtest/gtest.h>

#include <random>

#include "layerrisk/chain.hpp"
#include "support/random_models.hpp"

namespace layerrisk {
namespace {

ChainModel ai_doom() {
  ChainModel m;
  m.name = "AI doom";
  for (const char* id : {"T", "C", "A", "O"}) m.layers.push_back(Layer{id, "", std::nullopt, false});
  return m;
}

ChainModel refined2() {
  auto m = ai_doom();
  m.refinements.push_back({"O", {{"O1", std::nullopt}, {"O2", std::nullopt}}});
  m.constraints.emplace_back(Implies{"O1", "A"});
  return m;
}

ChainModel refined3() {
  auto m = ai_doom();
  m.refinements.push_back({"O", {{"O1", std::nullopt}, {"O2", std::nullopt}, {"O3", std::nullopt}}});
  m.constraints.emplace_back(Implies{"O1", "A"});
  m.constraints.emplace_back(Implies{"O2", "C"});
  m.constraints.emplace_back(Incompatible{"A", "C"});
  return m;
}

ChainModel boat(bool with_refinement) {
  ChainModel m;
  m.name = "Boat rescue";
  m.layers.push_back(Layer{"B1", "", Probability::half(), false});
  m.layers.push_back(Layer{"B2", "", Probability::half(), false});
  if (with_refinement) {
    m.refinements.push_back({"B2", {{"B2a", Probability::half()}, {"B2b", Probability::half()}}});
    m.constraints.emplace_back(Implies{"B2a", "B1"});
  }
  return m;
}

TEST(IndifferenceComplete, FillsOnlyMissingValues) {
  auto m = ai_doom();
  m.layers[1].fail = Probability(9, 10);
  m.refinements.push_back({"O", {{"O1", std::nullopt}, {"O2", std::nullopt}, {"O3", std::nullopt}}});
  auto done = indifference_complete(m);
  EXPECT_EQ(*done.layers[0].fail, Probability::half());
  EXPECT_EQ(*done.layers[1].fail, Probability(9, 10));
  for (const auto& p : done.refinements[0].parts) EXPECT_EQ(*p.weight, Probability(1, 3));
  EXPECT_EQ(indifference_complete(done), done);
}

TEST(EffectiveSuccess, MassDeletionWithoutRenormalization) {
  EXPECT_EQ(effective_success(refined2(), 3), Probability(1, 4));
  EXPECT_EQ(effective_success(refined3(), 3), Probability(1, 6));
  EXPECT_EQ(effective_success(ai_doom(), 3), Probability::half());
}

TEST(EffectiveSuccess, ImpossibleLayerIsZeroWithDiagnostic) {
  auto m = ai_doom();
  m.constraints.emplace_back(Implies{"O", "C"});
  EXPECT_EQ(effective_success(m, 3), Probability::zero());
  auto r = eval_chain(m);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].severity, Severity::warning);
  EXPECT_EQ(r.p_doom, Probability(1, 8));
}

TEST(EvalChain, IndifferentBaseline) {
  auto r = eval_chain(ai_doom());
  EXPECT_EQ(r.p_doom, Probability(1, 16));
  ASSERT_EQ(r.breakdown.size(), 4u);
  for (const auto& f : r.breakdown) EXPECT_EQ(f.fail, Probability::half());
}

TEST(EvalChain, TwoWayRefinement) {
  auto r = eval_chain(refined2());
  EXPECT_EQ(r.p_doom, Probability(3, 32));
  EXPECT_EQ(r.breakdown[3].fail, Probability(3, 4));
  EXPECT_EQ(r.breakdown[3].zeroed, std::vector<std::string>{"O1"});
}

TEST(EvalChain, ThreeWayRefinement) {
  auto r = eval_chain(refined3());
  EXPECT_EQ(r.p_doom, Probability(5, 48));
  EXPECT_EQ(r.breakdown[3].fail, Probability(5, 6));
}

TEST(EvalChain, BoatRescue) {
  auto refined = eval_chain(boat(true));
  EXPECT_EQ(refined.p_doom, Probability(3, 8));
  EXPECT_EQ(refined.breakdown[1].fail, Probability(3, 4));
  EXPECT_EQ(eval_chain(boat(false)).p_doom, Probability(1, 4));
}

TEST(EvalChain, DeclaredCatchAllIsExpanded) {
  auto m = ai_doom();
  m.catchall = CatchAllSpec{2, Probability::half()};
  auto r = eval_chain(m);
  EXPECT_EQ(r.p_doom, Probability(1, 64));
  EXPECT_EQ(r.breakdown.back().layer, "CH_2");
}

TEST(EvalChain, InvalidModelThrows) {
  ChainModel empty;
  EXPECT_THROW(eval_chain(empty), ModelError);
  auto m = ai_doom();
  m.refinements.push_back({"O", {{"O1", Probability(1, 2)}, {"O2", Probability(1, 3)}}});
  EXPECT_THROW(eval_chain(m), ModelError);
}

class ChainProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{7};
};

TEST_F(ChainProperties, PlainChainIsProductOfFails) {
  for (int n = 0; n < 200; ++n) {
    auto m = testing::random_model(rng, {6, 0, 3, 0, 0});
    Rational product = 1;
    for (const auto& l : m.layers) product *= l.fail.value_or(Probability::half()).value();
    EXPECT_EQ(eval_chain(m).p_doom.value(), product);
  }
}

TEST_F(ChainProperties, RaisingAFailNeverLowersDoom) {
  for (int n = 0; n < 200; ++n) {
    auto m = testing::random_model(rng);
    auto before = eval_chain(m).p_doom;
    auto& layer = m.layers[rng() % m.layers.size()];
    const auto old = layer.fail.value_or(Probability::half());
    layer.fail = Probability(old.value() + (Rational(1) - old.value()) / 3);
    EXPECT_GE(eval_chain(m).p_doom, before);
  }
}

TEST_F(ChainProperties, EffectiveNeverExceedsBase) {
  for (int n = 0; n < 200; ++n) {
    auto r = eval_chain(testing::random_model(rng));
    for (const auto& f : r.breakdown) {
      EXPECT_LE(f.effective_success, f.base_success);
      if (!f.zeroed.empty() && !f.base_success.is_zero()) EXPECT_LT(f.effective_success, f.base_success);
      if (f.zeroed.empty() && r.diagnostics.empty()) EXPECT_EQ(f.effective_success, f.base_success);
    }
  }
}

TEST_F(ChainProperties, ImpliesConstraintOnlyLowersOversight) {
  // Adding Implies(O_i, A) cannot raise O's success once A has failed.
  for (int n = 0; n < 100; ++n) {
    auto m = refined3();
    m.constraints.clear();
    for (auto& l : m.layers) l.fail = testing::random_probability(rng);
    const auto before = effective_success(m, 3);
    m.constraints.emplace_back(Implies{"O" + std::to_string(1 + rng() % 3), "A"});
    EXPECT_LE(effective_success(m, 3), before);
  }
}

}  // namespace
}  // namespace layerrisk
