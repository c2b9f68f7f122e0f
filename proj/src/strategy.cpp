#include "layerrisk/strategy.hpp"

#include <algorithm>

namespace layerrisk {
namespace {

std::vector<std::size_t> positions(const ChainModel& model, const Strategy& s) {
  std::vector<std::size_t> out;
  for (const auto& id : s.attempted) out.push_back(*model.layer_index(id));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(const Strategy& strategy) {
  if (strategy.attempted.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < strategy.attempted.size(); ++i) {
    if (i) out += ", ";
    out += strategy.attempted[i];
  }
  return out + "}";
}

ChainModel apply_effects(const ChainModel& model, const Strategy& strategy) {
  validate(model);
  ChainModel out = indifference_complete(model);
  std::vector<bool> attempted(out.layers.size(), false);
  for (const auto& id : strategy.attempted) {
    auto index = out.layer_index(id);
    if (!index || !out.layers[*index].attemptable) {
      throw ModelError("strategy attempts '" + id + "', which is not an attemptable layer");
    }
    attempted[*index] = true;
  }
  for (std::size_t i = 0; i < out.layers.size(); ++i) {
    if (out.layers[i].attemptable && !attempted[i]) out.layers[i].fail = Probability::one();
  }
  for (const auto& effect : out.effects) {
    if (!attempted[*out.layer_index(effect.trigger)]) continue;
    auto& fail = out.layers[*out.layer_index(effect.target)].fail;
    fail = Probability(std::min(Rational(1), Rational(fail->value() * effect.factor)));
  }
  out.effects.clear();
  for (auto& layer : out.layers) layer.attemptable = false;
  return out;
}

Probability eval_strategy(const ChainModel& model, const Strategy& strategy) {
  return eval_chain(apply_effects(model, strategy)).p_doom;
}

StrategyTable optimal_strategy(const ChainModel& model) {
  validate(model);
  std::vector<std::string> candidates;
  for (const auto& layer : model.layers) {
    if (layer.attemptable) candidates.push_back(layer.id);
  }
  if (candidates.size() > kStrategyCap) {
    throw ModelError("strategy cap exceeded: " + std::to_string(candidates.size()) +
                     " attemptable layers (max " + std::to_string(kStrategyCap) + ")");
  }
  StrategyTable table;
  const std::size_t count = std::size_t{1} << candidates.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    Strategy s;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mask & (std::size_t{1} << i)) s.attempted.push_back(candidates[i]);
    }
    auto p = eval_strategy(model, s);
    table.rows.push_back({std::move(s), p});
  }
  auto better = [&](const StrategyRow& a, const StrategyRow& b) {
    if (a.p_doom != b.p_doom) return a.p_doom < b.p_doom;
    if (a.strategy.attempted.size() != b.strategy.attempted.size()) {
      return a.strategy.attempted.size() < b.strategy.attempted.size();
    }
    return positions(model, a.strategy) < positions(model, b.strategy);
  };
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    if (better(table.rows[i], table.rows[table.best])) table.best = i;
  }
  return table;
}

}  // namespace layerrisk
