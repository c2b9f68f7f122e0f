#pragma once

#include <string>
#include <vector>

#include "layerrisk/chain.hpp"

namespace layerrisk {

inline constexpr std::size_t kStrategyCap = 16;

/// Attemptable layers that are actually pursued, in chain order.
struct Strategy {
  std::vector<std::string> attempted;
  friend bool operator==(const Strategy&, const Strategy&) = default;
};

std::string to_string(const Strategy& strategy);

/**
 * Realizes a strategy as a plain chain. Attemptable layers left out of the
 * strategy fail with certainty; each effect whose trigger is attempted
 * multiplies its target's fail probability, clamped at 1, in declaration
 * order. The result carries no effects and no attemptable flags.
 */
ChainModel apply_effects(const ChainModel& model, const Strategy& strategy);

Probability eval_strategy(const ChainModel& model, const Strategy& strategy);

struct StrategyRow {
  Strategy strategy;
  Probability p_doom;
};

struct StrategyTable {
  std::vector<StrategyRow> rows;  // bit i of the row index = i-th attemptable layer
  std::size_t best = 0;
  const StrategyRow& optimum() const { return rows[best]; }
};

/// Exhaustive over every subset of attemptable layers. Ties prefer fewer
/// attempted layers, then the lexicographically earlier set in chain order.
StrategyTable optimal_strategy(const ChainModel& model);

}  // namespace layerrisk
