#pragma once

#include <string>
#include <vector>

#include "layerrisk/chain.hpp"

namespace layerrisk {

/// Exact probability of each way the chain can end: survival at some layer, or doom.
struct OutcomeDistribution {
  std::vector<std::string> layers;
  std::vector<Probability> survive_at;  // parallel to `layers`
  Probability doom;

  /// doom + sum(survive_at), which must be exactly 1.
  Rational total() const;
};

/// Walks the outcome tree node by node. Effective conditionals are re-derived
/// with a search over partial world assignments that shares no code with
/// the bitmask enumeration used by eval_chain.
OutcomeDistribution enumerate_outcomes(const ChainModel& model);

struct EquivalenceReport {
  bool pass = false;
  bool normalized = false;
  Probability chain_doom;
  Probability oracle_doom;
};

EquivalenceReport check_equivalence(const ChainModel& model);
EquivalenceReport check_equivalence(const OutcomeDistribution& outcomes, const ChainResult& chain);

}  // namespace layerrisk
