#pragma once

#include <string>
#include <vector>

#include "layerrisk/events.hpp"
#include "layerrisk/model.hpp"

namespace layerrisk {

/// Fills absent layer fail probabilities with 1/2 and unweighted refinements with 1/k.
/// Values that are already present are kept.
ChainModel indifference_complete(ChainModel model);

/// One factor of the doom product: how a layer fares given that all earlier layers failed.
struct LayerFactor {
  std::string layer;
  Probability base_success;       // 1 - declared fail
  Probability effective_success;  // after removing impossible sub-event mass
  Probability fail;               // 1 - effective_success
  std::vector<std::string> zeroed;
};

struct ChainResult {
  Probability p_doom;
  std::vector<LayerFactor> breakdown;  // chain order, catch-all layers last
  std::vector<Diagnostic> diagnostics;
};

/**
 * Success probability of layer `layer_index` conditional on every earlier
 * layer failing.
 *
 * Unrefined layers keep their base success unless success is impossible in
 * that context, in which case it is 0. Refined layers keep base success times
 * the total weight of the sub-events that remain possible; the removed mass is
 * not redistributed over the survivors.
 *
 * The model is validated, its catch-all block expanded and completed first,
 * so `layer_index` counts catch-all layers after the declared ones.
 */
Probability effective_success(const ChainModel& model, std::size_t layer_index);

/// P(doom) as the product of effective per-layer failure probabilities.
ChainResult eval_chain(const ChainModel& model);

/// validate + expand_catchall + indifference_complete.
ChainModel prepare(const ChainModel& model);

}  // namespace layerrisk
