#include "layerrisk/chain.hpp"

#include <algorithm>

namespace layerrisk {
namespace {

LayerFactor layer_factor(const ChainModel& model, const Universe& universe, std::size_t index,
                         std::vector<Diagnostic>& diagnostics) {
  const Layer& layer = model.layers[index];
  LayerFactor f;
  f.layer = layer.id;
  f.base_success = layer.fail->complement();
  const auto context = failure_context(universe, index);

  if (const Refinement* r = model.find_refinement(layer.id)) {
    auto zeroed = zeroed_parts(universe, layer.id, context);
    Rational surviving = 0;
    for (const auto& part : r->parts) {
      if (zeroed.count(part.id)) {
        f.zeroed.push_back(part.id);
      } else {
        surviving += part.weight->value();
      }
    }
    f.effective_success = f.base_success * Probability(surviving);
  } else {
    auto literals = context;
    literals.push_back(Literal::of(layer.id));
    if (satisfiable(universe, literals)) {
      f.effective_success = f.base_success;
    } else {
      f.effective_success = Probability::zero();
      diagnostics.push_back({Severity::warning, 0,
                             "success of layer '" + layer.id +
                                 "' is impossible once all earlier layers fail; treated as 0",
                             DiagnosticCategory::semantic});
    }
  }
  f.fail = f.effective_success.complement();
  return f;
}

}  // namespace

ChainModel indifference_complete(ChainModel model) {
  for (auto& layer : model.layers) {
    if (!layer.fail) layer.fail = Probability::half();
  }
  for (auto& r : model.refinements) {
    if (r.weighted() || r.parts.empty()) continue;
    const auto k = static_cast<std::int64_t>(r.parts.size());
    for (auto& part : r.parts) part.weight = Probability(1, k);
  }
  return model;
}

ChainModel prepare(const ChainModel& model) {
  validate(model);
  return indifference_complete(expand_catchall(model));
}

Probability effective_success(const ChainModel& model, std::size_t layer_index) {
  const ChainModel ready = prepare(model);
  if (layer_index >= ready.layers.size()) throw ModelError("layer index out of range");
  std::vector<Diagnostic> ignored;
  return layer_factor(ready, build_universe(ready), layer_index, ignored).effective_success;
}

ChainResult eval_chain(const ChainModel& model) {
  const ChainModel ready = prepare(model);
  const Universe universe = build_universe(ready);
  ChainResult result;
  result.p_doom = Probability::one();
  for (std::size_t i = 0; i < ready.layers.size(); ++i) {
    auto factor = layer_factor(ready, universe, i, result.diagnostics);
    result.p_doom *= factor.fail;
    result.breakdown.push_back(std::move(factor));
  }
  return result;
}

}  // namespace layerrisk
