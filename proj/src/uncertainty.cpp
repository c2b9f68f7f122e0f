#include "layerrisk/uncertainty.hpp"

#include <algorithm>
#include <set>

namespace layerrisk {
namespace {

ChainModel pin_all(ChainModel model, bool high) {
  const auto intervals = model.intervals;
  for (const auto& iv : intervals) {
    model = with_parameter(std::move(model), iv.parameter, high ? iv.hi : iv.lo);
  }
  return model;
}

Probability midpoint(const ProbabilityInterval& iv) {
  return Probability((iv.lo.value() + iv.hi.value()) / 2);
}

// Chain position of a parameter; the catch-all block sorts after every layer.
std::size_t chain_position(const ChainModel& model, const Parameter& p) {
  if (p.is_catchall()) return model.layers.size();
  return model.layer_index(p.target).value_or(model.layers.size());
}

}  // namespace

ChainModel extend_catchall(ChainModel model, unsigned stories, Probability fail) {
  if (stories == 0) return model;
  std::set<std::string> taken;
  for (const auto& l : model.layers) taken.insert(l.id);
  unsigned n = 0;
  for (unsigned added = 0; added < stories;) {
    auto id = "CH_" + std::to_string(++n);
    if (taken.count(id)) continue;
    model.layers.push_back(Layer{id, {}, fail, false});
    ++added;
  }
  if (model.event_count() > kEnumerationCap) {
    throw ModelError("enumeration cap exceeded: " + std::to_string(model.event_count()) +
                     " events (max " + std::to_string(kEnumerationCap) + ")");
  }
  validate(model);
  return model;
}

Probability parameter_value(const ChainModel& model, const Parameter& parameter) {
  if (parameter.is_catchall()) {
    if (!model.catchall) throw ModelError("unknown parameter " + parameter.name());
    return model.catchall->fail;
  }
  const Layer* layer = model.find_layer(parameter.target);
  if (!layer) throw ModelError("unknown parameter " + parameter.name());
  return layer->fail.value_or(Probability::half());
}

ChainModel with_parameter(ChainModel model, const Parameter& parameter, Probability value) {
  if (parameter.is_catchall()) {
    if (!model.catchall) throw ModelError("unknown parameter " + parameter.name());
    model.catchall->fail = value;
    return model;
  }
  auto index = model.layer_index(parameter.target);
  if (!index) throw ModelError("unknown parameter " + parameter.name());
  model.layers[*index].fail = value;
  return model;
}

IntervalResult eval_interval(const ChainModel& model) {
  validate(model);
  return {eval_chain(pin_all(model, false)).p_doom, eval_chain(pin_all(model, true)).p_doom};
}

std::vector<SweepRow> sweep(const ChainModel& model, const Parameter& parameter, Probability lo,
                            Probability hi, std::size_t steps) {
  if (steps < 2) throw ModelError("sweep needs at least 2 steps");
  if (lo > hi) throw ModelError("sweep range has lo > hi");
  validate(model);
  parameter_value(model, parameter);  // rejects unknown parameters before any work
  std::vector<SweepRow> rows;
  const Rational step = (hi.value() - lo.value()) / static_cast<long long>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    Probability value = i + 1 == steps ? hi : Probability(lo.value() + step * static_cast<long long>(i));
    rows.push_back({value, eval_chain(with_parameter(model, parameter, value)).p_doom});
  }
  return rows;
}

CatchAllTable catchall_table(const ChainModel& model, unsigned k_max,
                             const std::vector<Probability>& p_values) {
  validate(model);
  CatchAllTable table;
  for (unsigned k = 0; k <= k_max; ++k) {
    for (const auto& p : p_values) {
      table.cells.push_back({k, p, eval_chain(extend_catchall(model, k, p)).p_doom});
    }
  }
  return table;
}

std::vector<TornadoRow> tornado(const ChainModel& model) {
  validate(model);
  if (model.intervals.empty()) throw ModelError("tornado needs at least one interval");
  ChainModel centered = model;
  for (const auto& iv : model.intervals) {
    centered = with_parameter(std::move(centered), iv.parameter, midpoint(iv));
  }
  std::vector<TornadoRow> rows;
  for (const auto& iv : model.intervals) {
    TornadoRow row{iv.parameter, iv.lo, iv.hi, {}, {}, {}};
    row.p_doom_at_lo = eval_chain(with_parameter(centered, iv.parameter, iv.lo)).p_doom;
    row.p_doom_at_hi = eval_chain(with_parameter(centered, iv.parameter, iv.hi)).p_doom;
    row.spread = Probability(row.p_doom_at_hi.value() - row.p_doom_at_lo.value());
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [&](const TornadoRow& a, const TornadoRow& b) {
    if (a.spread != b.spread) return a.spread > b.spread;
    return chain_position(model, a.parameter) < chain_position(model, b.parameter);
  });
  return rows;
}

}  // namespace layerrisk
