#include "layerrisk/oracle.hpp"

#include <map>
#include <optional>

namespace layerrisk {
namespace {

// Depth-first search for an admissible world, assigning events one at a time
// and rejecting a branch as soon as an assigned clause is violated.
class WorldSearch {
 public:
  explicit WorldSearch(const ChainModel& model) : model_(model) {
    // Auxiliaries, then sub-events, then layers in reverse chain order.
    for (const auto& e : model.auxiliaries) order_.push_back(e.id);
    for (const auto& r : model.refinements) {
      for (const auto& p : r.parts) order_.push_back(p.id);
    }
    for (auto it = model.layers.rbegin(); it != model.layers.rend(); ++it) order_.push_back(it->id);
  }

  bool exists(const std::map<std::string, bool>& fixed) {
    world_ = fixed;
    return search(0);
  }

 private:
  std::optional<bool> value(const std::string& id) const {
    auto it = world_.find(id);
    if (it == world_.end()) return std::nullopt;
    return it->second;
  }

  bool consistent() const {
    for (const auto& c : model_.constraints) {
      if (const auto* i = std::get_if<Implies>(&c)) {
        if (value(i->antecedent) == true && value(i->consequent) == false) return false;
      } else {
        const auto& x = std::get<Incompatible>(c);
        if (value(x.a) == true && value(x.b) == true) return false;
      }
    }
    for (const auto& r : model_.refinements) {
      int true_parts = 0;
      bool all_assigned = true;
      for (const auto& p : r.parts) {
        auto v = value(p.id);
        if (!v) all_assigned = false;
        else if (*v) ++true_parts;
      }
      auto parent = value(r.parent);
      if (true_parts > 1) return false;
      if (parent == false && true_parts > 0) return false;
      if (parent && all_assigned && true_parts != (*parent ? 1 : 0)) return false;
    }
    return true;
  }

  bool search(std::size_t next) {
    if (!consistent()) return false;
    while (next < order_.size() && world_.count(order_[next])) ++next;
    if (next == order_.size()) return true;
    const auto& id = order_[next];
    for (bool v : {false, true}) {
      world_[id] = v;
      if (search(next + 1)) return true;
    }
    world_.erase(id);
    return false;
  }

  const ChainModel& model_;
  std::vector<std::string> order_;
  std::map<std::string, bool> world_;
};

}  // namespace

Rational OutcomeDistribution::total() const {
  Rational sum = doom.value();
  for (const auto& p : survive_at) sum += p.value();
  return sum;
}

OutcomeDistribution enumerate_outcomes(const ChainModel& model) {
  const ChainModel ready = prepare(model);
  WorldSearch search(ready);
  OutcomeDistribution out;
  Rational reach = 1;  // probability that every layer so far has failed
  std::map<std::string, bool> context;
  for (const auto& layer : ready.layers) {
    Rational success_mass = 0;
    if (const Refinement* r = ready.find_refinement(layer.id)) {
      for (const auto& part : r->parts) {
        auto fixed = context;
        fixed[part.id] = true;
        if (search.exists(fixed)) success_mass += part.weight->value();
      }
    } else {
      auto fixed = context;
      fixed[layer.id] = true;
      if (search.exists(fixed)) success_mass = 1;
    }
    const Rational success = (Rational(1) - layer.fail->value()) * success_mass;
    out.layers.push_back(layer.id);
    out.survive_at.emplace_back(reach * success);
    reach *= Rational(1) - success;
    context[layer.id] = false;
  }
  out.doom = Probability(reach);
  return out;
}

EquivalenceReport check_equivalence(const OutcomeDistribution& outcomes, const ChainResult& chain) {
  EquivalenceReport report;
  report.chain_doom = chain.p_doom;
  report.oracle_doom = outcomes.doom;
  report.normalized = outcomes.total() == 1;
  report.pass = report.normalized && chain.p_doom == outcomes.doom;
  return report;
}

EquivalenceReport check_equivalence(const ChainModel& model) {
  return check_equivalence(enumerate_outcomes(model), eval_chain(model));
}

}  // namespace layerrisk
