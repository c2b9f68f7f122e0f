#include "layerrisk/events.hpp"

#include <bit>

namespace layerrisk {

std::size_t Universe::index(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw ModelError("unknown event '" + std::string(id) + "'");
  return it->second;
}

const std::vector<std::string>& Universe::parts_of(std::string_view layer) const {
  static const std::vector<std::string> none;
  auto it = parts_.find(std::string(layer));
  return it == parts_.end() ? none : it->second;
}

bool Universe::admissible(World world) const {
  for (const auto& p : partitions_) {
    const int expected = (world >> p.parent) & 1u;
    if (std::popcount(world & p.parts) != expected) return false;
  }
  for (const auto& [antecedent, consequent] : implications_) {
    if ((world & antecedent) && !(world & consequent)) return false;
  }
  for (World pair : exclusions_) {
    if ((world & pair) == pair) return false;
  }
  return true;
}

Universe build_universe(const ChainModel& source) {
  const ChainModel model = expand_catchall(source);
  if (model.event_count() > kEnumerationCap) {
    throw ModelError("enumeration cap exceeded: " + std::to_string(model.event_count()) +
                     " events (max " + std::to_string(kEnumerationCap) + ")");
  }
  Universe u;
  auto add = [&](const std::string& id, EventKind kind) {
    if (!u.index_.emplace(id, u.ids_.size()).second) {
      throw ModelError("duplicate identifier '" + id + "'");
    }
    u.ids_.push_back(id);
    u.kinds_.push_back(kind);
  };
  for (const auto& l : model.layers) add(l.id, EventKind::layer_success);
  u.layer_count_ = model.layers.size();
  for (const auto& r : model.refinements) {
    auto& names = u.parts_[r.parent];
    for (const auto& p : r.parts) {
      add(p.id, EventKind::sub_event);
      names.push_back(p.id);
    }
  }
  for (const auto& e : model.auxiliaries) add(e.id, EventKind::auxiliary);

  auto bit = [&](const std::string& id) { return Universe::World{1} << u.index(id); };
  for (const auto& r : model.refinements) {
    auto parent = u.index(r.parent);
    if (parent >= u.layer_count_) {
      throw ModelError("refinement parent '" + r.parent + "' is not a layer");
    }
    Universe::World mask = 0;
    for (const auto& p : r.parts) mask |= bit(p.id);
    u.partitions_.push_back({parent, mask});
  }
  for (const auto& c : model.constraints) {
    if (const auto* i = std::get_if<Implies>(&c)) {
      u.implications_.emplace_back(bit(i->antecedent), bit(i->consequent));
    } else {
      const auto& x = std::get<Incompatible>(c);
      u.exclusions_.push_back(bit(x.a) | bit(x.b));
    }
  }
  return u;
}

bool satisfiable(const Universe& universe, const std::vector<Literal>& literals) {
  using World = Universe::World;
  World positive = 0;
  World negative = 0;
  for (const auto& lit : literals) {
    World b = World{1} << universe.index(lit.id);
    (lit.positive ? positive : negative) |= b;
  }
  if (positive & negative) return false;
  const World all = universe.size() == 32 ? ~World{0} : (World{1} << universe.size()) - 1;
  const World free = all & ~(positive | negative);
  // Walk every assignment of the unconstrained bits; the fixed bits come from the literals.
  for (World sub = free;; sub = (sub - 1) & free) {
    if (universe.admissible(sub | positive)) return true;
    if (sub == 0) break;
  }
  return false;
}

std::vector<Literal> failure_context(const Universe& universe, std::size_t layer_index) {
  std::vector<Literal> context;
  for (std::size_t i = 0; i < layer_index && i < universe.layer_count(); ++i) {
    context.push_back(Literal::negated(universe.ids()[i]));
  }
  return context;
}

std::set<std::string> zeroed_parts(const Universe& universe, std::string_view layer,
                                   const std::vector<Literal>& context) {
  std::set<std::string> zeroed;
  for (const auto& part : universe.parts_of(layer)) {
    auto literals = context;
    literals.push_back(Literal::of(part));
    if (!satisfiable(universe, literals)) zeroed.insert(part);
  }
  return zeroed;
}

ConstraintResult add_constraint(ChainModel model, Constraint constraint) {
  ConstraintResult result;
  for (const auto& id : referenced_ids(constraint)) {
    if (!model.has_event(id)) throw ModelError("unknown event '" + id + "'");
  }
  for (const auto& existing : model.constraints) {
    if (equivalent(existing, constraint)) {
      result.diagnostics.push_back({Severity::warning, 0, "duplicate constraint", DiagnosticCategory::semantic});
      break;
    }
  }
  model.constraints.push_back(std::move(constraint));
  validate(model);
  if (!build_universe(model).admissible(0)) {
    throw ModelError("all-false world became inadmissible");
  }
  result.model = std::move(model);
  return result;
}

}  // namespace layerrisk
