#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "layerrisk/model.hpp"

namespace layerrisk {

/// A signed event id: `positive` asserts the event, otherwise its negation.
struct Literal {
  std::string id;
  bool positive = true;

  static Literal of(std::string id) { return {std::move(id), true}; }
  static Literal negated(std::string id) { return {std::move(id), false}; }
};

/**
 * Every event of a model with the structural axioms and user constraints
 * compiled to bitmasks over world assignments.
 *
 * Event order: layer-success events in chain order, then sub-events (by
 * refinement, then part order), then auxiliaries. A world is a V-bit mask;
 * bit i set means event i is true.
 */
class Universe {
 public:
  using World = std::uint32_t;

  struct Partition {
    std::size_t parent;
    World parts;
  };

  const std::vector<std::string>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  std::size_t layer_count() const { return layer_count_; }
  std::size_t index(std::string_view id) const;  // throws ModelError on unknown id
  bool contains(std::string_view id) const { return index_.count(std::string(id)) > 0; }
  EventKind kind(std::size_t i) const { return kinds_[i]; }

  /// Sub-event ids of a refined layer, in declaration order; empty if unrefined.
  const std::vector<std::string>& parts_of(std::string_view layer) const;

  /// Structural axioms and every constraint hold in `world`.
  bool admissible(World world) const;

 private:
  friend Universe build_universe(const ChainModel& model);

  std::vector<std::string> ids_;
  std::vector<EventKind> kinds_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, std::vector<std::string>> parts_;
  std::size_t layer_count_ = 0;
  std::vector<Partition> partitions_;
  std::vector<std::pair<World, World>> implications_;  // antecedent bit, consequent bit
  std::vector<World> exclusions_;                      // two-bit masks
};

/// Throws ModelError on invalid ids or when the event count exceeds kEnumerationCap.
Universe build_universe(const ChainModel& model);

/// True iff some admissible world satisfies every literal (exhaustive over 2^V worlds).
bool satisfiable(const Universe& universe, const std::vector<Literal>& literals);

/// Negations of the success events of layers [0, layer_index).
std::vector<Literal> failure_context(const Universe& universe, std::size_t layer_index);

/// Sub-events of `layer` that are impossible together with `context`.
std::set<std::string> zeroed_parts(const Universe& universe, std::string_view layer,
                                   const std::vector<Literal>& context);

struct ConstraintResult {
  ChainModel model;
  std::vector<Diagnostic> diagnostics;
};

/// Appends a constraint after checking its ids; a duplicate is kept but reported as a warning.
ConstraintResult add_constraint(ChainModel model, Constraint constraint);

}  // namespace layerrisk
