#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "layerrisk/probability.hpp"

namespace layerrisk {

/// Largest number of events a model may declare; worlds are enumerated as 2^V bitmasks.
inline constexpr std::size_t kEnumerationCap = 24;

/// Identifier of the catch-all block in parameter names (`fail(CH)`); reserved.
inline constexpr std::string_view kCatchAllId = "CH";

enum class EventKind { layer_success, sub_event, auxiliary };

struct Event {
  std::string id;
  std::string display_name;
  EventKind kind = EventKind::auxiliary;
  std::string parent;  // set for sub-events only

  friend bool operator==(const Event&, const Event&) = default;
};

/// A protection layer. `fail` is conditional on every earlier layer failing.
struct Layer {
  std::string id;
  std::string display_name;
  std::optional<Probability> fail;
  bool attemptable = false;

  friend bool operator==(const Layer&, const Layer&) = default;
};

struct RefinementPart {
  std::string id;
  std::optional<Probability> weight;

  friend bool operator==(const RefinementPart&, const RefinementPart&) = default;
};

/// Partition of a layer's success event into exclusive, exhaustive sub-events.
struct Refinement {
  std::string parent;
  std::vector<RefinementPart> parts;

  bool weighted() const;
  friend bool operator==(const Refinement&, const Refinement&) = default;
};

struct Implies {
  std::string antecedent;
  std::string consequent;
  friend bool operator==(const Implies&, const Implies&) = default;
};

struct Incompatible {
  std::string a;
  std::string b;
  friend bool operator==(const Incompatible&, const Incompatible&) = default;
};

using Constraint = std::variant<Implies, Incompatible>;

/// Same logical content; Incompatible is symmetric.
bool equivalent(const Constraint& x, const Constraint& y);
std::vector<std::string> referenced_ids(const Constraint& c);

/// A `fail(<Id>)` parameter. `fail(CH)` names the catch-all block.
struct Parameter {
  std::string target;

  static std::optional<Parameter> parse(std::string_view text);
  bool is_catchall() const { return target == kCatchAllId; }
  std::string name() const { return "fail(" + target + ")"; }
  friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct ProbabilityInterval {
  Parameter parameter;
  Probability lo;
  Probability hi;
  friend bool operator==(const ProbabilityInterval&, const ProbabilityInterval&) = default;
};

/// Attempting `trigger` multiplies `target`'s fail probability by `factor` (clamped at 1).
struct InterventionEffect {
  std::string trigger;
  std::string target;
  Rational factor{1};
  friend bool operator==(const InterventionEffect&, const InterventionEffect&) = default;
};

struct CatchAllSpec {
  unsigned stories = 0;
  Probability fail;
  friend bool operator==(const CatchAllSpec&, const CatchAllSpec&) = default;
};

struct ChainModel {
  std::string name;
  std::vector<Layer> layers;
  std::vector<Event> auxiliaries;
  std::vector<Refinement> refinements;
  std::vector<Constraint> constraints;
  std::vector<ProbabilityInterval> intervals;
  std::vector<InterventionEffect> effects;
  std::optional<CatchAllSpec> catchall;

  const Layer* find_layer(std::string_view id) const;
  std::optional<std::size_t> layer_index(std::string_view id) const;
  const Refinement* find_refinement(std::string_view parent) const;
  /// Layers + sub-events + auxiliaries + catch-all stories.
  std::size_t event_count() const;
  bool has_event(std::string_view id) const;

  friend bool operator==(const ChainModel&, const ChainModel&) = default;
};

enum class Severity { error, warning };

/// Syntax problems stop parsing a statement; semantic problems are model-level.
enum class DiagnosticCategory { syntax, semantic, io };

struct Diagnostic {
  Severity severity = Severity::error;
  std::size_t line = 0;  // 1-based; 0 when not tied to a source line
  std::string message;
  DiagnosticCategory category = DiagnosticCategory::semantic;
};

std::string format_diagnostic(const Diagnostic& d);

/// The model element a validation issue refers to, so a parser can map it to a line.
struct ItemRef {
  enum class Kind { model, layer, event, refinement, constraint, interval, effect, catchall };
  Kind kind = Kind::model;
  std::size_t index = 0;
};

struct Issue {
  Severity severity = Severity::error;
  ItemRef where;
  std::string message;
};

/// Every structural problem with a model, errors and warnings alike.
std::vector<Issue> check_model(const ChainModel& model);

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ModelError carrying the first error from check_model.
void validate(const ChainModel& model);

/// Replaces the declared catch-all block with explicit layers CH_n (fail = block probability).
ChainModel expand_catchall(ChainModel model);

}  // namespace layerrisk
