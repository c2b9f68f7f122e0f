#include "layerrisk/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace layerrisk {
namespace {

bool valid_identifier(std::string_view id) {
  if (id.empty() || !std::isalpha(static_cast<unsigned char>(id.front()))) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Index n of a `CH_<n>` identifier, or 0.
unsigned catchall_ordinal(std::string_view id) {
  if (id.size() < 4 || id.substr(0, 3) != "CH_") return 0;
  unsigned n = 0;
  for (char c : id.substr(3)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return 0;
    n = n * 10 + static_cast<unsigned>(c - '0');
    if (n > 1000000) return 0;
  }
  return n;
}

}  // namespace

bool Refinement::weighted() const {
  return std::any_of(parts.begin(), parts.end(), [](const auto& p) { return p.weight.has_value(); });
}

bool equivalent(const Constraint& x, const Constraint& y) {
  if (x.index() != y.index()) return false;
  if (const auto* i = std::get_if<Implies>(&x)) return *i == std::get<Implies>(y);
  const auto& a = std::get<Incompatible>(x);
  const auto& b = std::get<Incompatible>(y);
  return (a.a == b.a && a.b == b.b) || (a.a == b.b && a.b == b.a);
}

std::vector<std::string> referenced_ids(const Constraint& c) {
  if (const auto* i = std::get_if<Implies>(&c)) return {i->antecedent, i->consequent};
  const auto& x = std::get<Incompatible>(c);
  return {x.a, x.b};
}

std::optional<Parameter> Parameter::parse(std::string_view text) {
  constexpr std::string_view prefix = "fail(";
  if (text.size() <= prefix.size() + 1 || text.substr(0, prefix.size()) != prefix ||
      text.back() != ')') {
    return std::nullopt;
  }
  auto inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
  if (!valid_identifier(inner)) return std::nullopt;
  return Parameter{std::string(inner)};
}

const Layer* ChainModel::find_layer(std::string_view id) const {
  auto it = std::find_if(layers.begin(), layers.end(), [&](const Layer& l) { return l.id == id; });
  return it == layers.end() ? nullptr : &*it;
}

std::optional<std::size_t> ChainModel::layer_index(std::string_view id) const {
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].id == id) return i;
  }
  return std::nullopt;
}

const Refinement* ChainModel::find_refinement(std::string_view parent) const {
  auto it = std::find_if(refinements.begin(), refinements.end(),
                         [&](const Refinement& r) { return r.parent == parent; });
  return it == refinements.end() ? nullptr : &*it;
}

std::size_t ChainModel::event_count() const {
  std::size_t n = layers.size() + auxiliaries.size();
  for (const auto& r : refinements) n += r.parts.size();
  if (catchall) n += catchall->stories;
  return n;
}

bool ChainModel::has_event(std::string_view id) const {
  if (find_layer(id)) return true;
  for (const auto& e : auxiliaries) {
    if (e.id == id) return true;
  }
  for (const auto& r : refinements) {
    for (const auto& p : r.parts) {
      if (p.id == id) return true;
    }
  }
  return false;
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out = d.severity == Severity::error ? "error" : "warning";
  if (d.line > 0) out += ": line " + std::to_string(d.line);
  return out + ": " + d.message;
}

std::vector<Issue> check_model(const ChainModel& model) {
  using Kind = ItemRef::Kind;
  std::vector<Issue> issues;
  auto error = [&](Kind kind, std::size_t index, std::string message) {
    issues.push_back({Severity::error, {kind, index}, std::move(message)});
  };

  if (model.layers.empty()) error(Kind::model, 0, "model declares no layers");
  auto quotable = [](const std::string& text) {
    return text.find_first_of("\"\n\r") == std::string::npos;
  };
  if (!quotable(model.name)) error(Kind::model, 0, "model name contains a quote or newline");
  for (std::size_t i = 0; i < model.layers.size(); ++i) {
    if (!quotable(model.layers[i].display_name)) {
      error(Kind::layer, i, "display name contains a quote or newline");
    }
  }
  for (std::size_t i = 0; i < model.auxiliaries.size(); ++i) {
    if (!quotable(model.auxiliaries[i].display_name)) {
      error(Kind::event, i, "display name contains a quote or newline");
    }
  }

  std::set<std::string, std::less<>> ids;
  auto declare = [&](Kind kind, std::size_t index, const std::string& id) {
    if (!valid_identifier(id)) {
      error(kind, index, "invalid identifier '" + id + "'");
    } else if (id == kCatchAllId) {
      error(kind, index, "identifier 'CH' is reserved for the catch-all block");
    } else if (!ids.insert(id).second) {
      error(kind, index, "duplicate identifier '" + id + "'");
    }
  };
  for (std::size_t i = 0; i < model.layers.size(); ++i) declare(Kind::layer, i, model.layers[i].id);
  for (std::size_t i = 0; i < model.auxiliaries.size(); ++i) {
    declare(Kind::event, i, model.auxiliaries[i].id);
  }

  std::set<std::string, std::less<>> refined;
  for (std::size_t i = 0; i < model.refinements.size(); ++i) {
    const auto& r = model.refinements[i];
    if (!model.find_layer(r.parent)) {
      error(Kind::refinement, i, "refinement parent '" + r.parent + "' is not a declared layer");
    } else if (!refined.insert(r.parent).second) {
      error(Kind::refinement, i, "layer '" + r.parent + "' is refined more than once");
    }
    if (r.parts.size() < 2) {
      error(Kind::refinement, i, "refinement of '" + r.parent + "' needs at least 2 parts");
    }
    for (const auto& p : r.parts) declare(Kind::refinement, i, p.id);
    if (r.weighted()) {
      Rational total = 0;
      bool complete = true;
      for (const auto& p : r.parts) {
        if (!p.weight) {
          complete = false;
          continue;
        }
        if (p.weight->is_zero()) {
          error(Kind::refinement, i, "weight of '" + p.id + "' must be in (0,1]");
        }
        total += p.weight->value();
      }
      if (!complete) {
        error(Kind::refinement, i, "refinement of '" + r.parent + "' mixes weighted and unweighted parts");
      } else if (total != 1) {
        error(Kind::refinement, i,
              "weights of '" + r.parent + "' sum to " + to_string(total) + ", not 1");
      }
    }
  }

  for (std::size_t i = 0; i < model.constraints.size(); ++i) {
    const auto& c = model.constraints[i];
    auto refs = referenced_ids(c);
    bool known = true;
    for (const auto& id : refs) {
      if (!model.has_event(id)) {
        error(Kind::constraint, i, "unknown event '" + id + "'");
        known = false;
      }
    }
    if (known && refs[0] == refs[1]) {
      error(Kind::constraint, i, "constraint relates '" + refs[0] + "' to itself");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (equivalent(model.constraints[j], c)) {
        issues.push_back({Severity::warning, {Kind::constraint, i}, "duplicate constraint"});
        break;
      }
    }
  }

  for (std::size_t i = 0; i < model.intervals.size(); ++i) {
    const auto& iv = model.intervals[i];
    if (iv.parameter.is_catchall() ? !model.catchall : !model.find_layer(iv.parameter.target)) {
      error(Kind::interval, i, "interval on unknown parameter " + iv.parameter.name());
    }
    if (iv.lo > iv.hi) {
      error(Kind::interval, i, "interval " + iv.parameter.name() + " has lo > hi");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (model.intervals[j].parameter == iv.parameter) {
        error(Kind::interval, i, "second interval on " + iv.parameter.name());
        break;
      }
    }
  }

  for (std::size_t i = 0; i < model.effects.size(); ++i) {
    const auto& e = model.effects[i];
    auto trigger = model.layer_index(e.trigger);
    auto target = model.layer_index(e.target);
    if (!trigger) {
      error(Kind::effect, i, "effect trigger '" + e.trigger + "' is not a declared layer");
    } else if (!model.layers[*trigger].attemptable) {
      error(Kind::effect, i, "effect trigger '" + e.trigger + "' is not attemptable");
    }
    if (!target) {
      error(Kind::effect, i, "effect target '" + e.target + "' is not a declared layer");
    } else if (trigger && *target <= *trigger) {
      error(Kind::effect, i, "effect target '" + e.target + "' does not come after '" + e.trigger + "'");
    }
    if (e.factor <= 0) error(Kind::effect, i, "effect factor must be positive");
  }

  if (model.catchall) {
    unsigned base = 0;
    for (const auto& l : model.layers) base = std::max(base, catchall_ordinal(l.id));
    for (unsigned k = 1; k <= model.catchall->stories; ++k) {
      auto id = "CH_" + std::to_string(base + k);
      if (ids.count(id)) {
        error(Kind::catchall, 0, "catch-all layer '" + id + "' collides with a declared event");
        break;
      }
    }
  }

  if (model.event_count() > kEnumerationCap) {
    error(Kind::model, 0,
          "enumeration cap exceeded: " + std::to_string(model.event_count()) + " events (max " +
              std::to_string(kEnumerationCap) + ")");
  }
  return issues;
}

void validate(const ChainModel& model) {
  for (const auto& issue : check_model(model)) {
    if (issue.severity == Severity::error) throw ModelError(issue.message);
  }
}

ChainModel expand_catchall(ChainModel model) {
  if (!model.catchall) return model;
  unsigned base = 0;
  for (const auto& l : model.layers) base = std::max(base, catchall_ordinal(l.id));
  for (unsigned k = 1; k <= model.catchall->stories; ++k) {
    model.layers.push_back(Layer{"CH_" + std::to_string(base + k), {}, model.catchall->fail, false});
  }
  model.catchall.reset();
  return model;
}

}  // namespace layerrisk
