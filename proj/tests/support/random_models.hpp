#pragma once

// Test-only generators and reference checks. Nothing here calls into the
// bitmask enumerator under test.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "layerrisk/model.hpp"

namespace layerrisk::testing {

inline Probability random_probability(std::mt19937_64& rng, std::int64_t max_den = 12) {
  std::uniform_int_distribution<std::int64_t> den_dist(1, max_den);
  const auto den = den_dist(rng);
  std::uniform_int_distribution<std::int64_t> num_dist(0, den);
  return Probability(num_dist(rng), den);
}

/// k positive weights summing to exactly 1.
inline std::vector<Probability> random_weights(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<std::int64_t> dist(1, 9);
  std::vector<std::int64_t> raw(k);
  std::int64_t total = 0;
  for (auto& r : raw) total += (r = dist(rng));
  std::vector<Probability> out;
  for (auto r : raw) out.emplace_back(r, total);
  return out;
}

struct RandomModelOptions {
  std::size_t max_layers = 6;
  std::size_t max_refined = 3;
  std::size_t max_parts = 3;
  std::size_t max_constraints = 4;
  std::size_t max_auxiliaries = 1;
};

/// A validated model: 1..max_layers layers with random fail probabilities
/// (some left for indifference), up to max_refined refinements of 2..max_parts
/// parts, and random Implies/Incompatible constraints.
inline ChainModel random_model(std::mt19937_64& rng, const RandomModelOptions& opt = {}) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  ChainModel m;
  m.name = "random";
  const std::size_t n = pick(1, opt.max_layers);
  for (std::size_t i = 0; i < n; ++i) {
    Layer l;
    l.id = "L" + std::to_string(i);
    if (pick(0, 4) != 0) l.fail = random_probability(rng);
    m.layers.push_back(l);
  }
  std::vector<std::string> events;
  for (const auto& l : m.layers) events.push_back(l.id);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t refined = std::min(n, pick(0, opt.max_refined));
  for (std::size_t r = 0; r < refined; ++r) {
    Refinement ref;
    ref.parent = m.layers[order[r]].id;
    const std::size_t k = pick(2, opt.max_parts);
    const bool weighted = pick(0, 3) != 0;
    auto weights = random_weights(rng, k);
    for (std::size_t j = 0; j < k; ++j) {
      RefinementPart part{ref.parent + "_" + std::to_string(j), std::nullopt};
      if (weighted) part.weight = weights[j];
      events.push_back(part.id);
      ref.parts.push_back(part);
    }
    m.refinements.push_back(ref);
  }
  const std::size_t aux = pick(0, opt.max_auxiliaries);
  for (std::size_t i = 0; i < aux; ++i) {
    m.auxiliaries.push_back(Event{"X" + std::to_string(i), "", EventKind::auxiliary, ""});
    events.push_back(m.auxiliaries.back().id);
  }
  const std::size_t constraints = pick(0, opt.max_constraints);
  for (std::size_t c = 0; c < constraints; ++c) {
    auto a = events[pick(0, events.size() - 1)];
    auto b = events[pick(0, events.size() - 1)];
    if (a == b) continue;
    if (pick(0, 2) == 0) {
      m.constraints.emplace_back(Incompatible{a, b});
    } else {
      m.constraints.emplace_back(Implies{a, b});
    }
  }
  validate(m);
  return m;
}

/// Independent admissibility: assigns worlds from a string-keyed map, walking
/// assignments from the all-true world downward.
class ReferenceSemantics {
 public:
  explicit ReferenceSemantics(const ChainModel& model) : model_(model) {
    for (const auto& l : model.layers) ids_.push_back(l.id);
    for (const auto& r : model.refinements) {
      for (const auto& p : r.parts) ids_.push_back(p.id);
    }
    for (const auto& e : model.auxiliaries) ids_.push_back(e.id);
  }

  bool admissible(const std::map<std::string, bool>& w) const {
    for (const auto& r : model_.refinements) {
      int count = 0;
      for (const auto& p : r.parts) count += w.at(p.id) ? 1 : 0;
      if (count != (w.at(r.parent) ? 1 : 0)) return false;
    }
    for (const auto& c : model_.constraints) {
      if (const auto* i = std::get_if<Implies>(&c)) {
        if (w.at(i->antecedent) && !w.at(i->consequent)) return false;
      } else {
        const auto& x = std::get<Incompatible>(c);
        if (w.at(x.a) && w.at(x.b)) return false;
      }
    }
    return true;
  }

  bool satisfiable(const std::vector<std::pair<std::string, bool>>& literals) const {
    const std::size_t v = ids_.size();
    for (std::uint64_t code = (std::uint64_t{1} << v); code-- > 0;) {
      std::map<std::string, bool> w;
      for (std::size_t i = 0; i < v; ++i) w[ids_[i]] = (code >> (v - 1 - i)) & 1u;
      bool ok = true;
      for (const auto& [id, value] : literals) ok = ok && w.at(id) == value;
      if (ok && admissible(w)) return true;
    }
    return false;
  }

  const std::vector<std::string>& ids() const { return ids_; }

 private:
  const ChainModel& model_;
  std::vector<std::string> ids_;
};

}  // namespace layerrisk::testing
