#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "layerrisk/model.hpp"

namespace layerrisk {

struct ParseResult {
  std::optional<ChainModel> model;  // present iff there were no errors
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
  bool has_syntax_errors() const;
};

/**
 * Parses the line-oriented model format:
 *
 *     model "<name>"
 *     layer <Id> ["<display>"] [fail=<prob>] [attemptable]
 *     event <Id> ["<display>"]
 *     refine <Id> { <SubId>=<prob>, ... }     (or unweighted: { A, B })
 *     constraint <Id> implies <Id>
 *     constraint incompatible <Id> <Id>
 *     interval fail(<Id>) [<prob>, <prob>]
 *     effect attempt(<Id>) fail(<Id>) *= <posrational>
 *     catchall stories=<int> fail=<prob>
 *
 * `#` starts a comment outside quotes. Probabilities are `a/b` or terminating
 * decimals and are converted exactly. Every diagnostic carries a line number.
 */
ParseResult parse_model(std::string_view text);

/// Canonical text: header, layers, events, refinements, constraints, intervals,
/// effects, catch-all; probabilities as lowest-terms rationals.
std::string render_model(const ChainModel& model);

}  // namespace layerrisk
