#pragma once

#include <string>
#include <vector>

#include "layerrisk/chain.hpp"

namespace layerrisk {

/// Appends `stories` unrefined layers CH_n with fail probability `fail` after the
/// existing layers. P(doom) scales by fail^stories.
ChainModel extend_catchall(ChainModel model, unsigned stories, Probability fail);

/// Point value of a fail(.) parameter after indifference completion.
Probability parameter_value(const ChainModel& model, const Parameter& parameter);

/// Copy of `model` with the parameter pinned to `value`; throws ModelError on unknown parameters.
ChainModel with_parameter(ChainModel model, const Parameter& parameter, Probability value);

struct IntervalResult {
  Probability lo;
  Probability hi;
};

/// P(doom) is non-decreasing in every fail(.) parameter, so the bounds sit at
/// the all-lo and all-hi corners.
IntervalResult eval_interval(const ChainModel& model);

struct SweepRow {
  Probability value;
  Probability p_doom;
};

/// `steps` equally spaced values from lo to hi inclusive.
std::vector<SweepRow> sweep(const ChainModel& model, const Parameter& parameter, Probability lo,
                            Probability hi, std::size_t steps);

struct CatchAllCell {
  unsigned stories = 0;
  Probability fail;
  Probability p_doom;
};

inline constexpr std::string_view kCatchAllCaveat =
    "estimates are conditional on the stated catch-all composition and on model closure; "
    "interactions among unknown stories are not modeled";

struct CatchAllTable {
  std::vector<CatchAllCell> cells;  // k-major, p-minor
  std::string caveat{kCatchAllCaveat};
};

CatchAllTable catchall_table(const ChainModel& model, unsigned k_max,
                             const std::vector<Probability>& p_values);

struct TornadoRow {
  Parameter parameter;
  Probability lo;
  Probability hi;
  Probability p_doom_at_lo;
  Probability p_doom_at_hi;
  Probability spread;
};

/// One-at-a-time sensitivity: each interval parameter at its endpoints while the
/// others sit at their interval midpoints. Sorted by spread, widest first.
std::vector<TornadoRow> tornado(const ChainModel& model);

}  // namespace layerrisk
