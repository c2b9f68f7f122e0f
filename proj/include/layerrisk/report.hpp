#pragma once

#include <string>
#include <vector>

#include "layerrisk/chain.hpp"
#include "layerrisk/oracle.hpp"
#include "layerrisk/strategy.hpp"
#include "layerrisk/uncertainty.hpp"

namespace layerrisk {

/// Longest repetend printed in parentheses; longer periods are rounded instead.
inline constexpr std::size_t kMaxRepetend = 6;

/// `value` rounded half-up to `digits` significant digits, trailing zeros dropped.
std::string format_decimal(const Rational& value, int digits);

/**
 * `value` x 100 as a percentage. The exact expansion is used when it fits in
 * `digits` significant digits, with a repeating block of period <= 6 written
 * in parentheses (5/48 -> `10.41(6)%`); otherwise it is rounded.
 */
std::string format_percent(const Rational& value, int digits);

/// `5/48 (10.41(6)%)`
std::string format_probability(const Probability& p, int digits);

enum class ReportFormat { table, csv };

struct ReportOptions {
  ReportFormat format = ReportFormat::table;
  int digits = 6;
};

std::string render_report(const ChainResult& result, const ReportOptions& options);
std::string render_report(const OutcomeDistribution& outcomes, const EquivalenceReport& verdict,
                          const ReportOptions& options);
std::string render_report(const IntervalResult& result, const ReportOptions& options);
std::string render_report(const Parameter& parameter, const std::vector<SweepRow>& rows,
                          const ReportOptions& options);
std::string render_report(const std::vector<TornadoRow>& rows, const ReportOptions& options);
std::string render_report(const CatchAllTable& table, const ReportOptions& options);
std::string render_report(const StrategyTable& table, const ReportOptions& options,
                          std::size_t max_rows = 0);

}  // namespace layerrisk
