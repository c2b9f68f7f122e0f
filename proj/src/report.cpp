#include "layerrisk/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace layerrisk {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BigInt pow10(unsigned n) { return boost::multiprecision::pow(BigInt(10), n); }

Rational pow10_signed(int e) {
  return e >= 0 ? Rational(pow10(static_cast<unsigned>(e))) : Rational(BigInt(1), pow10(static_cast<unsigned>(-e)));
}

BigInt floor_of(const Rational& x) {
  // Non-negative inputs only.
  return numerator(x) / denominator(x);
}

std::string strip_trailing_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

// Significant digits in an integer part followed by fractional digits.
std::size_t significant(const BigInt& whole, const std::string& frac) {
  if (whole != 0) return whole.str().size() + frac.size();
  auto first = frac.find_first_not_of('0');
  return first == std::string::npos ? 0 : frac.size() - first;
}

std::string csv_decimal(const Probability& p, int digits) { return format_decimal(p.value(), digits); }

// Left-aligned columns separated by two spaces, trailing blanks trimmed.
std::string columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace

std::string format_decimal(const Rational& value, int digits) {
  if (digits < 1) digits = 1;
  if (value < 0) return "-" + format_decimal(-value, digits);
  if (value == 0) return "0";

  // 10^e <= value < 10^(e+1)
  int e = static_cast<int>(numerator(value).str().size()) - static_cast<int>(denominator(value).str().size());
  while (pow10_signed(e) > value) --e;
  while (pow10_signed(e + 1) <= value) ++e;

  const Rational scaled = value * pow10_signed(digits - 1 - e);
  BigInt n = floor_of(scaled + Rational(1, 2));
  if (n >= pow10(static_cast<unsigned>(digits))) {
    n /= 10;
    ++e;
  }
  std::string s = n.str();
  const int point = e + 1;
  const int len = static_cast<int>(s.size());
  std::string out;
  if (point >= len) {
    out = s + std::string(static_cast<std::size_t>(point - len), '0');
  } else if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + s;
  } else {
    out = s.substr(0, static_cast<std::size_t>(point)) + "." + s.substr(static_cast<std::size_t>(point));
  }
  return strip_trailing_zeros(out);
}

std::string format_percent(const Rational& value, int digits) {
  if (digits < 1) digits = 1;
  const Rational x = value * 100;
  if (x == 0) return "0%";
  if (x < 0) return format_decimal(x, digits) + "%";

  const BigInt whole = floor_of(x);
  const Rational frac = x - Rational(whole);
  const BigInt d = denominator(frac);
  BigInt r = numerator(frac);

  BigInt m = d;
  unsigned twos = 0, fives = 0;
  while (m % 2 == 0) { m /= 2; ++twos; }
  while (m % 5 == 0) { m /= 5; ++fives; }
  const unsigned pre = std::max(twos, fives);

  std::string prefix;
  for (unsigned i = 0; i < pre; ++i) {
    r *= 10;
    prefix += static_cast<char>('0' + static_cast<int>(r / d));
    r %= d;
  }

  if (m == 1) {
    std::string exact = whole.str() + (prefix.empty() ? "" : "." + prefix);
    if (significant(whole, prefix) <= static_cast<std::size_t>(digits)) return exact + "%";
    return format_decimal(x, digits) + "%";
  }

  // After the non-repeating prefix the remainders cycle back to `start`.
  const BigInt start = r;
  std::string period;
  do {
    r *= 10;
    period += static_cast<char>('0' + static_cast<int>(r / d));
    r %= d;
  } while (r != start && period.size() <= kMaxRepetend);

  if (r == start && period.size() <= kMaxRepetend &&
      significant(whole, prefix) + period.size() <= static_cast<std::size_t>(digits)) {
    return whole.str() + "." + prefix + "(" + period + ")%";
  }
  return format_decimal(x, digits) + "%";
}

std::string format_probability(const Probability& p, int digits) {
  return p.str() + " (" + format_percent(p.value(), digits) + ")";
}

std::string render_report(const ChainResult& result, const ReportOptions& options) {
  const int digits = options.digits;
  if (options.format == ReportFormat::csv) {
    std::string out = "parameter,value,p_doom\n";
    for (const auto& f : result.breakdown) {
      out += "fail(" + f.layer + ")," + csv_decimal(f.fail, digits) + "," + csv_decimal(result.p_doom, digits) + "\n";
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows{{"layer", "P(fail | earlier layers failed)", ""}};
  for (const auto& f : result.breakdown) {
    std::string note;
    if (!f.zeroed.empty()) {
      note = "zeroed:";
      for (const auto& z : f.zeroed) note += " " + z;
    }
    rows.push_back({f.layer, format_probability(f.fail, digits), note});
  }
  return "P(D) = " + format_probability(result.p_doom, digits) + "\n" + columns(rows);
}

std::string render_report(const OutcomeDistribution& outcomes, const EquivalenceReport& verdict,
                          const ReportOptions& options) {
  const int digits = options.digits;
  if (options.format == ReportFormat::csv) {
    std::string out = "parameter,value,p_doom\n";
    for (std::size_t i = 0; i < outcomes.layers.size(); ++i) {
      out += "survive(" + outcomes.layers[i] + ")," + csv_decimal(outcomes.survive_at[i], digits) + "," +
             csv_decimal(outcomes.doom, digits) + "\n";
    }
    out += "doom," + csv_decimal(outcomes.doom, digits) + "," + csv_decimal(outcomes.doom, digits) + "\n";
    return out;
  }
  std::vector<std::vector<std::string>> rows{{"outcome", "probability"}};
  for (std::size_t i = 0; i < outcomes.layers.size(); ++i) {
    rows.push_back({"survive at " + outcomes.layers[i], format_probability(outcomes.survive_at[i], digits)});
  }
  rows.push_back({"doom", format_probability(outcomes.doom, digits)});
  rows.push_back({"total", to_string(outcomes.total())});
  return columns(rows) + "equivalence: " + (verdict.pass ? "pass" : "FAIL") + " (eval_chain " +
         verdict.chain_doom.str() + (verdict.chain_doom == verdict.oracle_doom ? " == " : " != ") + "oracle " +
         verdict.oracle_doom.str() + (verdict.normalized ? "" : "; outcomes do not sum to 1") + ")\n";
}

std::string render_report(const IntervalResult& result, const ReportOptions& options) {
  const int digits = options.digits;
  if (options.format == ReportFormat::csv) {
    return "parameter,value,p_doom\ncorner,lo," + csv_decimal(result.lo, digits) + "\ncorner,hi," +
           csv_decimal(result.hi, digits) + "\n";
  }
  return "P(D) in [" + format_probability(result.lo, digits) + ", " + format_probability(result.hi, digits) + "]\n";
}

std::string render_report(const Parameter& parameter, const std::vector<SweepRow>& rows,
                          const ReportOptions& options) {
  const int digits = options.digits;
  if (options.format == ReportFormat::csv) {
    std::string out = "parameter,value,p_doom\n";
    for (const auto& r : rows) {
      out += parameter.name() + "," + csv_decimal(r.value, digits) + "," + csv_decimal(r.p_doom, digits) + "\n";
    }
    return out;
  }
  std::vector<std::vector<std::string>> table{{parameter.name(), "P(D)"}};
  for (const auto& r : rows) table.push_back({format_probability(r.value, digits), format_probability(r.p_doom, digits)});
  return columns(table);
}

std::string render_report(const std::vector<TornadoRow>& rows, const ReportOptions& options) {
  const int digits = options.digits;
  if (options.format == ReportFormat::csv) {
    std::string out = "parameter,value,p_doom\n";
    for (const auto& r : rows) {
      out += r.parameter.name() + "," + csv_decimal(r.lo, digits) + "," + csv_decimal(r.p_doom_at_lo, digits) + "\n";
      out += r.parameter.name() + "," + csv_decimal(r.hi, digits) + "," + csv_decimal(r.p_doom_at_hi, digits) + "\n";
    }
    return out;
  }
  std::vector<std::vector<std::string>> table{{"parameter", "range", "P(D) at lo", "P(D) at hi", "spread"}};
  for (const auto& r : rows) {
    table.push_back({r.parameter.name(), "[" + r.lo.str() + ", " + r.hi.str() + "]",
                     format_probability(r.p_doom_at_lo, digits), format_probability(r.p_doom_at_hi, digits),
                     format_probability(r.spread, digits)});
  }
  return columns(table) + "other interval parameters held at their midpoints\n";
}

std::string render_report(const CatchAllTable& table, const ReportOptions& options) {
  const int digits = options.digits;
  if (options.format == ReportFormat::csv) {
    std::string out = "parameter,value,p_doom,caveat\n";
    for (const auto& c : table.cells) {
      out += "catchall(stories=" + std::to_string(c.stories) + ")," + csv_decimal(c.fail, digits) + "," +
             csv_decimal(c.p_doom, digits) + ",conditional on CH composition stories=" + std::to_string(c.stories) +
             " fail=" + c.fail.str() + "\n";
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows{{"stories", "fail(CH)", "P(D | CH composition)"}};
  for (const auto& c : table.cells) {
    rows.push_back({std::to_string(c.stories), c.fail.str(), format_probability(c.p_doom, digits)});
  }
  return columns(rows) + "note: " + table.caveat + "\n";
}

std::string render_report(const StrategyTable& table, const ReportOptions& options, std::size_t max_rows) {
  const int digits = options.digits;
  std::vector<std::size_t> order(table.rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (max_rows > 0) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (a == table.best || b == table.best) return a == table.best && b != table.best;
      return table.rows[a].p_doom < table.rows[b].p_doom;
    });
    if (order.size() > max_rows) order.resize(max_rows);
  }
  if (options.format == ReportFormat::csv) {
    std::string out = "parameter,value,p_doom\n";
    for (auto i : order) {
      std::string attempted;
      for (const auto& id : table.rows[i].strategy.attempted) attempted += (attempted.empty() ? "" : ";") + id;
      out += std::string(i == table.best ? "optimal" : "strategy") + "," + attempted + "," +
             csv_decimal(table.rows[i].p_doom, digits) + "\n";
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows{{"", "attempted", "P(D)"}};
  for (auto i : order) {
    rows.push_back({i == table.best ? "*" : "", to_string(table.rows[i].strategy),
                    format_probability(table.rows[i].p_doom, digits)});
  }
  std::string out = "optimal strategy: " + to_string(table.optimum().strategy) + " with P(D) = " +
                    format_probability(table.optimum().p_doom, digits) + "\n" + columns(rows);
  if (order.size() < table.rows.size()) {
    out += "(" + std::to_string(table.rows.size() - order.size()) + " more strategies; use --all)\n";
  }
  return out;
}

}  // namespace layerrisk
