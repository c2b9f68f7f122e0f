#include "layerrisk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "layerrisk/chain.hpp"
#include "layerrisk/model_io.hpp"
#include "layerrisk/oracle.hpp"
#include "layerrisk/report.hpp"
#include "layerrisk/strategy.hpp"
#include "layerrisk/uncertainty.hpp"

namespace layerrisk {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int digits = 6;
  bool quiet = false;
  std::string model_path;
  std::string csv_path;

  std::string param;
  std::string from, to;
  std::size_t steps = 0;

  unsigned stories = 0;
  std::string fail;
  bool table = false;
  unsigned kmax = 0;
  std::string p_list;

  bool all = false;
};

Probability probability_flag(const std::string& flag, const std::string& text) {
  auto p = Probability::parse(text);
  if (!p) throw UsageError("--" + flag + ": '" + text + "' is not a probability (a/b or decimal in [0,1])");
  return *p;
}

class Runner {
 public:
  Runner(const Options& opts, std::ostream& out, std::ostream& err) : opts_(opts), out_(out), err_(err) {}

  // Loads the model, reporting diagnostics; returns an exit code when loading fails.
  std::optional<int> load() {
    std::ifstream file(opts_.model_path, std::ios::binary);
    if (!file) {
      err_ << "error: " << opts_.model_path << ": cannot read model file\n";
      return kExitParse;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    auto parsed = parse_model(buffer.str());
    for (const auto& d : parsed.diagnostics) {
      if (d.severity == Severity::warning && opts_.quiet) continue;
      err_ << opts_.model_path << ": " << format_diagnostic(d) << '\n';
    }
    if (!parsed.ok()) return parsed.has_syntax_errors() ? kExitParse : kExitValidation;
    model_ = std::move(*parsed.model);
    return std::nullopt;
  }

  void warn(const std::vector<Diagnostic>& diagnostics) {
    if (opts_.quiet) return;
    for (const auto& d : diagnostics) err_ << format_diagnostic(d) << '\n';
  }

  // Writes CSV to --csv (or stdout for `-`); otherwise the table goes to stdout.
  void emit(const std::function<std::string(const ReportOptions&)>& render) {
    out_ << render({ReportFormat::table, opts_.digits});
    if (opts_.csv_path.empty()) return;
    const auto csv = render({ReportFormat::csv, opts_.digits});
    if (opts_.csv_path == "-") {
      out_ << csv;
      return;
    }
    std::ofstream file(opts_.csv_path, std::ios::binary);
    if (!file) throw UsageError("--csv: cannot write '" + opts_.csv_path + "'");
    file << csv;
  }

  int check() {
    out_ << "ok: \"" << model_.name << "\": " << expand_catchall(model_).layers.size() << " layers, "
         << model_.event_count() << " events\n";
    return kExitOk;
  }

  int eval() {
    auto result = eval_chain(model_);
    warn(result.diagnostics);
    emit([&](const ReportOptions& o) { return render_report(result, o); });
    return kExitOk;
  }

  int oracle() {
    auto outcomes = enumerate_outcomes(model_);
    auto verdict = check_equivalence(outcomes, eval_chain(model_));
    emit([&](const ReportOptions& o) { return render_report(outcomes, verdict, o); });
    return verdict.pass ? kExitOk : kExitValidation;
  }

  int interval() {
    auto result = eval_interval(model_);
    if (model_.intervals.empty() && !opts_.quiet) err_ << "warning: model declares no intervals\n";
    emit([&](const ReportOptions& o) { return render_report(result, o); });
    return kExitOk;
  }

  int sweep_command() {
    if (opts_.steps < 2) throw UsageError("--steps must be at least 2");
    auto parameter = Parameter::parse(opts_.param);
    if (!parameter) throw ModelError("unknown parameter '" + opts_.param + "' (only fail(<Id>) can be swept)");
    auto rows = sweep(model_, *parameter, probability_flag("from", opts_.from), probability_flag("to", opts_.to),
                      opts_.steps);
    emit([&](const ReportOptions& o) { return render_report(*parameter, rows, o); });
    return kExitOk;
  }

  int tornado_command() {
    auto rows = tornado(model_);
    emit([&](const ReportOptions& o) { return render_report(rows, o); });
    return kExitOk;
  }

  int catchall() {
    if (opts_.table) {
      std::vector<Probability> ps;
      std::stringstream list(opts_.p_list);
      for (std::string item; std::getline(list, item, ',');) ps.push_back(probability_flag("p", item));
      if (ps.empty()) throw UsageError("--table needs --p <p1,p2,...>");
      auto table = catchall_table(model_, opts_.kmax, ps);
      emit([&](const ReportOptions& o) { return render_report(table, o); });
      return kExitOk;
    }
    if (opts_.fail.empty()) throw UsageError("catchall needs --fail <p> (or --table)");
    const auto p = probability_flag("fail", opts_.fail);
    auto result = eval_chain(extend_catchall(model_, opts_.stories, p));
    warn(result.diagnostics);
    emit([&](const ReportOptions& o) {
      if (o.format == ReportFormat::csv) {
        CatchAllTable single;
        single.cells.push_back({opts_.stories, p, result.p_doom});
        return render_report(single, o);
      }
      return "P(D | CH: " + std::to_string(opts_.stories) + " stories at fail " + p.str() +
             ") = " + format_probability(result.p_doom, o.digits) + "\nnote: " + std::string(kCatchAllCaveat) + "\n";
    });
    return kExitOk;
  }

  int strategy() {
    auto table = optimal_strategy(model_);
    emit([&](const ReportOptions& o) { return render_report(table, o, opts_.all ? 0 : 10); });
    return kExitOk;
  }

 private:
  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
  ChainModel model_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation of layered-defense risk models"};
  app.name("layerrisk");
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--digits", opts.digits, "Significant digits in rendered decimals")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", opts.quiet, "Suppress warnings");

  auto command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("model", opts.model_path, "Model file")->required();
    return sub;
  };
  auto* check = command("check", "Validate a model file");
  auto* eval = command("eval", "P(D) with the per-layer breakdown");
  auto* oracle = command("oracle", "Outcome distribution and equivalence with eval");
  auto* interval = command("interval", "P(D) bounds over the declared intervals");
  interval->add_option("--csv", opts.csv_path, "Also write CSV to this path ('-' for stdout)");
  auto* sweep = command("sweep", "P(D) over equally spaced values of one parameter");
  sweep->add_option("--param", opts.param, "fail(<Id>)")->required();
  sweep->add_option("--from", opts.from, "Start value")->required();
  sweep->add_option("--to", opts.to, "End value")->required();
  sweep->add_option("--steps", opts.steps, "Number of points (>= 2)")->required();
  sweep->add_option("--csv", opts.csv_path, "Also write CSV to this path ('-' for stdout)");
  auto* tornado = command("tornado", "One-at-a-time sensitivity over the declared intervals");
  tornado->add_option("--csv", opts.csv_path, "Also write CSV to this path ('-' for stdout)");
  auto* catchall = command("catchall", "P(D) conditional on a catch-all composition");
  catchall->add_option("--stories", opts.stories, "Number of catch-all stories");
  catchall->add_option("--fail", opts.fail, "Fail probability of each story");
  catchall->add_flag("--table", opts.table, "Grid over stories 0..kmax and the --p values");
  catchall->add_option("--kmax", opts.kmax, "Largest story count in the grid");
  catchall->add_option("--p", opts.p_list, "Comma-separated fail probabilities");
  catchall->add_option("--csv", opts.csv_path, "Also write CSV to this path ('-' for stdout)");
  auto* strategy = command("strategy", "Strategy table with the optimum marked");
  strategy->add_flag("--all", opts.all, "Every strategy in enumeration order");
  strategy->add_option("--csv", opts.csv_path, "Also write CSV to this path ('-' for stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Runner runner(opts, out, err);
  if (auto failed = runner.load()) return *failed;
  try {
    if (*check) return runner.check();
    if (*eval) return runner.eval();
    if (*oracle) return runner.oracle();
    if (*interval) return runner.interval();
    if (*sweep) return runner.sweep_command();
    if (*tornado) return runner.tornado_command();
    if (*catchall) return runner.catchall();
    if (*strategy) return runner.strategy();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace layerrisk
