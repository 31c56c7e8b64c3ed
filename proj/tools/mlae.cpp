// mlae: amplitude estimation sweeps, bounds and self-checks from the command line.

#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mlae/conventional.hpp"
#include "mlae/experiments.hpp"
#include "mlae/montecarlo.hpp"
#include "mlae/output.hpp"
#include "mlae/selftest.hpp"
#include "mlae/statistics.hpp"

namespace {

const std::map<std::string, mlae::QueryConvention> kConventions = {
    {"prep-and-inverse", mlae::QueryConvention::kPreparationAndInverse},
    {"controlled-q", mlae::QueryConvention::kControlledQOnly},
};

/// Flat key=value files: every key belongs to the subcommand being run.
class SubcommandConfig : public CLI::ConfigINI {
 public:
  explicit SubcommandConfig(const CLI::App& app) : app_(app) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigINI::from_config(input);
    const auto active = app_.get_subcommands();
    if (active.empty()) return items;
    for (auto& item : items) {
      if (item.parents.empty()) item.parents.push_back(active.front()->get_name());
    }
    return items;
  }

 private:
  const CLI::App& app_;
};

struct RunOptions {
  std::vector<double> a{1.0 / 48.0};
  std::vector<std::string> schedules{"classical", "lis", "eis"};
  std::uint32_t max_m = 0;
  std::uint64_t shots = 100;
  std::uint32_t reps = 1000;
  std::uint64_t seed = 1;
  double percentile = 81.0;
  double nq_min = 1e3;
  double nq_max = 1e5;
  unsigned workers = 1;
  std::string out = ".";
  std::string format = "csv";
};

void add_run_options(CLI::App& sub, RunOptions& o, bool schedules) {
  sub.fallthrough();
  sub.add_option("--a", o.a, "Target probability (repeatable)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  if (schedules) {
    sub.add_option("--schedule", o.schedules, "Schedule kind (repeatable)")
        ->check(CLI::IsMember({"classical", "lis", "eis"}))
        ->capture_default_str();
  }
  sub.add_option("--max-m", o.max_m, "Largest schedule index M (default: reach --nq-max)");
  sub.add_option("--shots", o.shots, "Shots per circuit")->check(CLI::PositiveNumber)->capture_default_str();
  sub.add_option("--reps", o.reps, "Repetitions per point")->check(CLI::PositiveNumber)->capture_default_str();
  sub.add_option("--seed", o.seed, "Base seed")->capture_default_str();
  sub.add_option("--percentile", o.percentile, "Reported error percentile")
      ->check(CLI::Range(0.0, 100.0))
      ->capture_default_str();
  sub.add_option("--nq-min", o.nq_min, "Lower edge of the slope-fit window")->capture_default_str();
  sub.add_option("--nq-max", o.nq_max, "Upper edge of the slope-fit window")->capture_default_str();
  sub.add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sub.add_option("--out", o.out, "Output directory")->capture_default_str();
  sub.add_option("--format", o.format, "Output files")
      ->check(CLI::IsMember({"csv", "csv+svg"}))
      ->capture_default_str();
}

mlae::SweepConfig to_config(const CLI::App& sub, const RunOptions& o) {
  mlae::SweepConfig c;
  c.a_targets = o.a;
  c.kinds.clear();
  for (const auto& s : o.schedules) c.kinds.push_back(mlae::parse_schedule_kind(s));
  if (sub.count("--max-m") > 0) c.max_m = o.max_m;
  c.shots = o.shots;
  c.repetitions = o.reps;
  c.seed = o.seed;
  c.percentile = o.percentile;
  c.nq_min = o.nq_min;
  c.nq_max = o.nq_max;
  c.workers = o.workers;
  c.validate();
  return c;
}

void report(const mlae::ErrorCurve& curve, const RunOptions& o, const std::string& stem) {
  std::set<std::pair<std::string, double>> seen;
  for (const auto& row : curve.rows) {
    if (!seen.insert({row.kind, row.a_target}).second) continue;
    if (std::isnan(row.gamma_fit)) {
      std::printf("%-16s a=%-14s gamma=n/a (too few points in window)\n", row.kind.c_str(),
                  mlae::format_number(row.a_target).c_str());
    } else {
      std::printf("%-16s a=%-14s gamma=%+.4f delta=%+.4f\n", row.kind.c_str(),
                  mlae::format_number(row.a_target).c_str(), row.gamma_fit, row.delta_fit);
    }
  }
  for (const auto& path : mlae::emit_outputs(curve, {o.out, stem, o.format == "csv+svg"})) {
    std::printf("wrote %s\n", path.string().c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-likelihood amplitude estimation experiments"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file mirroring the long flags; flags take precedence");
  app.config_formatter(std::make_shared<SubcommandConfig>(app));
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Error against query count for each schedule");
  add_run_options(*sweep, sweep_opts, true);

  RunOptions compare_opts;
  std::string convention = "prep-and-inverse";
  auto* compare = app.add_subcommand("compare-conventional",
                                     "Percentile error against phase-estimation amplitude estimation");
  add_run_options(*compare, compare_opts, false);
  compare->add_option("--convention", convention, "Query counting for the conventional method")
      ->check(CLI::IsMember({"prep-and-inverse", "controlled-q"}))
      ->capture_default_str();

  RunOptions mc_opts;
  unsigned n = 2;
  double b_max = std::numbers::pi / 4;
  auto* mc = app.add_subcommand("mc-integrate", "Estimate a Riemann sum of sin^2 on the simulated circuit");
  add_run_options(*mc, mc_opts, true);
  mc->add_option("--n", n, "Domain qubits")->check(CLI::Range(1, 20))->capture_default_str();
  mc->add_option("--bmax", b_max, "Upper integration limit")->capture_default_str();

  std::string bound_kind = "eis";
  std::uint32_t bound_m = 10;
  std::uint64_t bound_shots = 100;
  std::vector<double> bound_a{1.0 / 48.0};
  auto* bounds = app.add_subcommand("bounds", "Query count and Cramer-Rao bound of one schedule");
  bounds->fallthrough();
  bounds->add_option("--schedule", bound_kind)
      ->check(CLI::IsMember({"classical", "lis", "eis"}))
      ->capture_default_str();
  bounds->add_option("--max-m", bound_m)->capture_default_str();
  bounds->add_option("--shots", bound_shots)->check(CLI::PositiveNumber)->capture_default_str();
  bounds->add_option("--a", bound_a)->check(CLI::Range(0.0, 1.0))->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Check closed forms against brute-force references");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) {
      const auto config = to_config(*sweep, sweep_opts);
      report(mlae::run_sweep(config), sweep_opts, "sweep");
    } else if (*compare) {
      const auto config = to_config(*compare, compare_opts);
      report(mlae::run_conventional_comparison(config, kConventions.at(convention)), compare_opts,
             "compare_conventional");
    } else if (*mc) {
      const mlae::IntegralProblem problem{n, b_max};
      problem.validate();
      const auto config = to_config(*mc, mc_opts);
      std::printf("exact sum S = %s\n", mlae::format_number(mlae::exact_sum(problem)).c_str());
      report(mlae::run_integration_sweep(config, problem), mc_opts, "mc_integrate");
    } else if (*bounds) {
      const auto schedule =
          mlae::make_schedule(mlae::parse_schedule_kind(bound_kind), bound_m, bound_shots);
      std::printf("schedule %s M=%u shots=%llu\n", bound_kind.c_str(), bound_m,
                  static_cast<unsigned long long>(bound_shots));
      for (double a : bound_a) {
        const auto r = mlae::bound_report(schedule, a);
        std::printf("a=%s n_queries=%llu fisher=%s crb=%s classical_bound=%s\n",
                    mlae::format_number(a).c_str(), static_cast<unsigned long long>(r.n_queries),
                    mlae::format_number(r.fisher).c_str(), mlae::format_number(r.crb_error).c_str(),
                    mlae::format_number(r.classical_bound).c_str());
      }
    } else if (*selftest) {
      bool ok = true;
      for (const auto& r : mlae::run_selftest()) {
        std::printf("[%s] %s: deviation %.3g (tolerance %.3g)\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.deviation, r.tolerance);
        ok = ok && r.passed;
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "mlae: %s\n", e.what());
    return 1;
  }
  return 0;
}
