// vicsim: spontaneous emission of two radiatively coupled V-type atoms.
//
//   vicsim run    --config <file> [overrides] [--out <path>]
//   vicsim sweep  --param <name> --from <a> --to <b> --count <n> [--log] --reduce <mode>
//   vicsim preset <name> [--out <path>] [--print-config]
//
// Exit status: 0 success, 1 configuration error, 2 runtime invariant breach.

#include <cstdio>
#include <deque>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "vicsim/config.hpp"
#include "vicsim/csv.hpp"
#include "vicsim/integrate.hpp"
#include "vicsim/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

// Flags that map one-to-one onto config keys; set values override the file.
struct Overrides {
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::pair<std::string, std::string>> storage_keys;
  std::deque<std::string> storage; // CLI11 binds to these; addresses must stay stable

  void add(CLI::App* app, const std::string& flag, const std::string& key,
           const std::string& help) {
    storage_keys.emplace_back(flag, key);
    storage.emplace_back();
    app->add_option(flag, storage.back(), help);
  }

  void collect(CLI::App* app) {
    for (std::size_t n = 0; n < storage_keys.size(); ++n) {
      const auto& [flag, key] = storage_keys[n];
      if (app->count(flag) > 0) values.emplace_back(key, storage[n]);
    }
  }
};

void add_config_overrides(CLI::App* app, Overrides& o) {
  o.add(app, "--theta", "theta", "polar angle of R, in units of pi");
  o.add(app, "--phi", "phi", "azimuth of R, in units of pi");
  o.add(app, "--r", "r", "separation in wavelengths");
  o.add(app, "--delta", "delta", "excited-state splitting, units of gamma");
  o.add(app, "--model", "model", "dipole model: real|spherical");
  o.add(app, "--dt", "dt", "time step, units of 1/gamma");
  o.add(app, "--tmax", "tmax", "final time, units of 1/gamma");
  o.add(app, "--sample-every", "sample_every", "store every n-th step");
  o.add(app, "--initial", "initial_state", "initial basis state, e.g. 1A3B");
  o.add(app, "--observables", "observables", "comma list of p_ij, rho12A, coeffs");
  o.add(app, "--frame", "frame", "integration frame: interaction|rotating");
  o.add(app, "--cross-terms", "cross_terms", "on|off: keep the GammaVc/OmegaVc terms");
  o.add(app, "--out", "out", "output CSV path (stdout if omitted)");
}

vicsim::RunPlan build_plan(const std::string& config_path, const Overrides& o,
                           vicsim::RunPlan base = {}) {
  vicsim::RunPlan plan = std::move(base);
  if (!config_path.empty()) plan = vicsim::plan_from_key_values(vicsim::read_key_value_file(config_path), plan);
  for (const auto& [key, value] : o.values) vicsim::set_config_value(plan.config, key, value);
  return plan;
}

void emit(const vicsim::CsvTable& table, const std::string& path) {
  if (path.empty())
    vicsim::write_csv(std::cout, table);
  else
    vicsim::write_csv_file(path, table);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vacuum-induced coherence simulator for two coupled V-type atoms"};
  app.require_subcommand(1);

  std::string config_path;
  std::size_t workers = vicsim::default_worker_count();

  // run
  auto* run = app.add_subcommand("run", "propagate one configuration and write observables");
  Overrides run_overrides;
  bool verbose = false;
  run->add_option("--config", config_path, "key=value configuration file");
  add_config_overrides(run, run_overrides);
  run->add_flag("--verbose", verbose, "print integrator diagnostics to stderr");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a one-parameter sweep");
  Overrides sweep_overrides;
  std::string sweep_param, reduce_mode = "full";
  double sweep_from = 0.0, sweep_to = 0.0;
  int sweep_count = 0;
  bool sweep_log = false;
  sweep->add_option("--config", config_path, "key=value configuration file");
  sweep->add_option("--param", sweep_param, "r_over_lambda|theta|phi|delta");
  sweep->add_option("--from", sweep_from, "first value");
  sweep->add_option("--to", sweep_to, "last value");
  sweep->add_option("--count", sweep_count, "number of points (>= 2)");
  sweep->add_flag("--log", sweep_log, "logarithmic spacing");
  sweep->add_option("--reduce", reduce_mode, "coefficients|peak_value|full");
  sweep->add_option("--workers", workers, "concurrent sweep points");
  add_config_overrides(sweep, sweep_overrides);

  // preset
  auto* pre = app.add_subcommand("preset", "run a figure preset");
  std::string preset_name, preset_out;
  bool print_config = false;
  pre->add_option("name", preset_name, "fig3|fig4|fig5|fig6a|fig6b|fig7|fig8")->required();
  pre->add_option("--out", preset_out, "output CSV path (stdout if omitted)");
  pre->add_flag("--print-config", print_config, "print the preset as key=value text and exit");
  pre->add_option("--workers", workers, "concurrent sweep points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) {
      run_overrides.collect(run);
      vicsim::RunPlan plan = build_plan(config_path, run_overrides);
      plan.config.validate();
      const vicsim::Trajectory traj =
          vicsim::evolve(plan.config.initial_state(), plan.config.grid, plan.config.model_params());
      if (verbose) {
        std::fprintf(stderr,
                     "samples=%zu max_step_error=%.3e max_trace_error=%.3e "
                     "max_hermiticity=%.3e min_eigenvalue=%.3e\n",
                     traj.size(), traj.max_step_error, traj.worst.trace_error,
                     traj.worst.hermiticity, traj.worst.min_eigenvalue);
      }
      emit(vicsim::observables_table(plan.config, traj), plan.config.output_path);
    } else if (*sweep) {
      sweep_overrides.collect(sweep);
      vicsim::RunPlan plan = build_plan(config_path, sweep_overrides);
      vicsim::SweepSpec spec = plan.sweep.value_or(vicsim::SweepSpec{});
      if (sweep->count("--param")) spec.parameter = vicsim::parse_sweep_parameter(sweep_param);
      if (sweep->count("--from")) spec.start = sweep_from;
      if (sweep->count("--to")) spec.stop = sweep_to;
      if (sweep->count("--count")) spec.count = sweep_count;
      if (sweep_log) spec.scale = vicsim::SweepScale::Log;
      if (sweep->count("--reduce") || !plan.sweep) plan.reduce = vicsim::parse_reduce_mode(reduce_mode);
      if (plan.reduce == vicsim::ReduceMode::Coefficients)
        plan.config.observables = {vicsim::ObservableLabel::parse("coeffs")};
      emit(vicsim::run_sweep(plan.config, spec, plan.reduce, workers), plan.config.output_path);
    } else if (*pre) {
      vicsim::RunPlan plan = vicsim::preset(preset_name);
      if (print_config) {
        std::cout << vicsim::to_config_text(plan);
        return kExitOk;
      }
      emit(vicsim::run_plan(plan, workers), preset_out);
    }
  } catch (const vicsim::InvariantBreach& e) {
    std::cerr << "vicsim: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const vicsim::ConfigError& e) {
    std::cerr << "vicsim: " << e.what() << '\n';
    return kExitConfig;
  } catch (const vicsim::IoError& e) {
    std::cerr << "vicsim: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "vicsim: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "vicsim: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "vicsim: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
