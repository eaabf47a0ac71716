#include "vicsim/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "vicsim/observables.hpp"

namespace vicsim {

namespace {

constexpr const char* kCoefficientNames[8] = {"gamma1", "gamma2", "Gamma1",  "Gamma2",
                                              "Omega1", "Omega2", "GammaVc", "OmegaVc"};

void append_coefficient_header(std::vector<std::string>& header) {
  for (const char* name : kCoefficientNames) {
    header.push_back(std::string("Re(") + name + ")");
    header.push_back(std::string("Im(") + name + ")");
  }
}

void append_coefficients(std::vector<double>& row, const CouplingSet& c) {
  for (const cplx& v : c.entries()) {
    row.push_back(v.real());
    row.push_back(v.imag());
  }
}

bool has_dynamics(const SimConfig& config) {
  return std::any_of(config.observables.begin(), config.observables.end(), [](const auto& o) {
    return o.kind != ObservableLabel::Kind::Coefficients;
  });
}

// Runs fn(0..count-1) on up to `workers` threads; rethrows the first failure
// in index order.
template <class Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t n = next++; n < count; n = next++) {
      try {
        fn(n);
      } catch (...) {
        errors[n] = std::current_exception();
      }
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace

std::size_t default_worker_count() {
  if (const char* env = std::getenv("VICSIM_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CsvTable observables_table(const SimConfig& config, const Trajectory& traj) {
  CsvTable table;
  table.header.push_back("t");
  std::vector<ObservableSeries> columns;
  const CouplingSet coeffs = traj.params.coeffs;
  for (const ObservableLabel& label : config.observables) {
    switch (label.kind) {
    case ObservableLabel::Kind::Population:
      table.header.push_back(label.str());
      columns.push_back(population(traj, label.i, label.j));
      break;
    case ObservableLabel::Kind::Rho12A:
      table.header.push_back("Re(rho12A)");
      table.header.push_back("Im(rho12A)");
      columns.push_back(excited_coherence_A(traj));
      break;
    case ObservableLabel::Kind::Coefficients:
      append_coefficient_header(table.header);
      columns.emplace_back(); // placeholder, filled from coeffs
      break;
    }
  }
  table.rows.reserve(traj.size());
  for (std::size_t n = 0; n < traj.size(); ++n) {
    std::vector<double> row{traj.times[n]};
    for (std::size_t k = 0; k < config.observables.size(); ++k) {
      switch (config.observables[k].kind) {
      case ObservableLabel::Kind::Population: row.push_back(columns[k].values[n].real()); break;
      case ObservableLabel::Kind::Rho12A:
        row.push_back(columns[k].values[n].real());
        row.push_back(columns[k].values[n].imag());
        break;
      case ObservableLabel::Kind::Coefficients: append_coefficients(row, coeffs); break;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable run_single(const SimConfig& config) {
  config.validate();
  const Trajectory traj = evolve(config.initial_state(), config.grid, config.model_params());
  return observables_table(config, traj);
}

CsvTable run_sweep(const SimConfig& config, const SweepSpec& sweep, ReduceMode reduce,
                   std::size_t workers) {
  sweep.validate();
  const std::vector<double> values = sweep.values();
  std::vector<SimConfig> points;
  points.reserve(values.size());
  for (double v : values) {
    SimConfig c = sweep.apply(config, v);
    c.validate();
    points.push_back(std::move(c));
  }

  CsvTable table;
  table.header.push_back(to_string(sweep.parameter));

  if (reduce == ReduceMode::Coefficients) {
    append_coefficient_header(table.header);
    table.rows.resize(points.size());
    parallel_for(points.size(), workers, [&](std::size_t n) {
      std::vector<double> row{values[n]};
      append_coefficients(row, points[n].coefficients());
      table.rows[n] = std::move(row);
    });
    return table;
  }

  if (!has_dynamics(config))
    throw ConfigError("sweep: reduce mode '" + to_string(reduce) +
                      "' needs at least one population or rho12A observable");

  std::vector<CsvTable> per_point(points.size());
  parallel_for(points.size(), workers,
               [&](std::size_t n) { per_point[n] = run_single(points[n]); });

  if (reduce == ReduceMode::Full) {
    const CsvTable& first = per_point.front();
    table.header.insert(table.header.end(), first.header.begin(), first.header.end());
    for (std::size_t n = 0; n < points.size(); ++n) {
      for (const auto& src : per_point[n].rows) {
        std::vector<double> row{values[n]};
        row.insert(row.end(), src.begin(), src.end());
        table.rows.push_back(std::move(row));
      }
    }
    return table;
  }

  // PeakValue
  for (const ObservableLabel& label : config.observables) {
    if (label.kind == ObservableLabel::Kind::Coefficients) continue;
    const std::string name = label.kind == ObservableLabel::Kind::Rho12A ? "|rho12A|" : label.str();
    table.header.push_back("peak(" + name + ")");
    table.header.push_back("t_peak(" + name + ")");
  }
  for (std::size_t n = 0; n < points.size(); ++n) {
    const CsvTable& t = per_point[n];
    const std::size_t tcol = t.column("t");
    std::vector<double> row{values[n]};
    for (const ObservableLabel& label : config.observables) {
      if (label.kind == ObservableLabel::Kind::Coefficients) continue;
      double best = -1.0;
      double best_t = 0.0;
      bool first = true;
      for (const auto& r : t.rows) {
        double v = 0.0;
        if (label.kind == ObservableLabel::Kind::Rho12A) {
          v = std::hypot(r[t.column("Re(rho12A)")], r[t.column("Im(rho12A)")]);
        } else {
          v = r[t.column(label.str())];
        }
        if (first || v > best) {
          best = v;
          best_t = r[tcol];
          first = false;
        }
      }
      row.push_back(best);
      row.push_back(best_t);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable run_plan(const RunPlan& plan, std::size_t workers) {
  if (plan.sweep) return run_sweep(plan.config, *plan.sweep, plan.reduce, workers);
  if (plan.reduce == ReduceMode::Coefficients) {
    CsvTable table;
    table.header.clear();
    append_coefficient_header(table.header);
    plan.config.validate();
    std::vector<double> row;
    append_coefficients(row, plan.config.coefficients());
    table.rows.push_back(std::move(row));
    return table;
  }
  return run_single(plan.config);
}

} // namespace vicsim
