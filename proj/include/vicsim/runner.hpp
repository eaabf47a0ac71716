#pragma once

// Single runs and parameter sweeps producing CSV tables.

#include <cstddef>

#include "vicsim/config.hpp"
#include "vicsim/csv.hpp"
#include "vicsim/integrate.hpp"

namespace vicsim {

/// VICSIM_WORKERS if set and positive, otherwise the available parallelism.
std::size_t default_worker_count();

/// Propagates config and returns the requested observables as a table:
/// column "t", then per observable either "p_ij", the pair
/// "Re(rho12A)", "Im(rho12A)", or the coefficient pairs "Re(Gamma1)", ...
CsvTable run_single(const SimConfig& config);

/// Table for an already computed trajectory.
CsvTable observables_table(const SimConfig& config, const Trajectory& traj);

/// Coefficients mode: one row per point, the swept value then all eight
/// coefficients as Re/Im pairs. PeakValue mode: per non-coefficient
/// observable, the largest value (modulus for rho12A) and its time. Full mode:
/// concatenated run_single tables prefixed by the sweep value.
/// Points run on up to `workers` threads; rows come out in sweep order.
CsvTable run_sweep(const SimConfig& config, const SweepSpec& sweep, ReduceMode reduce,
                   std::size_t workers);

CsvTable run_plan(const RunPlan& plan, std::size_t workers);

} // namespace vicsim
