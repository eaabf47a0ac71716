#pragma once

// Simulation configuration, sweep specification and the figure presets.
//
// Config files are flat key=value text, one key per line, '#' starts a
// comment. Angles are given in units of pi, separations in wavelengths,
// rates in gamma and times in 1/gamma.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vicsim/coupling.hpp"
#include "vicsim/dynamics.hpp"
#include "vicsim/integrate.hpp"

namespace vicsim {

/// Invalid configuration value, unknown key or unknown preset.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Observable column label: p_ij (i, j in 1..3), rho12A or coeffs.
struct ObservableLabel {
  enum class Kind { Population, Rho12A, Coefficients };
  Kind kind = Kind::Population;
  int i = 1;
  int j = 3;

  static ObservableLabel parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const ObservableLabel&, const ObservableLabel&) = default;
};

struct SimConfig {
  DipoleModel model = DipoleModel::RealOrthogonal;
  double theta_pi = 0.5;
  double phi_pi = 0.25;
  double r_over_lambda = 0.25;
  double delta = 0.0;
  TimeGrid grid{};
  /// Initial basis state |i_A, j_B>, written "iAjB" (default "1A3B").
  int initial_a = 1;
  int initial_b = 3;
  std::string output_path;
  std::vector<ObservableLabel> observables{ObservableLabel{}};
  Frame frame = Frame::InteractionPicture;
  /// When false, GammaVc and OmegaVc are forced to zero.
  bool cross_terms = true;

  Geometry geometry() const { return Geometry(theta_pi, phi_pi, r_over_lambda); }
  CouplingSet coefficients() const;
  ModelParams model_params() const;
  DensityMatrix initial_state() const;

  /// Throws ConfigError on any violated invariant.
  void validate() const;
};

enum class SweepParameter { ROverLambda, Theta, Phi, Delta };
enum class SweepScale { Linear, Log };
enum class ReduceMode { Coefficients, PeakValue, Full };

struct SweepSpec {
  SweepParameter parameter = SweepParameter::ROverLambda;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
  SweepScale scale = SweepScale::Linear;

  void validate() const;
  /// Sweep points; endpoints are exactly start and stop.
  std::vector<double> values() const;
  /// Copy of base with the swept parameter set to value.
  SimConfig apply(const SimConfig& base, double value) const;
};

std::string to_string(DipoleModel model);
std::string to_string(Frame frame);
std::string to_string(SweepParameter p);
std::string to_string(SweepScale s);
std::string to_string(ReduceMode m);

DipoleModel parse_model(std::string_view text);
Frame parse_frame(std::string_view text);
SweepParameter parse_sweep_parameter(std::string_view text);
SweepScale parse_sweep_scale(std::string_view text);
ReduceMode parse_reduce_mode(std::string_view text);

/// Parsed key=value pairs; a repeated key keeps its last value.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(std::string_view text);
KeyValues read_key_value_file(const std::string& path);

/// Sets one config key. Throws ConfigError for unknown keys or bad values.
void set_config_value(SimConfig& config, const std::string& key, const std::string& value);
/// Sweep keys: param, from, to, count, scale. Returns false if key is not a sweep key.
bool set_sweep_value(SweepSpec& sweep, const std::string& key, const std::string& value);

/// Full configuration plus optional sweep, as produced by presets and files.
struct RunPlan {
  SimConfig config;
  std::optional<SweepSpec> sweep;
  ReduceMode reduce = ReduceMode::Full;
};

/// Applies every pair (config and sweep keys, plus "reduce").
RunPlan plan_from_key_values(const KeyValues& kv, RunPlan base = {});

/// key=value text that parses back to the same plan.
std::string to_config_text(const RunPlan& plan);

/// Figure presets: fig3, fig4, fig5, fig6a, fig6b, fig7, fig8.
RunPlan preset(std::string_view name);
std::vector<std::string> preset_names();

} // namespace vicsim
