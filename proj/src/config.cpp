#include "vicsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "vicsim/csv.hpp"

namespace vicsim {

namespace {

std::string trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
  const auto b = std::find_if(s.begin(), s.end(), not_space);
  const auto e = std::find_if(s.rbegin(), s.rend(), not_space).base();
  return b < e ? std::string(b, e) : std::string();
}

double to_number(const std::string& key, const std::string& value) {
  try {
    return parse_double(value);
  } catch (const std::invalid_argument&) {
    throw ConfigError("config: '" + key + "' expects a number, got '" + value + "'");
  }
}

int to_int(const std::string& key, const std::string& value) {
  const double v = to_number(key, value);
  if (v != std::floor(v) || std::abs(v) > 1e9)
    throw ConfigError("config: '" + key + "' expects an integer, got '" + value + "'");
  return static_cast<int>(v);
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "on" || value == "true" || value == "1" || value == "yes") return true;
  if (value == "off" || value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config: '" + key + "' expects on/off, got '" + value + "'");
}

std::vector<ObservableLabel> to_observables(const std::string& value) {
  std::vector<ObservableLabel> out;
  std::istringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(ObservableLabel::parse(item));
  }
  if (out.empty()) throw ConfigError("config: 'observables' is empty");
  return out;
}

std::pair<int, int> to_initial_state(const std::string& value) {
  // "iAjB"
  if (value.size() == 4 && value[1] == 'A' && value[3] == 'B' && value[0] >= '1' &&
      value[0] <= '3' && value[2] >= '1' && value[2] <= '3')
    return {value[0] - '0', value[2] - '0'};
  throw ConfigError("config: initial_state must look like '1A3B', got '" + value + "'");
}

} // namespace

// ---------------------------------------------------------------------------

ObservableLabel ObservableLabel::parse(std::string_view text) {
  if (text == "rho12A") return {Kind::Rho12A, 1, 2};
  if (text == "coeffs") return {Kind::Coefficients, 0, 0};
  if (text.size() == 4 && text.substr(0, 2) == "p_" && text[2] >= '1' && text[2] <= '3' &&
      text[3] >= '1' && text[3] <= '3')
    return {Kind::Population, text[2] - '0', text[3] - '0'};
  throw ConfigError("unknown observable '" + std::string(text) + "'");
}

std::string ObservableLabel::str() const {
  switch (kind) {
  case Kind::Rho12A: return "rho12A";
  case Kind::Coefficients: return "coeffs";
  case Kind::Population: return "p_" + std::to_string(i) + std::to_string(j);
  }
  return {};
}

CouplingSet SimConfig::coefficients() const {
  CouplingSet c = coupling_for(model, geometry());
  if (!cross_terms) {
    c.GammaVc = 0.0;
    c.OmegaVc = 0.0;
  }
  return c;
}

ModelParams SimConfig::model_params() const { return ModelParams{coefficients(), delta, frame}; }

DensityMatrix SimConfig::initial_state() const {
  return DensityMatrix::basis_state(initial_a, initial_b);
}

void SimConfig::validate() const {
  if (!(r_over_lambda > 0.0) || !std::isfinite(r_over_lambda))
    throw ConfigError("config: r must be positive");
  if (2.0 * std::numbers::pi * r_over_lambda < kMinZeta)
    throw ConfigError("config: r below the point-dipole validity limit");
  if (!std::isfinite(theta_pi) || !std::isfinite(phi_pi))
    throw ConfigError("config: angles must be finite");
  if (!(delta >= 0.0) || !std::isfinite(delta)) throw ConfigError("config: delta must be >= 0");
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (initial_a < 1 || initial_a > 3 || initial_b < 1 || initial_b > 3)
    throw ConfigError("config: initial state out of range");
  if (observables.empty()) throw ConfigError("config: no observables requested");
}

// ---------------------------------------------------------------------------

void SweepSpec::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop))
    throw ConfigError("sweep: require start < stop");
  if (count < 2) throw ConfigError("sweep: count must be >= 2");
  if (scale == SweepScale::Log && !(start > 0.0))
    throw ConfigError("sweep: log scale needs a positive start");
}

std::vector<double> SweepSpec::values() const {
  validate();
  std::vector<double> v(static_cast<std::size_t>(count));
  const double span = static_cast<double>(count - 1);
  for (int n = 0; n < count; ++n) {
    const double frac = static_cast<double>(n) / span;
    if (scale == SweepScale::Linear)
      v[n] = start + (stop - start) * static_cast<double>(n) / span;
    else
      v[n] = std::exp(std::log(start) + (std::log(stop) - std::log(start)) * frac);
  }
  v.front() = start;
  v.back() = stop;
  return v;
}

SimConfig SweepSpec::apply(const SimConfig& base, double value) const {
  SimConfig c = base;
  switch (parameter) {
  case SweepParameter::ROverLambda: c.r_over_lambda = value; break;
  case SweepParameter::Theta: c.theta_pi = value; break;
  case SweepParameter::Phi: c.phi_pi = value; break;
  case SweepParameter::Delta: c.delta = value; break;
  }
  return c;
}

// ---------------------------------------------------------------------------

std::string to_string(DipoleModel model) {
  return model == DipoleModel::RealOrthogonal ? "real" : "spherical";
}
std::string to_string(Frame frame) {
  return frame == Frame::InteractionPicture ? "interaction" : "rotating";
}
std::string to_string(SweepParameter p) {
  switch (p) {
  case SweepParameter::ROverLambda: return "r_over_lambda";
  case SweepParameter::Theta: return "theta";
  case SweepParameter::Phi: return "phi";
  case SweepParameter::Delta: return "delta";
  }
  return {};
}
std::string to_string(SweepScale s) { return s == SweepScale::Linear ? "linear" : "log"; }
std::string to_string(ReduceMode m) {
  switch (m) {
  case ReduceMode::Coefficients: return "coefficients";
  case ReduceMode::PeakValue: return "peak_value";
  case ReduceMode::Full: return "full";
  }
  return {};
}

DipoleModel parse_model(std::string_view text) {
  if (text == "real") return DipoleModel::RealOrthogonal;
  if (text == "spherical") return DipoleModel::SphericalComplex;
  throw ConfigError("unknown model '" + std::string(text) + "' (expected real|spherical)");
}
Frame parse_frame(std::string_view text) {
  if (text == "interaction") return Frame::InteractionPicture;
  if (text == "rotating") return Frame::RotatingFrame;
  throw ConfigError("unknown frame '" + std::string(text) + "' (expected interaction|rotating)");
}
SweepParameter parse_sweep_parameter(std::string_view text) {
  if (text == "r_over_lambda" || text == "r") return SweepParameter::ROverLambda;
  if (text == "theta") return SweepParameter::Theta;
  if (text == "phi") return SweepParameter::Phi;
  if (text == "delta") return SweepParameter::Delta;
  throw ConfigError("unknown sweep parameter '" + std::string(text) + "'");
}
SweepScale parse_sweep_scale(std::string_view text) {
  if (text == "linear") return SweepScale::Linear;
  if (text == "log") return SweepScale::Log;
  throw ConfigError("unknown sweep scale '" + std::string(text) + "'");
}
ReduceMode parse_reduce_mode(std::string_view text) {
  if (text == "coefficients") return ReduceMode::Coefficients;
  if (text == "peak_value") return ReduceMode::PeakValue;
  if (text == "full") return ReduceMode::Full;
  throw ConfigError("unknown reduce mode '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------

KeyValues parse_key_values(std::string_view text) {
  KeyValues kv;
  std::istringstream ss{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    kv[key] = value;
  }
  return kv;
}

KeyValues read_key_value_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << is.rdbuf();
  return parse_key_values(buf.str());
}

void set_config_value(SimConfig& c, const std::string& key, const std::string& value) {
  if (key == "model") c.model = parse_model(value);
  else if (key == "theta") c.theta_pi = to_number(key, value);
  else if (key == "phi") c.phi_pi = to_number(key, value);
  else if (key == "r" || key == "r_over_lambda") c.r_over_lambda = to_number(key, value);
  else if (key == "delta") c.delta = to_number(key, value);
  else if (key == "dt") c.grid.dt = to_number(key, value);
  else if (key == "tmax") c.grid.t_max = to_number(key, value);
  else if (key == "sample_every") c.grid.sample_every = to_int(key, value);
  else if (key == "initial_state") std::tie(c.initial_a, c.initial_b) = to_initial_state(value);
  else if (key == "out") c.output_path = value;
  else if (key == "observables") c.observables = to_observables(value);
  else if (key == "frame") c.frame = parse_frame(value);
  else if (key == "cross_terms") c.cross_terms = to_bool(key, value);
  else throw ConfigError("unknown config key '" + key + "'");
}

bool set_sweep_value(SweepSpec& s, const std::string& key, const std::string& value) {
  if (key == "param") s.parameter = parse_sweep_parameter(value);
  else if (key == "from") s.start = to_number(key, value);
  else if (key == "to") s.stop = to_number(key, value);
  else if (key == "count") s.count = to_int(key, value);
  else if (key == "scale") s.scale = parse_sweep_scale(value);
  else return false;
  return true;
}

RunPlan plan_from_key_values(const KeyValues& kv, RunPlan plan) {
  for (const auto& [key, value] : kv) {
    if (key == "reduce") {
      plan.reduce = parse_reduce_mode(value);
      continue;
    }
    SweepSpec candidate = plan.sweep.value_or(SweepSpec{});
    if (set_sweep_value(candidate, key, value)) {
      plan.sweep = candidate;
      continue;
    }
    set_config_value(plan.config, key, value);
  }
  return plan;
}

std::string to_config_text(const RunPlan& plan) {
  const SimConfig& c = plan.config;
  std::ostringstream os;
  os << "model=" << to_string(c.model) << '\n'
     << "theta=" << format_double(c.theta_pi) << '\n'
     << "phi=" << format_double(c.phi_pi) << '\n'
     << "r=" << format_double(c.r_over_lambda) << '\n'
     << "delta=" << format_double(c.delta) << '\n'
     << "dt=" << format_double(c.grid.dt) << '\n'
     << "tmax=" << format_double(c.grid.t_max) << '\n'
     << "sample_every=" << c.grid.sample_every << '\n'
     << "initial_state=" << c.initial_a << 'A' << c.initial_b << "B\n"
     << "frame=" << to_string(c.frame) << '\n'
     << "cross_terms=" << (c.cross_terms ? "on" : "off") << '\n'
     << "observables=";
  for (std::size_t n = 0; n < c.observables.size(); ++n)
    os << (n ? "," : "") << c.observables[n].str();
  os << '\n';
  if (!c.output_path.empty()) os << "out=" << c.output_path << '\n';
  if (plan.sweep) {
    const SweepSpec& s = *plan.sweep;
    os << "param=" << to_string(s.parameter) << '\n'
       << "from=" << format_double(s.start) << '\n'
       << "to=" << format_double(s.stop) << '\n'
       << "count=" << s.count << '\n'
       << "scale=" << to_string(s.scale) << '\n';
  }
  os << "reduce=" << to_string(plan.reduce) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<std::string> preset_names() {
  return {"fig3", "fig4", "fig5", "fig6a", "fig6b", "fig7", "fig8"};
}

RunPlan preset(std::string_view name) {
  const double r_near = 1.0 / (2.0 * std::numbers::pi); // R = lambda / 2 pi, k0 R = 1
  RunPlan plan;
  SimConfig& c = plan.config;
  c.theta_pi = 0.5;
  c.phi_pi = 0.25;
  c.grid = TimeGrid{5.0, 1e-3, 10};

  if (name == "fig3") {
    c.observables = {ObservableLabel::parse("coeffs")};
    plan.sweep = SweepSpec{SweepParameter::ROverLambda, 0.05, 2.0, 196, SweepScale::Linear};
    plan.reduce = ReduceMode::Coefficients;
  } else if (name == "fig4") {
    c.r_over_lambda = 0.25;
    c.observables = {ObservableLabel::parse("coeffs")};
    plan.sweep = SweepSpec{SweepParameter::Phi, 0.0, 1.0, 181, SweepScale::Linear};
    plan.reduce = ReduceMode::Coefficients;
  } else if (name == "fig5") {
    c.r_over_lambda = r_near;
    c.delta = 3.0;
    c.observables = {ObservableLabel::parse("rho12A")};
  } else if (name == "fig6a" || name == "fig6b" || name == "fig8") {
    // Curve family: degenerate (delta = 0) and split (delta = 3 gamma) excited states.
    c.r_over_lambda = r_near;
    c.delta = 0.0;
    c.observables = {ObservableLabel::parse(name == "fig6b" ? "p_23" : "p_32")};
    if (name == "fig8") c.model = DipoleModel::SphericalComplex;
    plan.sweep = SweepSpec{SweepParameter::Delta, 0.0, 3.0, 2, SweepScale::Linear};
    plan.reduce = ReduceMode::Full;
  } else if (name == "fig7") {
    c.r_over_lambda = 0.25;
    c.delta = 0.0;
    c.observables = {ObservableLabel::parse("p_13")};
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  return plan;
}

} // namespace vicsim
