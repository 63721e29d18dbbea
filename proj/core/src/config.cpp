#include "dg1d/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dg1d/errors.hpp"

namespace dg1d {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

class KeyValues {
 public:
  void insert(const std::string& key, const std::string& value, int line) {
    if (values_.count(key) != 0) {
      throw ConfigError("duplicate config key '" + key + "' on line " +
                        std::to_string(line));
    }
    values_[key] = value;
  }

  bool has(const std::string& key) {
    consumed_.insert(key);
    return values_.count(key) != 0;
  }

  std::string raw(const std::string& key) { return values_.at(key); }

  double number(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    const std::string& text = values_[key];
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &pos);
    } catch (const std::exception&) {
      throw ConfigError("config key '" + key + "': '" + text +
                        "' is not a number");
    }
    if (pos != text.size()) {
      throw ConfigError("config key '" + key + "': trailing characters in '" +
                        text + "'");
    }
    return v;
  }

  int integer(const std::string& key, int fallback) {
    const double v = number(key, fallback);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
      throw ConfigError("config key '" + key + "' must be an integer");
    }
    return i;
  }

  bool flag(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const std::string v = lower(values_[key]);
    if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config key '" + key + "': expected on/off, got '" +
                      values_[key] + "'");
  }

  template <class T>
  T choice(const std::string& key, T fallback,
           const std::map<std::string, T>& options) {
    if (!has(key)) return fallback;
    const std::string v = lower(values_[key]);
    const auto it = options.find(v);
    if (it == options.end()) {
      std::ostringstream os;
      os << "config key '" << key << "': unknown value '" << values_[key]
         << "'; expected one of:";
      for (const auto& [name, _] : options) os << " " << name;
      throw ConfigError(os.str());
    }
    return it->second;
  }

  void reject_unknown() const {
    for (const auto& [key, _] : values_) {
      if (consumed_.count(key) == 0) {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> consumed_;
};

}  // namespace

RunConfig parse_config(std::istream& in) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": empty key or value");
    }
    kv.insert(key, value, lineno);
  }

  RunConfig cfg;
  cfg.law = kv.choice<LawKind>("law", cfg.law,
                               {{"advection", LawKind::advection},
                                {"burgers", LawKind::burgers},
                                {"euler", LawKind::euler}});
  cfg.advection_speed = kv.number("advection_speed", cfg.advection_speed);
  cfg.gamma = kv.number("gamma", cfg.gamma);

  cfg.x_min = kv.number("x_min", cfg.x_min);
  cfg.x_max = kv.number("x_max", cfg.x_max);
  cfg.elements = kv.integer("elements", cfg.elements);
  cfg.boundary = kv.choice<BoundaryKind>(
      "boundary", cfg.boundary,
      {{"periodic", BoundaryKind::periodic},
       {"transmissive", BoundaryKind::transmissive}});

  cfg.basis = kv.choice<BasisKind>(
      "basis", cfg.basis,
      {{"modal_legendre", BasisKind::modal_legendre},
       {"nodal_lagrange_gl", BasisKind::nodal_lagrange_gl},
       {"nodal_lagrange_uniform", BasisKind::nodal_lagrange_uniform}});
  cfg.degree = kv.integer("degree", cfg.degree);
  cfg.flux = kv.choice<FluxKind>(
      "flux", cfg.flux,
      {{"rusanov", FluxKind::rusanov}, {"upwind", FluxKind::upwind}});
  cfg.rusanov_jump_factor =
      kv.number("rusanov_jump_factor", cfg.rusanov_jump_factor);
  cfg.flux_mode = kv.choice<FluxMode>(
      "flux_mode", cfg.flux_mode,
      {{"quadrature", FluxMode::quadrature}, {"projected", FluxMode::projected}});
  cfg.integrator = kv.choice<IntegratorKind>(
      "integrator", cfg.integrator,
      {{"ee", IntegratorKind::ee},
       {"ssp2", IntegratorKind::ssp2},
       {"ssp3", IntegratorKind::ssp3},
       {"rk4", IntegratorKind::rk4},
       {"ader_ck", IntegratorKind::ader_ck},
       {"ader_predictor", IntegratorKind::ader_predictor}});
  cfg.cfl = kv.number("cfl", cfg.cfl);
  cfg.t_end = kv.number("t_end", cfg.t_end);
  cfg.dt_max = kv.number("dt_max", cfg.dt_max);
  cfg.limiter = kv.flag("limiter", cfg.limiter);
  cfg.limiter_eps = kv.number("limiter_eps", cfg.limiter_eps);
  cfg.p_time = kv.integer("p_time", cfg.p_time);
  cfg.picard_tol = kv.number("picard_tol", cfg.picard_tol);
  cfg.picard_max_iter = kv.integer("picard_max_iter", cfg.picard_max_iter);

  cfg.ic = kv.choice<InitialConditionKind>(
      "ic", cfg.ic,
      {{"sine", InitialConditionKind::sine},
       {"gaussian", InitialConditionKind::gaussian},
       {"sod", InitialConditionKind::sod},
       {"double_rarefaction", InitialConditionKind::double_rarefaction}});
  cfg.ic_offset = kv.number("ic_offset", cfg.ic_offset);
  cfg.ic_amplitude = kv.number("ic_amplitude", cfg.ic_amplitude);
  cfg.ic_frequency = kv.number("ic_frequency", cfg.ic_frequency);
  cfg.ic_center_set = kv.has("ic_center");
  cfg.ic_center = kv.number("ic_center", cfg.ic_center);
  cfg.ic_width = kv.number("ic_width", cfg.ic_width);

  if (kv.has("output_prefix")) cfg.output_prefix = kv.raw("output_prefix");
  cfg.snapshot_every = kv.integer("snapshot_every", cfg.snapshot_every);

  kv.reject_unknown();
  validate(cfg);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  try {
    return parse_config(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void validate(const RunConfig& cfg) {
  if (!(cfg.x_min < cfg.x_max)) {
    throw ConfigError("mesh interval is inverted or empty");
  }
  if (cfg.elements < 1) throw ConfigError("elements must be positive");
  if (cfg.degree < 0) throw ConfigError("degree must be nonnegative");
  if (!(cfg.cfl > 0.0) || cfg.cfl > 1.0) {
    throw ConfigError("cfl must lie in (0, 1]");
  }
  if (cfg.t_end < 0.0) throw ConfigError("t_end must be nonnegative");
  if (!(cfg.dt_max > 0.0)) throw ConfigError("dt_max must be positive");
  if (cfg.gamma <= 1.0) throw ConfigError("gamma must exceed 1");
  if (cfg.limiter_eps < 0.0) throw ConfigError("limiter_eps must be >= 0");
  if (cfg.picard_max_iter < 1) {
    throw ConfigError("picard_max_iter must be positive");
  }
  if (!(cfg.picard_tol > 0.0)) throw ConfigError("picard_tol must be positive");
  if (cfg.snapshot_every < 0) {
    throw ConfigError("snapshot_every must be >= 0");
  }
  if (cfg.rusanov_jump_factor <= 0.0) {
    throw ConfigError("rusanov_jump_factor must be positive");
  }

  if (cfg.flux == FluxKind::upwind && cfg.law != LawKind::advection) {
    throw ConfigError("the upwind flux is exact for linear advection only; "
                      "use flux = rusanov");
  }
  if (cfg.integrator == IntegratorKind::ader_ck &&
      cfg.law != LawKind::advection) {
    throw ConfigError(
        "integrator = ader_ck supports the linear advection law only");
  }
  const bool euler_ic = cfg.ic == InitialConditionKind::sod ||
                        cfg.ic == InitialConditionKind::double_rarefaction;
  if (euler_ic && cfg.law != LawKind::euler) {
    throw ConfigError("ic = " + to_string(cfg.ic) + " requires law = euler");
  }
  if (!euler_ic && cfg.law == LawKind::euler) {
    throw ConfigError("law = euler requires a shock-tube initial condition "
                      "(sod or double_rarefaction)");
  }
}

std::string to_string(LawKind law) {
  switch (law) {
    case LawKind::advection: return "advection";
    case LawKind::burgers: return "burgers";
    case LawKind::euler: return "euler";
  }
  return "?";
}

std::string to_string(IntegratorKind kind) {
  switch (kind) {
    case IntegratorKind::ee: return "ee";
    case IntegratorKind::ssp2: return "ssp2";
    case IntegratorKind::ssp3: return "ssp3";
    case IntegratorKind::rk4: return "rk4";
    case IntegratorKind::ader_ck: return "ader_ck";
    case IntegratorKind::ader_predictor: return "ader_predictor";
  }
  return "?";
}

std::string to_string(InitialConditionKind kind) {
  switch (kind) {
    case InitialConditionKind::sine: return "sine";
    case InitialConditionKind::gaussian: return "gaussian";
    case InitialConditionKind::sod: return "sod";
    case InitialConditionKind::double_rarefaction: return "double_rarefaction";
  }
  return "?";
}

std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::modal_legendre: return "modal_legendre";
    case BasisKind::nodal_lagrange_gl: return "nodal_lagrange_gl";
    case BasisKind::nodal_lagrange_uniform: return "nodal_lagrange_uniform";
  }
  return "?";
}

}  // namespace dg1d
