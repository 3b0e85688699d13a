#include "lightshift/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "lightshift/errors.hpp"

namespace lightshift::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text, int line) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError("'" + std::string(key) + "' expects a finite number, got '" +
                          std::string(text) + "'",
                      line);
  }
  return v;
}

int parse_int(std::string_view key, std::string_view text, int line) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("'" + std::string(key) + "' expects an integer, got '" +
                          std::string(text) + "'",
                      line);
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view text, int line) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw ConfigError("'" + std::string(key) + "' expects true or false, got '" +
                        std::string(text) + "'",
                    line);
}

// "re" or "re,im".
Complex parse_complex(std::string_view key, std::string_view text, int line) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_double(key, text, line), 0.0};
  return {parse_double(key, trim(text.substr(0, comma)), line),
          parse_double(key, trim(text.substr(comma + 1)), line)};
}

void require(bool ok, std::string_view key, const std::string& what, int line) {
  if (!ok) throw ConfigError("'" + std::string(key) + "' " + what, line);
}

void set_top_level(RunConfig& c, std::string_view key, std::string_view value, int line) {
  if (key == "atom") {
    require(value == "sr87" || value == "yb171" || value == "custom", key,
            "must be sr87, yb171 or custom", line);
    c.atom = std::string(value);
  } else if (key == "spin_twice") {
    const int v = parse_int(key, value, line);
    require(v >= 1, key, "must be at least 1 (spin 1/2)", line);
    require(v + 1 <= kMaxSpinDimension, key, "exceeds the supported spin dimension", line);
    c.spin_twice = v;
  } else if (key == "ahf_prime_khz_over_2pi") {
    c.ahf_prime_khz_over_2pi = parse_double(key, value, line);
  } else if (key == "bhf_khz_over_2pi") {
    c.bhf_khz_over_2pi = parse_double(key, value, line);
  } else if (key == "linewidth_khz_over_2pi") {
    const double v = parse_double(key, value, line);
    require(v >= 0.0, key, "must be non-negative", line);
    c.linewidth_khz_over_2pi = v;
  } else if (key == "dge_sq") {
    const double v = parse_double(key, value, line);
    require(v > 0.0, key, "must be positive", line);
    c.dge_sq = v;
  } else if (key == "gamma") {
    c.gamma = parse_double(key, value, line);
  } else if (key == "gamma_bar") {
    const double v = parse_double(key, value, line);
    require(v >= 0.0, key, "must be non-negative", line);
    c.gamma_bar = v;
  } else if (key == "delta_bar") {
    c.delta_bar = parse_double(key, value, line);
  } else if (key == "delta_min") {
    c.delta_min = parse_double(key, value, line);
  } else if (key == "delta_max") {
    c.delta_max = parse_double(key, value, line);
  } else if (key == "steps") {
    const int v = parse_int(key, value, line);
    require(v >= 1, key, "must be at least 1", line);
    c.steps = v;
  } else if (key == "delta_small_bar") {
    c.delta_small_bar = parse_double(key, value, line);
  } else if (key == "delta_small_min") {
    c.delta_small_min = parse_double(key, value, line);
  } else if (key == "delta_small_max") {
    c.delta_small_max = parse_double(key, value, line);
  } else if (key == "delta_small_steps") {
    const int v = parse_int(key, value, line);
    require(v >= 1, key, "must be at least 1", line);
    c.delta_small_steps = v;
  } else if (key == "a_form") {
    c.a_form = parse_bool(key, value, line);
  } else if (key == "units") {
    if (value == "dimensionless") {
      c.units = Units::dimensionless;
    } else if (value == "physical") {
      c.units = Units::physical;
    } else {
      throw ConfigError("'units' must be dimensionless or physical", line);
    }
  } else if (key == "threshold") {
    const double v = parse_double(key, value, line);
    require(v > 0.0, key, "must be positive", line);
    c.threshold = v;
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'", line);
  }
}

void set_field(FieldSpec& f, std::string_view key, std::string_view value, int line) {
  if (key == "type") {
    require(value == "linear" || value == "circular" || value == "counterprop" ||
                value == "soc" || value == "raw",
            key, "must be linear, circular, counterprop, soc or raw", line);
    f.type = std::string(value);
  } else if (key == "amplitude") {
    const double v = parse_double(key, value, line);
    require(v > 0.0, key, "must be positive", line);
    f.amplitude = v;
  } else if (key == "wavenumber") {
    const double v = parse_double(key, value, line);
    require(v > 0.0, key, "must be positive", line);
    f.wavenumber = v;
  } else if (key == "handedness") {
    if (value == "plus" || value == "+") {
      f.handedness = Handedness::plus;
    } else if (value == "minus" || value == "-") {
      f.handedness = Handedness::minus;
    } else {
      throw ConfigError("'handedness' must be plus or minus", line);
    }
  } else if (key == "delta_omega") {
    f.delta_omega = parse_double(key, value, line);
  } else if (key == "x") {
    f.position.x() = parse_double(key, value, line);
  } else if (key == "y") {
    f.position.y() = parse_double(key, value, line);
  } else if (key == "z") {
    f.position.z() = parse_double(key, value, line);
  } else if (key == "t") {
    f.time = parse_double(key, value, line);
  } else if (key == "ex") {
    f.raw.x() = parse_complex(key, value, line);
  } else if (key == "ey") {
    f.raw.y() = parse_complex(key, value, line);
  } else if (key == "ez") {
    f.raw.z() = parse_complex(key, value, line);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "' in [field]", line);
  }
}

void set_any(RunConfig& c, bool in_field, std::string_view key, std::string_view value,
             int line) {
  if (value.empty()) throw ConfigError("'" + std::string(key) + "' has no value", line);
  if (in_field) {
    set_field(c.field, key, value, line);
  } else {
    set_top_level(c, key, value, line);
  }
}

GridSpec checked_grid(double lo, double hi, int steps, std::string_view prefix) {
  if (steps > 1 && !(lo < hi)) {
    throw ConfigError(std::string(prefix) + "_min must be less than " + std::string(prefix) +
                      "_max");
  }
  return {lo, hi, steps};
}

}  // namespace

std::vector<double> GridSpec::points() const {
  std::vector<double> out(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out[0] = min;
    return out;
  }
  for (int k = 0; k < steps; ++k) out[k] = min + (max - min) * k / (steps - 1);
  out.back() = max;
  return out;
}

FieldConfig FieldSpec::to_field_config() const {
  if (type == "linear") return SingleLinear{amplitude, wavenumber};
  if (type == "circular") return SingleCircular{amplitude, wavenumber, handedness};
  if (type == "counterprop") return CounterPropCross{amplitude, wavenumber};
  if (type == "soc") return PerpendicularSoc{amplitude, wavenumber, delta_omega};
  return RawVector{raw};
}

AtomParams RunConfig::atom_params() const {
  if (!atom) throw ConfigError("missing required key 'atom'");
  AtomParams p;
  if (*atom == "custom") {
    if (!spin_twice) throw ConfigError("missing required key 'spin_twice'");
    if (!ahf_prime_khz_over_2pi) {
      throw ConfigError("missing required key 'ahf_prime_khz_over_2pi'");
    }
  } else {
    p = presets::by_name(*atom);
  }
  if (spin_twice) p.spin = HalfInteger(*spin_twice);
  if (ahf_prime_khz_over_2pi) p.ahf_prime = angular_from_khz(*ahf_prime_khz_over_2pi);
  if (bhf_khz_over_2pi) p.bhf = angular_from_khz(*bhf_khz_over_2pi);
  if (linewidth_khz_over_2pi) p.linewidth = angular_from_khz(*linewidth_khz_over_2pi);
  if (dge_sq) p.dge_sq = *dge_sq;
  try {
    derive_constants(p);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid atom parameters: ") + e.what());
  }
  return p;
}

std::string RunConfig::atom_label() const { return atom.value_or("custom"); }

double RunConfig::effective_gamma() const {
  if (gamma) return *gamma;
  return derive_constants(atom_params()).gamma;
}

double RunConfig::effective_gamma_bar() const {
  if (gamma_bar) return *gamma_bar;
  return loss_ratio_limit(atom_params());
}

double RunConfig::required_delta_bar() const {
  if (!delta_bar) throw ConfigError("missing required key 'delta_bar'");
  return *delta_bar;
}

double RunConfig::required_delta_small_bar() const {
  if (!delta_small_bar) throw ConfigError("missing required key 'delta_small_bar'");
  return *delta_small_bar;
}

GridSpec RunConfig::delta_grid(const GridSpec& fallback) const {
  return checked_grid(delta_min.value_or(fallback.min), delta_max.value_or(fallback.max),
                      steps.value_or(fallback.steps), "delta");
}

GridSpec RunConfig::delta_small_grid() const {
  const GridSpec g = checked_grid(delta_small_min.value_or(0.5), delta_small_max.value_or(5.0),
                                  delta_small_steps.value_or(91), "delta_small");
  if (!(g.min > 0.0)) throw ConfigError("'delta_small_min' must be positive");
  return g;
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  bool in_field = false;
  bool seen_field_section = false;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line != "[field]") {
        throw ConfigError("unknown section '" + std::string(line) + "'", line_no);
      }
      if (seen_field_section) throw ConfigError("duplicate [field] section", line_no);
      in_field = true;
      seen_field_section = true;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value', got '" + std::string(line) + "'", line_no);
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", line_no);

    const std::string qualified = (in_field ? "field." : "") + std::string(key);
    if (!seen.insert(qualified).second) {
      throw ConfigError("duplicate key '" + std::string(key) + "'", line_no);
    }
    set_any(config, in_field, key, value, line_no);
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  constexpr std::string_view prefix = "field.";
  if (key.starts_with(prefix)) {
    set_any(config, true, key.substr(prefix.size()), value, 0);
  } else {
    set_any(config, false, key, value, 0);
  }
}

}  // namespace lightshift::cli
