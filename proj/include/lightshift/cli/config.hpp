#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lightshift/field_configs.hpp"
#include "lightshift/hyperfine.hpp"
#include "lightshift/shift_coefficients.hpp"

namespace lightshift::cli {

/// Inclusive detuning grid with `steps` evenly spaced points.
struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;

  std::vector<double> points() const;
};

/// Geometry read from the [field] section.
struct FieldSpec {
  std::string type = "linear";  ///< linear | circular | counterprop | soc | raw
  double amplitude = 1.0;
  double wavenumber = 1.0;
  Handedness handedness = Handedness::plus;
  double delta_omega = 0.0;
  Vector3 position = Vector3::Zero();
  double time = 0.0;
  CVector3 raw = CVector3::UnitZ();

  FieldConfig to_field_config() const;
};

/// Everything a subcommand may need. Optional members are unset unless the
/// configuration names them; resolution to library types happens in the
/// accessors, which throw ConfigError naming the missing or invalid key.
struct RunConfig {
  std::optional<std::string> atom;  ///< sr87 | yb171 | custom
  std::optional<int> spin_twice;
  std::optional<double> ahf_prime_khz_over_2pi;
  std::optional<double> bhf_khz_over_2pi;
  std::optional<double> linewidth_khz_over_2pi;
  std::optional<double> dge_sq;

  std::optional<double> gamma;      ///< overrides the derived quadrupole ratio
  std::optional<double> gamma_bar;  ///< defaults to linewidth / |A_HF|
  std::optional<double> delta_bar;

  std::optional<double> delta_min;
  std::optional<double> delta_max;
  std::optional<int> steps;

  std::optional<double> delta_small_bar;
  std::optional<double> delta_small_min;
  std::optional<double> delta_small_max;
  std::optional<int> delta_small_steps;

  bool a_form = false;
  Units units = Units::dimensionless;
  double threshold = 1e-10;

  FieldSpec field;

  AtomParams atom_params() const;
  std::string atom_label() const;
  HalfInteger spin() const { return atom_params().spin; }
  double effective_gamma() const;
  double effective_gamma_bar() const;
  double required_delta_bar() const;
  double required_delta_small_bar() const;
  GridSpec delta_grid(const GridSpec& fallback) const;
  GridSpec delta_small_grid() const;
};

/// Parses the line-oriented grammar
///
///     # comment
///     key = value
///     [field]
///     key = value
///
/// Unknown keys, duplicate keys and malformed values raise ConfigError with
/// the offending line number.
RunConfig parse_config(std::string_view text);

/// Reads and parses a configuration file.
RunConfig load_config(const std::string& path);

/// Applies one `key=value` override on top of a parsed configuration. Keys of
/// the [field] section are written as `field.<key>`.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

}  // namespace lightshift::cli
