#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lightshift/cli/commands.hpp"
#include "lightshift/cli/config.hpp"
#include "lightshift/errors.hpp"

namespace {

struct Invocation {
  std::string config_path;
  std::string atom;
  std::vector<std::string> settings;
  std::string output;
  bool scan = false;
};

lightshift::cli::RunConfig build_config(const Invocation& inv) {
  using namespace lightshift::cli;
  RunConfig config = inv.config_path.empty() ? RunConfig{} : load_config(inv.config_path);
  if (!inv.atom.empty()) apply_setting(config, "atom", inv.atom);
  for (const std::string& s : inv.settings) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw lightshift::ConfigError("--set expects key=value, got '" + s + "'");
    }
    apply_setting(config, s.substr(0, eq), s.substr(eq + 1));
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lightshift::cli;

  CLI::App app{"Nuclear-spin light shifts of alkaline-earth atoms on the 1S0 -> 3P1 line"};
  app.require_subcommand(1);

  Invocation inv;
  const auto add_common = [&inv](CLI::App* sub) {
    sub->add_option("-c,--config", inv.config_path, "configuration file (key = value)");
    sub->add_option("--atom", inv.atom, "atom preset: sr87, yb171 or custom");
    sub->add_option("--set", inv.settings, "override one key, e.g. --set delta_bar=2")
        ->allow_extra_args(false);
    sub->add_option("-o,--output", inv.output, "write the data artifact here instead of stdout");
  };

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"coeffs", "closed-form coefficients at one detuning (JSON)"},
      {"scan", "coefficients over a detuning grid (CSV)"},
      {"heff", "effective Hamiltonian for the [field] geometry (JSON)"},
      {"oracle-diff", "closed form vs. Clebsch-Gordan sum over states (JSON)"},
      {"bichromatic", "tensor-shift cancellation with two detunings (JSON, or CSV with --scan)"},
      {"rephasing", "rephasing length of the bichromatic pair in meters (JSON)"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "bichromatic") sub->add_flag("--scan", inv.scan, "emit the merit-scan CSV");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << lightshift::cli::error_json(lightshift::ConfigError(e.what())) << '\n';
    return static_cast<int>(ExitCode::config_error);
  }

  std::string name;
  for (CLI::App* sub : subs) {
    if (sub->parsed()) name = sub->get_name();
  }

  try {
    const RunConfig config = build_config(inv);
    std::ostringstream buffer;
    CommandOptions options;
    options.scan = inv.scan;
    const ExitCode code = run_subcommand(name, config, options, buffer);
    if (inv.output.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream file(inv.output, std::ios::binary);
      if (!file) throw lightshift::ConfigError("cannot write output file '" + inv.output + "'");
      file << buffer.str();
    }
    return static_cast<int>(code);
  } catch (const std::exception& e) {
    std::cerr << error_json(e) << '\n';
    return static_cast<int>(exit_code_for(e));
  }
}
