// Copyright 2026 The minlen-thermo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: temperature sweeps to CSV, the Jacobian identity
// check and the asymptotic-limits report.
//
// Exit codes: 0 success, 1 numeric or tolerance failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "minlen/runner.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Reads a flat key=value file into "--key value" tokens. Blank lines and
// lines starting with '#' are skipped.
std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ConversionError("config line without '=': " + line);
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    tokens.push_back("--" + trim(line.substr(0, eq)));
    tokens.push_back(trim(line.substr(eq + 1)));
  }
  return tokens;
}

// Splices the contents of any --config file in front of the remaining
// flags of the subcommand, so explicit flags take precedence.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    std::size_t span = 0;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      span = 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      span = 1;
    } else {
      continue;
    }
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
               args.begin() + static_cast<std::ptrdiff_t>(i + span));
    const auto tokens = config_tokens(path);
    const std::size_t at = args.empty() ? 0 : 1;
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), tokens.begin(),
                tokens.end());
    break;
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermodynamics with a minimal length"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  minlen::SweepConfig sweep;
  std::string sweep_system = "oscillator";
  std::string sweep_scale = "linear";
  std::vector<std::string> methods = {"classical", "quantum", "nondeformed"};
  std::string out_path;
  std::string config_path;
  sweep.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Temperature sweep written as CSV");
  sweep_cmd->add_option("--system", sweep_system, "oscillator | ideal-gas")
      ->check(CLI::IsMember({"oscillator", "ideal-gas", "ideal_gas"}));
  sweep_cmd->add_option("--beta", sweep.beta);
  sweep_cmd->add_option("--beta-prime", sweep.beta_prime);
  sweep_cmd->add_option("--mass", sweep.mass);
  sweep_cmd->add_option("--omega", sweep.omega);
  sweep_cmd->add_option("--hbar", sweep.hbar);
  sweep_cmd->add_option("--volume", sweep.volume);
  sweep_cmd->add_option("--t-min", sweep.t_min);
  sweep_cmd->add_option("--t-max", sweep.t_max);
  sweep_cmd->add_option("--points", sweep.points);
  sweep_cmd->add_option("--scale", sweep_scale, "linear | log")
      ->check(CLI::IsMember({"linear", "log"}));
  sweep_cmd
      ->add_option("--methods", methods,
                   "comma-separated subset of classical,quantum,nondeformed")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->check(CLI::IsMember({"classical", "quantum", "nondeformed"}));
  sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads");
  sweep_cmd->add_option("--out", out_path, "output file (default stdout)");
  sweep_cmd->add_option("--config", config_path, "flat key=value file");

  std::size_t dimension = 3;
  int trials = 100;
  std::uint64_t seed = 42;
  auto* jac_cmd = app.add_subcommand(
      "jacobian-verify", "Check the bracket form of the phase-space Jacobian");
  jac_cmd->add_option("--dimension,-D", dimension);
  jac_cmd->add_option("--trials", trials);
  jac_cmd->add_option("--seed", seed);

  minlen::LimitsConfig limits;
  std::string limits_system = "ideal-gas";
  auto* lim_cmd = app.add_subcommand(
      "limits", "Numeric thermodynamics against closed-form limits");
  lim_cmd->add_option("--system", limits_system,
                      "ideal-gas | oscillator | power-law")
      ->check(CLI::IsMember(
          {"ideal-gas", "ideal_gas", "oscillator", "power-law", "power_law"}));
  lim_cmd->add_option("--beta", limits.beta);
  lim_cmd->add_option("--beta-prime", limits.beta_prime);
  lim_cmd->add_option("--mass", limits.mass);
  lim_cmd->add_option("--omega", limits.omega);
  lim_cmd->add_option("--volume", limits.volume);

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sweep_cmd) {
      sweep.system = sweep_system == "oscillator"
                         ? minlen::SweepSystem::oscillator
                         : minlen::SweepSystem::ideal_gas;
      sweep.scale = sweep_scale == "log" ? minlen::SweepScale::log
                                         : minlen::SweepScale::linear;
      sweep.methods.clear();
      for (const auto& name : methods) {
        sweep.methods.push_back(*minlen::parse_method(name));
      }
      try {
        sweep.validate();
      } catch (const minlen::InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
      }
      std::ostringstream csv;
      minlen::run_sweep(sweep, csv);
      if (out_path.empty()) {
        std::cout << csv.str();
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
          std::cerr << "error: cannot open " << out_path << '\n';
          return kExitFailure;
        }
        file << csv.str();
      }
      return 0;
    }
    if (*jac_cmd) {
      minlen::JacobianVerifyReport report;
      try {
        report = minlen::verify_jacobian(dimension, trials, seed);
      } catch (const minlen::DimensionTooLarge& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
      } catch (const minlen::InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
      }
      minlen::print_report(report, std::cout);
      return report.passed() ? 0 : kExitFailure;
    }
    if (*lim_cmd) {
      if (limits_system == "oscillator") {
        limits.system = minlen::LimitsSystem::oscillator;
      } else if (limits_system.rfind("power", 0) == 0) {
        limits.system = minlen::LimitsSystem::power_law;
      } else {
        limits.system = minlen::LimitsSystem::ideal_gas;
      }
      minlen::LimitsReport report;
      try {
        report = minlen::run_limits(limits);
      } catch (const minlen::InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
      } catch (const minlen::ZeroDeformation& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
      }
      minlen::print_report(report, std::cout);
      return report.passed() ? 0 : kExitFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
