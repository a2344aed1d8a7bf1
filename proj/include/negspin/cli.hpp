#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "negspin/check_report.hpp"
#include "negspin/params.hpp"
#include "negspin/spectral.hpp"

namespace negspin::cli {

inline constexpr const char* kVersion = "negspin 0.1.0";

enum class OutputFormat { csv, json };

// Exit codes: all checks pass / some check failed / bad input.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct DispersionOptions {
  double pmax = 2.0;
  std::size_t steps = 11;
  HamiltonianKind which = HamiltonianKind::nonrelativistic;
};

struct LandauOptions {
  double b = 1.0;
  double pz = 0.0;
  std::size_t n_max = 40;
  std::size_t k_max = 3;
};

struct CoulombOptions {
  double z = 1.0;
  std::size_t l = 0;
  double r_max = 60.0;
  std::size_t n_points = 6000;
  std::size_t n_levels = 3;
  bool convergence = true;
};

enum class Observable { identity, alpha1, alpha2, alpha3, beta, ibg5 };

struct ZitterOptions {
  MomentumVector p{0.0, 0.0, 1.0};
  // Amplitudes of (E-, h-1), (E-, h+1), (E+, h-1), (E+, h+1).
  std::array<double, 4> weights{0.0, 1.0, 0.0, 1.0};
  Observable observable = Observable::alpha3;
  double t_max = 50.0;
  std::size_t n_samples = 2048;
  HamiltonianKind which = HamiltonianKind::nonrelativistic;
};

enum class LorentzMode { transform, sweep, both };

struct LorentzOptions {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  std::optional<double> e_prime;  // defaults to m0 c^2
  MomentumVector p_prime = MomentumVector::Zero();
  LorentzMode mode = LorentzMode::transform;
  std::size_t sweep_points = 10;
  double sweep_pmax = 3.0;
};

struct ReductionOptions {
  std::size_t trials = 100;
  bool wrong_energy = false;
};

struct RunConfig {
  std::string command;
  bool custom_units = false;
  PhysicalParams params;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> output_path;

  DispersionOptions dispersion;
  LandauOptions landau;
  CoulombOptions coulomb;
  ZitterOptions zitter;
  LorentzOptions lorentz;
  ReductionOptions reduction;
};

// What a command produces: the JSON report, its CSV table, and the exit code.
struct CommandOutput {
  nlohmann::ordered_json report;
  std::string csv;
  int exit_code = kExitPass;

  const std::string& text(OutputFormat format) const;

 private:
  mutable std::string json_text_;
};

CommandOutput cmd_identities(const RunConfig& config);
CommandOutput cmd_dispersion(const RunConfig& config);
CommandOutput cmd_landau(const RunConfig& config);
CommandOutput cmd_coulomb(const RunConfig& config);
CommandOutput cmd_zitter(const RunConfig& config);
CommandOutput cmd_lorentz(const RunConfig& config);
CommandOutput cmd_reduction(const RunConfig& config);

// Dispatches on config.command; throws InvalidInput for an unknown command.
CommandOutput run_command(const RunConfig& config);

// Shortest decimal with 17 significant digits, '.' separator, no locale.
std::string format_number(double value);

// Seeded draws shared by every randomized command. The algorithm is fixed:
// mt19937_64 raw output x, u = (x >> 11) * 2^-53 in [0, 1).
class SeededDraws {
 public:
  explicit SeededDraws(std::uint64_t seed);

  double uniform();                            // [0, 1)
  double uniform(double lo, double hi);        // [lo, hi)
  std::complex<double> unit_disc();            // rejection sampling on |z| <= 1
  Spinor2 spinor();                            // two disc draws, normalized

 private:
  std::mt19937_64 engine_;
};

/// Full command-line entry point. Reads `--config path` (flat key=value),
/// lets explicit flags override it, runs the command and writes the chosen
/// format to --out or stdout. Returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace negspin::cli
