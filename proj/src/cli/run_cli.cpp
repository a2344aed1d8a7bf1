#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "negspin/cli.hpp"

namespace negspin::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// "--n_max" and "--n-max" name the same flag.
std::string canonical_key(std::string key) {
  for (char& ch : key) {
    if (ch == '_') ch = '-';
  }
  return key;
}

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw InvalidInput(std::string(flag) + ": cannot parse '" + item + "' as a number");
    }
    out.push_back(v);
  }
  if (out.size() != expected) {
    throw InvalidInput(std::string(flag) + ": expected " + std::to_string(expected) +
                       " comma-separated values, got " + std::to_string(out.size()));
  }
  return out;
}

Eigen::Vector3d parse_vec3(const std::string& text, const char* flag) {
  const auto v = parse_list(text, 3, flag);
  return {v[0], v[1], v[2]};
}

HamiltonianKind parse_which(const std::string& s) {
  if (s == "dirac") return HamiltonianKind::dirac;
  return HamiltonianKind::nonrelativistic;  // nonrel or its alias, enforced by IsMember
}

Observable parse_observable(const std::string& s) {
  static const std::map<std::string, Observable> table = {
      {"identity", Observable::identity}, {"alpha1", Observable::alpha1}, {"alpha2", Observable::alpha2},
      {"alpha3", Observable::alpha3},     {"beta", Observable::beta},     {"ibg5", Observable::ibg5}};
  return table.at(s);
}

// Reads a flat key=value file. Blank lines and lines starting with '#' are skipped.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidInput("config line " + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key.empty()) throw InvalidInput("config line " + std::to_string(lineno) + ": empty key");
    out.emplace_back(canonical_key(key), trim(line.substr(eq + 1)));
  }
  return out;
}

// Expands `--config path` into extra `--key=value` arguments for keys not
// already given on the command line, so explicit flags win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::optional<std::string> path;
  std::set<std::string> present;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw InvalidInput("--config needs a path");
      path = args[++i];
      continue;
    }
    if (a.rfind("--config=", 0) == 0) {
      path = a.substr(9);
      continue;
    }
    if (a.rfind("--", 0) == 0) present.insert(canonical_key(a.substr(2, a.find('=') - 2)));
    out.push_back(a);
  }
  if (path) {
    for (const auto& [key, value] : read_config(*path)) {
      if (key == "config") throw InvalidInput("config files cannot include other config files");
      if (present.count(key)) continue;
      out.push_back("--" + key + "=" + value);
    }
  }
  return out;
}

struct SharedFlags {
  std::string units = "natural";
  std::optional<double> m0, c, hbar;
  std::optional<double> q;
  std::string format = "json";
};

void add_shared(CLI::App* sub, SharedFlags& f, RunConfig& config) {
  sub->add_option("--units", f.units, "natural (m0 = c = hbar = 1) or custom")
      ->check(CLI::IsMember({"natural", "custom"}));
  sub->add_option("--m0", f.m0, "rest mass (custom units)");
  sub->add_option("--c", f.c, "speed of light (custom units)");
  sub->add_option("--hbar", f.hbar, "reduced Planck constant (custom units)");
  sub->add_option("--q", f.q, "signed charge, default -1");
  sub->add_option("--seed", config.seed, "64-bit seed for randomized commands");
  sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", config.output_path, "write output to PATH instead of stdout");
}

void apply_shared(const SharedFlags& f, RunConfig& config) {
  config.custom_units = f.units == "custom";
  if (!config.custom_units && (f.m0 || f.c || f.hbar)) {
    throw InvalidInput("--m0, --c and --hbar require --units custom");
  }
  if (f.m0) config.params.m0 = *f.m0;
  if (f.c) config.params.c = *f.c;
  if (f.hbar) config.params.hbar = *f.hbar;
  if (f.q) config.params.q = *f.q;
  config.format = f.format == "csv" ? OutputFormat::csv : OutputFormat::json;
  config.params.validate();
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  RunConfig config;
  SharedFlags shared;

  std::string which_disp = "nonrel", which_zit = "nonrel", observable = "alpha3", mode = "transform";
  std::string zit_p = "0,0,1", zit_weights = "0,1,0,1";
  std::string lor_v = "0,0,0", lor_p_prime = "0,0,0";

  CLI::App app{"Numerical checks for a nonrelativistic spin-1/2 wave equation with negative energies", "negspin"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);

  const auto make = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_shared(sub, shared, config);
    return sub;
  };

  make("identities", "operator algebra and Gamma-matrix properties");

  auto* disp = make("dispersion", "free spectrum along z against the closed form");
  disp->add_option("--pmax", config.dispersion.pmax, "largest |p|");
  disp->add_option("--steps", config.dispersion.steps, "number of momenta, >= 2");
  disp->add_option("--which", which_disp, "dirac or nonrel")
      ->check(CLI::IsMember({"dirac", "bruce", "nonrel"}));

  auto* lan = make("landau", "truncated-basis Landau levels against the closed form");
  lan->add_option("--b", config.landau.b, "field strength, > 0");
  lan->add_option("--pz", config.landau.pz, "momentum along the field");
  lan->add_option("--n-max,--n_max", config.landau.n_max, "highest oscillator level kept");
  lan->add_option("--k-max,--k_max", config.landau.k_max, "highest level compared");

  auto* cou = make("coulomb", "radial finite-difference levels against the Bohr formula");
  cou->add_option("--z", config.coulomb.z, "nuclear charge number");
  cou->add_option("--l", config.coulomb.l, "orbital angular momentum");
  cou->add_option("--r-max,--r_max", config.coulomb.r_max, "outer boundary");
  cou->add_option("--n-points,--n_points", config.coulomb.n_points, "interior grid points");
  cou->add_option("--n-levels,--n_levels", config.coulomb.n_levels, "levels to report, >= 1");
  cou->add_option("--convergence", config.coulomb.convergence, "also run the grid-halving study");

  auto* zit = make("zitter", "time series of an observable and its beat frequency");
  zit->add_option("--p", zit_p, "momentum px,py,pz");
  zit->add_option("--weights", zit_weights, "amplitudes of (E-,h-) (E-,h+) (E+,h-) (E+,h+)");
  zit->add_option("--observable", observable, "identity, alpha1..3, beta or ibg5")
      ->check(CLI::IsMember({"identity", "alpha1", "alpha2", "alpha3", "beta", "ibg5"}));
  zit->add_option("--t-max,--t_max", config.zitter.t_max, "length of the time window");
  zit->add_option("--n-samples,--n_samples", config.zitter.n_samples, "number of samples");
  zit->add_option("--which", which_zit, "dirac or nonrel")
      ->check(CLI::IsMember({"dirac", "bruce", "nonrel"}));

  auto* lor = make("lorentz", "boosts of (E', p') and the energy correspondence sweep");
  lor->add_option("--v", lor_v, "boost velocity vx,vy,vz");
  lor->add_option("--e-prime,--e_prime", config.lorentz.e_prime, "rest-frame energy, default m0 c^2");
  lor->add_option("--p-prime,--p_prime", lor_p_prime, "rest-frame momentum");
  lor->add_option("--mode", mode, "transform, sweep or both")
      ->check(CLI::IsMember({"transform", "sweep", "both"}));
  lor->add_option("--sweep-points,--sweep_points", config.lorentz.sweep_points, "momenta in the sweep");
  lor->add_option("--sweep-pmax,--sweep_pmax", config.lorentz.sweep_pmax, "largest |p| in the sweep");

  auto* red = make("reduction", "seeded random checks of the two-component reduction");
  red->add_option("--trials", config.reduction.trials, "number of random instances");
  red->add_flag("--wrong-energy,--wrong_energy", config.reduction.wrong_energy,
                "offset the trial energy by 0.2 (negative control)");

  std::vector<std::string> args;
  try {
    args = expand_config(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const InvalidInput& e) {
    std::cerr << "negspin: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    // CLI11 consumes the vector from the back.
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    apply_shared(shared, config);
    config.dispersion.which = parse_which(which_disp);
    config.zitter.which = parse_which(which_zit);
    config.zitter.observable = parse_observable(observable);
    config.zitter.p = parse_vec3(zit_p, "--p");
    const auto w = parse_list(zit_weights, 4, "--weights");
    std::copy(w.begin(), w.end(), config.zitter.weights.begin());
    config.lorentz.v = parse_vec3(lor_v, "--v");
    config.lorentz.p_prime = parse_vec3(lor_p_prime, "--p-prime");
    config.lorentz.mode = mode == "sweep" ? LorentzMode::sweep : mode == "both" ? LorentzMode::both
                                                                                : LorentzMode::transform;

    const CommandOutput out = run_command(config);
    const std::string& text = out.text(config.format);
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) throw InvalidInput("cannot write '" + *config.output_path + "'");
      file << text;
      if (!file) throw InvalidInput("write to '" + *config.output_path + "' failed");
    } else {
      std::cout << text;
    }
    return out.exit_code;
  } catch (const InvalidInput& e) {
    std::cerr << "negspin: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericFailure& e) {
    std::cerr << "negspin: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace negspin::cli
