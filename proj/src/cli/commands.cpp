#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "negspin/cli.hpp"
#include "negspin/clifford.hpp"
#include "negspin/dynamics.hpp"
#include "negspin/fields.hpp"
#include "negspin/spectral.hpp"

namespace negspin::cli {

namespace {

using json = nlohmann::ordered_json;

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string str() const {
    std::string out;
    auto emit = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
      }
      out += '\n';
    };
    emit(header_);
    for (const auto& r : rows_) emit(r);
    return out;
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string num(double v) { return format_number(v); }
std::string num(std::size_t v) { return std::to_string(v); }
std::string flag(bool v) { return v ? "true" : "false"; }

json checks_json(const CheckReport& report) {
  json arr = json::array();
  for (const auto& e : report.entries()) {
    arr.push_back({{"name", e.name}, {"residual", e.residual}, {"tolerance", e.tolerance}, {"pass", e.pass}});
  }
  return arr;
}

json vec_json(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

std::string_view which_name(HamiltonianKind kind) {
  return kind == HamiltonianKind::dirac ? "dirac" : "nonrel";
}

json base_params(const RunConfig& config) {
  return {{"units", config.custom_units ? "custom" : "natural"},
          {"m0", config.params.m0},
          {"c", config.params.c},
          {"hbar", config.params.hbar},
          {"q", config.params.q},
          {"seed", config.seed}};
}

CommandOutput finish(const std::string& command, json params, json results, const CheckReport& checks,
                     std::string csv) {
  CommandOutput out;
  out.report = {{"command", command},
                {"version", kVersion},
                {"params", std::move(params)},
                {"results", std::move(results)},
                {"checks", checks_json(checks)},
                {"overall_pass", checks.overall_pass()}};
  out.csv = std::move(csv);
  out.exit_code = checks.overall_pass() ? kExitPass : kExitFail;
  return out;
}

std::string_view observable_name(Observable o) {
  switch (o) {
    case Observable::identity: return "identity";
    case Observable::alpha1: return "alpha1";
    case Observable::alpha2: return "alpha2";
    case Observable::alpha3: return "alpha3";
    case Observable::beta: return "beta";
    case Observable::ibg5: return "ibg5";
  }
  return "?";
}

ComplexMatrix observable_matrix(Observable o) {
  const DiracBasis b = dirac_representation();
  switch (o) {
    case Observable::identity: return identity(4);
    case Observable::alpha1: return b.alpha[0];
    case Observable::alpha2: return b.alpha[1];
    case Observable::alpha3: return b.alpha[2];
    case Observable::beta: return b.beta;
    case Observable::ibg5: return b.i_beta_gamma5();
  }
  return identity(4);
}

}  // namespace

const std::string& CommandOutput::text(OutputFormat format) const {
  if (format == OutputFormat::csv) return csv;
  json_text_ = report.dump(2) + "\n";
  return json_text_;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

SeededDraws::SeededDraws(std::uint64_t seed) : engine_(seed) {}

double SeededDraws::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double SeededDraws::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::complex<double> SeededDraws::unit_disc() {
  for (;;) {
    const double x = uniform(-1.0, 1.0);
    const double y = uniform(-1.0, 1.0);
    if (x * x + y * y <= 1.0) return {x, y};
  }
}

Spinor2 SeededDraws::spinor() {
  for (;;) {
    Spinor2 s(unit_disc(), unit_disc());
    if (s.norm() > 1e-12) return s.normalized();
  }
}

CommandOutput cmd_identities(const RunConfig& config) {
  const DiracBasis basis = dirac_representation();
  CheckReport report = verify_clifford_identities(basis);
  report.append(verify_gamma_properties(basis));

  CsvTable csv({"name", "residual", "tolerance", "pass"});
  for (const auto& e : report.entries()) csv.row({e.name, num(e.residual), num(e.tolerance), flag(e.pass)});
  json results = {{"representation", "dirac-pauli"}, {"check_count", report.size()}};
  return finish("identities", base_params(config), std::move(results), report, csv.str());
}

CommandOutput cmd_dispersion(const RunConfig& config) {
  const auto& o = config.dispersion;
  if (!(o.pmax > 0.0) || !std::isfinite(o.pmax)) throw InvalidInput("dispersion: pmax must be positive");
  if (o.steps < 2) throw InvalidInput("dispersion: steps must be at least 2");

  CsvTable csv({"p", "E1", "E2", "E3", "E4", "E_closed"});
  CheckReport report;
  json rows = json::array();
  for (std::size_t i = 0; i < o.steps; ++i) {
    const double pn = o.pmax * static_cast<double>(i) / static_cast<double>(o.steps - 1);
    const MomentumVector p(0.0, 0.0, pn);
    const auto spec = free_spectrum(p, config.params, o.which);
    const double closed = closed_form_energy(p, config.params, o.which);
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double expected = k < 2 ? -closed : closed;
      worst = std::max(worst, std::abs(spec.energies(k) - expected) / closed);
    }
    report.add("spectrum |p|=" + num(pn), worst, 1e-12);
    csv.row({num(pn), num(spec.energies(0)), num(spec.energies(1)), num(spec.energies(2)),
             num(spec.energies(3)), num(closed)});
    rows.push_back({{"p", pn},
                    {"energies", {spec.energies(0), spec.energies(1), spec.energies(2), spec.energies(3)}},
                    {"closed_form", closed}});
  }
  json params = base_params(config);
  params["pmax"] = o.pmax;
  params["steps"] = o.steps;
  params["which"] = which_name(o.which);
  return finish("dispersion", std::move(params), {{"direction", {0.0, 0.0, 1.0}}, {"rows", rows}}, report,
                csv.str());
}

CommandOutput cmd_landau(const RunConfig& config) {
  const auto& o = config.landau;
  const UniformBField field{o.b};
  const auto cmp = compare_landau_levels(field, o.pz, o.n_max, o.k_max, config.params);
  const auto analytic = landau_levels_analytic(field, o.pz, o.k_max, config.params);
  const auto square = square_identity_check(field, o.pz, o.n_max, config.params);

  CheckReport report;
  CsvTable csv({"k", "E_plus", "E_minus", "multiplicity", "E_plus_numeric", "E_minus_numeric", "residual"});
  json levels = json::array();
  for (std::size_t i = 0; i < cmp.levels.size(); ++i) {
    const auto& a = analytic.levels[i];
    const auto& n = cmp.levels[i];
    report.add("level k=" + num(a.k), n.residual, 1e-6);
    csv.row({num(a.k), num(a.energy_plus), num(a.energy_minus), num(a.multiplicity), num(n.numeric_plus),
             num(n.numeric_minus), num(n.residual)});
    levels.push_back({{"k", a.k},
                      {"E_plus", a.energy_plus},
                      {"E_minus", a.energy_minus},
                      {"multiplicity", a.multiplicity},
                      {"E_plus_numeric", n.numeric_plus},
                      {"E_minus_numeric", n.numeric_minus},
                      {"residual", n.residual}});
  }
  report.add("+/- pairing", cmp.pairing_residual, 1e-8);
  report.append(square.report);

  json params = base_params(config);
  params["b"] = o.b;
  params["pz"] = o.pz;
  params["n_max"] = o.n_max;
  params["k_max"] = o.k_max;
  json results = {{"omega_c", analytic.omega_c},
                  {"levels", levels},
                  {"pairing_residual", cmp.pairing_residual},
                  {"edge_states_excluded", square.excluded_states}};
  return finish("landau", std::move(params), std::move(results), report, csv.str());
}

CommandOutput cmd_coulomb(const RunConfig& config) {
  const auto& o = config.coulomb;
  const RadialGrid grid{o.r_max, o.n_points};
  const auto spec = coulomb_radial_spectrum(o.z, o.l, grid, config.params, o.n_levels);

  CheckReport report;
  CsvTable csv({"n", "E_plus", "E_minus", "multiplicity", "E_bohr", "rel_error"});
  json levels = json::array();
  for (std::size_t i = 0; i < spec.energies_plus.size(); ++i) {
    const std::size_t n = i + o.l + 1;
    const double bohr = bohr_energy(o.z, n, config.params);
    const double rel = std::abs(spec.energies_plus[i] - bohr) / std::abs(bohr);
    const std::size_t mult = 2 * (2 * o.l + 1);
    report.add("level n=" + num(n) + " vs Bohr", rel, 1e-3);
    csv.row({num(n), num(spec.energies_plus[i]), num(spec.energies_minus[i]), num(mult), num(bohr), num(rel)});
    levels.push_back({{"n", n},
                      {"E_plus", spec.energies_plus[i]},
                      {"E_minus", spec.energies_minus[i]},
                      {"multiplicity", mult},
                      {"E_bohr", bohr},
                      {"rel_error", rel}});
  }
  json results = {{"spacing", grid.spacing()}, {"levels", levels}};
  if (o.convergence) {
    const auto conv = coulomb_convergence(o.z, o.l, grid, config.params, 0);
    report.add("O(h^2) error ratio under halving", std::abs(conv.ratio - 4.0), 0.5);
    results["convergence"] = {{"E_h", conv.energy_h},
                              {"E_h2", conv.energy_h2},
                              {"E_h4", conv.energy_h4},
                              {"extrapolated", conv.extrapolated},
                              {"ratio", conv.ratio}};
  }
  json params = base_params(config);
  params["z"] = o.z;
  params["l"] = o.l;
  params["r_max"] = o.r_max;
  params["n_points"] = o.n_points;
  params["n_levels"] = o.n_levels;
  params["convergence"] = o.convergence;
  return finish("coulomb", std::move(params), std::move(results), report, csv.str());
}

CommandOutput cmd_zitter(const RunConfig& config) {
  const auto& o = config.zitter;
  std::array<std::complex<double>, 4> amplitudes;
  for (std::size_t i = 0; i < 4; ++i) amplitudes[i] = o.weights[i];
  const Superposition sup = make_superposition(o.p, config.params, o.which, amplitudes);
  validate_superposition(sup, free_hamiltonian(o.p, config.params, o.which));
  const auto series = observable_series(sup, observable_matrix(o.observable), o.t_max, o.n_samples, config.params);
  const FrequencyEstimate est = dominant_frequency(series);

  // Distinct energies among the components; states sharing an energy do not beat.
  std::set<double> energies;
  for (const auto& c : sup.components) energies.insert(c.energy);
  const double lo = *energies.begin();
  const double hi = *energies.rbegin();
  const bool beating = hi - lo > 1e-9 * std::max(1.0, std::abs(hi));
  const double analytic = (hi - lo) / config.params.hbar;

  CheckReport report;
  json results;
  results["frequency"] = est.omega ? json(*est.omega) : json(nullptr);
  results["oscillation"] = est.omega.has_value();
  results["analytic_frequency"] = beating ? json(analytic) : json(nullptr);
  results["peak"] = est.peak;
  results["noise_floor"] = est.noise_floor;
  if (beating) {
    report.add("oscillation detected", est.omega ? 0.0 : 1.0, 0.5);
    if (est.omega) {
      const double rel = std::abs(*est.omega - analytic) / analytic;
      results["relative_error"] = rel;
      report.add("frequency vs |E+ - E-|/hbar", rel, 0.01);
    } else {
      results["relative_error"] = nullptr;
    }
  } else {
    results["relative_error"] = nullptr;
    report.add("stationary state: no oscillation", est.omega ? 1.0 : 0.0, 0.5);
  }
  json samples = json::array();
  CsvTable csv({"t", "value"});
  for (const auto& s : series) {
    samples.push_back({s.t, s.value});
    csv.row({num(s.t), num(s.value)});
  }
  results["series"] = std::move(samples);

  json params = base_params(config);
  params["p"] = vec_json(o.p);
  params["weights"] = o.weights;
  params["observable"] = observable_name(o.observable);
  params["t_max"] = o.t_max;
  params["n_samples"] = o.n_samples;
  params["which"] = which_name(o.which);
  return finish("zitter", std::move(params), std::move(results), report, csv.str());
}

CommandOutput cmd_lorentz(const RunConfig& config) {
  const auto& o = config.lorentz;
  const auto& pp = config.params;
  pp.validate();
  if (!(o.v.norm() < pp.c)) throw InvalidInput("lorentz: |v| must be below c");

  CheckReport report;
  json results;
  std::string csv;
  json params = base_params(config);
  params["v"] = vec_json(o.v);
  params["mode"] = o.mode == LorentzMode::transform ? "transform" : o.mode == LorentzMode::sweep ? "sweep" : "both";

  if (o.mode != LorentzMode::sweep) {
    const double e_prime = o.e_prime.value_or(pp.rest_energy());
    const auto f = lorentz_transform(e_prime, o.p_prime, o.v, pp);
    const auto back = lorentz_transform(f.energy, f.momentum, -o.v, pp);
    const double scale = std::max({1.0, std::abs(f.energy), pp.c * f.momentum.norm()});
    const double err = std::max(std::abs(back.energy - e_prime), pp.c * (back.momentum - o.p_prime).norm()) / scale;
    report.add("inverse transform round trip", err, 1e-12);
    params["e_prime"] = e_prime;
    params["p_prime"] = vec_json(o.p_prime);
    results["transform"] = {{"E", f.energy}, {"p", vec_json(f.momentum)}};
    CsvTable t({"E", "px", "py", "pz"});
    t.row({num(f.energy), num(f.momentum.x()), num(f.momentum.y()), num(f.momentum.z())});
    csv = t.str();
  }
  if (o.mode != LorentzMode::transform) {
    if (o.sweep_points < 1) throw InvalidInput("lorentz: sweep needs at least one point");
    if (!(o.sweep_pmax >= 0.0)) throw InvalidInput("lorentz: sweep_pmax must be non-negative");
    const Eigen::Vector3d dir = Eigen::Vector3d(1.0, 2.0, 2.0) / 3.0;
    CsvTable t({"p", "branch", "E_D", "v_dot_p", "rest_term", "residual"});
    json rows = json::array();
    const DiracBasis b = dirac_representation();
    for (std::size_t i = 0; i < o.sweep_points; ++i) {
      const double pn = o.sweep_points == 1
                            ? o.sweep_pmax
                            : o.sweep_pmax * static_cast<double>(i) / static_cast<double>(o.sweep_points - 1);
      const MomentumVector p = pn * dir;
      const auto states = helicity_eigenstates(p, pp, HamiltonianKind::dirac);
      for (int branch : {-1, 1}) {
        const auto check = correspondence_check(p, pp, branch);
        report.append(check);
        const auto& s = states.at(branch, 1);
        Eigen::Vector3d v;
        for (int k = 0; k < 3; ++k) v(k) = pp.c * expectation(b.alpha[k], s.spinor);
        const double vp = v.dot(p);
        const double rest = pp.rest_energy() * expectation(b.beta, s.spinor);
        const double res = check.entries().front().residual;
        t.row({num(pn), branch > 0 ? "+" : "-", num(s.energy), num(vp), num(rest), num(res)});
        rows.push_back({{"p", pn}, {"branch", branch}, {"E_D", s.energy}, {"v_dot_p", vp}, {"rest_term", rest},
                        {"residual", res}});
      }
    }
    params["sweep_points"] = o.sweep_points;
    params["sweep_pmax"] = o.sweep_pmax;
    params["sweep_direction"] = vec_json(dir);
    results["correspondence"] = std::move(rows);
    csv = o.mode == LorentzMode::sweep ? t.str() : csv + "\n" + t.str();
  }
  return finish("lorentz", std::move(params), std::move(results), report, csv);
}

CommandOutput cmd_reduction(const RunConfig& config) {
  const auto& o = config.reduction;
  const auto& pp = config.params;
  if (o.trials < 1) throw InvalidInput("reduction: trials must be at least 1");
  SeededDraws draws(config.seed);

  CheckReport report;
  CsvTable csv({"trial", "px", "py", "pz", "v0", "e_trial", "identity_residual", "pauli_residual", "pass"});
  json trials = json::array();
  for (std::size_t i = 0; i < o.trials; ++i) {
    MomentumVector p;
    for (int k = 0; k < 3; ++k) p(k) = draws.uniform(-2.0, 2.0);
    const double v0 = draws.uniform(-1.0, 1.0);
    const Spinor2 phi = draws.spinor();
    double e_trial = v0 + pp.rest_energy() + p.squaredNorm() / (2.0 * pp.m0);
    if (o.wrong_energy) e_trial += 0.2;

    const CheckReport r = pauli_reduction_check(p, v0, e_trial, pp, phi);
    report.append(r, "trial " + std::to_string(i) + ": ");
    double identity_res = 0.0;
    for (const auto& e : r.entries()) {
      if (e.name != "pauli relation") identity_res = std::max(identity_res, e.residual);
    }
    const double pauli_res = r.find("pauli relation")->residual;
    csv.row({num(i), num(p.x()), num(p.y()), num(p.z()), num(v0), num(e_trial), num(identity_res), num(pauli_res),
             flag(r.overall_pass())});
    trials.push_back({{"trial", i},
                      {"p", vec_json(p)},
                      {"v0", v0},
                      {"phi", {{phi(0).real(), phi(0).imag()}, {phi(1).real(), phi(1).imag()}}},
                      {"e_trial", e_trial},
                      {"identity_residual", identity_res},
                      {"pauli_residual", pauli_res},
                      {"pass", r.overall_pass()}});
  }
  json params = base_params(config);
  params["trials"] = o.trials;
  params["wrong_energy"] = o.wrong_energy;
  return finish("reduction", std::move(params), {{"trials", trials}}, report, csv.str());
}

CommandOutput run_command(const RunConfig& config) {
  config.params.validate();
  const std::string& c = config.command;
  if (c == "identities") return cmd_identities(config);
  if (c == "dispersion") return cmd_dispersion(config);
  if (c == "landau") return cmd_landau(config);
  if (c == "coulomb") return cmd_coulomb(config);
  if (c == "zitter") return cmd_zitter(config);
  if (c == "lorentz") return cmd_lorentz(config);
  if (c == "reduction") return cmd_reduction(config);
  throw InvalidInput("unknown command '" + c + "'");
}

}  // namespace negspin::cli
