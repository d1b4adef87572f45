// coulomb2d command-line interface.
//
// Subcommands: kinematics, phase-shifts, amplitude, cross-section, radial,
// verify.  Outputs CSV or JSON (JSON mirrors the CSV rows and carries a
// metadata header with the kinematics echo, options, and code version).
// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 numerical error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "coulomb2d/amplitude.hpp"
#include "coulomb2d/io.hpp"
#include "coulomb2d/kinematics.hpp"
#include "coulomb2d/phase_shift.hpp"
#include "coulomb2d/radial.hpp"
#include "coulomb2d/specfun.hpp"
#include "coulomb2d/verify.hpp"
#include "coulomb2d/version.hpp"

namespace {

using json = nlohmann::json;
using namespace coulomb2d;

constexpr double PI = 3.14159265358979323846264338327950288;
constexpr double HBAR_C_MEV_FM = 197.3269804;  // hbar c in MeV fm

struct CommonConfig {
    std::string particle = "electron";
    int z = 1;
    double alpha = 1.0 / 137.035999;
    bool allow_large_gamma = false;
    std::optional<double> energy_ratio;
    std::optional<double> v_over_c;

    std::string units = "natural";
    double mass_mev = 0.511;

    std::string output;      // empty = stdout
    std::string format = "csv";
    bool no_timestamp = false;
    int threads = 2;
    unsigned seed = 12345;
    std::string config_path;  // consumed before parsing; kept for --help

    ParticleSpec spec() const {
        ParticleSpec s;
        if (particle == "electron") {
            s.species = Species::electron;
        } else if (particle == "positron") {
            s.species = Species::positron;
        } else {
            throw DomainError("particle must be electron or positron");
        }
        s.z_nucleus = z;
        s.fine_structure_alpha = alpha;
        s.allow_large_gamma = allow_large_gamma;
        return s;
    }

    Kinematics kinematics() const {
        if (energy_ratio && v_over_c)
            throw DomainError("give exactly one of --energy-ratio and --v-over-c");
        if (energy_ratio) return derive_kinematics(spec(), *energy_ratio);
        if (v_over_c) {
            double v = *v_over_c;
            if (!(v > 0.0 && v < 1.0)) throw DomainError("--v-over-c must lie in (0,1)");
            return derive_kinematics(spec(), 1.0 / std::sqrt((1.0 - v) * (1.0 + v)));
        }
        throw DomainError("one of --energy-ratio or --v-over-c is required");
    }

    /// Length unit in output: 1 (natural) or the reduced Compton wavelength in fm.
    double length_scale() const {
        if (units == "natural") return 1.0;
        if (units == "physical") {
            if (!(mass_mev > 0.0)) throw DomainError("--mass-mev must be positive");
            return HBAR_C_MEV_FM / mass_mev;
        }
        throw DomainError("--units must be natural or physical");
    }
};

void add_common_flags(CLI::App* cmd, CommonConfig& cfg) {
    cmd->add_option("--config", cfg.config_path,
                    "flat key=value config file (flags take precedence)");
    cmd->add_option("--particle", cfg.particle, "electron or positron")
        ->check(CLI::IsMember({"electron", "positron"}));
    cmd->add_option("--z", cfg.z, "nuclear charge Z (>= 1)");
    cmd->add_option("--alpha", cfg.alpha, "fine-structure constant");
    cmd->add_flag("--allow-large-gamma", cfg.allow_large_gamma,
                  "lift the |gamma| < 1/2 gate (out of warranty)");
    auto* er = cmd->add_option("--energy-ratio", cfg.energy_ratio, "E/(mu c^2), > 1");
    auto* vc = cmd->add_option("--v-over-c", cfg.v_over_c, "incident speed v_c/c in (0,1)");
    er->excludes(vc);
    vc->excludes(er);
    cmd->add_option("--units", cfg.units, "natural (hbar=c=mu=1) or physical")
        ->check(CLI::IsMember({"natural", "physical"}));
    cmd->add_option("--mass-mev", cfg.mass_mev, "particle mass in MeV (physical units)");
    cmd->add_option("--output,-o", cfg.output, "output file (default stdout)");
    cmd->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--no-timestamp", cfg.no_timestamp, "omit the timestamp metadata field");
    cmd->add_option("--threads", cfg.threads, "worker threads");
    cmd->add_option("--seed", cfg.seed, "seed for sampled verification grids");
}

std::string iso_timestamp() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

json metadata_json(const CommonConfig& cfg, const Kinematics& kin) {
    json meta;
    meta["version"] = version_string;
    if (!cfg.no_timestamp) meta["generated_at"] = iso_timestamp();
    meta["units"] = cfg.units;
    if (cfg.units == "physical") meta["length_unit_fm"] = cfg.length_scale();
    meta["config_echo"] = {
        {"particle", cfg.particle}, {"z", cfg.z},           {"alpha", cfg.alpha},
        {"threads", cfg.threads},   {"seed", cfg.seed},
    };
    meta["kinematics"] = {
        {"energy_ratio", kin.energy_ratio}, {"k1", kin.k1},
        {"k2", kin.k2},                     {"k", kin.k},
        {"gamma", kin.gamma_coupling},      {"beta", kin.beta},
        {"beta_prime", kin.beta_prime},     {"v_over_c", kin.v_over_c},
    };
    return meta;
}

void emit(const CommonConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(cfg.output, std::ios::binary);
    if (!os) throw DomainError("cannot open output file: " + cfg.output);
    os << text;
}

std::string csv_with_header(const CommonConfig& cfg, const std::string& body) {
    std::string out;
    if (!cfg.no_timestamp) out += "# generated " + iso_timestamp() + "\n";
    return out + body;
}

// ---------------------------------------------------------------- kinematics
int cmd_kinematics(const CommonConfig& cfg) {
    Kinematics kin = cfg.kinematics();
    double lam = cfg.length_scale();
    if (cfg.format == "json") {
        json out;
        out["metadata"] = metadata_json(cfg, kin);
        if (cfg.units == "physical") {
            out["physical"] = {{"energy_mev", kin.energy_ratio * cfg.mass_mev},
                               {"k_inv_fm", kin.k / lam},
                               {"k1_inv_fm", kin.k1 / lam},
                               {"k2_inv_fm", kin.k2 / lam}};
        }
        emit(cfg, out.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "quantity,value\n";
    os << "energy_ratio," << io::format_double(kin.energy_ratio) << "\n";
    os << "k1," << io::format_double(kin.k1) << "\n";
    os << "k2," << io::format_double(kin.k2) << "\n";
    os << "k," << io::format_double(kin.k) << "\n";
    os << "gamma," << io::format_double(kin.gamma_coupling) << "\n";
    os << "beta," << io::format_double(kin.beta) << "\n";
    os << "beta_prime," << io::format_double(kin.beta_prime) << "\n";
    os << "v_over_c," << io::format_double(kin.v_over_c) << "\n";
    if (cfg.units == "physical") {
        os << "energy_mev," << io::format_double(kin.energy_ratio * cfg.mass_mev) << "\n";
        os << "k_inv_fm," << io::format_double(kin.k / lam) << "\n";
    }
    emit(cfg, csv_with_header(cfg, os.str()));
    return 0;
}

// -------------------------------------------------------------- phase shifts
int cmd_phase_shifts(const CommonConfig& cfg, int two_j_max, const std::string& method) {
    Kinematics kin = cfg.kinematics();
    SMatrixMethod m = SMatrixMethod::exact;
    if (method == "small-gamma") m = SMatrixMethod::small_gamma;
    else if (method == "nonrel") m = SMatrixMethod::nonrel;
    else if (method != "exact") throw DomainError("unknown phase-shift method: " + method);
    auto channels = s_matrix_channels(two_j_max, kin, m);
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& ch : channels) {
            rows.push_back({{"two_j", ch.j.two_j},
                            {"m", ch.j.m()},
                            {"s", exponent_s(ch.j, kin.gamma_coupling)},
                            {"re_S", ch.value.real()},
                            {"im_S", ch.value.imag()},
                            {"eta_principal", ch.eta_principal},
                            {"method", to_string(ch.method)}});
        }
        json out;
        out["metadata"] = metadata_json(cfg, kin);
        out["metadata"]["two_j_max"] = two_j_max;
        out["channels"] = rows;
        emit(cfg, out.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    io::write_phase_shift_csv(os, channels, kin);
    emit(cfg, csv_with_header(cfg, os.str()));
    return 0;
}

// ---------------------------------------------------------------- amplitudes
struct GridConfig {
    int count = 256;
    double theta_min = -1.0;
    double theta_max = -1.0;
    double cutoff = AngleGrid::default_cutoff();
};

void add_grid_flags(CLI::App* cmd, GridConfig& g) {
    cmd->add_option("--angles", g.count, "number of grid angles");
    cmd->add_option("--theta-min", g.theta_min, "first angle (rad)");
    cmd->add_option("--theta-max", g.theta_max, "last angle (rad)");
    cmd->add_option("--forward-cutoff", g.cutoff,
                    "minimum distance to the forward direction (rad)");
}

struct SeriesConfig {
    int max_two_j = 2001;
    double eps0 = 0.1;
    int levels = 6;
    double tolerance = 1e-8;
};

void add_series_flags(CLI::App* cmd, SeriesConfig& s) {
    cmd->add_option("--jmax", s.max_two_j, "channel cap |two_j| <= jmax");
    cmd->add_option("--abel-eps0", s.eps0, "first Abel damping level");
    cmd->add_option("--abel-levels", s.levels, "number of damping levels");
    cmd->add_option("--tolerance", s.tolerance, "summation target tolerance");
}

int cmd_amplitude(const CommonConfig& cfg, const GridConfig& g, const SeriesConfig& s,
                  const std::string& method) {
    Kinematics kin = cfg.kinematics();
    AngleGrid grid = AngleGrid::uniform(g.count, g.theta_min, g.theta_max, g.cutoff);
    SummationOptions opts;
    opts.max_two_j = s.max_two_j;
    opts.eps0 = s.eps0;
    opts.levels = s.levels;
    opts.target_tolerance = s.tolerance;
    opts.threads = cfg.threads;

    AmplitudeGrid amp;
    if (method == "series-exact") amp = f_series_exact(grid, kin, opts);
    else if (method == "closed-form") amp = f_closed(grid, kin);
    else if (method == "split") amp = f_series_split(grid, kin, opts);
    else if (method == "f0") amp = f0_closed(grid, kin);
    else if (method == "f1") amp = f1_closed(grid, kin);
    else if (method == "f1-series") amp = f1_series(grid, kin);
    else throw DomainError("unknown amplitude method: " + method);

    double lam = cfg.length_scale();
    if (cfg.format == "json") {
        json rows = json::array();
        double amp_scale = std::sqrt(lam);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            std::complex<double> f = amp.values[i] * amp_scale;
            rows.push_back({{"theta_rad", grid.thetas[i]},
                            {"re_f", f.real()},
                            {"im_f", f.imag()},
                            {"sigma", std::norm(f)},
                            {"sigma_closed", sigma_closed_at(grid.thetas[i], kin) * lam},
                            {"method", to_string(amp.method)},
                            {"diag", amp.diagnostics[i] * amp_scale}});
        }
        json out;
        out["metadata"] = metadata_json(cfg, kin);
        out["metadata"]["options"] = {{"jmax", s.max_two_j},
                                      {"abel_eps0", s.eps0},
                                      {"abel_levels", s.levels},
                                      {"tolerance", s.tolerance},
                                      {"forward_cutoff", g.cutoff},
                                      {"method", method}};
        out["amplitude"] = rows;
        emit(cfg, out.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    io::write_amplitude_csv(os, amp, kin, lam);
    emit(cfg, csv_with_header(cfg, os.str()));
    return 0;
}

int cmd_cross_section(const CommonConfig& cfg, const GridConfig& g) {
    Kinematics kin = cfg.kinematics();
    AngleGrid grid = AngleGrid::uniform(g.count, g.theta_min, g.theta_max, g.cutoff);
    std::vector<double> sig = sigma(grid, kin);
    double lam = cfg.length_scale();
    if (cfg.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            rows.push_back({{"theta_rad", grid.thetas[i]},
                            {"sigma", sig[i] * lam},
                            {"sigma_classical",
                             sigma_classical_form(grid.thetas[i], kin.v_over_c,
                                                  kin.gamma_coupling) *
                                 lam}});
        }
        json out;
        out["metadata"] = metadata_json(cfg, kin);
        out["cross_section"] = rows;
        emit(cfg, out.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "theta_rad,sigma,sigma_classical\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        os << io::format_double(grid.thetas[i]) << ',' << io::format_double(sig[i] * lam)
           << ','
           << io::format_double(
                  sigma_classical_form(grid.thetas[i], kin.v_over_c, kin.gamma_coupling) *
                  lam)
           << '\n';
    }
    emit(cfg, csv_with_header(cfg, os.str()));
    return 0;
}

// -------------------------------------------------------------------- radial
int cmd_radial(const CommonConfig& cfg, int two_j, double rho_max, int points,
               const std::string& solver, double rho0) {
    Kinematics kin = cfg.kinematics();
    AngularMomentum j(two_j);
    if (points < 2) throw DomainError("--points must be >= 2");
    std::vector<double> grid(static_cast<std::size_t>(points));
    double lo = std::max(rho0, rho_max / 1e4);
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] = lo + (rho_max - lo) * i / double(points - 1);

    RadialSolution sol;
    if (solver == "kummer") {
        sol = kummer_radial(j, kin, grid);
    } else if (solver == "ode") {
        RadialOdeOptions opts;
        opts.rho0 = rho0;
        sol = ode_integrate(j, kin, {rho0, rho_max}, grid, opts);
    } else {
        throw DomainError("unknown radial solver: " + solver);
    }

    std::ostringstream os;
    io::write_radial_csv(os, sol);
    emit(cfg, csv_with_header(cfg, os.str()));

    // phase extraction report on stderr when the window fits
    if (rho_max >= 200.0) {
        PhaseExtraction ext = extract_phase(sol);
        double eta_ref = s_matrix_exact(j, kin).eta_principal;
        std::fprintf(stderr,
                     "eta_fit=%.12g eta_exact=%.12g residual=%.3g window=[%g,%g]\n",
                     ext.eta, eta_ref, ext.residual, ext.fit_window[0], ext.fit_window[1]);
    }
    return 0;
}

// -------------------------------------------------------------------- verify
int cmd_verify(const CommonConfig& cfg, const std::string& suite_str,
               const std::string& report_path, double fault) {
    verify::Suite suite = verify::parse_suite(suite_str);
    verify::VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.threads = cfg.threads;
    if (fault != 0.0) specfun::set_log_gamma_fault(fault);
    std::vector<verify::CheckResult> results = verify::run_suite(suite, opts);
    specfun::set_log_gamma_fault(0.0);

    json report;
    report["version"] = version_string;
    report["suite"] = suite_str;
    report["seed"] = cfg.seed;
    if (!cfg.no_timestamp) report["generated_at"] = iso_timestamp();
    if (fault != 0.0) report["injected_gamma_fault"] = fault;
    json checks = json::array();
    bool ok = true;
    for (const auto& r : results) {
        checks.push_back({{"id", r.id},
                          {"name", r.name},
                          {"passed", r.passed},
                          {"margin", r.margin},
                          {"tolerance", r.tolerance},
                          {"seconds", r.seconds},
                          {"detail", r.detail}});
        ok = ok && r.passed;
        std::fprintf(stderr, "[%s] %s: %s (margin %.3g)\n", r.passed ? "PASS" : "FAIL",
                     r.id.c_str(), r.name.c_str(), r.margin);
    }
    report["checks"] = checks;
    report["passed"] = ok;
    std::string text = report.dump(2) + "\n";
    if (!report_path.empty()) {
        std::ofstream os(report_path, std::ios::binary);
        if (!os) throw DomainError("cannot open report file: " + report_path);
        os << text;
    } else {
        std::cout << text;
    }
    return ok ? 0 : 1;
}

// Flat key=value config support: the file's pairs are spliced into the
// argument list right after the subcommand, and every option takes the last
// occurrence, so explicit flags override the file.
std::vector<std::string> splice_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw DomainError("--config needs a file path");
            path = args[i + 1];
            args.erase(args.begin() + long(i), args.begin() + long(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + long(i));
            break;
        }
    }
    if (path.empty()) return args;
    std::ifstream is(path);
    if (!is) throw DomainError("cannot open config file: " + path);
    std::vector<std::string> extra;
    std::string line;
    while (std::getline(is, line)) {
        std::size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos || line[begin] == '#') continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        extra.push_back("--" + line.substr(begin, end - begin + 1));
    }
    // insert after the subcommand token
    std::size_t at = 0;
    while (at < args.size() && !args[at].empty() && args[at][0] == '-') ++at;
    if (at < args.size()) ++at;
    args.insert(args.begin() + long(at), extra.begin(), extra.end());
    return args;
}

void take_last_everywhere(CLI::App* app) {
    for (CLI::Option* opt : app->get_options()) {
        if (opt->get_expected_min() > 0)
            opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }
    for (CLI::App* sub : app->get_subcommands(nullptr)) take_last_everywhere(sub);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relativistic Coulomb scattering observables for Dirac particles in"
                 " two dimensions"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    CommonConfig cfg;

    auto* kin_cmd = app.add_subcommand("kinematics", "derived scattering parameters");
    add_common_flags(kin_cmd, cfg);

    auto* ps_cmd = app.add_subcommand("phase-shifts", "per-channel S-matrix table");
    add_common_flags(ps_cmd, cfg);
    int two_j_max = 41;
    std::string ps_method = "exact";
    ps_cmd->add_option("--jmax", two_j_max, "largest |two_j| (odd)");
    ps_cmd->add_option("--method", ps_method, "exact, small-gamma, or nonrel")
        ->check(CLI::IsMember({"exact", "small-gamma", "nonrel"}));

    auto* amp_cmd = app.add_subcommand("amplitude", "scattering amplitude f(theta)");
    add_common_flags(amp_cmd, cfg);
    GridConfig grid_cfg;
    SeriesConfig series_cfg;
    std::string amp_method = "series-exact";
    add_grid_flags(amp_cmd, grid_cfg);
    add_series_flags(amp_cmd, series_cfg);
    amp_cmd->add_option("--method", amp_method,
                        "series-exact, closed-form, split, f0, f1, f1-series")
        ->check(CLI::IsMember({"series-exact", "closed-form", "split", "f0", "f1",
                               "f1-series"}));

    auto* xs_cmd = app.add_subcommand("cross-section", "differential cross section");
    add_common_flags(xs_cmd, cfg);
    GridConfig xs_grid_cfg;
    add_grid_flags(xs_cmd, xs_grid_cfg);

    auto* rad_cmd = app.add_subcommand("radial", "radial channel functions");
    add_common_flags(rad_cmd, cfg);
    int two_j = 1;
    double rho_max = 200.0;
    int points = 512;
    double rho0 = 1e-4;
    std::string solver = "ode";
    rad_cmd->add_option("--two-j", two_j, "channel two_j (odd)");
    rad_cmd->add_option("--rho-max", rho_max, "largest rho = k r");
    rad_cmd->add_option("--points", points, "grid points");
    rad_cmd->add_option("--rho0", rho0, "series-initialization point");
    rad_cmd->add_option("--solver", solver, "ode or kummer")
        ->check(CLI::IsMember({"ode", "kummer"}));

    auto* ver_cmd = app.add_subcommand("verify", "run the verification suites");
    add_common_flags(ver_cmd, cfg);
    std::string suite = "all";
    std::string report_path;
    double fault = 0.0;
    ver_cmd->add_option("--suite", suite,
                        "unitarity, oracle, closed_vs_series, limits, or all")
        ->check(CLI::IsMember({"unitarity", "oracle", "closed_vs_series", "limits", "all"}));
    ver_cmd->add_option("--report", report_path, "write the JSON report to this file");
    ver_cmd->add_option("--inject-gamma-fault", fault,
                        "test-only: perturb log-Gamma by eps to prove suite sensitivity")
        ->group("");  // hidden

    take_last_everywhere(&app);
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = splice_config(std::move(args));
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // config errors exit 2
    }

    try {
        if (kin_cmd->parsed()) return cmd_kinematics(cfg);
        if (ps_cmd->parsed()) return cmd_phase_shifts(cfg, two_j_max, ps_method);
        if (amp_cmd->parsed()) return cmd_amplitude(cfg, grid_cfg, series_cfg, amp_method);
        if (xs_cmd->parsed()) return cmd_cross_section(cfg, xs_grid_cfg);
        if (rad_cmd->parsed()) return cmd_radial(cfg, two_j, rho_max, points, solver, rho0);
        if (ver_cmd->parsed()) return cmd_verify(cfg, suite, report_path, fault);
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const NumericError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
