#include "pmelab/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pmelab/profiles.hpp"
#include "pmelab/transforms.hpp"

namespace pmelab {

namespace {

// ---------------------------------------------------------------- utilities

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <typename T>
T get_or(const nlohmann::json& j, const std::string& key, T fallback) {
    if (j.contains(key)) return j.at(key).get<T>();
    return fallback;
}

nlohmann::json get_obj(const nlohmann::json& j, const std::string& key) {
    if (j.contains(key)) return j.at(key);
    return nlohmann::json::object();
}

bool nonincreasing(const std::vector<ConvergenceReport::Row>& rows, bool scaled) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double a = scaled ? rows[i - 1].scaled_error : rows[i - 1].raw_error;
        const double b = scaled ? rows[i].scaled_error : rows[i].raw_error;
        if (b > a * (1.0 + 1e-12)) return false;
    }
    return true;
}

void attach_rate(ConvergenceReport& rep, double burn_in) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rep.rows)
        if (r.t >= burn_in && r.scaled_error > 0.0) pts.emplace_back(r.t, r.scaled_error);
    if (pts.size() >= 3) {
        const RateEstimate est = rate_estimate(pts);
        rep.rate = est.slope;
        rep.rate_residual = est.residual_rms;
    }
}

// ------------------------------------------------------------- config parse

InitialDatum datum_from_json(const nlohmann::json& d) {
    const std::string type = d.at("type").get<std::string>();
    if (type == "bump") {
        BumpDatum b;
        b.amplitude = get_or(d, "amplitude", 0.1);
        b.radius = get_or(d, "radius", 0.5);
        b.vanish_at_origin = get_or(d, "vanish_at_origin", false);
        return b;
    }
    if (type == "plateau") {
        PlateauDatum p;
        p.K = get_or(d, "K", 1.0);
        p.decay_rate = get_or(d, "decay_rate", 1.0);
        p.x_half = get_or(d, "x_half", 1.0);
        return p;
    }
    if (type == "table") {
        TableDatum t;
        t.r = d.at("r").get<std::vector<double>>();
        t.value = d.at("value").get<std::vector<double>>();
        return t;
    }
    if (type == "traveling_wave") {
        const TravelingWave tw = make_traveling_wave(d.at("K").get<double>(),
                                                     d.at("m").get<double>(),
                                                     get_or(d, "s0", 0.0));
        return snapshot_datum(Profile{tw}, get_or(d, "t0", 0.0));
    }
    if (type == "barenblatt") {
        const double m = d.at("m").get<double>();
        const double C0 = d.contains("C0") ? d.at("C0").get<double>()
                                           : calibrate_C0(get_or(d, "mass", 1.0), m);
        return snapshot_datum(Profile{LogBarenblatt{C0, m}}, get_or(d, "t0", 1.0));
    }
    throw std::invalid_argument("unknown datum type: " + type);
}

ProblemSpec problem_from_json(const nlohmann::json& cfg, int dimension, double m) {
    ProblemSpec p;
    p.dimension = dimension;
    p.m = m;
    const nlohmann::json g = cfg.at("grid");
    p.s_min = g.at("s_min").get<double>();
    p.s_max = g.at("s_max").get<double>();
    p.n_cells = g.at("n_cells").get<int>();
    p.output_times = cfg.at("output_times").get<std::vector<double>>();
    p.t_end = get_or(cfg, "t_end", p.output_times.empty() ? 1.0 : p.output_times.back());
    p.datum = datum_from_json(cfg.at("datum"));
    return p;
}

SolverConfig solver_from_json(const nlohmann::json& cfg) {
    const nlohmann::json s = get_obj(cfg, "solver");
    SolverConfig c;
    c.cfl_safety = get_or(s, "cfl_safety", 0.4);
    c.max_steps = get_or<long long>(s, "max_steps", 2'000'000'000LL);
    c.support_tol = get_or(s, "support_tol", 1e-8);
    c.margin_fraction = get_or(s, "margin_fraction", 0.10);
    c.dt_max = get_or(s, "dt_max", 1e-2);
    const std::string kernel = get_or<std::string>(s, "kernel", "auto");
    if (kernel == "serial")
        c.kernel = StepKernel::Serial;
    else if (kernel == "openmp")
        c.kernel = StepKernel::OpenMP;
    else if (kernel == "auto")
        c.kernel = StepKernel::Auto;
    else
        throw std::invalid_argument("solver.kernel must be 'serial', 'openmp' or 'auto'");
    return c;
}

// evaluate the datum's level at the origin (s -> -inf limit)
double datum_origin_level(const InitialDatum& d) { return datum_value_log(d, -1000.0); }

// ---------------------------------------------------------------- reporting

void write_csv(const std::filesystem::path& path, const std::vector<ConvergenceReport>& reps) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("I/O: cannot write " + path.string());
    os << "t,raw_error,scaled_error,metric\n";
    for (const auto& rep : reps)
        for (const auto& row : rep.rows)
            os << fmt17(row.t) << ',' << fmt17(row.raw_error) << ',' << fmt17(row.scaled_error)
               << ',' << rep.metric << '\n';
}

void write_summary(const std::filesystem::path& path, const ScenarioOutcome& out, double m,
                   int dimension) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["scenario"] = out.scenario;
    j["m"] = m;
    j["dimension"] = dimension;
    nlohmann::ordered_json cal = nlohmann::ordered_json::object();
    for (const auto& [k, v] : out.calibration) cal[k] = v;
    j["calibration"] = cal;
    nlohmann::ordered_json reps = nlohmann::ordered_json::array();
    for (const auto& rep : out.reports) {
        nlohmann::ordered_json r;
        r["metric"] = rep.metric;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : rep.rows) {
            nlohmann::ordered_json x;
            x["t"] = row.t;
            x["raw_error"] = row.raw_error;
            x["scaled_error"] = row.scaled_error;
            rows.push_back(x);
        }
        r["rows"] = rows;
        r["rate"] = rep.rate;
        r["rate_residual"] = rep.rate_residual;
        r["pass"] = rep.pass;
        r["threshold"] = rep.threshold_note;
        reps.push_back(r);
    }
    j["reports"] = reps;
    j["notes"] = out.notes;
    j["pass"] = out.pass;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("I/O: cannot write " + path.string());
    os << j.dump(2) << '\n';
}

void finalize(ScenarioOutcome& out, const std::filesystem::path& outdir, double m,
              int dimension) {
    out.pass = std::all_of(out.reports.begin(), out.reports.end(),
                           [](const ConvergenceReport& r) { return r.pass; });
    out.exit_code = out.pass ? 0 : 1;
    std::filesystem::create_directories(outdir);
    const auto csv = outdir / (out.scenario + "_report.csv");
    const auto summary = outdir / (out.scenario + "_summary.json");
    write_csv(csv, out.reports);
    write_summary(summary, out, m, dimension);
    out.files_written.push_back(csv);
    out.files_written.push_back(summary);
}

// ------------------------------------------------------------- hypothesis checks

void require_vanishing_origin(const Field& w0) {
    const double tol = std::max(1e-10, 1e-6 * w0.max_value());
    if (w0.values.front() > tol)
        throw HypothesisError("datum must vanish at the origin (w0(s_min) = " +
                              std::to_string(w0.values.front()) + ")");
}

void require_plateau_limits(const Field& w0, double K) {
    if (!(K > 0.0)) throw HypothesisError("plateau scenarios need K > 0");
    if (std::fabs(w0.values.front() - K) > 0.01 * K)
        throw HypothesisError("datum is not within 1% of K at s_min");
    if (w0.values.back() > 0.01 * K)
        throw HypothesisError("datum is not within 1% of 0 at s_max");
    for (double v : w0.values)
        if (v > K * (1.0 + 1e-12)) throw HypothesisError("datum exceeds its plateau level K");
}

// Holder hypothesis proxy: envelope admissibility plus discrete containment.
// Returns the (possibly enlarged) envelope constant actually used.
double require_holder_sandwich(const Field& w0, double K, double m, double H, double alpha) {
    const double H_min = alpha * (m - 1.0) / (1.0 - alpha);
    const double H_eff = std::max(H, H_min);
    const HolderEnvelopePair env = holder_envelopes(K, H_eff, alpha);
    if (!env.admissible_for(m))
        throw HypothesisError("Holder envelope (H, alpha) fails the supersolution condition");
    for (int i = 0; i < w0.grid.n_cells; ++i) {
        const double s = w0.grid.center(i);
        if (w0.values[i] < env.lower_log(s) - 1e-12 ||
            w0.values[i] > env.upper_log(s) + 1e-12)
            throw HypothesisError("datum escapes its Holder envelopes");
    }
    return H_eff;
}

// ------------------------------------------------------------- scenario bodies

ScenarioOutcome run_barenblatt_selftest(const nlohmann::json& cfg,
                                        const std::filesystem::path& outdir) {
    ScenarioOutcome out;
    out.scenario = "barenblatt_selftest";
    const double m = get_or(cfg, "m", 2.0);
    const double mass = get_or(cfg, "mass", 1.0);
    const double t0 = get_or(cfg, "profile_t0", 1.0);
    const double C0 = calibrate_C0(mass, m);
    out.calibration["C0"] = C0;

    // config output_times are Barenblatt times; the run starts at B0(.,t0)
    nlohmann::json cfg2 = cfg;
    std::vector<double> times = cfg.at("output_times").get<std::vector<double>>();
    std::vector<double> taus;
    for (double t : times) {
        if (!(t > t0)) throw std::invalid_argument("barenblatt_selftest: times must exceed t0");
        taus.push_back(t - t0);
    }
    cfg2["output_times"] = taus;
    cfg2["datum"] = {{"type", "barenblatt"}, {"m", m}, {"C0", C0}, {"t0", t0}};

    ProblemSpec prob = problem_from_json(cfg2, 2, m);
    SolverConfig solver = solver_from_json(cfg2);
    const Field w0 = build_initial_field(prob.datum, prob.grid());
    const double mass0 = weighted_mass(w0);
    const Trajectory traj = solve(prob, solver);

    const nlohmann::json th = get_obj(cfg, "thresholds");
    const double sup_rel_max = get_or(th, "sup_rel_final", 0.02);
    const double drift_max = get_or(th, "mass_drift", 1e-10);

    ConvergenceReport sup_rep;
    sup_rep.metric = "sup_vs_barenblatt";
    ConvergenceReport mass_rep;
    mass_rep.metric = "mass_drift";
    for (std::size_t i = 0; i < traj.fields.size(); ++i) {
        const Field& f = traj.fields[i];
        const double t = t0 + f.t;
        auto prof = [&](double s) { return eval_log_barenblatt(C0, m, s, t, Variable::Log); };
        const double sup = sup_error(f, prof);
        const double peak = eval_log_barenblatt(C0, m, 0.0, t, Variable::Log);
        sup_rep.rows.push_back({t, sup, sup / peak});
        const double drift = std::fabs(weighted_mass(f) - mass0) / mass0;
        mass_rep.rows.push_back({t, drift, drift});
    }
    sup_rep.pass = sup_rep.rows.back().scaled_error <= sup_rel_max;
    sup_rep.threshold_note = "sup/max(B0) at final time <= " + fmt17(sup_rel_max);
    mass_rep.pass = std::all_of(mass_rep.rows.begin(), mass_rep.rows.end(),
                                [&](const auto& r) { return r.raw_error <= drift_max; });
    mass_rep.threshold_note = "relative mass drift <= " + fmt17(drift_max);
    out.reports.push_back(sup_rep);
    out.reports.push_back(mass_rep);

    if (get_or(cfg, "emit_plots", false)) {
        auto files = emit_plot_data(
            traj,
            [&](double s, double tau) {
                return eval_log_barenblatt(C0, m, s, t0 + tau, Variable::Log);
            },
            outdir, out.scenario);
        out.files_written.insert(out.files_written.end(), files.begin(), files.end());
    }
    finalize(out, outdir, m, 2);
    return out;
}

ScenarioOutcome run_thm1(const nlohmann::json& cfg, const std::filesystem::path& outdir) {
    ScenarioOutcome out;
    out.scenario = "thm1_N2_zero";
    const double m = get_or(cfg, "m", 2.0);
    if (!(m > 1.0)) throw HypothesisError("thm1_N2_zero needs m > 1");
    ProblemSpec prob = problem_from_json(cfg, 2, m);
    SolverConfig solver = solver_from_json(cfg);
    const Field w0 = build_initial_field(prob.datum, prob.grid());
    require_vanishing_origin(w0);
    const double mass = weighted_mass(w0);
    if (!(mass > 0.0)) throw HypothesisError("thm1_N2_zero needs positive weighted mass");
    const double C0 = calibrate_C0(mass, m);
    out.calibration["mass"] = mass;
    out.calibration["C0"] = C0;

    const Trajectory traj = solve(prob, solver);
    const double a = barenblatt_alpha(m);
    ConvergenceReport rep;
    rep.metric = "sup_vs_barenblatt_scaled";
    for (const Field& f : traj.fields) {
        auto prof = [&](double s) { return eval_log_barenblatt(C0, m, s, f.t, Variable::Log); };
        const double sup = sup_error(f, prof);
        rep.rows.push_back({f.t, sup, std::pow(f.t, a) * sup});
    }
    attach_rate(rep, get_or(cfg, "rate_burn_in", 0.0));
    const nlohmann::json th = get_obj(cfg, "thresholds");
    const double final_over_first = get_or(th, "final_over_first_max", 0.5);
    rep.pass = nonincreasing(rep.rows, true) &&
               rep.rows.back().scaled_error <= final_over_first * rep.rows.front().scaled_error;
    rep.threshold_note = "t^a * sup nonincreasing and final <= " + fmt17(final_over_first) +
                         " * first";
    out.reports.push_back(rep);
    if (get_or(cfg, "emit_plots", false)) {
        auto files = emit_plot_data(
            traj,
            [&](double s, double t) { return eval_log_barenblatt(C0, m, s, t, Variable::Log); },
            outdir, out.scenario);
        out.files_written.insert(out.files_written.end(), files.begin(), files.end());
    }
    finalize(out, outdir, m, 2);
    return out;
}

// shared f-table cache (profile construction is deterministic)
const HeavisideProfileTable& heaviside_table(double m, double tol) {
    static std::map<std::pair<double, double>, HeavisideProfileTable> cache;
    auto it = cache.find({m, tol});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(m, tol), solve_heaviside_profile(m, tol)).first;
    return it->second;
}

ScenarioOutcome run_thm2(const nlohmann::json& cfg, const std::filesystem::path& outdir) {
    ScenarioOutcome out;
    out.scenario = "thm2_N2_plateau";
    const double m = get_or(cfg, "m", 2.0);
    if (!(m > 1.0)) throw HypothesisError("thm2_N2_plateau needs m > 1");
    ProblemSpec prob = problem_from_json(cfg, 2, m);
    SolverConfig solver = solver_from_json(cfg);
    const Field w0 = build_initial_field(prob.datum, prob.grid());
    const double K = get_or(cfg, "K", datum_origin_level(prob.datum));
    require_plateau_limits(w0, K);
    solver.left = {BCKind::Dirichlet, K};
    solver.right = {BCKind::Dirichlet, 0.0};

    const double f_tol = get_or(cfg, "f_tol", 1e-6);
    const HeavisideProfileTable& ftab = heaviside_table(m, f_tol);
    out.calibration["K"] = K;
    out.calibration["xi_front"] = ftab.xi_front();

    const Trajectory traj = solve(prob, solver);
    const double R = get_or(cfg, "window_R", 2.0);
    const nlohmann::json th = get_obj(cfg, "thresholds");
    const double sup_final = get_or(th, "window_sup_final", 0.05);
    const double origin_tol = get_or(th, "origin_tol", 1e-3);

    ConvergenceReport rep;
    rep.metric = "window_sup_vs_WK";
    ConvergenceReport origin;
    origin.metric = "origin_value_drift";
    const int mcount =
        std::max(1, static_cast<int>(std::floor(solver.margin_fraction * prob.n_cells)));
    const double kscale = std::pow(K, -(m - 1.0) / 2.0);
    for (const Field& f : traj.fields) {
        const double win = R * std::sqrt(f.t);
        double sup = 0.0;
        for (int i = 0; i < f.grid.n_cells; ++i) {
            const double s = f.grid.center(i);
            if (std::fabs(s) > win) continue;
            const double ref = K * ftab.eval(kscale * s / std::sqrt(f.t));
            sup = std::max(sup, std::fabs(f.values[i] - ref));
        }
        rep.rows.push_back({f.t, sup, sup});
        double drift = 0.0;
        for (int i = 0; i < mcount; ++i) drift = std::max(drift, std::fabs(f.values[i] - K));
        origin.rows.push_back({f.t, drift, drift});
    }
    rep.pass = nonincreasing(rep.rows, false) && rep.rows.back().raw_error <= sup_final;
    rep.threshold_note = "sup on {|s|<=" + fmt17(R) + " sqrt(t)} nonincreasing, final <= " +
                         fmt17(sup_final);
    origin.pass = std::all_of(origin.rows.begin(), origin.rows.end(),
                              [&](const auto& r) { return r.raw_error <= origin_tol; });
    origin.threshold_note = "|w - K| <= " + fmt17(origin_tol) + " on the left 10% of the grid";
    out.reports.push_back(rep);
    out.reports.push_back(origin);
    if (get_or(cfg, "emit_plots", false)) {
        auto files = emit_plot_data(
            traj,
            [&](double s, double t) { return K * ftab.eval(kscale * s / std::sqrt(t)); },
            outdir, out.scenario);
        out.files_written.insert(out.files_written.end(), files.begin(), files.end());
    }
    finalize(out, outdir, m, 2);
    return out;
}

ScenarioOutcome run_thm3(const nlohmann::json& cfg, const std::filesystem::path& outdir) {
    ScenarioOutcome out;
    out.scenario = "thm3_N1_zero";
    const double m = get_or(cfg, "m", 2.0);
    if (!(m > 1.0)) throw HypothesisError("thm3_N1_zero needs m > 1");
    ProblemSpec prob = problem_from_json(cfg, 1, m);
    SolverConfig solver = solver_from_json(cfg);
    const Field w0 = build_initial_field(prob.datum, prob.grid());
    require_vanishing_origin(w0);
    const double M0 = weighted_mass(w0);
    if (!(M0 > 0.0)) throw HypothesisError("thm3_N1_zero needs positive weighted mass");
    const double k = k_of_M0(M0, m);
    out.calibration["M0"] = M0;
    out.calibration["k"] = k;

    const Trajectory traj = solve(prob, solver);
    const nlohmann::json th = get_obj(cfg, "thresholds");
    const double graph_factor = get_or(th, "graph_final_over_first_max", 0.5);

    std::vector<ConvergenceReport> preps;
    for (double p : std::vector<double>{1.0, 2.0}) {
        ConvergenceReport rep;
        rep.metric = "weighted_l" + std::to_string(static_cast<int>(p)) + "_vs_peak_scaled";
        for (const Field& f : traj.fields) {
            auto prof = [&](double s) { return eval_peak_log(M0, m, s, f.t); };
            const double err = weighted_lp_error(f, prof, p);
            rep.rows.push_back({f.t, err, std::pow(f.t, (p - 1.0) / (m * p)) * err});
        }
        attach_rate(rep, get_or(cfg, "rate_burn_in", 0.0));
        rep.pass = nonincreasing(rep.rows, true);
        rep.threshold_note = "t^{(p-1)/mp} ||.||_{p,1} nonincreasing";
        preps.push_back(rep);
    }
    ConvergenceReport graph;
    graph.metric = "graph_distance_ssvar";
    const GraphRef ref = peak_ssvar_graph(M0, m);
    for (const Field& f : traj.fields) {
        const double d = graph_distance(to_ssvar(f, m), ref);
        graph.rows.push_back({f.t, d, d});
    }
    graph.pass = graph.rows.back().raw_error <=
                 graph_factor * graph.rows.front().raw_error;
    graph.threshold_note = "graph distance final <= " + fmt17(graph_factor) + " * first";
    out.reports = std::move(preps);
    out.reports.push_back(graph);
    if (get_or(cfg, "emit_plots", false)) {
        auto files = emit_plot_data(
            traj, [&](double s, double t) { return eval_peak_log(M0, m, s, t); }, outdir,
            out.scenario);
        out.files_written.insert(out.files_written.end(), files.begin(), files.end());
    }
    finalize(out, outdir, m, 1);
    return out;
}

ScenarioOutcome run_thm4(const nlohmann::json& cfg, const std::filesystem::path& outdir,
                         const std::string& name = "thm4_N1_plateau") {
    ScenarioOutcome out;
    out.scenario = name;
    const double m = get_or(cfg, "m", 2.0);
    if (!(m > 1.0)) throw HypothesisError("thm4_N1_plateau needs m > 1");
    ProblemSpec prob = problem_from_json(cfg, 1, m);
    SolverConfig solver = solver_from_json(cfg);
    const Field w0 = build_initial_field(prob.datum, prob.grid());
    const double K = get_or(cfg, "K", datum_origin_level(prob.datum));
    require_plateau_limits(w0, K);

    const nlohmann::json holder = get_obj(cfg, "holder");
    const double alpha = get_or(holder, "alpha", 0.5);
    const double H_cfg = get_or(holder, "H", 2.0 * K);
    const double H_eff = require_holder_sandwich(w0, K, m, H_cfg, alpha);

    solver.left = {BCKind::Dirichlet, K};
    solver.right = {BCKind::Dirichlet, 0.0};

    const double s0 = calibrate_s0(w0, K, m);
    const double x0 = std::exp(s0);
    out.calibration["K"] = K;
    out.calibration["s0"] = s0;
    out.calibration["x0"] = x0;
    out.calibration["H"] = H_eff;
    out.calibration["alpha"] = alpha;

    const Trajectory traj = solve(prob, solver);
    const nlohmann::json th = get_obj(cfg, "thresholds");
    const double l1_factor = get_or(th, "l1_final_over_first_max", 0.2);

    // Holder constant fed to the L1 -> Linf bound: datum envelope plus the
    // profile's own Holder-alpha constant at t = 0 (it only decays in time).
    const double H_profile =
        std::pow(K, 2.0 - m) / (m - 1.0) * std::pow(1.0 / x0, (m - 1.0) / m);
    const double H_bound = H_eff + H_profile;
    out.calibration["H_bound"] = H_bound;

    ConvergenceReport l1rep;
    l1rep.metric = "l1_in_s_vs_tw";
    ConvergenceReport suprep;
    suprep.metric = "sup_vs_tw_over_bound";
    const Grid1D& g = prob.grid();
    for (const Field& f : traj.fields) {
        double l1_s = 0.0, l1_x = 0.0, sup = 0.0;
        for (int i = 0; i < g.n_cells; ++i) {
            const double s = g.center(i);
            const double diff = std::fabs(f.values[i] - eval_traveling_wave(K, m, s0, s, f.t));
            l1_s += diff;
            l1_x += diff * std::exp(s);
            sup = std::max(sup, diff);
        }
        l1_s *= g.h;
        l1_x *= g.h;
        l1rep.rows.push_back({f.t, l1_s, l1_s});
        const double bound =
            l1_x > 0.0 ? linfty_bound_from_l1(l1_x, H_bound, std::min(alpha, (m - 1.0) / m))
                       : 0.0;
        suprep.rows.push_back({f.t, sup, bound > 0.0 ? sup / bound : 0.0});
    }
    l1rep.pass = l1rep.rows.back().raw_error <= l1_factor * l1rep.rows.front().raw_error;
    l1rep.threshold_note = "L1(s) final <= " + fmt17(l1_factor) + " * first";
    attach_rate(l1rep, get_or(cfg, "rate_burn_in", 0.0));
    suprep.pass = std::all_of(suprep.rows.begin(), suprep.rows.end(),
                              [](const auto& r) { return r.scaled_error <= 1.0; });
    suprep.threshold_note = "sup <= Linf-from-L1 bound at every output time";
    out.reports.push_back(l1rep);
    out.reports.push_back(suprep);
    if (get_or(cfg, "emit_plots", false)) {
        auto files = emit_plot_data(
            traj, [&](double s, double t) { return eval_traveling_wave(K, m, s0, s, t); },
            outdir, out.scenario);
        out.files_written.insert(out.files_written.end(), files.begin(), files.end());
    }
    finalize(out, outdir, m, 1);
    return out;
}

ScenarioOutcome run_tw_selftest(const nlohmann::json& cfg,
                                const std::filesystem::path& outdir) {
    ScenarioOutcome out;
    out.scenario = "tw_selftest";
    const double m = get_or(cfg, "m", 3.0);
    const double K = get_or(cfg, "K", 1.0);
    const double x0 = get_or(cfg, "x0", 1.0);
    const double s0 = std::log(x0);
    const double c = std::pow(K, m - 1.0);
    out.calibration["c"] = c;
    out.calibration["s0"] = s0;

    nlohmann::json cfg2 = cfg;
    cfg2["datum"] = {{"type", "traveling_wave"}, {"K", K}, {"m", m}, {"s0", s0}, {"t0", 0.0}};
    ProblemSpec prob = problem_from_json(cfg2, 1, m);
    SolverConfig solver = solver_from_json(cfg2);
    solver.left = {BCKind::Dirichlet, K};
    solver.right = {BCKind::Dirichlet, 0.0};

    const Trajectory traj = solve(prob, solver);
    const nlohmann::json th = get_obj(cfg, "thresholds");
    const double sup_rel = get_or(th, "sup_rel_max", 0.03);
    const double front_cells_max = get_or(th, "front_cells_max", 2.0);

    ConvergenceReport rep;
    rep.metric = "sup_vs_tw_rel_K";
    ConvergenceReport front;
    front.metric = "front_cell_offset";
    const Grid1D g = prob.grid();
    for (const Field& f : traj.fields) {
        auto prof = [&](double s) { return eval_traveling_wave(K, m, s0, s, f.t); };
        const double sup = sup_error(f, prof);
        rep.rows.push_back({f.t, sup, sup / K});
        int last = -1;
        for (int i = 0; i < g.n_cells; ++i)
            if (f.values[i] > 1e-6) last = i;
        // closed-form front locus |x| = x0 K^m e^{ct} mapped to s
        const double s_front = s0 + c * f.t + m / (m - 1.0) * std::log(c);
        const double cell_exact = (s_front - g.s_min) / g.h - 0.5;
        const double offset = std::fabs(static_cast<double>(last) - cell_exact);
        front.rows.push_back({f.t, offset, offset});
    }
    rep.pass = rep.rows.back().scaled_error <= sup_rel;
    rep.threshold_note = "sup/K at final time <= " + fmt17(sup_rel);
    front.pass = front.rows.back().raw_error <= front_cells_max + 0.5;
    front.threshold_note = "front cell within " + fmt17(front_cells_max) + " cells of locus";
    out.reports.push_back(rep);
    out.reports.push_back(front);
    if (get_or(cfg, "emit_plots", false)) {
        auto files = emit_plot_data(
            traj, [&](double s, double t) { return eval_traveling_wave(K, m, s0, s, t); },
            outdir, out.scenario);
        out.files_written.insert(out.files_written.end(), files.begin(), files.end());
    }
    finalize(out, outdir, m, 1);
    return out;
}

ScenarioOutcome run_linear(const nlohmann::json& cfg, const std::filesystem::path& outdir) {
    ScenarioOutcome out;
    const int N = get_or(cfg, "dimension", 2);
    const std::string mode = get_or<std::string>(cfg, "mode", "gauss");
    out.scenario = "linear_m1";
    const double m = get_or(cfg, "m", 1.0);
    if (m != 1.0) throw HypothesisError("linear_m1 needs m = 1");
    ProblemSpec prob = problem_from_json(cfg, N, m);
    SolverConfig solver = solver_from_json(cfg);
    const Field w0 = build_initial_field(prob.datum, prob.grid());

    const nlohmann::json th = get_obj(cfg, "thresholds");
    ConvergenceReport rep;
    double coef = 0.0;
    LinearProfileKind kind;
    if (mode == "gauss") {
        require_vanishing_origin(w0);
        kind = LinearProfileKind::Gauss;
        coef = weighted_mass(w0);  // M/omega reduces to the one-sided weighted mass
        out.calibration["M_over_omega"] = coef;
        rep.metric = "sup_vs_gauss_scaled";
    } else if (mode == "erfc") {
        const double K = get_or(cfg, "K", datum_origin_level(prob.datum));
        require_plateau_limits(w0, K);
        kind = LinearProfileKind::Erfc;
        coef = K / 2.0;
        out.calibration["K"] = K;
        solver.left = {BCKind::Dirichlet, K};
        solver.right = {BCKind::Dirichlet, 0.0};
        rep.metric = "sup_vs_erfc_scaled";
    } else {
        throw std::invalid_argument("linear_m1: mode must be 'gauss' or 'erfc'");
    }

    const Trajectory traj = solve(prob, solver);
    for (const Field& f : traj.fields) {
        // trajectory is in the moving frame: the radial log coordinate is
        // log|x| = s - (N-2)t, which cancels the profile's frame argument
        auto prof = [&](double s) {
            return eval_linear_profile_log(kind, coef, N, s - (N - 2) * f.t, f.t);
        };
        const double sup = sup_error(f, prof);
        rep.rows.push_back({f.t, sup, std::sqrt(f.t) * sup});
    }
    attach_rate(rep, get_or(cfg, "rate_burn_in", 0.0));
    if (mode == "gauss") {
        rep.pass = nonincreasing(rep.rows, true);
        rep.threshold_note = "sqrt(t) * sup nonincreasing";
    } else {
        const double bound = get_or(th, "scaled_sup_max", 0.5);
        rep.pass = std::all_of(rep.rows.begin(), rep.rows.end(),
                               [&](const auto& r) { return r.scaled_error <= bound; });
        rep.threshold_note = "sqrt(t) * sup <= " + fmt17(bound) + " at all times";
    }
    out.reports.push_back(rep);
    finalize(out, outdir, m, N);
    return out;
}

ScenarioOutcome run_nonradial(const nlohmann::json& cfg, const std::filesystem::path& outdir) {
    // build the whole-line table from the configured datum
    const nlohmann::json d = cfg.at("datum");
    TableDatum table;
    if (d.at("type") == "table_full_line") {
        table.r = d.at("x").get<std::vector<double>>();  // abscissae over all of R
        table.value = d.at("value").get<std::vector<double>>();
    } else if (d.at("type") == "asymmetric_plateau") {
        const double K = d.at("K").get<double>();
        const double q = get_or(d, "decay_rate", 2.0);
        const double xr = get_or(d, "x_half_right", 1.0);
        const double xl = get_or(d, "x_half_left", 1.0);
        const nlohmann::json g = cfg.at("grid");
        const double lo = g.at("s_min").get<double>() - 0.5;
        const double hi = g.at("s_max").get<double>() + 0.5;
        const int per_side = 4 * g.at("n_cells").get<int>();
        std::vector<double> xs, vals;
        auto plateau = [&](double s, double xh) { return K / (1.0 + std::exp(q * (s - std::log(xh)))); };
        for (int j = per_side; j >= 0; --j) {
            const double s = lo + (hi - lo) * j / per_side;
            xs.push_back(-std::exp(s));
            vals.push_back(plateau(s, xl));
        }
        for (int j = 0; j <= per_side; ++j) {
            const double s = lo + (hi - lo) * j / per_side;
            xs.push_back(std::exp(s));
            vals.push_back(plateau(s, xr));
        }
        table.r = std::move(xs);
        table.value = std::move(vals);
    } else {
        throw std::invalid_argument("nonradial_N1: datum must be table_full_line or asymmetric_plateau");
    }
    return stitch_nonradial(table, cfg, outdir);
}

}  // namespace

// ------------------------------------------------------------- public surface

ScenarioKind scenario_kind_from_name(const std::string& name) {
    if (name == "thm1_N2_zero") return ScenarioKind::Thm1N2Zero;
    if (name == "thm2_N2_plateau") return ScenarioKind::Thm2N2Plateau;
    if (name == "thm3_N1_zero") return ScenarioKind::Thm3N1Zero;
    if (name == "thm4_N1_plateau") return ScenarioKind::Thm4N1Plateau;
    if (name == "linear_m1") return ScenarioKind::LinearM1;
    if (name == "nonradial_N1") return ScenarioKind::NonradialN1;
    if (name == "barenblatt_selftest") return ScenarioKind::BarenblattSelftest;
    if (name == "tw_selftest") return ScenarioKind::TwSelftest;
    throw std::invalid_argument("unknown scenario: " + name);
}

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {
        "thm1_N2_zero",  "thm2_N2_plateau",     "thm3_N1_zero", "thm4_N1_plateau",
        "linear_m1",     "nonradial_N1",        "barenblatt_selftest", "tw_selftest"};
    return names;
}

std::string scenario_description(const std::string& name) {
    switch (scenario_kind_from_name(name)) {
        case ScenarioKind::Thm1N2Zero:
            return "N=2, vanishing-origin datum vs mass-calibrated log-Barenblatt";
        case ScenarioKind::Thm2N2Plateau:
            return "N=2, plateau datum vs Heaviside-trace self-similar profile";
        case ScenarioKind::Thm3N1Zero:
            return "N=1, vanishing-origin datum vs peak profile (p-norms and graphs)";
        case ScenarioKind::Thm4N1Plateau:
            return "N=1, plateau datum vs calibrated traveling wave";
        case ScenarioKind::LinearM1:
            return "m=1 heat regime vs gauss/erfc profiles in the moving frame";
        case ScenarioKind::NonradialN1:
            return "N=1 general datum, symmetrized halves stitched at the origin";
        case ScenarioKind::BarenblattSelftest:
            return "exact-solution tracking of the log-Barenblatt";
        case ScenarioKind::TwSelftest:
            return "exact-solution tracking of a traveling wave with front locus";
    }
    return {};
}

nlohmann::ordered_json default_scenario_config(const std::string& name) {
    using json = nlohmann::ordered_json;
    json j;
    j["scenario"] = name;
    switch (scenario_kind_from_name(name)) {
        case ScenarioKind::BarenblattSelftest:
            j["m"] = 2.0;
            j["mass"] = 1.0;
            j["profile_t0"] = 1.0;
            j["grid"] = {{"s_min", -12.0}, {"s_max", 12.0}, {"n_cells", 4096}};
            j["output_times"] = {2.0, 3.0, 5.0};
            j["thresholds"] = {{"sup_rel_final", 0.02}, {"mass_drift", 1e-10}};
            break;
        case ScenarioKind::Thm1N2Zero:
            j["m"] = 2.0;
            j["grid"] = {{"s_min", -28.0}, {"s_max", 28.0}, {"n_cells", 4096}};
            j["output_times"] = {10.0, 100.0, 1000.0};
            j["datum"] = {{"type", "bump"},
                          {"amplitude", 0.09375},
                          {"radius", 4.0},
                          {"vanish_at_origin", true}};
            j["thresholds"] = {{"final_over_first_max", 0.5}};
            j["rate_burn_in"] = 10.0;
            break;
        case ScenarioKind::Thm2N2Plateau:
            j["m"] = 2.0;
            j["grid"] = {{"s_min", -250.0}, {"s_max", 250.0}, {"n_cells", 4096}};
            j["output_times"] = {100.0, 1000.0};
            j["datum"] = {{"type", "plateau"}, {"K", 1.0}, {"decay_rate", 2.0}, {"x_half", 1.0}};
            j["window_R"] = 2.0;
            j["f_tol"] = 1e-6;
            j["thresholds"] = {{"window_sup_final", 0.05}, {"origin_tol", 1e-3}};
            break;
        case ScenarioKind::Thm3N1Zero:
            j["m"] = 2.0;
            j["grid"] = {{"s_min", -40.0}, {"s_max", 100.0}, {"n_cells", 4096}};
            j["output_times"] = {10.0, 100.0, 1000.0};
            j["datum"] = {{"type", "bump"},
                          {"amplitude", 0.09375},
                          {"radius", 4.0},
                          {"vanish_at_origin", true}};
            j["thresholds"] = {{"graph_final_over_first_max", 0.5}};
            j["rate_burn_in"] = 10.0;
            break;
        case ScenarioKind::Thm4N1Plateau:
            j["m"] = 2.0;
            j["grid"] = {{"s_min", -30.0}, {"s_max", 120.0}, {"n_cells", 4096}};
            j["output_times"] = {1.0, 10.0, 100.0};
            j["datum"] = {{"type", "plateau"}, {"K", 1.0}, {"decay_rate", 2.0}, {"x_half", 1.0}};
            j["holder"] = {{"alpha", 0.5}, {"H", 2.0}};
            j["thresholds"] = {{"l1_final_over_first_max", 0.2}};
            break;
        case ScenarioKind::LinearM1:
            j["m"] = 1.0;
            j["dimension"] = 2;
            j["mode"] = "gauss";
            j["grid"] = {{"s_min", -340.0}, {"s_max", 340.0}, {"n_cells", 4096}};
            j["output_times"] = {10.0, 100.0, 1000.0};
            j["datum"] = {{"type", "bump"},
                          {"amplitude", 0.75},
                          {"radius", 1.0},
                          {"vanish_at_origin", true}};
            j["thresholds"] = {{"scaled_sup_max", 0.5}};
            break;
        case ScenarioKind::NonradialN1:
            j["m"] = 2.0;
            j["grid"] = {{"s_min", -30.0}, {"s_max", 120.0}, {"n_cells", 4096}};
            j["output_times"] = {10.0, 100.0};
            j["datum"] = {{"type", "asymmetric_plateau"},
                          {"K", 1.0},
                          {"decay_rate", 2.0},
                          {"x_half_right", 1.5},
                          {"x_half_left", 0.7}};
            j["holder"] = {{"alpha", 0.5}, {"H", 2.0}};
            j["thresholds"] = {{"decade_decay_max", 0.9}};
            break;
        case ScenarioKind::TwSelftest:
            j["m"] = 3.0;
            j["K"] = 1.0;
            j["x0"] = 1.0;
            j["grid"] = {{"s_min", -25.0}, {"s_max", 15.0}, {"n_cells", 4096}};
            j["output_times"] = {2.5, 5.0};
            j["thresholds"] = {{"sup_rel_max", 0.03}, {"front_cells_max", 2.0}};
            break;
    }
    j["solver"] = {{"cfl_safety", 0.4}, {"kernel", "auto"}};
    j["emit_plots"] = false;
    return j;
}

ScenarioOutcome run_scenario(const nlohmann::json& config,
                             const std::filesystem::path& output_dir) {
    const std::string name = config.at("scenario").get<std::string>();
    switch (scenario_kind_from_name(name)) {
        case ScenarioKind::Thm1N2Zero: return run_thm1(config, output_dir);
        case ScenarioKind::Thm2N2Plateau: return run_thm2(config, output_dir);
        case ScenarioKind::Thm3N1Zero: return run_thm3(config, output_dir);
        case ScenarioKind::Thm4N1Plateau: return run_thm4(config, output_dir);
        case ScenarioKind::LinearM1: return run_linear(config, output_dir);
        case ScenarioKind::NonradialN1: return run_nonradial(config, output_dir);
        case ScenarioKind::BarenblattSelftest: return run_barenblatt_selftest(config, output_dir);
        case ScenarioKind::TwSelftest: return run_tw_selftest(config, output_dir);
    }
    throw std::invalid_argument("unreachable scenario kind");
}

ScenarioOutcome run_scenario_file(const std::filesystem::path& config_path) {
    std::ifstream is(config_path);
    if (!is) throw std::invalid_argument("cannot open config: " + config_path.string());
    nlohmann::json config = nlohmann::json::parse(is);
    std::filesystem::path outdir = get_or<std::string>(config, "output_dir", "pmelab_out");
    if (const char* env = std::getenv("PMELAB_OUTPUT_DIR")) outdir = env;
    return run_scenario(config, outdir);
}

int run_scenario_cli(const std::filesystem::path& config_path) {
    try {
        const ScenarioOutcome out = run_scenario_file(config_path);
        std::printf("%s: %s\n", out.scenario.c_str(), out.pass ? "PASS" : "FAIL");
        for (const auto& rep : out.reports)
            std::printf("  [%s] %s (%s)\n", rep.pass ? "ok" : "FAIL", rep.metric.c_str(),
                        rep.threshold_note.c_str());
        for (const auto& f : out.files_written) std::printf("  wrote %s\n", f.c_str());
        return out.exit_code;
    } catch (const HypothesisError& e) {
        std::fprintf(stderr, "hypothesis violation: %s\n", e.what());
        return 2;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "numerical abort: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid configuration: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "abort: %s\n", e.what());
        return 3;
    }
}

ScenarioOutcome stitch_nonradial(const TableDatum& u0_general, const nlohmann::json& config,
                                 const std::filesystem::path& output_dir) {
    ScenarioOutcome out;
    out.scenario = "nonradial_N1";
    const double m = get_or(config, "m", 2.0);
    if (!(m > 1.0)) throw HypothesisError("nonradial_N1 needs m > 1");
    if (u0_general.r.size() != u0_general.value.size() || u0_general.r.size() < 4)
        throw std::invalid_argument("nonradial_N1: malformed full-line table");

    // split at the origin into the two symmetrized radial data
    TableDatum right, left;
    for (std::size_t j = 0; j < u0_general.r.size(); ++j) {
        const double x = u0_general.r[j];
        if (x > 0.0) {
            right.r.push_back(x);
            right.value.push_back(u0_general.value[j]);
        } else if (x < 0.0) {
            left.r.push_back(-x);
            left.value.push_back(u0_general.value[j]);
        }
    }
    std::reverse(left.r.begin(), left.r.end());
    std::reverse(left.value.begin(), left.value.end());
    if (right.r.size() < 2 || left.r.size() < 2)
        throw std::invalid_argument("nonradial_N1: table must cover both half-lines");

    // continuity at the origin
    const double k_right = right.value.front();
    const double k_left = left.value.front();
    if (std::fabs(k_right - k_left) > 1e-8 * (1.0 + std::max(k_right, k_left)))
        throw HypothesisError("nonradial_N1: datum is discontinuous at the origin");
    const double K = 0.5 * (k_right + k_left);
    out.calibration["K"] = K;

    auto run_side = [&](const TableDatum& side, const std::string& tag) {
        nlohmann::json cfg2 = config;
        cfg2["scenario"] = "thm4_N1_plateau";
        nlohmann::json d;
        d["type"] = "table";
        d["r"] = side.r;
        d["value"] = side.value;
        cfg2["datum"] = d;
        cfg2["emit_plots"] = false;
        ProblemSpec prob = problem_from_json(cfg2, 1, m);
        SolverConfig solver = solver_from_json(cfg2);
        const Field w0 = build_initial_field(prob.datum, prob.grid());

        struct SideResult {
            double calibration;  // s0 (K>0) or k (K=0)
            std::vector<ConvergenceReport::Row> sup_rows;
        } res;
        if (K > 1e-12) {
            require_plateau_limits(w0, K);
            const nlohmann::json holder = get_obj(config, "holder");
            require_holder_sandwich(w0, K, m, get_or(holder, "H", 2.0 * K),
                                    get_or(holder, "alpha", 0.5));
            solver.left = {BCKind::Dirichlet, K};
            solver.right = {BCKind::Dirichlet, 0.0};
            const double s0 = calibrate_s0(w0, K, m);
            res.calibration = s0;
            const Trajectory traj = solve(prob, solver);
            for (const Field& f : traj.fields) {
                auto prof = [&](double s) { return eval_traveling_wave(K, m, s0, s, f.t); };
                const double sup = sup_error(f, prof);
                res.sup_rows.push_back({f.t, sup, sup});
            }
        } else {
            require_vanishing_origin(w0);
            const double M0 = weighted_mass(w0);
            res.calibration = k_of_M0(M0, m);
            const Trajectory traj = solve(prob, solver);
            for (const Field& f : traj.fields) {
                auto prof = [&](double s) { return eval_peak_log(M0, m, s, f.t); };
                const double err = weighted_lp_error(f, prof, 1.0);
                res.sup_rows.push_back({f.t, err, err});
            }
        }
        ConvergenceReport rep;
        rep.metric = (K > 1e-12 ? std::string("sup_vs_tw_") : std::string("l1_vs_peak_")) + tag;
        rep.rows = res.sup_rows;
        rep.pass = true;
        rep.threshold_note = "informational per-side error";
        out.reports.push_back(rep);
        return res.calibration;
    };

    const double cal_right = run_side(right, "right");
    const double cal_left = run_side(left, "left");
    if (K > 1e-12) {
        out.calibration["s0_right"] = cal_right;
        out.calibration["s0_left"] = cal_left;
        out.calibration["x0_right"] = std::exp(cal_right);
        out.calibration["x0_left"] = std::exp(cal_left);
    } else {
        out.calibration["k_right"] = cal_right;
        out.calibration["k_left"] = cal_left;
    }

    // stitched error: max of the two half-line errors at each time
    const auto& rows_r = out.reports[out.reports.size() - 2].rows;
    const auto& rows_l = out.reports.back().rows;
    ConvergenceReport stitched;
    stitched.metric = "stitched_sup";
    for (std::size_t i = 0; i < rows_r.size(); ++i)
        stitched.rows.push_back(
            {rows_r[i].t, std::max(rows_r[i].raw_error, rows_l[i].raw_error),
             std::max(rows_r[i].raw_error, rows_l[i].raw_error)});
    const nlohmann::json th = get_obj(config, "thresholds");
    const double factor = get_or(th, "decade_decay_max", 0.9);
    stitched.pass = stitched.rows.back().raw_error <= factor * stitched.rows.front().raw_error;
    stitched.threshold_note = "stitched error final <= " + fmt17(factor) + " * first";
    out.reports.push_back(stitched);
    finalize(out, output_dir, m, 1);
    return out;
}

std::vector<std::filesystem::path> emit_plot_data(
    const Trajectory& traj, const std::function<double(double, double)>& profile_log,
    const std::filesystem::path& dir, const std::string& stem) {
    if (traj.fields.empty()) throw std::invalid_argument("emit_plot_data: empty trajectory");
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> files;
    const int frame_drift = (traj.m == 1.0) ? (traj.dimension - 2) : 0;
    for (std::size_t idx = 0; idx < traj.fields.size(); ++idx) {
        const Field& f = traj.fields[idx];
        char suffix[32];
        std::snprintf(suffix, sizeof suffix, "_t%02zu", idx);
        const auto sol_path = dir / (stem + "_solution" + suffix + ".dat");
        const auto prof_path = dir / (stem + "_profile" + suffix + ".dat");
        std::ofstream sol(sol_path, std::ios::binary), prof(prof_path, std::ios::binary);
        if (!sol || !prof) throw std::runtime_error("I/O: cannot write plot data in " + dir.string());
        sol << "# t = " << fmt17(f.t) << "\n";
        prof << "# t = " << fmt17(f.t) << "\n";
        for (int i = 0; i < f.grid.n_cells; ++i) {
            const double s_radial = f.grid.center(i) - frame_drift * f.t;
            if (std::fabs(s_radial) > 700.0) continue;  // exp over/underflow guard
            const double x = std::exp(s_radial);
            sol << fmt17(x) << ' ' << fmt17(f.values[i]) << '\n';
            prof << fmt17(x) << ' ' << fmt17(profile_log(f.grid.center(i), f.t)) << '\n';
        }
        files.push_back(sol_path);
        files.push_back(prof_path);
    }
    const auto script = dir / (stem + "_plot.py");
    std::ofstream py(script, std::ios::binary);
    py << "#!/usr/bin/env python3\n"
          "# plots the emitted (radius, value) series side by side\n"
          "import matplotlib\n"
          "matplotlib.use('Agg')\n"
          "import matplotlib.pyplot as plt\n"
          "import numpy as np\n"
          "pairs = [\n";
    for (std::size_t idx = 0; idx < traj.fields.size(); ++idx) {
        char suffix[32];
        std::snprintf(suffix, sizeof suffix, "_t%02zu", idx);
        py << "    ('" << stem << "_solution" << suffix << ".dat', '" << stem << "_profile"
           << suffix << ".dat'),\n";
    }
    py << "]\n"
          "fig, ax = plt.subplots(figsize=(9, 6))\n"
          "for sol, prof in pairs:\n"
          "    a = np.loadtxt(sol); b = np.loadtxt(prof)\n"
          "    ax.semilogx(a[:, 0], a[:, 1], '-', label=sol)\n"
          "    ax.semilogx(b[:, 0], b[:, 1], '--', label=prof)\n"
          "ax.set_xlabel('|x|'); ax.set_ylabel('u')\n"
          "ax.legend(fontsize=6)\n"
          "fig.savefig('" << stem << ".png', dpi=150)\n"
          "print('wrote " << stem << ".png')\n";
    files.push_back(script);
    return files;
}

}  // namespace pmelab
