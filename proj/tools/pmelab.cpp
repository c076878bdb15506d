// pmelab: scenario runner and profile calibration tool for the critical
// singular-density diffusion lab.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmelab/profiles.hpp"
#include "pmelab/scenarios.hpp"

namespace {

int cmd_list() {
    for (const auto& name : pmelab::scenario_names())
        std::printf("%-22s %s\n", name.c_str(), pmelab::scenario_description(name).c_str());
    return 0;
}

int cmd_show_config(const std::string& name) {
    std::cout << pmelab::default_scenario_config(name).dump(2) << "\n";
    return 0;
}

int cmd_calibrate(const std::string& profile, double mass, double m, double M0, double tol,
                  const std::string& table_out, const std::string& datum_config) {
    using namespace pmelab;
    if (profile == "barenblatt") {
        std::printf("C0 = %.17g\n", calibrate_C0(mass, m));
        return 0;
    }
    if (profile == "peak") {
        std::printf("k = %.17g\n", k_of_M0(M0, m));
        return 0;
    }
    if (profile == "heaviside") {
        const HeavisideProfileTable table = solve_heaviside_profile(m, tol);
        std::printf("xi_front = %.17g, nodes = %zu, f(left) = %.17g\n", table.xi_front(),
                    table.xi().size(), table.f().front());
        if (!table_out.empty()) {
            std::ofstream os(table_out, std::ios::binary);
            if (!os) {
                std::fprintf(stderr, "cannot write %s\n", table_out.c_str());
                return 3;
            }
            table.write(os);
            std::printf("wrote %s\n", table_out.c_str());
        }
        return 0;
    }
    if (profile == "tw") {
        if (datum_config.empty()) {
            std::fprintf(stderr, "calibrate tw needs --config with grid/datum/K\n");
            return 2;
        }
        std::ifstream is(datum_config);
        if (!is) {
            std::fprintf(stderr, "cannot open %s\n", datum_config.c_str());
            return 2;
        }
        nlohmann::json cfg = nlohmann::json::parse(is);
        cfg["scenario"] = "thm4_N1_plateau";
        // reuse the scenario engine just for the calibration output
        const auto out = pmelab::run_scenario(cfg, std::filesystem::temp_directory_path() /
                                                       "pmelab_calibrate_tw");
        std::printf("s0 = %.17g\nx0 = %.17g\n", out.calibration.at("s0"),
                    out.calibration.at("x0"));
        return 0;
    }
    std::fprintf(stderr, "unknown profile '%s' (barenblatt|peak|heaviside|tw)\n",
                 profile.c_str());
    return 2;
}

int cmd_figure1(const std::string& config_path) {
    using nlohmann::json;
    json cfg;
    if (!config_path.empty()) {
        std::ifstream is(config_path);
        if (!is) {
            std::fprintf(stderr, "cannot open %s\n", config_path.c_str());
            return 2;
        }
        cfg = json::parse(is);
    } else {
        // generic solution against its traveling-wave limit, m = 3
        cfg["scenario"] = "thm4_N1_plateau";
        cfg["m"] = 3.0;
        cfg["grid"] = {{"s_min", -12.0}, {"s_max", 4.0}, {"n_cells", 2048}};
        cfg["output_times"] = {100.0, 300.0, 600.0};
        cfg["datum"] = {{"type", "bump"}, {"amplitude", 0.1}, {"radius", 0.5}};
        cfg["holder"] = {{"alpha", 0.5}, {"H", 4.0}};
        cfg["thresholds"] = {{"l1_final_over_first_max", 1.0}};
        cfg["solver"] = {{"cfl_safety", 0.4}, {"kernel", "auto"}};
    }
    cfg["emit_plots"] = true;
    std::filesystem::path outdir = cfg.value("output_dir", std::string("pmelab_out"));
    if (const char* env = std::getenv("PMELAB_OUTPUT_DIR")) outdir = env;
    try {
        const auto out = pmelab::run_scenario(cfg, outdir);
        for (const auto& f : out.files_written) std::printf("wrote %s\n", f.c_str());
        return 0;
    } catch (const pmelab::HypothesisError& e) {
        std::fprintf(stderr, "hypothesis violation: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "abort: %s\n", e.what());
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical lab for |x|^-2 u_t = Lap(u^m) in dimensions 1 and 2"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "run a scenario from a JSON config");
    run->add_option("config", config_path, "path to the scenario config")->required();

    auto* list = app.add_subcommand("list-scenarios", "list the available scenarios");
    std::string show_name;
    auto* show = app.add_subcommand("show-config", "print a scenario's default config");
    show->add_option("scenario", show_name, "scenario name")->required();

    std::string cal_profile, table_out, datum_config;
    double cal_mass = 1.0, cal_m = 2.0, cal_M0 = 1.0, cal_tol = 1e-6;
    auto* cal = app.add_subcommand("calibrate", "calibrate a profile's constants");
    cal->add_option("profile", cal_profile, "barenblatt|peak|heaviside|tw")->required();
    cal->add_option("--mass", cal_mass, "target weighted mass (barenblatt)");
    cal->add_option("--m", cal_m, "exponent m");
    cal->add_option("--M0", cal_M0, "weighted mass (peak)");
    cal->add_option("--tol", cal_tol, "profile ODE tolerance (heaviside)");
    cal->add_option("--out", table_out, "write the f table to this path (heaviside)");
    cal->add_option("--config", datum_config, "datum config for tw calibration");

    std::string fig_config;
    auto* fig = app.add_subcommand("figure1", "emit solution-vs-profile plot data (m=3 run)");
    fig->add_option("config", fig_config, "optional config override");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return pmelab::run_scenario_cli(config_path);
    if (list->parsed()) return cmd_list();
    if (show->parsed()) return cmd_show_config(show_name);
    if (cal->parsed())
        return cmd_calibrate(cal_profile, cal_mass, cal_m, cal_M0, cal_tol, table_out,
                             datum_config);
    if (fig->parsed()) return cmd_figure1(fig_config);
    return 1;
}
