// Config-driven scenario runner: one scenario per theorem-style regime, each
// run calibrates its profile, evolves the datum, evaluates the metrics at the
// requested output times, and writes a CSV report plus a JSON summary (and,
// on request, plot data with a plotting script).
#ifndef PMELAB_SCENARIOS_HPP
#define PMELAB_SCENARIOS_HPP

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pmelab/core.hpp"
#include "pmelab/metrics.hpp"
#include "pmelab/solvers.hpp"

namespace pmelab {

enum class ScenarioKind {
    Thm1N2Zero,
    Thm2N2Plateau,
    Thm3N1Zero,
    Thm4N1Plateau,
    LinearM1,
    NonradialN1,
    BarenblattSelftest,
    TwSelftest,
};

ScenarioKind scenario_kind_from_name(const std::string& name);
const std::vector<std::string>& scenario_names();
std::string scenario_description(const std::string& name);

// Built-in default configuration (a complete, runnable config document).
nlohmann::ordered_json default_scenario_config(const std::string& name);

struct ScenarioOutcome {
    std::string scenario;
    bool pass = false;
    int exit_code = 1;  // 0 pass, 1 threshold failure, 2 hypothesis, 3 abort
    std::vector<ConvergenceReport> reports;
    std::map<std::string, double> calibration;
    std::vector<std::string> notes;
    std::vector<std::filesystem::path> files_written;
};

// Run from a parsed config document. Throws HypothesisError / NumericalError;
// the path/exit-code wrappers below map those onto the exit contract.
ScenarioOutcome run_scenario(const nlohmann::json& config,
                             const std::filesystem::path& output_dir);

// Reads the config file, resolves the output directory (config "output_dir",
// overridden by $PMELAB_OUTPUT_DIR), runs, writes reports.
ScenarioOutcome run_scenario_file(const std::filesystem::path& config_path);

// Exit-code front-end: 0 pass, 1 threshold failure, 2 hypothesis violation
// (incl. malformed configs), 3 numerical/I-O abort. Messages go to stderr.
int run_scenario_cli(const std::filesystem::path& config_path);

// Non-radial N=1 datum on the whole line: symmetrize into the two radial
// data, run both halves, calibrate each translation independently and report
// the stitched errors. Config mirrors the thm4/thm3 scenarios.
ScenarioOutcome stitch_nonradial(const TableDatum& u0_general, const nlohmann::json& config,
                                 const std::filesystem::path& output_dir);

// Per-time two-column series (radial variable, value) for solution and
// profile, plus a plot script referencing the emitted files. Values are
// written with 17 significant digits (bit-exact decimal round-trip).
std::vector<std::filesystem::path> emit_plot_data(
    const Trajectory& traj, const std::function<double(double, double)>& profile_log,
    const std::filesystem::path& dir, const std::string& stem);

}  // namespace pmelab

#endif
