#ifndef CMBOUNDS_EXPERIMENT_HPP
#define CMBOUNDS_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cmbounds/dgp.hpp"
#include "cmbounds/types.hpp"

namespace cmbounds {

struct ExperimentConfig {
    DgpConfig dgp;                        // template; num_markets is overridden per M
    std::vector<int> M_list = {200, 500, 1000};
    int num_sims = 100;
    std::vector<MethodTag> methods = {MethodTag::two_cycle, MethodTag::all_cycles};
    std::uint64_t base_seed = 1729;
    int threads = 0;                      // 0 = hardware concurrency
    bool keep_per_sim = false;            // retain raw per-simulation records
};

ExperimentConfig resolve_experiment_config(ExperimentConfig cfg);

// Aggregate over simulations for one (M, counterfactual, method, good)
// cell. Failed simulations (negative cycle flagged, or infeasible LP) are
// excluded from the aggregates and surface in `failures`; std deviations
// use the n-1 denominator.
struct CellStats {
    int M = 0;
    int cf_good = 0;  // 1-based
    MethodTag method = MethodTag::two_cycle;
    int good = 0;     // 1-based
    double mean_width = 0.0;
    double sd_width = 0.0;
    double coverage = 0.0;  // fraction of successful sims whose bounds contain the true share
    int failures = 0;
    double mean_seconds = 0.0;  // method pipeline wall-clock per simulation
};

// Raw record for one (simulation, method, counterfactual), kept only when
// keep_per_sim is set.
struct SimRecord {
    int M = 0;
    int sim = 0;  // 0-based simulation index
    MethodTag method = MethodTag::two_cycle;
    int cf_good = 0;
    bool ok = false;
    std::string fail_reason;          // "cm_violation" | "infeasible" | ""
    std::vector<double> widths;       // per good, when ok
    std::vector<bool> covered;        // per good, when ok
};

struct ExperimentReport {
    std::vector<CellStats> cells;  // M_list order, then cf, method, good
    std::vector<SimRecord> per_sim;
    std::uint64_t base_seed = 0;
    std::string rng_algorithm;     // recorded for the run manifest
};

using ProgressSink = std::function<void(int completed, int total)>;

// Runs S simulations per market count: generate a study, build each
// method's inequality system, bound every counterfactual share, and
// aggregate widths / coverage / timings. Simulations run in parallel;
// the report only depends on base_seed (timings aside).
ExperimentReport run_experiment(const ExperimentConfig& cfg, const ProgressSink& progress = {});

enum class ReportFormat { csv, markdown };

// CSV is long format, one row per cell with the documented columns
//   M,cf_good,method,good,mean_width,sd_width,coverage,failures,mean_seconds
// serialized to 17 significant digits so parse_report_csv round-trips
// exactly. Markdown mirrors the layout of the tables this harness targets:
// one row per (counterfactual, method), column blocks per M, cells
// "mean (sd)" at 4 decimals.
std::string emit_report(const ExperimentReport& rep, ReportFormat format);

std::vector<CellStats> parse_report_csv(const std::string& text);

// Copy with every mean_seconds zeroed; command-line `simulate` writes this
// variant so report files are byte-identical across runs (wall-clock data
// belongs to the manifest).
ExperimentReport without_timings(ExperimentReport rep);

}  // namespace cmbounds

#endif
