#ifndef CMBOUNDS_CLI_HPP
#define CMBOUNDS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cmbounds/types.hpp"

namespace cmbounds::cli {

// Stable exit codes, shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCmViolation = 3;
inline constexpr int kExitInfeasible = 4;

struct BoundsOptions {
    std::string input_path;               // .json market file, or .csv markets
    std::vector<std::string> inline_cfs;  // "name=v1,v2,..." for csv inputs
    MethodTag method = MethodTag::all_cycles;
    bool allow_cm_violation = false;
    std::string output_path;              // JSON report; empty = stdout table only
};

struct SimulateOptions {
    std::string config_path;
    std::string output_dir;
    bool timings_in_csv = false;  // keep wall-clock column in the CSV (breaks byte determinism)
    int threads = -1;             // override config when >= 0
    bool quiet = false;
};

struct BenchOptions {
    std::vector<int> M_list = {125, 250, 500, 1000};
    int repeats = 3;
    int num_goods = 3;
    std::uint64_t seed = 7;
};

int cmd_bounds(const BoundsOptions& opt, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

// Median seconds per pipeline stage for one M (exposed for tests).
struct BenchRow {
    int M = 0;
    double seconds = 0.0;  // build_weights + floyd_warshall + build_sharp_system
};
std::vector<BenchRow> run_bench(const BenchOptions& opt);
// Least-squares slope of log(seconds) vs log(M); needs >= 2 rows.
double fit_loglog_slope(const std::vector<BenchRow>& rows);

}  // namespace cmbounds::cli

#endif
