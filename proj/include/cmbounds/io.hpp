#ifndef CMBOUNDS_IO_HPP
#define CMBOUNDS_IO_HPP

#include <string>
#include <vector>

#include "cmbounds/experiment.hpp"
#include "cmbounds/types.hpp"

namespace cmbounds {

struct NamedScenario {
    std::string name;
    Scenario scenario;
};

// On-disk input for the `bounds` command: good count, the observed
// markets, and one or more named counterfactual utility vectors.
struct MarketFile {
    MarketData data;            // validated on read
    std::vector<NamedScenario> counterfactuals;
};

inline constexpr int kSchemaVersion = 1;

// JSON document with schema_version, num_goods, markets[{delta,share}] and
// counterfactuals[{name,delta}]. Parse errors carry the offending field
// and (1-based) market index. Throws ParseError / validation errors.
MarketFile read_market_file_json(const std::string& path);
void write_market_file_json(const std::string& path, const MarketFile& file);

// CSV alternative for the markets block only:
//   market_id,delta_1..delta_J,share_1..share_J
// with a header row. Errors name the line number.
MarketData read_markets_csv(const std::string& path);

// Experiment config document; missing fields fall back to defaults.
ExperimentConfig read_experiment_config_json(const std::string& path);
std::string experiment_config_to_json(const ExperimentConfig& cfg);

// Doubles rendered with 17 significant digits (exact round-trip).
std::string format_double(double v);
double parse_double(const std::string& s);

// Write-then-rename so readers never observe partial files.
void write_text_atomic(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace cmbounds

#endif
