#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aptqfi/fock.hpp"
#include "aptqfi/sensitivity.hpp"
#include "aptqfi/system.hpp"

namespace aptqfi {

enum class Command { Spectrum, Steady, Sensitivity, Qfi, Sweep, Evolve };
enum class OutputFormat { Csv, Json };

/// Grid of parameter values, linearly or logarithmically spaced.
struct GridSpec {
    enum class Spacing { Linear, Log };

    double min = 0.0;
    double max = 0.0;
    int count = 0;
    Spacing spacing = Spacing::Linear;

    std::vector<double> points() const;
    bool operator==(const GridSpec&) const = default;
};

struct SweepSpec {
    Parameter parameter = Parameter::MismatchS;
    GridSpec grid;
    std::vector<double> xi_values;
    bool operator==(const SweepSpec&) const = default;
};

struct SimSpec {
    std::optional<FockCutoffs> cutoffs;  ///< default: the coherent-cutoff rule
    std::optional<double> t_end;         ///< default: the relaxation horizon
    double tol = 1e-10;
    int samples = 201;  ///< trajectory rows written by `evolve`
    bool operator==(const SimSpec&) const = default;
};

struct OutputSpec {
    OutputFormat format = OutputFormat::Csv;
    std::string path;       ///< empty writes to stdout
    std::string plot_path;  ///< optional SVG, sweep only
    bool operator==(const OutputSpec&) const = default;
};

/// A fully validated run request; all physical quantities in units of the
/// collective rate.
struct RunConfig {
    Command command = Command::Spectrum;
    SystemParams params;
    Parameter parameter = Parameter::MismatchS;  ///< sensitivity/qfi estimand
    std::optional<SweepSpec> sweep;
    std::optional<SimSpec> sim;
    OutputSpec output;
    bool operator==(const RunConfig&) const = default;
};

std::string command_name(Command c);
Command command_from_name(const std::string& name);

/// Parses and validates a JSON configuration document. Unknown keys and
/// invariant violations raise ConfigError with a field-level message.
RunConfig parse_config(const std::string& json_text);

/// Applies `--set key.path=value` assignments on top of a JSON document
/// (creating intermediate objects as needed), then parses the result.
/// Values are interpreted as JSON where possible, as strings otherwise.
RunConfig parse_config_with_overrides(const std::string& json_text,
                                      const std::vector<std::string>& overrides);

/// Serializes back to the JSON schema accepted by parse_config;
/// parse_config(serialize(c)) == c for every valid config.
std::string serialize(const RunConfig& config);

}  // namespace aptqfi

namespace aptqfi {
inline bool operator==(const SystemParams& a, const SystemParams& b) {
    return a.delta == b.delta && a.kappa == b.kappa &&
           a.gamma_collective == b.gamma_collective && a.drive == b.drive &&
           a.mismatch_s == b.mismatch_s && a.dispersive_g == b.dispersive_g;
}
}  // namespace aptqfi
