// cli.hpp: configuration, subcommands and CSV emission for the timeslit tool.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "timeslit/dynamics.hpp"
#include "timeslit/models.hpp"
#include "timeslit/validation.hpp"

namespace timeslit::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 1,
    kInvalidInput = 2,
    kNumericFailure = 3,
    kAnsatzViolation = 4,
};

struct RunConfig {
    ModelId model = ModelId::A;
    double omega0 = 1.0;
    double omega1 = 1.0;
    double alpha = 1.0;
    double beta = 0.0;
    double phi = 0.0;
    double t_max = 20.0;
    int t_steps = 200;
    int phi_steps = 0;  // > 0 replaces phi by a uniform sweep on [0, 2π)
    Method method = Method::Spectral;
    double dt = kDefaultRk4Step;
    std::optional<std::filesystem::path> out;

    ModelParams params() const { return {model, omega0, omega1, alpha, beta, phi}; }
};

/// Values given on the command line; each one overrides the config file.
struct ConfigOverrides {
    std::optional<std::string> model;
    std::optional<double> omega0, omega1, alpha, beta, phi, t_max, dt;
    std::optional<int> t_steps, phi_steps;
    std::optional<std::string> method;
    std::optional<std::string> out;
};

/// Merges a flat JSON object with flag overrides and validates the result.
/// Throws InputError on unknown keys, a missing model, a non-normalized
/// (α, β), a negative t_max, or any other out-of-range field.
RunConfig parse_config(const nlohmann::json& file, const ConfigOverrides& flags);
RunConfig parse_config(const std::optional<std::filesystem::path>& file,
                       const ConfigOverrides& flags);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_eigen(const RunConfig& config, std::ostream& out);
int cmd_validate(const ValidationOptions& options, std::ostream& out);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace timeslit::cli
