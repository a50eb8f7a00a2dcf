// cli.cpp: subcommand implementations and argument handling.
#include "timeslit/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "timeslit/analysis.hpp"
#include "timeslit/errors.hpp"
#include "timeslit/reference.hpp"

namespace timeslit::cli {

namespace {

const std::set<std::string> kConfigKeys = {"model", "omega0",    "omega1", "alpha",
                                           "beta",  "phi",       "t_max",  "t_steps",
                                           "phi_steps", "method", "dt",     "out"};

double json_number(const nlohmann::json& obj, const char* key) {
    const auto& v = obj.at(key);
    if (!v.is_number()) throw InputError(std::string("config: '") + key + "' must be a number");
    return v.get<double>();
}

int json_integer(const nlohmann::json& obj, const char* key) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) {
        throw InputError(std::string("config: '") + key + "' must be an integer");
    }
    return v.get<int>();
}

std::string json_string(const nlohmann::json& obj, const char* key) {
    const auto& v = obj.at(key);
    if (!v.is_string()) throw InputError(std::string("config: '") + key + "' must be a string");
    return v.get<std::string>();
}

Method parse_method(const std::string& text) {
    if (text == "spectral") return Method::Spectral;
    if (text == "rk4") return Method::Rk4;
    throw InputError("method must be 'spectral' or 'rk4', got '" + text + "'");
}

void validate_config(const RunConfig& c) {
    if (!std::isfinite(c.omega0) || c.omega0 < 0.0) throw InputError("omega0 must be non-negative");
    if (!std::isfinite(c.omega1) || c.omega1 < 0.0) throw InputError("omega1 must be non-negative");
    const double n2 = c.alpha * c.alpha + c.beta * c.beta;
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormalizationTol) {
        throw InputError("alpha^2 + beta^2 must equal 1, got " + format_double(n2));
    }
    if (!std::isfinite(c.phi)) throw InputError("phi must be finite");
    if (!std::isfinite(c.t_max) || c.t_max < 0.0) throw InputError("t_max must be non-negative");
    if (c.t_steps < 1) throw InputError("t_steps must be at least 1");
    if (c.phi_steps < 0) throw InputError("phi_steps must be non-negative");
    if (!std::isfinite(c.dt) || c.dt <= 0.0) throw InputError("dt must be positive");
}

std::vector<double> phases_for(const RunConfig& c) {
    if (c.phi_steps > 0) return uniform_phase_grid(c.phi_steps);
    return {c.phi};
}

void write_simulate_header(std::ostream& os, std::size_t sites) {
    os << "model,omega0,omega1,alpha,beta,phi,t,p";
    for (std::size_t j = 1; j <= sites; ++j) os << ",p_cond_" << j;
    os << ",norm\n";
}

void write_record(std::ostream& os, const RunConfig& c, const EmissionRecord& r) {
    os << to_string(c.model) << ',' << format_double(c.omega0) << ',' << format_double(c.omega1)
       << ',' << format_double(c.alpha) << ',' << format_double(c.beta) << ','
       << format_double(r.phi) << ',' << format_double(r.t) << ',' << format_double(r.p);
    for (double pc : r.p_cond) os << ',' << format_double(pc);
    os << ',' << format_double(r.norm) << '\n';
}

// Closed-form spectrum of Ω₊(ω₀, ω₁) by scaling the ω₁ = 1 formulas.
std::optional<std::array<double, 3>> closed_plus_spectrum(double omega0, double omega1) {
    if (omega1 <= 0.0) return std::nullopt;
    auto v = reference::lambda_eigenvalues(omega0 / omega1).sorted();
    for (auto& x : v) x *= omega1;
    return v;
}

void write_eigen_rows(std::ostream& os, const RunConfig& c, const char* op,
                      const std::vector<double>& numeric,
                      const std::optional<std::vector<double>>& closed) {
    for (std::size_t k = 0; k < numeric.size(); ++k) {
        os << to_string(c.model) << ',' << format_double(c.omega0) << ','
           << format_double(c.omega1) << ',' << op << ',' << k << ',' << format_double(numeric[k])
           << ',';
        if (closed) os << format_double((*closed)[k]);
        os << '\n';
    }
}

int emit(const std::string& text, const RunConfig& c, std::ostream& out) {
    if (!c.out) {
        out << text;
        return kSuccess;
    }
    std::ofstream file(*c.out, std::ios::binary);
    if (!file) throw InputError("cannot open output file " + c.out->string());
    file << text;
    return kSuccess;
}

}  // namespace

std::string format_double(double value) {
    if (value == 0.0) return "0";  // folds −0
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

RunConfig parse_config(const nlohmann::json& file, const ConfigOverrides& flags) {
    if (!file.is_object()) throw InputError("config: expected a flat JSON object");
    std::vector<std::string> unknown;
    for (const auto& [key, _] : file.items()) {
        if (!kConfigKeys.contains(key)) unknown.push_back(key);
    }
    if (!unknown.empty()) {
        std::string msg = "config: unknown keys:";
        for (const auto& k : unknown) msg += " " + k;
        throw InputError(msg);
    }

    RunConfig c;
    std::optional<std::string> model = flags.model;
    if (!model && file.contains("model")) model = json_string(file, "model");
    if (!model) throw InputError("model is required (A, B or C)");
    const auto id = parse_model_id(*model);
    if (!id) throw InputError("unknown model '" + *model + "'");
    c.model = *id;

    auto number = [&](const std::optional<double>& flag, const char* key, double& dst) {
        if (flag) dst = *flag;
        else if (file.contains(key)) dst = json_number(file, key);
    };
    auto integer = [&](const std::optional<int>& flag, const char* key, int& dst) {
        if (flag) dst = *flag;
        else if (file.contains(key)) dst = json_integer(file, key);
    };
    number(flags.omega0, "omega0", c.omega0);
    number(flags.omega1, "omega1", c.omega1);
    number(flags.alpha, "alpha", c.alpha);
    number(flags.beta, "beta", c.beta);
    number(flags.phi, "phi", c.phi);
    number(flags.t_max, "t_max", c.t_max);
    number(flags.dt, "dt", c.dt);
    integer(flags.t_steps, "t_steps", c.t_steps);
    integer(flags.phi_steps, "phi_steps", c.phi_steps);

    if (flags.method) c.method = parse_method(*flags.method);
    else if (file.contains("method")) c.method = parse_method(json_string(file, "method"));

    if (flags.out) c.out = *flags.out;
    else if (file.contains("out")) c.out = json_string(file, "out");

    validate_config(c);
    return c;
}

RunConfig parse_config(const std::optional<std::filesystem::path>& file,
                       const ConfigOverrides& flags) {
    if (!file) return parse_config(nlohmann::json::object(), flags);
    std::ifstream in(*file);
    if (!in) throw InputError("cannot read config file " + file->string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("config: ") + e.what());
    }
    return parse_config(j, flags);
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const ModelParams params = config.params();
    params.validate();
    const auto times = uniform_time_grid(config.t_max, config.t_steps);
    const auto phases = phases_for(config);

    std::vector<EmissionRecord> rows;
    if (config.method == Method::Spectral) {
        rows = phase_sweep(params, times, phases);
    } else {
        const Operator h = total_hamiltonian(params);
        std::vector<Trajectory> runs;
        for (double phi : phases) {
            ModelParams p = params;
            p.phi = phi;
            runs.push_back(evolve_rk4(h, initial_state(p), times, config.dt));
            if (runs.back().drift_warning) {
                err << "warning: rk4 norm drift " << format_double(runs.back().max_norm_drift)
                    << " at phi = " << format_double(phi) << "; reduce --dt\n";
            }
        }
        for (std::size_t k = 0; k < times.size(); ++k) {
            for (std::size_t i = 0; i < phases.size(); ++i) {
                rows.push_back(emission_record(runs[i].states[k], times[k], phases[i]));
            }
        }
    }

    std::ostringstream os;
    write_simulate_header(os, site_count(config.model));
    for (const auto& r : rows) write_record(os, config, r);
    return emit(os.str(), config, out);
}

int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const InterferenceDecomposer dec(config.model, config.omega0, config.omega1);
    std::ostringstream os;
    os << "model,omega0,omega1,t,A,B,C,S,residual\n";
    double worst = 0.0;
    double worst_t = 0.0;
    for (double t : uniform_time_grid(config.t_max, config.t_steps)) {
        const auto f = dec.fit(t);
        if (f.residual > worst) {
            worst = f.residual;
            worst_t = t;
        }
        os << to_string(config.model) << ',' << format_double(config.omega0) << ','
           << format_double(config.omega1) << ',' << format_double(t) << ',' << format_double(f.a)
           << ',' << format_double(f.b) << ',' << format_double(f.c) << ',' << format_double(f.s)
           << ',' << format_double(f.residual) << '\n';
    }
    emit(os.str(), config, out);
    if (worst > kFitResidualLimit) {
        err << "error: Youngian fit residual " << format_double(worst) << " at t = "
            << format_double(worst_t) << " exceeds " << format_double(kFitResidualLimit) << '\n';
        return kAnsatzViolation;
    }
    return kSuccess;
}

int cmd_eigen(const RunConfig& config, std::ostream& out) {
    const Operator h =
        free_hamiltonian(config.model, config.omega0) + interaction_hamiltonian(config.model, config.omega1);
    std::ostringstream os;
    os << "model,omega0,omega1,operator,index,numerical,closed_form\n";
    const auto full = eigendecompose_hermitian(h).values;

    if (config.model == ModelId::C) {
        write_eigen_rows(os, config, "full", full,
                         reference::model_c_eigenvalues(config.omega0, config.omega1));
        return emit(os.str(), config, out);
    }

    const auto blocks = block_diagonalize(h, model_shape(config.model));
    const auto plus = eigendecompose_hermitian(blocks.plus()).values;
    const auto minus = eigendecompose_hermitian(blocks.minus()).values;

    std::optional<std::vector<double>> closed_full, closed_plus, closed_minus;
    if (config.model == ModelId::A) {
        if (const auto cp = closed_plus_spectrum(config.omega0, config.omega1)) {
            closed_plus = std::vector<double>(cp->begin(), cp->end());
            // Ω₋(ω₀) = −Ω₊(−ω₀), and Ω₊(−ω₀) is the complex conjugate of Ω₊(ω₀).
            closed_minus = std::vector<double>{-(*cp)[2], -(*cp)[1], -(*cp)[0]};
            closed_full = std::vector<double>();
            for (int rep = 0; rep < 2; ++rep) {
                closed_full->insert(closed_full->end(), closed_plus->begin(), closed_plus->end());
                closed_full->insert(closed_full->end(), closed_minus->begin(), closed_minus->end());
            }
            std::sort(closed_full->begin(), closed_full->end());
        }
    }
    write_eigen_rows(os, config, "full", full, closed_full);
    write_eigen_rows(os, config, "plus", plus, closed_plus);
    write_eigen_rows(os, config, "minus", minus, closed_minus);
    return emit(os.str(), config, out);
}

int cmd_validate(const ValidationOptions& options, std::ostream& out) {
    const auto report = run_validation(options);
    out << format_report(report);
    return report.passed() ? kSuccess : kValidationFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"timeslit: single-slit, double-time self-interference simulator"};
    app.require_subcommand(1);

    ConfigOverrides flags;
    std::optional<std::string> config_path;
    std::optional<double> tolerance;
    std::optional<std::string> validate_out;

    auto add_run_flags = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "flat JSON config file");
        sub->add_option("--model", flags.model, "A, B or C");
        sub->add_option("--omega0", flags.omega0, "hopping frequency");
        sub->add_option("--omega1", flags.omega1, "emission coupling");
        sub->add_option("--alpha", flags.alpha, "amplitude at X1");
        sub->add_option("--beta", flags.beta, "amplitude at X2");
        sub->add_option("--phi", flags.phi, "relative phase of the X2 peak");
        sub->add_option("--t-max", flags.t_max, "end of the time grid");
        sub->add_option("--t-steps", flags.t_steps, "number of time intervals");
        sub->add_option("--phi-steps", flags.phi_steps, "phase sweep points on [0, 2pi)");
        sub->add_option("--method", flags.method, "spectral or rk4");
        sub->add_option("--dt", flags.dt, "rk4 step");
        sub->add_option("--out", flags.out, "output path (default stdout)");
    };

    auto* simulate = app.add_subcommand("simulate", "emission probabilities on a (t, phi) grid");
    auto* decompose = app.add_subcommand("decompose", "A, B, C, S interference coefficients");
    auto* eigen = app.add_subcommand("eigen", "numerical and closed-form eigenvalues");
    auto* validate = app.add_subcommand("validate", "closed-form versus numerical checks");
    add_run_flags(simulate);
    add_run_flags(decompose);
    add_run_flags(eigen);
    validate->add_option("--tolerance", tolerance, "override every error tolerance");
    validate->add_option("--out", validate_out, "report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInvalidInput;
    }

    try {
        if (validate->parsed()) {
            ValidationOptions opts;
            opts.tolerance = tolerance;
            if (!validate_out) return cmd_validate(opts, out);
            std::ofstream file(*validate_out, std::ios::binary);
            if (!file) throw InputError("cannot open output file " + *validate_out);
            return cmd_validate(opts, file);
        }
        std::optional<std::filesystem::path> path;
        if (config_path) path = *config_path;
        const RunConfig config = parse_config(path, flags);
        if (simulate->parsed()) return cmd_simulate(config, out, err);
        if (decompose->parsed()) return cmd_decompose(config, out, err);
        if (eigen->parsed()) return cmd_eigen(config, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const StructuralError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    }
    return kInvalidInput;
}

}  // namespace timeslit::cli
