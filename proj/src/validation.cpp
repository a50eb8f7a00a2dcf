// validation.cpp: the acceptance checks shared by `timeslit validate` and the
// acceptance test binary.
#include "timeslit/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "timeslit/analysis.hpp"
#include "timeslit/dynamics.hpp"
#include "timeslit/reference.hpp"

namespace timeslit {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class Recorder {
public:
    Recorder(ValidationReport& report, const ValidationOptions& opts)
        : report_(report), opts_(opts) {}

    void at_most(int criterion, std::string name, double value, double tol) {
        add(criterion, std::move(name), value, opts_.tolerance.value_or(tol), Bound::AtMost, true);
    }
    void above(int criterion, std::string name, double value, double floor) {
        add(criterion, std::move(name), value, floor, Bound::Above, false);
    }
    void runtime(int criterion, double seconds, double limit) {
        add(criterion, "runtime [s]", seconds, limit, Bound::AtMost, false);
    }

private:
    void add(int criterion, std::string name, double value, double threshold, Bound bound,
             bool error_bound) {
        Check c;
        c.criterion = criterion;
        c.name = std::move(name);
        c.value = value;
        c.threshold = threshold;
        c.bound = bound;
        c.error_bound = error_bound;
        // NaN never passes.
        c.pass = bound == Bound::AtMost ? value <= threshold : value > threshold;
        report_.checks.push_back(std::move(c));
    }

    ValidationReport& report_;
    const ValidationOptions& opts_;
};

ModelParams reference_point(ModelId model, double alpha, double beta, double phi) {
    if (model == ModelId::C) return {model, 2.0, 3.0, alpha, beta, phi};
    return {model, 1.0, 1.0, alpha, beta, phi};
}

std::vector<double> standard_grid() { return uniform_time_grid(20.0, 200); }

// Initial conditions used wherever a criterion does not pin (α, β, φ).
struct Amplitudes {
    double alpha, beta, phi;
};
constexpr Amplitudes kSampleAmplitudes[] = {
    {1.0, 0.0, 0.0},
    {kHalfSqrt2, kHalfSqrt2, std::numbers::pi},
    {0.6, 0.8, 0.7},
};

Operator block_diag(const std::array<Operator, 4>& blocks) {
    const auto L = blocks[0].dim();
    Operator out(4 * L);
    for (std::size_t b = 0; b < 4; ++b) {
        for (std::size_t i = 0; i < L; ++i) {
            for (std::size_t j = 0; j < L; ++j) out(b * L + i, b * L + j) = blocks[b](i, j);
        }
    }
    return out;
}

Operator position_permutation_t3() {
    // |X₁⟩ → |X₃⟩, |X₂⟩ → |X₁⟩, |X₃⟩ → |X₂⟩
    Operator p(3);
    p(2, 0) = 1.0;
    p(0, 1) = 1.0;
    p(1, 2) = 1.0;
    return kron(Operator::identity(2), kron(Operator::identity(2), p));
}

void hamiltonian_transcription(Recorder& rec, const ValidationOptions& opts) {
    const auto start = Clock::now();
    for (auto [model, w0, w1] : {std::tuple{ModelId::A, 1.0, 1.0}, std::tuple{ModelId::B, 1.0, 1.0},
                                 std::tuple{ModelId::C, 2.0, 3.0}}) {
        const Operator built = opts.hamiltonian(ModelParams{model, w0, w1, 1.0, 0.0, 0.0});
        const Operator table = reference::transcribed_hamiltonian(model, w0, w1);
        rec.at_most(1, "model " + std::string(to_string(model)) + " entrywise |built - table|",
                    max_abs_diff(built, table), 0.0);
    }
    rec.runtime(1, seconds_since(start), 1.0);
}

void closed_form_solutions(Recorder& rec, const ValidationOptions& opts) {
    const auto start = Clock::now();
    const auto grid = standard_grid();
    for (ModelId model : {ModelId::B, ModelId::C}) {
        const EigenSystem eig = eigendecompose_hermitian(opts.hamiltonian(reference_point(model, 1, 0, 0)));
        double worst = 0.0;
        for (const auto& amp : kSampleAmplitudes) {
            const ModelParams params = reference_point(model, amp.alpha, amp.beta, amp.phi);
            const Trajectory traj = evolve(eig, initial_state(params), grid);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const Ket exact = model == ModelId::B ? reference::psi_closed_form_b(params, grid[k])
                                                      : reference::psi_closed_form_c(params, grid[k]);
                worst = std::max(worst, max_abs_diff(traj.states[k], exact));
            }
        }
        rec.at_most(2, "model " + std::string(to_string(model)) + " max |spectral - closed form|",
                    worst, 1e-10);
    }
    rec.runtime(2, seconds_since(start), 1.0);
}

void emission_blocking(Recorder& rec, const ValidationOptions& opts) {
    const auto grid = standard_grid();
    const EigenSystem eig = eigendecompose_hermitian(opts.hamiltonian(reference_point(ModelId::B, 1, 0, 0)));

    const auto blocked = evolve(eig, initial_state(reference_point(ModelId::B, kHalfSqrt2, kHalfSqrt2,
                                                               std::numbers::pi)),
                                grid);
    double max_p = 0.0;
    for (const auto& s : blocked.states) max_p = std::max(max_p, emission_probability(s));
    rec.at_most(3, "model B phi=pi max p(t)", max_p, 1e-10);

    const auto bright = evolve(eig, initial_state(reference_point(ModelId::B, kHalfSqrt2, kHalfSqrt2, 0.0)),
                               grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        worst = std::max(worst, std::abs(emission_probability(bright.states[k]) -
                                         2.0 * reference::model_b_f(grid[k])));
    }
    rec.at_most(3, "model B phi=0 max |p - 2f|", worst, 1e-10);
}

void eigenvalue_formulas(Recorder& rec, const ValidationOptions& opts) {
    double worst = 0.0;
    double trace = 0.0;
    for (int k = 1; k <= 30; ++k) {
        const double w0 = 0.1 * k;
        const Operator h = opts.hamiltonian(ModelParams{ModelId::A, w0, 1.0, 1.0, 0.0, 0.0});
        const Operator plus = block_diagonalize(h, model_shape(ModelId::A)).plus();
        const auto numeric = eigendecompose_hermitian(plus).values;
        const auto ev = reference::lambda_eigenvalues(w0);
        const auto closed = ev.sorted();
        for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(closed[i] - numeric[i]));
        trace = std::max(trace, std::abs(ev.lambda1 + ev.lambda2 + ev.lambda3 - 1.0));
    }
    rec.at_most(4, "max |lambda formula - spectrum(Omega+)|, omega0 in 0.1..3.0", worst, 1e-10);
    rec.at_most(4, "max |lambda1 + lambda2 + lambda3 - 1|", trace, 1e-12);

    const auto numeric = eigendecompose_hermitian(opts.hamiltonian(reference_point(ModelId::C, 1, 0, 0))).values;
    const auto closed = reference::model_c_eigenvalues(2.0, 3.0);
    double diff = 0.0;
    for (std::size_t i = 0; i < closed.size(); ++i) diff = std::max(diff, std::abs(closed[i] - numeric[i]));
    rec.at_most(4, "model C max |formula - spectrum| (sorted multiset)", diff, 1e-10);

    // Every numerical eigenvalue must occur exactly twice.
    double bad_multiplicity = 0.0;
    for (std::size_t i = 0; i < numeric.size();) {
        std::size_t j = i + 1;
        while (j < numeric.size() && numeric[j] - numeric[i] < 1e-8) ++j;
        if (j - i != 2) bad_multiplicity += 1.0;
        i = j;
    }
    rec.at_most(4, "model C eigenvalue clusters without multiplicity 2", bad_multiplicity, 0.0);
}

void block_diagonalization(Recorder& rec, const ValidationOptions& opts) {
    for (ModelId model : {ModelId::A, ModelId::B}) {
        const ModelParams params = reference_point(model, 1, 0, 0);
        const Operator h = opts.hamiltonian(params);
        const Operator v = sigma_x_diagonalizer();
        const Operator w = kron(v, kron(v, Operator::identity(3)));

        Operator plus;
        Operator minus;
        if (model == ModelId::A) {
            plus = reference::omega_plus(params.omega0, params.omega1);
            minus = reference::omega_minus(params.omega0, params.omega1);
        } else {
            plus = position_hopping(model, params.omega0) + Complex{params.omega1} * projector(3, 3);
            minus = position_hopping(model, params.omega0) - Complex{params.omega1} * projector(3, 3);
        }
        const std::array<Operator, 4> blocks{plus, minus, minus, plus};
        const std::string tag = "model " + std::string(to_string(model));
        rec.at_most(5, tag + " |W Omega W^dag - blockdiag(+,-,-,+)|",
                    max_abs_diff(w * h * dagger(w), block_diag(blocks)), 1e-12);

        const EigenSystem full = eigendecompose_hermitian(h);
        std::array<EigenSystem, 4> block_eigs;
        for (std::size_t b = 0; b < 4; ++b) block_eigs[b] = eigendecompose_hermitian(blocks[b]);
        double worst = 0.0;
        for (double t : uniform_time_grid(20.0, 40)) {
            std::array<Operator, 4> ub;
            for (std::size_t b = 0; b < 4; ++b) ub[b] = propagator(block_eigs[b], t);
            worst = std::max(worst, max_abs_diff(propagator(full, t), dagger(w) * block_diag(ub) * w));
        }
        rec.at_most(5, tag + " |exp(-i Omega t) - W^dag blockexp W|", worst, 1e-10);
    }
}

void vanishing_components(Recorder& rec, const ValidationOptions& opts) {
    const auto grid = standard_grid();
    const EigenSystem eig = eigendecompose_hermitian(opts.hamiltonian(reference_point(ModelId::A, 1, 0, 0)));
    const auto shape = model_shape(ModelId::A);
    double worst = 0.0;
    for (double phi : {0.0, std::numbers::pi / 2.0, 2.1, std::numbers::pi}) {
        const auto traj = evolve(eig, initial_state(reference_point(ModelId::A, kHalfSqrt2, kHalfSqrt2, phi)),
                                 grid);
        for (const auto& s : traj.states) {
            for (int j = 1; j <= 3; ++j) {
                worst = std::max(worst, std::abs(s[basis_index(shape, {0, Level::Lower, j})]));
                worst = std::max(worst, std::abs(s[basis_index(shape, {1, Level::Upper, j})]));
            }
        }
    }
    rec.at_most(6, "model A max |Psi_0-j|, |Psi_1+j|", worst, 1e-12);
}

void interference_decomposition(Recorder& rec, const ValidationOptions& opts) {
    const auto start = Clock::now();
    const InterferenceDecomposer dec(ModelId::A, opts.hamiltonian(reference_point(ModelId::A, 1, 0, 0)));
    double residual = 0.0;
    double max_s = 0.0;
    double max_c = 0.0;
    for (double t : uniform_time_grid(200.0, 400)) {
        const auto fit = dec.fit(t);
        residual = std::max(residual, fit.residual);
        max_s = std::max(max_s, std::abs(fit.s));
        max_c = std::max(max_c, std::abs(fit.c));
    }
    rec.at_most(7, "model A max fit residual over 12 phases", residual, 1e-9);
    rec.at_most(7, "model A max |S(t)|", max_s, 1e-9);
    rec.above(7, "model A max |C(t)|", max_c, 1e-3);
    rec.runtime(7, seconds_since(start), 10.0);
}

void model_c_coherence(Recorder& rec, const ValidationOptions& opts) {
    const auto grid = standard_grid();
    const auto phases = validation_phases();
    const EigenSystem eig = eigendecompose_hermitian(opts.hamiltonian(reference_point(ModelId::C, 1, 0, 0)));
    const double a = kHalfSqrt2;
    const double b = kHalfSqrt2;

    std::vector<Trajectory> runs;
    for (double phi : phases) runs.push_back(evolve(eig, initial_state(reference_point(ModelId::C, a, b, phi)), grid));

    double flat = 0.0;
    double cond_var = 0.0;
    double stated = 0.0;
    double explicit_sign = 0.0;
    for (std::size_t i = 0; i < phases.size(); ++i) {
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const Ket& s = runs[i].states[k];
            const Ket& s0 = runs[0].states[k];
            flat = std::max(flat, std::abs(emission_probability(s) - emission_probability(s0)));
            const double c3 = conditional_emission_probability(s, 3);
            const double c4 = conditional_emission_probability(s, 4);
            cond_var = std::max(cond_var, std::abs(c3 - conditional_emission_probability(s0, 3)));

            const double t = grid[k];
            const double i34 = std::norm(reference::model_c_factors(t).i34);
            const double cross = std::sin(4 * t) * std::sin(phases[i]) * i34 * 2.0 * a * b;
            stated = std::max(stated, std::abs((c3 - c4) - cross));
            explicit_sign = std::max(explicit_sign, std::abs((c3 - c4) + cross));
        }
    }
    rec.at_most(8, "model C max |p(t,phi) - p(t,0)|", flat, 1e-10);
    rec.above(8, "model C max ||Psi_1-3|^2(t,phi) - |Psi_1-3|^2(t,0)|", cond_var, 1e-3);
    rec.at_most(8, "model C |Psi_1-3|^2 - |Psi_1-4|^2 = +2ab sin4t sinphi |I34|^2", stated, 1e-10);
    rec.at_most(8, "model C |Psi_1-3|^2 - |Psi_1-4|^2 = -2ab sin4t sinphi |I34|^2 (explicit vector)",
                explicit_sign, 1e-10);
}

void method_cross_validation(Recorder& rec, const ValidationOptions& opts) {
    const auto grid = standard_grid();
    for (ModelId model : {ModelId::A, ModelId::B, ModelId::C}) {
        const ModelParams params = reference_point(model, 0.6, 0.8, 0.7);
        const Operator h = opts.hamiltonian(params);
        const Ket psi0 = initial_state(params);
        const auto spectral = evolve(h, psi0, grid);
        const auto rk4 = evolve_rk4(h, psi0, grid, kDefaultRk4Step);
        double worst = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            worst = std::max(worst, max_abs_diff(spectral.states[k], rk4.states[k]));
        }
        const std::string tag = "model " + std::string(to_string(model));
        rec.at_most(9, tag + " max |spectral - rk4|", worst, 1e-8);
        rec.at_most(9, tag + " rk4 norm drift", rk4.max_norm_drift, 1e-9);
    }
}

void free_cycle(Recorder& rec, const ValidationOptions& opts) {
    const Operator h0 = opts.hamiltonian(ModelParams{ModelId::A, 1.0, 0.0, 1.0, 0.0, 0.0});
    const double period = free_period(ModelId::A, 1.0);
    const EigenSystem eig = eigendecompose_hermitian(h0);
    rec.at_most(10, "|U0(T/3) - cyclic permutation|",
                max_abs_diff(propagator(eig, period / 3.0), position_permutation_t3()), 1e-12);
    rec.at_most(10, "|U0(T) - I|", max_abs_diff(propagator(eig, period), Operator::identity(12)), 1e-12);
}

}  // namespace

bool ValidationReport::passed() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<CriterionSummary> ValidationReport::by_criterion() const {
    std::map<int, CriterionSummary> grouped;
    for (const auto& c : checks) {
        auto& s = grouped[c.criterion];
        s.criterion = c.criterion;
        s.title = criterion_title(c.criterion);
        s.pass = s.pass && c.pass;
        s.checks.push_back(&c);
    }
    std::vector<CriterionSummary> out;
    for (auto& [_, s] : grouped) out.push_back(std::move(s));
    return out;
}

std::string criterion_title(int criterion) {
    switch (criterion) {
        case 1: return "Hamiltonian transcription";
        case 2: return "Closed-form solution equivalence";
        case 3: return "Emission blocking";
        case 4: return "Eigenvalue formulas";
        case 5: return "Block diagonalization";
        case 6: return "Parity / vanishing components";
        case 7: return "Interference decomposition";
        case 8: return "Model C phase flatness and conditional coherence";
        case 9: return "Spectral vs RK4 cross-validation";
        case 10: return "Free-propagation cycle";
        default: return "unknown";
    }
}

ValidationReport run_validation(const ValidationOptions& options) {
    ValidationReport report;
    Recorder rec(report, options);
    hamiltonian_transcription(rec, options);
    closed_form_solutions(rec, options);
    emission_blocking(rec, options);
    eigenvalue_formulas(rec, options);
    block_diagonalization(rec, options);
    vanishing_components(rec, options);
    interference_decomposition(rec, options);
    model_c_coherence(rec, options);
    method_cross_validation(rec, options);
    free_cycle(rec, options);
    return report;
}

std::string format_report(const ValidationReport& report) {
    std::ostringstream os;
    char line[256];
    for (const auto& c : report.checks) {
        std::snprintf(line, sizeof line, "%-4d %-4s %-78s %12.3e %s %9.1e\n", c.criterion,
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value,
                      c.bound == Bound::AtMost ? "<=" : "> ", c.threshold);
        os << line;
    }
    os << (report.passed() ? "overall: PASS\n" : "overall: FAIL\n");
    return os.str();
}

}  // namespace timeslit
