// analysis.cpp: emission probabilities and interference fits.
#include "timeslit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "timeslit/errors.hpp"

namespace timeslit {

double conditional_emission_probability(const Ket& psi, int j) {
    return std::norm(psi[BasisLabel{1, Level::Lower, j}]);
}

double emission_probability(const Ket& psi) {
    const auto sites = static_cast<int>(psi.shape().sites());
    double p = 0.0;
    for (int j = 1; j <= sites; ++j) p += conditional_emission_probability(psi, j);
    return p;
}

EmissionRecord emission_record(const Ket& psi, double t, double phi) {
    const auto sites = static_cast<int>(psi.shape().sites());
    EmissionRecord rec;
    rec.t = t;
    rec.phi = phi;
    rec.p_cond.reserve(static_cast<std::size_t>(sites));
    for (int j = 1; j <= sites; ++j) {
        rec.p_cond.push_back(conditional_emission_probability(psi, j));
        rec.p += rec.p_cond.back();
    }
    rec.norm = psi.norm();
    return rec;
}

std::vector<EmissionRecord> phase_sweep(const ModelParams& params,
                                        std::span<const double> t_grid,
                                        std::span<const double> phi_grid) {
    const EigenSystem eig = eigendecompose_hermitian(total_hamiltonian(params));
    std::vector<Ket> initial;
    initial.reserve(phi_grid.size());
    for (double phi : phi_grid) {
        ModelParams p = params;
        p.phi = phi;
        initial.push_back(initial_state(p));
    }

    std::vector<EmissionRecord> rows;
    rows.reserve(t_grid.size() * phi_grid.size());
    for (double t : t_grid) {
        const Operator u = propagator(eig, t);
        for (std::size_t k = 0; k < phi_grid.size(); ++k) {
            rows.push_back(emission_record(u * initial[k], t, phi_grid[k]));
        }
    }
    return rows;
}

std::vector<double> uniform_time_grid(double t_max, int t_steps) {
    if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw InputError("t_max must be non-negative");
    if (t_steps < 1) throw InputError("t_steps must be at least 1");
    if (t_max == 0.0) return {0.0};
    std::vector<double> grid(static_cast<std::size_t>(t_steps) + 1);
    for (int k = 0; k <= t_steps; ++k) {
        grid[static_cast<std::size_t>(k)] = t_max * k / t_steps;
    }
    return grid;
}

std::vector<double> uniform_phase_grid(int steps) {
    if (steps < 1) throw InputError("phase grid needs at least one point");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        grid[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi * k / steps;
    }
    return grid;
}

std::vector<double> validation_phases() {
    std::vector<double> phases(12);
    for (int k = 0; k < 12; ++k) phases[static_cast<std::size_t>(k)] = k * std::numbers::pi / 6.0;
    return phases;
}

InterferenceDecomposer::InterferenceDecomposer(ModelId model, double omega0, double omega1)
    : model_(model) {
    ModelParams params{model, omega0, omega1, 1.0, 0.0, 0.0};
    params.validate();
    eig_ = eigendecompose_hermitian(total_hamiltonian(params));
}

InterferenceDecomposer::InterferenceDecomposer(ModelId model, const Operator& hamiltonian)
    : model_(model) {
    if (hamiltonian.dim() != model_shape(model).total_dim()) {
        throw InputError("InterferenceDecomposer: Hamiltonian does not act on the model space");
    }
    eig_ = eigendecompose_hermitian(hamiltonian);
}

double InterferenceDecomposer::probability(const Operator& u, double alpha, double beta,
                                           double phi) const {
    Ket psi(model_shape(model_));
    psi[BasisLabel{0, Level::Upper, 1}] = alpha;
    psi[BasisLabel{0, Level::Upper, 2}] = beta * std::polar(1.0, phi);
    return emission_probability(u * psi);
}

InterferenceFit InterferenceDecomposer::fit(double t) const {
    const Operator u = propagator(eig_, t);
    const double h = std::numbers::sqrt2 / 2.0;

    InterferenceFit f;
    f.t = t;
    f.a = probability(u, 1.0, 0.0, 0.0);
    f.b = probability(u, 0.0, 1.0, 0.0);
    // At α = β = 1/√2: p = (A + B)/2 + (C cos φ + S sin φ)/2.
    f.c = 2.0 * probability(u, h, h, 0.0) - (f.a + f.b);
    f.s = 2.0 * probability(u, h, h, std::numbers::pi / 2.0) - (f.a + f.b);

    for (double phi : validation_phases()) {
        const double model = 0.5 * (f.a + f.b) + 0.5 * (f.c * std::cos(phi) + f.s * std::sin(phi));
        f.residual = std::max(f.residual, std::abs(probability(u, h, h, phi) - model));
    }
    return f;
}

void require_fit(const InterferenceFit& fit) {
    if (!(fit.residual <= kFitResidualLimit)) {
        throw FitViolation("interference fit residual " + std::to_string(fit.residual) +
                               " at t = " + std::to_string(fit.t) + " exceeds limit",
                           fit.residual);
    }
}

InterferenceFit InterferenceDecomposer::decompose(double t) const {
    InterferenceFit f = fit(t);
    require_fit(f);
    return f;
}

InterferenceFit decompose_interference(ModelId model, double omega0, double omega1, double t) {
    return InterferenceDecomposer(model, omega0, omega1).decompose(t);
}

}  // namespace timeslit
