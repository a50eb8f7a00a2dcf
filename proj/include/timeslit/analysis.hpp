// analysis.hpp: emission observables and the Youngian decomposition
//   p(t, φ) = (A + B)/2 + (C cos φ + S sin φ)/2   at α = β = 1/√2.
#pragma once

#include <span>
#include <vector>

#include "timeslit/dynamics.hpp"
#include "timeslit/models.hpp"

namespace timeslit {

/// Σ_j |Ψ₁₋ⱼ|², the probability that a photon has been emitted.
double emission_probability(const Ket& psi);

/// |Ψ₁₋ⱼ|², the joint probability of a photon with the atom found at X_j.
double conditional_emission_probability(const Ket& psi, int j);

struct EmissionRecord {
    double t = 0.0;
    double phi = 0.0;
    double p = 0.0;
    std::vector<double> p_cond;  // index j−1
    double norm = 1.0;
};

EmissionRecord emission_record(const Ket& psi, double t, double phi);

/// Full factorial sweep, rows ordered t outer, φ inner. The φ in `params`
/// is ignored.
std::vector<EmissionRecord> phase_sweep(const ModelParams& params,
                                        std::span<const double> t_grid,
                                        std::span<const double> phi_grid);

inline constexpr double kFitResidualLimit = 1e-8;

struct InterferenceFit {
    double t = 0.0;
    double a = 0.0;  // coefficient of α²
    double b = 0.0;  // coefficient of β²
    double c = 0.0;  // coefficient of αβ cos φ
    double s = 0.0;  // coefficient of αβ sin φ
    double residual = 0.0;
};

/// t_steps + 1 points on [0, t_max]; collapses to {0} when t_max is 0.
std::vector<double> uniform_time_grid(double t_max, int t_steps);

/// `steps` points 2πk/steps on [0, 2π).
std::vector<double> uniform_phase_grid(int steps);

/// Throws FitViolation when `fit.residual` exceeds kFitResidualLimit.
void require_fit(const InterferenceFit& fit);

/// The twelve validation phases kπ/6, k = 0..11.
std::vector<double> validation_phases();

/// Calibrates A, B, C, S from four exactly solvable runs and measures the
/// residual on the validation phases. Reuses one eigensystem across times.
class InterferenceDecomposer {
public:
    InterferenceDecomposer(ModelId model, double omega0, double omega1);
    /// Uses `hamiltonian` as given; it must act on the model's space.
    InterferenceDecomposer(ModelId model, const Operator& hamiltonian);

    /// Never throws on a poor fit; the residual is reported.
    InterferenceFit fit(double t) const;

    /// Throws FitViolation when the residual exceeds kFitResidualLimit.
    InterferenceFit decompose(double t) const;

private:
    double probability(const Operator& u, double alpha, double beta, double phi) const;

    ModelId model_;
    EigenSystem eig_;
};

InterferenceFit decompose_interference(ModelId model, double omega0, double omega1, double t);

}  // namespace timeslit
