// dynamics.hpp: spectral propagation, an RK4 cross-check integrator, and the
// σ_x-diagonalizing block decomposition.
#pragma once

#include <array>
#include <span>
#include <vector>

#include "timeslit/hilbert.hpp"

namespace timeslit {

/// Eigenvalues ascending; column k of `vectors` belongs to `values[k]`.
struct EigenSystem {
    std::vector<double> values;
    Operator vectors;

    /// U·diag(λ)·U†
    Operator reconstruct() const;
};

struct JacobiOptions {
    double off_threshold = 1e-14;  // relative to ‖H‖_F
    int max_sweeps = 100;
    double degeneracy_gap = 1e-9;
};

/// Cyclic complex Jacobi. Throws InputError for non-Hermitian input and
/// NumericError when the sweep cap is reached.
EigenSystem eigendecompose_hermitian(const Operator& h, const JacobiOptions& opts = {});

/// e^{−iHt} from a precomputed eigensystem.
Operator propagator(const EigenSystem& eig, double t);
Operator propagator(const Operator& h, double t);

enum class Method { Spectral, Rk4 };

struct Trajectory {
    std::vector<double> times;
    std::vector<Ket> states;
    Method method = Method::Spectral;
    double max_norm_drift = 0.0;  // max |‖ψ‖ − 1| over the grid
    bool drift_warning = false;   // set when max_norm_drift exceeds kRk4DriftWarning
};

inline constexpr double kRk4DriftWarning = 1e-6;
inline constexpr double kDefaultRk4Step = 1e-3;

Trajectory evolve(const Operator& h, const Ket& psi0, std::span<const double> times);
Trajectory evolve(const EigenSystem& eig, const Ket& psi0, std::span<const double> times);

/// Classical fourth-order Runge–Kutta on ψ̇ = −iHψ without renormalization.
/// Each grid interval is covered by whole steps of `dt` plus one shorter step.
Trajectory evolve_rk4(const Operator& h, const Ket& psi0, std::span<const double> times,
                      double dt = kDefaultRk4Step);

/// (1/√2)[[1, 1], [1, −1]]; real, symmetric, involutive, V σ_x V† = σ_z.
Operator sigma_x_diagonalizer();

struct BlockDecomposition {
    Operator w;                   // V ⊗ V ⊗ I_L
    std::array<Operator, 4> blocks;  // Ω₊, Ω₋, Ω₋, Ω₊ along the diagonal of W Ω W†
    double off_block_residual = 0.0;

    const Operator& plus() const { return blocks[0]; }
    const Operator& minus() const { return blocks[1]; }
    /// W† · diag(e^{−iΩ_k t}) · W
    Operator propagator(double t) const;
};

/// Throws StructuralError when W Ω W† has off-block mass above 1e−10.
BlockDecomposition block_diagonalize(const Operator& omega, const SpaceShape& shape);

}  // namespace timeslit
