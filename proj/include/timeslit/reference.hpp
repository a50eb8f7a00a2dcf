// reference.hpp: closed-form results used as independent oracles for the
// numerical engine. Each function is valid only at the parameter point its
// formula was derived for; anything else throws UnsupportedError.
#pragma once

#include <array>
#include <vector>

#include "timeslit/hilbert.hpp"
#include "timeslit/models.hpp"

namespace timeslit::reference {

/// Position block Ω₊ = hopping_A(ω₀) + ω₁|X₃⟩⟨X₃|.
Operator omega_plus(double omega0, double omega1 = 1.0);
/// −Ω₊(−ω₀): the same hopping with −ω₁ in the corner.
Operator omega_minus(double omega0, double omega1 = 1.0);

/// Trigonometric roots of the Ω₊ characteristic cubic, in ω₁ = 1 units.
struct ClosedFormEigenvalues {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;

    std::array<double, 3> sorted() const;
};

ClosedFormEigenvalues lambda_eigenvalues(double omega0);

/// Normalized eigenvector of Ω₊(ω₀) for eigenvalue λ (ω₁ = 1 units).
Ket lambda_eigenvector(double lambda, double omega0);

/// 3×3 position block of e^{−iΩ₀t}, including the −1/3 prefactor.
Operator u0_closed_form(ModelId model, double omega0, double t);

/// Explicit model B solution; requires ω₀ = ω₁ = 1.
Ket psi_closed_form_b(const ModelParams& params, double t);

/// p(t) / |α + βe^{iφ}|² for model B at ω₀ = ω₁ = 1.
double model_b_f(double t);

struct ModelCFactors {
    Complex o12;
    Complex o34;
    Complex i12;
    Complex i34;
};

/// Time-dependent amplitudes of the model C solution at ω₀ = 2, ω₁ = 3.
ModelCFactors model_c_factors(double t);

/// Explicit model C solution; requires ω₀ = 2, ω₁ = 3.
Ket psi_closed_form_c(const ModelParams& params, double t);

/// ½(±2ω₀ ± ω₁ ± √(4ω₀² + ω₁²)), each doubled, ascending (16 values).
std::vector<double> model_c_eigenvalues(double omega0, double omega1);

struct ModulusIdentities {
    double lhs1, rhs1;  // |α cos 2t − i e^{iφ} β sin 2t|²
    double lhs2, rhs2;  // |e^{iφ} β cos 2t − i α sin 2t|²
};

ModulusIdentities modulus_identities(double alpha, double beta, double phi, double t);

/// Entrywise transcription of the tabulated Hamiltonians, built from the
/// symbolic entries (0, ±iω₀, ω₀, ω₁) rather than from Kronecker products.
Operator transcribed_hamiltonian(ModelId model, double omega0, double omega1);

}  // namespace timeslit::reference
