// models.hpp: Hamiltonians and initial states of the three toy emitters.
//
//   A: three sites, free part is a rotation generator about (1,1,1), emission at X₃
//   B: three sites, symmetric nearest-neighbour hopping, emission at X₃
//   C: four-site ring, emission at X₃ or X₄
//
// Frequencies are in arbitrary consistent units; time is in inverse units.
#pragma once

#include <optional>
#include <string_view>

#include "timeslit/hilbert.hpp"

namespace timeslit {

enum class ModelId { A, B, C };

std::string_view to_string(ModelId id);
std::optional<ModelId> parse_model_id(std::string_view text);

/// Number of center-of-mass sites for a model.
std::size_t site_count(ModelId id);
SpaceShape model_shape(ModelId id);

inline constexpr double kNormalizationTol = 1e-12;

struct ModelParams {
    ModelId model = ModelId::A;
    double omega0 = 1.0;  // hopping frequency
    double omega1 = 1.0;  // emission coupling
    double alpha = 1.0;   // amplitude at X₁
    double beta = 0.0;    // amplitude at X₂
    double phi = 0.0;     // relative phase of the X₂ peak

    /// Throws InputError unless ω₀ > 0, ω₁ ≥ 0, α² + β² = 1.
    void validate() const;
};

/// ω₀ times the position-space hopping generator for `model`.
Operator position_hopping(ModelId model, double omega0);

Operator free_hamiltonian(ModelId model, double omega0);
Operator interaction_hamiltonian(ModelId model, double omega1);
Operator total_hamiltonian(const ModelParams& params);

/// |0⟩ ⊗ (α|+, X₁⟩ + β e^{iφ}|+, X₂⟩)
Ket initial_state(const ModelParams& params);

/// Period of free propagation. Only models A and B have a single cycle.
double free_period(ModelId model, double omega0);

/// σ_z ⊗ σ_z ⊗ I, the conserved excitation parity.
Operator excitation_parity(ModelId model);

}  // namespace timeslit
