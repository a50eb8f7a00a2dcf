// models.cpp: Hamiltonian and initial-state builders.
#include "timeslit/models.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "timeslit/errors.hpp"

namespace timeslit {

namespace {

constexpr Complex kI{0.0, 1.0};

Operator on_position(const Operator& position_block) {
    return kron(pauli(Pauli::Id), kron(pauli(Pauli::Id), position_block));
}

}  // namespace

std::string_view to_string(ModelId id) {
    switch (id) {
        case ModelId::A:
            return "A";
        case ModelId::B:
            return "B";
        case ModelId::C:
            return "C";
    }
    return "?";
}

std::optional<ModelId> parse_model_id(std::string_view text) {
    if (text == "A" || text == "a") return ModelId::A;
    if (text == "B" || text == "b") return ModelId::B;
    if (text == "C" || text == "c") return ModelId::C;
    return std::nullopt;
}

std::size_t site_count(ModelId id) { return id == ModelId::C ? 4 : 3; }

SpaceShape model_shape(ModelId id) { return SpaceShape::composite(site_count(id)); }

void ModelParams::validate() const {
    if (!std::isfinite(omega0) || omega0 <= 0.0) {
        throw InputError("omega0 must be positive, got " + std::to_string(omega0));
    }
    if (!std::isfinite(omega1) || omega1 < 0.0) {
        throw InputError("omega1 must be non-negative, got " + std::to_string(omega1));
    }
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(phi)) {
        throw InputError("alpha, beta and phi must be finite");
    }
    const double n2 = alpha * alpha + beta * beta;
    if (std::abs(n2 - 1.0) > kNormalizationTol) {
        throw InputError("alpha^2 + beta^2 must equal 1, got " + std::to_string(n2));
    }
}

Operator position_hopping(ModelId model, double omega0) {
    const auto L = site_count(model);
    Operator h(L);
    switch (model) {
        case ModelId::A:
            // iω₀(|X₁⟩⟨X₂| + |X₂⟩⟨X₃| + |X₃⟩⟨X₁|) + H.c.
            for (std::size_t k = 0; k < L; ++k) {
                const auto next = (k + 1) % L;
                h(k, next) += kI * omega0;
                h(next, k) += -kI * omega0;
            }
            break;
        case ModelId::B:
        case ModelId::C:
            for (std::size_t k = 0; k < L; ++k) {
                const auto next = (k + 1) % L;
                h(k, next) += omega0;
                h(next, k) += omega0;
            }
            break;
    }
    return h;
}

Operator free_hamiltonian(ModelId model, double omega0) {
    return on_position(position_hopping(model, omega0));
}

Operator interaction_hamiltonian(ModelId model, double omega1) {
    const auto L = site_count(model);
    Operator zone = projector(3, L);
    if (model == ModelId::C) zone += projector(4, L);
    return kron(pauli(Pauli::X), kron(pauli(Pauli::X), Complex{omega1} * zone));
}

Operator total_hamiltonian(const ModelParams& params) {
    return free_hamiltonian(params.model, params.omega0) +
           interaction_hamiltonian(params.model, params.omega1);
}

Ket initial_state(const ModelParams& params) {
    params.validate();
    Ket psi(model_shape(params.model));
    psi[BasisLabel{0, Level::Upper, 1}] = params.alpha;
    psi[BasisLabel{0, Level::Upper, 2}] = params.beta * std::polar(1.0, params.phi);
    return psi;
}

double free_period(ModelId model, double omega0) {
    if (!(omega0 > 0.0)) throw InputError("free_period: omega0 must be positive");
    switch (model) {
        case ModelId::A:
            return 2.0 * std::numbers::pi / (std::numbers::sqrt3 * omega0);
        case ModelId::B:
            return 2.0 * std::numbers::pi / (3.0 * omega0);
        case ModelId::C:
            break;
    }
    throw UnsupportedError("free_period: model C has no single free cycle");
}

Operator excitation_parity(ModelId model) {
    return kron(pauli(Pauli::Z),
                kron(pauli(Pauli::Z), Operator::identity(site_count(model))));
}

}  // namespace timeslit
