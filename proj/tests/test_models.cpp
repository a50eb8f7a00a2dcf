#include <doctest.h>

#include <cmath>
#include <numbers>

#include "timeslit/analysis.hpp"
#include "timeslit/dynamics.hpp"
#include "timeslit/errors.hpp"
#include "timeslit/models.hpp"
#include "timeslit/reference.hpp"

using namespace timeslit;

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kH = std::numbers::sqrt2 / 2.0;
}  // namespace

TEST_CASE("free Hamiltonian position blocks") {
    const Operator a = free_hamiltonian(ModelId::A, 1.0);
    CHECK(a(0, 0) == Complex{});
    CHECK(a(0, 1) == kI);
    CHECK(a(0, 2) == -kI);

    const Operator b = position_hopping(ModelId::B, 1.0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(b(i, j) == Complex{i == j ? 0.0 : 1.0});

    // Ring adjacency: each site couples to its two neighbours only.
    const Operator c = position_hopping(ModelId::C, 2.0);
    CHECK(c(0, 1) == Complex{2.0});
    CHECK(c(0, 3) == Complex{2.0});
    CHECK(c(0, 2) == Complex{});
    CHECK(c(1, 3) == Complex{});
}

TEST_CASE("total Hamiltonians equal the tabulated matrices") {
    CHECK(max_abs_diff(total_hamiltonian({ModelId::A, 1, 1, 1, 0, 0}),
                       reference::transcribed_hamiltonian(ModelId::A, 1, 1)) == 0.0);
    CHECK(max_abs_diff(total_hamiltonian({ModelId::B, 1, 1, 1, 0, 0}),
                       reference::transcribed_hamiltonian(ModelId::B, 1, 1)) == 0.0);
    CHECK(max_abs_diff(total_hamiltonian({ModelId::C, 2, 3, 1, 0, 0}),
                       reference::transcribed_hamiltonian(ModelId::C, 2, 3)) == 0.0);
    // Symbolic transcription must not depend on the parameter point.
    CHECK(max_abs_diff(total_hamiltonian({ModelId::A, 0.7, 2.5, 1, 0, 0}),
                       reference::transcribed_hamiltonian(ModelId::A, 0.7, 2.5)) == 0.0);
}

TEST_CASE("interaction Hamiltonian entries") {
    const Operator a = interaction_hamiltonian(ModelId::A, 1.0);
    int nonzero = 0;
    for (auto x : a.entries()) nonzero += x != Complex{};
    CHECK(nonzero == 4);
    CHECK(a(2, 11) == Complex{1.0});
    CHECK(a(5, 8) == Complex{1.0});

    CHECK(interaction_hamiltonian(ModelId::B, 0.0).max_abs() == 0.0);

    const Operator c = interaction_hamiltonian(ModelId::C, 3.0);
    nonzero = 0;
    for (auto x : c.entries()) {
        if (x != Complex{}) {
            ++nonzero;
            CHECK(x == Complex{3.0});
        }
    }
    CHECK(nonzero == 8);
    CHECK(c(2, 14) == Complex{3.0});
    CHECK(c(3, 15) == Complex{3.0});
    CHECK(c(6, 10) == Complex{3.0});
    CHECK(c(7, 11) == Complex{3.0});
}

TEST_CASE("Hamiltonians are Hermitian and conserve excitation parity") {
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        for (double w0 : {0.3, 1.0, 2.0}) {
            for (double w1 : {0.0, 1.0, 3.0}) {
                const Operator h = total_hamiltonian({m, w0, w1, 1, 0, 0});
                CHECK(is_hermitian(h, kStructuralTol));
                CHECK(commutator_norm(h, excitation_parity(m)) == 0.0);
            }
        }
    }
}

TEST_CASE("free Hamiltonian acts as identity on photon and atom") {
    for (ModelId m : {ModelId::A, ModelId::B, ModelId::C}) {
        const auto L = site_count(m);
        const Operator h0 = free_hamiltonian(m, 1.3);
        const Operator photon_number =
            kron(Operator::diagonal({0.0, 1.0}), kron(Operator::identity(2), Operator::identity(L)));
        const Operator level = kron(Operator::identity(2), kron(pauli(Pauli::Z), Operator::identity(L)));
        CHECK(commutator_norm(h0, photon_number) == 0.0);
        CHECK(commutator_norm(h0, level) == 0.0);
    }
}

TEST_CASE("zero coupling: total equals free and nothing is emitted") {
    for (ModelId m : {ModelId::A, ModelId::B}) {
        const ModelParams p{m, 1.0, 0.0, kH, kH, 0.4};
        CHECK(max_abs_diff(total_hamiltonian(p), free_hamiltonian(m, 1.0)) == 0.0);
        const std::vector<double> grid{0.0, 0.7, 3.1, 11.0};
        for (const auto& s : evolve(total_hamiltonian(p), initial_state(p), grid).states) {
            CHECK(emission_probability(s) == 0.0);
        }
    }
}

TEST_CASE("initial states") {
    const Ket e = initial_state({ModelId::A, 1, 1, 1.0, 0.0, 2.0});
    for (std::size_t i = 0; i < e.size(); ++i) CHECK(e[i] == Complex{i == 3 ? 1.0 : 0.0});

    const Ket odd = initial_state({ModelId::B, 1, 1, kH, kH, std::numbers::pi});
    CHECK(odd[3] == Complex{kH});
    CHECK(std::abs(odd[4] - Complex{-kH}) < 1e-16);
    CHECK(odd.norm() == doctest::Approx(1.0).epsilon(1e-15));

    const Ket c = initial_state({ModelId::C, 2, 3, kH, kH, 0.0});
    CHECK(c.size() == 16);
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK((c[i] != Complex{}) == (i == 4 || i == 5));
    }

    CHECK_THROWS_AS(initial_state({ModelId::A, 1, 1, 1.0, 1.0, 0.0}), InputError);
    CHECK_THROWS_AS(initial_state({ModelId::A, 0.0, 1, 1.0, 0.0, 0.0}), InputError);
    CHECK_THROWS_AS(initial_state({ModelId::A, 1, -1, 1.0, 0.0, 0.0}), InputError);
}

TEST_CASE("free periods") {
    CHECK(free_period(ModelId::A, 1.0) == doctest::Approx(2 * std::numbers::pi / std::sqrt(3.0)));
    CHECK(free_period(ModelId::B, 1.0) == doctest::Approx(2 * std::numbers::pi / 3.0));
    CHECK(free_period(ModelId::A, 2.0) == doctest::Approx(std::numbers::pi / std::sqrt(3.0)));
    CHECK_THROWS_AS(free_period(ModelId::C, 1.0), UnsupportedError);
    CHECK_THROWS_AS(free_period(ModelId::A, 0.0), InputError);
}

TEST_CASE("model id parsing") {
    CHECK(parse_model_id("A") == ModelId::A);
    CHECK(parse_model_id("c") == ModelId::C);
    CHECK_FALSE(parse_model_id("D").has_value());
    CHECK(to_string(ModelId::B) == "B");
}
