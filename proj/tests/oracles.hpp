// oracles.hpp: test-only reference computations that share no code path with
// the eigensolver-based engine.
#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "timeslit/hilbert.hpp"

namespace timeslit::testing {

/// e^{−iHt} by scaling and squaring around a truncated Taylor series.
inline Operator taylor_propagator(const Operator& h, double t) {
    const auto n = h.dim();
    Operator a = Complex{0.0, -t} * h;
    int squarings = 0;
    double norm = a.max_abs() * static_cast<double>(n);
    while (norm > 0.25) {
        norm /= 2.0;
        ++squarings;
    }
    a *= Complex{std::ldexp(1.0, -squarings)};

    Operator sum = Operator::identity(n);
    Operator term = Operator::identity(n);
    for (int k = 1; k <= 30; ++k) {
        term = a * term;
        term *= Complex{1.0 / k};
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

/// Cofactor expansion; fine for the 3×3 blocks it is used on.
inline Complex determinant3(const Operator& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

inline Operator random_operator(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> gauss;
    Operator m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex{gauss(rng), gauss(rng)};
    }
    return m;
}

inline Operator random_hermitian(std::mt19937_64& rng, std::size_t dim) {
    const Operator m = random_operator(rng, dim);
    Operator h = m + dagger(m);
    h *= Complex{0.5};
    return h;
}

}  // namespace timeslit::testing
