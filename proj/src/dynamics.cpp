// dynamics.cpp: Jacobi eigensolver, propagators, RK4, block decomposition.
#include "timeslit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "timeslit/errors.hpp"

namespace timeslit {

namespace {

constexpr double kHermitianInputTol = 1e-12;
constexpr double kOffBlockTol = 1e-10;

double off_diagonal_frobenius(const Operator& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) s += std::norm(a(i, j));
        }
    }
    return std::sqrt(s);
}

double frobenius(const Operator& a) {
    double s = 0.0;
    for (const auto& x : a.entries()) s += std::norm(x);
    return std::sqrt(s);
}

// Annihilates a(p,q) with a unitary acting on columns/rows p, q.
void jacobi_rotate(Operator& a, Operator& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double g = std::abs(apq);
    if (g == 0.0) return;
    const Complex phase = apq / g;  // e^{iθ}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * g);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // J = D·R with D = diag(1, e^{−iθ}) on (p, q) and R the real rotation.
    const Complex jpp = c;
    const Complex jpq = s;
    const Complex jqp = -s * std::conj(phase);
    const Complex jqq = c * std::conj(phase);

    const auto n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {  // A ← A·J
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    for (std::size_t k = 0; k < n; ++k) {  // A ← J†·A
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {  // V ← V·J
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
}

// Modified Gram–Schmidt on columns [first, last) in index order.
void orthonormalize_columns(Operator& v, std::size_t first, std::size_t last) {
    const auto n = v.dim();
    for (std::size_t c = first; c < last; ++c) {
        for (std::size_t prev = first; prev < c; ++prev) {
            Complex proj{};
            for (std::size_t r = 0; r < n; ++r) proj += std::conj(v(r, prev)) * v(r, c);
            for (std::size_t r = 0; r < n; ++r) v(r, c) -= proj * v(r, prev);
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < n; ++r) nrm += std::norm(v(r, c));
        nrm = std::sqrt(nrm);
        for (std::size_t r = 0; r < n; ++r) v(r, c) /= nrm;
    }
}

void check_times(std::span<const double> times) {
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!std::isfinite(times[k])) throw InputError("time grid contains a non-finite value");
        if (k > 0 && times[k] < times[k - 1]) throw InputError("time grid must be ascending");
    }
}

Ket rk4_step(const Operator& h, const Ket& psi, double dt) {
    constexpr Complex kMinusI{0.0, -1.0};
    const Ket k1 = kMinusI * h.apply(psi);
    const Ket k2 = kMinusI * h.apply(psi + Complex{dt / 2} * k1);
    const Ket k3 = kMinusI * h.apply(psi + Complex{dt / 2} * k2);
    const Ket k4 = kMinusI * h.apply(psi + Complex{dt} * k3);
    Ket incr = k1 + Complex{2.0} * k2 + Complex{2.0} * k3 + k4;
    return psi + Complex{dt / 6.0} * std::move(incr);
}

}  // namespace

Operator EigenSystem::reconstruct() const {
    std::vector<Complex> diag(values.begin(), values.end());
    return vectors * Operator::diagonal(diag) * dagger(vectors);
}

EigenSystem eigendecompose_hermitian(const Operator& h, const JacobiOptions& opts) {
    if (!is_hermitian(h, kHermitianInputTol)) {
        throw InputError("eigendecompose_hermitian: operator is not Hermitian");
    }
    const auto n = h.dim();
    Operator a = h;
    Operator v = Operator::identity(n);
    const double scale = std::max(1.0, frobenius(h));

    int sweep = 0;
    while (off_diagonal_frobenius(a) > opts.off_threshold * scale) {
        if (sweep++ >= opts.max_sweeps) {
            throw NumericError("eigendecompose_hermitian: no convergence after " +
                               std::to_string(opts.max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });

    EigenSystem eig;
    eig.values.resize(n);
    eig.vectors = Operator(n);
    eig.vectors.with_shape(h.shape());
    for (std::size_t k = 0; k < n; ++k) {
        eig.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) eig.vectors(r, k) = v(r, order[k]);
    }

    for (std::size_t first = 0; first < n;) {
        std::size_t last = first + 1;
        while (last < n && eig.values[last] - eig.values[last - 1] < opts.degeneracy_gap) ++last;
        if (last - first > 1) orthonormalize_columns(eig.vectors, first, last);
        first = last;
    }
    return eig;
}

Operator propagator(const EigenSystem& eig, double t) {
    const auto n = eig.values.size();
    Operator u(n);
    u.with_shape(eig.vectors.shape());
    std::vector<Complex> phases(n);
    for (std::size_t k = 0; k < n; ++k) phases[k] = std::polar(1.0, -eig.values[k] * t);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s{};
            for (std::size_t k = 0; k < n; ++k) {
                s += eig.vectors(i, k) * phases[k] * std::conj(eig.vectors(j, k));
            }
            u(i, j) = s;
        }
    }
    return u;
}

Operator propagator(const Operator& h, double t) {
    return propagator(eigendecompose_hermitian(h), t);
}

Trajectory evolve(const EigenSystem& eig, const Ket& psi0, std::span<const double> times) {
    if (eig.values.size() != psi0.size()) {
        throw InputError("evolve: state dimension " + std::to_string(psi0.size()) +
                         " does not match operator dimension " +
                         std::to_string(eig.values.size()));
    }
    check_times(times);
    const auto n = psi0.size();

    // Work in the eigenbasis: c = U†ψ₀, ψ(t) = U·e^{−iλt}·c.
    std::vector<Complex> coeffs(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex s{};
        for (std::size_t r = 0; r < n; ++r) s += std::conj(eig.vectors(r, k)) * psi0[r];
        coeffs[k] = s;
    }

    Trajectory traj;
    traj.method = Method::Spectral;
    traj.times.assign(times.begin(), times.end());
    traj.states.reserve(times.size());
    for (double t : times) {
        Ket psi(psi0.shape());
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ck = coeffs[k] * std::polar(1.0, -eig.values[k] * t);
            for (std::size_t r = 0; r < n; ++r) psi[r] += eig.vectors(r, k) * ck;
        }
        traj.max_norm_drift = std::max(traj.max_norm_drift, std::abs(psi.norm() - 1.0));
        traj.states.push_back(std::move(psi));
    }
    return traj;
}

Trajectory evolve(const Operator& h, const Ket& psi0, std::span<const double> times) {
    if (h.dim() != psi0.size()) {
        throw InputError("evolve: state dimension " + std::to_string(psi0.size()) +
                         " does not match operator dimension " + std::to_string(h.dim()));
    }
    return evolve(eigendecompose_hermitian(h), psi0, times);
}

Trajectory evolve_rk4(const Operator& h, const Ket& psi0, std::span<const double> times,
                      double dt) {
    if (h.dim() != psi0.size()) {
        throw InputError("evolve_rk4: state dimension " + std::to_string(psi0.size()) +
                         " does not match operator dimension " + std::to_string(h.dim()));
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InputError("evolve_rk4: dt must be positive");
    check_times(times);

    Trajectory traj;
    traj.method = Method::Rk4;
    traj.times.assign(times.begin(), times.end());
    traj.states.reserve(times.size());

    Ket psi = psi0;
    double now = 0.0;
    for (double target : times) {
        const double span = target - now;
        if (span < 0.0) throw InputError("evolve_rk4: grid must start at or after t = 0");
        const auto whole = static_cast<long long>(std::floor(span / dt));
        for (long long s = 0; s < whole; ++s) psi = rk4_step(h, psi, dt);
        const double rest = span - static_cast<double>(whole) * dt;
        if (rest > 1e-15 * std::max(1.0, std::abs(target))) psi = rk4_step(h, psi, rest);
        now = target;
        traj.max_norm_drift = std::max(traj.max_norm_drift, std::abs(psi.norm() - 1.0));
        traj.states.push_back(psi);
    }
    traj.drift_warning = traj.max_norm_drift > kRk4DriftWarning;
    return traj;
}

Operator sigma_x_diagonalizer() {
    const double r = 1.0 / std::sqrt(2.0);
    return Operator(2, {r, r, r, -r});
}

Operator BlockDecomposition::propagator(double t) const {
    const auto L = blocks[0].dim();
    Operator diag(w.dim());
    diag.with_shape(w.shape());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const Operator ub = timeslit::propagator(blocks[b], t);
        for (std::size_t i = 0; i < L; ++i) {
            for (std::size_t j = 0; j < L; ++j) diag(b * L + i, b * L + j) = ub(i, j);
        }
    }
    return dagger(w) * diag * w;
}

BlockDecomposition block_diagonalize(const Operator& omega, const SpaceShape& shape) {
    const auto L = shape.sites();
    if (omega.dim() != shape.total_dim()) {
        throw InputError("block_diagonalize: operator dimension does not match shape");
    }
    const Operator v = sigma_x_diagonalizer();
    BlockDecomposition out;
    out.w = kron(v, kron(v, Operator::identity(L)));
    const Operator rotated = out.w * omega * dagger(out.w);

    double residual = 0.0;
    for (std::size_t i = 0; i < rotated.dim(); ++i) {
        for (std::size_t j = 0; j < rotated.dim(); ++j) {
            if (i / L != j / L) residual = std::max(residual, std::abs(rotated(i, j)));
        }
    }
    out.off_block_residual = residual;
    if (residual > kOffBlockTol) {
        throw StructuralError("block_diagonalize: off-block residual " + std::to_string(residual) +
                              " exceeds tolerance");
    }
    for (std::size_t b = 0; b < 4; ++b) {
        Operator blk(L);
        for (std::size_t i = 0; i < L; ++i) {
            for (std::size_t j = 0; j < L; ++j) blk(i, j) = rotated(b * L + i, b * L + j);
        }
        out.blocks[b] = std::move(blk);
    }
    return out;
}

}  // namespace timeslit
