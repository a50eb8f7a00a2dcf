// reference.cpp: closed-form oracles.
#include "timeslit/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "timeslit/errors.hpp"

namespace timeslit::reference {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;

void require_point(const ModelParams& params, ModelId model, double omega0, double omega1,
                   const char* fn) {
    if (params.model != model || params.omega0 != omega0 || params.omega1 != omega1) {
        throw UnsupportedError(std::string(fn) + ": closed form exists only for model " +
                               std::string(to_string(model)) + " at omega0 = " +
                               std::to_string(omega0) + ", omega1 = " + std::to_string(omega1));
    }
}

// Row-major symbol tables, one character per entry:
//   0 zero, o ω₀, i iω₀, j −iω₀, w ω₁
constexpr std::string_view kTableA =
    "0ij000000000"
    "j0i000000000"
    "ij000000000w"
    "0000ij000000"
    "000j0i000000"
    "000ij000w000"
    "0000000ij000"
    "000000j0i000"
    "00000wij0000"
    "0000000000ij"
    "000000000j0i"
    "00w000000ij0";

constexpr std::string_view kTableB =
    "0oo000000000"
    "o0o000000000"
    "oo000000000w"
    "0000oo000000"
    "000o0o000000"
    "000oo000w000"
    "0000000oo000"
    "000000o0o000"
    "00000woo0000"
    "0000000000oo"
    "000000000o0o"
    "00w000000oo0";

constexpr std::string_view kTableC =
    "0o0o000000000000"
    "o0o0000000000000"
    "0o0o0000000000w0"
    "o0o000000000000w"
    "00000o0o00000000"
    "0000o0o000000000"
    "00000o0o00w00000"
    "0000o0o0000w0000"
    "000000000o0o0000"
    "00000000o0o00000"
    "000000w00o0o0000"
    "0000000wo0o00000"
    "0000000000000o0o"
    "000000000000o0o0"
    "00w0000000000o0o"
    "000w00000000o0o0";

}  // namespace

Operator omega_plus(double omega0, double omega1) {
    Operator m = position_hopping(ModelId::A, omega0);
    m(2, 2) = omega1;
    return m;
}

Operator omega_minus(double omega0, double omega1) {
    return Complex{-1.0} * omega_plus(-omega0, omega1);
}

std::array<double, 3> ClosedFormEigenvalues::sorted() const {
    std::array<double, 3> v{lambda1, lambda2, lambda3};
    std::sort(v.begin(), v.end());
    return v;
}

ClosedFormEigenvalues lambda_eigenvalues(double omega0) {
    const double q = 9.0 * omega0 * omega0 + 1.0;
    const double root = std::sqrt(q);
    // Principal branches: the radicand is negative for ω₀ > 0, so the square
    // root is purely imaginary and the argument lies in [0, π/2).
    const Complex inner = std::sqrt(Complex{4.0 - 4.0 * q * q * q, 0.0}) + 2.0;
    const double theta = std::arg(inner) / 3.0;
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    ClosedFormEigenvalues ev;
    ev.lambda1 = 1.0 / 3.0 + 2.0 / 3.0 * root * c;
    ev.lambda2 = 1.0 / 3.0 - root * c / 3.0 - s * root / kSqrt3;
    ev.lambda3 = 1.0 / 3.0 - root * c / 3.0 + s * root / kSqrt3;
    return ev;
}

Ket lambda_eigenvector(double lambda, double omega0) {
    if (omega0 == 0.0) {
        throw InputError("lambda_eigenvector: omega0 = 0 gives a degenerate formula");
    }
    const double w2 = omega0 * omega0;
    const double norm = std::sqrt(lambda * lambda * lambda * lambda + 3.0 * w2 * w2);
    std::vector<Complex> v{
        (-w2 - kI * lambda * omega0) / norm,
        (kI * lambda * omega0 - w2) / norm,
        Complex{lambda * lambda - w2} / norm,
    };
    return Ket(SpaceShape{3}, std::move(v));
}

Operator u0_closed_form(ModelId model, double omega0, double t) {
    if (!(omega0 > 0.0)) throw InputError("u0_closed_form: omega0 must be positive");
    Operator m(3);
    switch (model) {
        case ModelId::A: {
            const double x = 2.0 * std::numbers::pi * t / free_period(ModelId::A, omega0);
            const double c = std::cos(x);
            const double s = std::sin(x);
            const Complex diag = -2.0 * c - 1.0;
            const Complex minus = c - kSqrt3 * s - 1.0;
            const Complex plus = c + kSqrt3 * s - 1.0;
            m = Operator(3, {diag, minus, plus, plus, diag, minus, minus, plus, diag});
            break;
        }
        case ModelId::B: {
            const Complex diag = -2.0 * std::exp(kI * t * omega0) - std::exp(-2.0 * kI * t * omega0);
            const Complex off = std::exp(-2.0 * kI * t * omega0) * (-1.0 + std::exp(3.0 * kI * t * omega0));
            m = Operator(3, {diag, off, off, off, diag, off, off, off, diag});
            break;
        }
        case ModelId::C:
            throw UnsupportedError("u0_closed_form: no closed form for model C");
    }
    return Complex{-1.0 / 3.0} * m;
}

Ket psi_closed_form_b(const ModelParams& params, double t) {
    require_point(params, ModelId::B, 1.0, 1.0, "psi_closed_form_b");
    const double a = params.alpha;
    const double b = params.beta;
    const Complex e = std::polar(1.0, params.phi);

    const Complex pattern = 0.5 * std::exp(kI * t) * (a - e * b);
    const Complex weight = (a + e * b) / 12.0;
    const Complex decay = std::exp(-kI * t);
    const double c2 = std::cos(kSqrt2 * t);
    const double s2 = std::sin(kSqrt2 * t);
    const double c3 = std::cos(kSqrt3 * t);
    const double s3 = std::sin(kSqrt3 * t);

    const Complex upper = 3.0 * decay * c2 + 3.0 * c3 - kI * kSqrt3 * s3;
    const Complex upper_zone = -kI * (3.0 * kSqrt2 * decay * s2 + 2.0 * kSqrt3 * s3);
    const Complex emitted = 3.0 * decay * c2 - 3.0 * c3 + kI * kSqrt3 * s3;
    const Complex emitted_zone = -kI * (3.0 * kSqrt2 * decay * s2 - 2.0 * kSqrt3 * s3);

    Ket psi(model_shape(ModelId::B));
    psi[3] = pattern + weight * upper;
    psi[4] = -pattern + weight * upper;
    psi[5] = weight * upper_zone;
    psi[6] = weight * emitted;
    psi[7] = weight * emitted;
    psi[8] = weight * emitted_zone;
    return psi;
}

double model_b_f(double t) {
    // With α = 1, β = 0 the common factor |α + βe^{iφ}|² is 1.
    const Ket psi = psi_closed_form_b(ModelParams{ModelId::B, 1.0, 1.0, 1.0, 0.0, 0.0}, t);
    return std::norm(psi[6]) + std::norm(psi[7]) + std::norm(psi[8]);
}

ModelCFactors model_c_factors(double t) {
    const double g = 6.0 * std::cos(t / 2) + 3.0 * std::cos(1.5 * t) + std::cos(2.5 * t);
    const double sh = std::sin(t / 2);
    const double h = 6.0 * std::cos(t) + 4.0 * std::cos(2 * t) + 2.0 * std::cos(3 * t) + 3.0;

    ModelCFactors f;
    f.o12 = (4.0 * std::cos(t) + std::cos(4 * t)) / 5.0;
    f.o34 = -0.4 * kI * (std::sin(t) + std::sin(4 * t));
    f.i12 = 1.6 * kI * g * sh * sh * sh;
    f.i34 = -0.8 * h * sh * sh;
    return f;
}

Ket psi_closed_form_c(const ModelParams& params, double t) {
    require_point(params, ModelId::C, 2.0, 3.0, "psi_closed_form_c");
    const double a = params.alpha;
    const double b = params.beta;
    const Complex e = std::polar(1.0, params.phi);
    const double c2 = std::cos(2 * t);
    const double s2 = std::sin(2 * t);

    // Component-by-component form of the solution vector.
    const double outer = (4.0 * std::cos(t) + std::cos(4 * t)) / 5.0;
    const double hop = std::sin(t) + std::sin(4 * t);
    const double sh = std::sin(t / 2);
    const double g = 1.6 * (6.0 * std::cos(t / 2) + 3.0 * std::cos(1.5 * t) + std::cos(2.5 * t)) *
                     sh * sh * sh;
    const double h = 0.8 * (6.0 * std::cos(t) + 4.0 * std::cos(2 * t) + 2.0 * std::cos(3 * t) + 3.0) *
                     sh * sh;

    Ket psi(model_shape(ModelId::C));
    psi[4] = outer * (a * c2 - kI * e * b * s2);
    psi[5] = outer * (e * b * c2 - kI * a * s2);
    psi[6] = -0.4 * kI * (e * b * c2 - kI * a * s2) * hop;
    psi[7] = -0.4 * kI * (a * c2 - kI * e * b * s2) * hop;
    psi[8] = g * (kI * a * c2 + e * b * s2);
    psi[9] = g * (kI * e * b * c2 + a * s2);
    psi[10] = h * (kI * a * s2 - e * b * c2);
    psi[11] = h * (kI * e * b * s2 - a * c2);
    return psi;
}

std::vector<double> model_c_eigenvalues(double omega0, double omega1) {
    const double root = std::sqrt(4.0 * omega0 * omega0 + omega1 * omega1);
    std::vector<double> values;
    values.reserve(16);
    for (double s0 : {1.0, -1.0}) {
        for (double s1 : {1.0, -1.0}) {
            for (double s2 : {1.0, -1.0}) {
                const double v = 0.5 * (s0 * 2.0 * omega0 + s1 * omega1 + s2 * root);
                values.push_back(v);
                values.push_back(v);
            }
        }
    }
    std::sort(values.begin(), values.end());
    return values;
}

ModulusIdentities modulus_identities(double alpha, double beta, double phi, double t) {
    const Complex e = std::polar(1.0, phi);
    const double c2 = std::cos(2 * t);
    const double s2 = std::sin(2 * t);
    const double cross = alpha * beta * std::sin(4 * t) * std::sin(phi);

    ModulusIdentities m;
    m.lhs1 = std::norm(alpha * c2 - kI * e * beta * s2);
    m.rhs1 = alpha * alpha * c2 * c2 + beta * beta * s2 * s2 + cross;
    m.lhs2 = std::norm(e * beta * c2 - kI * alpha * s2);
    m.rhs2 = alpha * alpha * s2 * s2 + beta * beta * c2 * c2 - cross;
    return m;
}

Operator transcribed_hamiltonian(ModelId model, double omega0, double omega1) {
    std::string_view table;
    switch (model) {
        case ModelId::A:
            table = kTableA;
            break;
        case ModelId::B:
            table = kTableB;
            break;
        case ModelId::C:
            table = kTableC;
            break;
    }
    const auto n = model_shape(model).total_dim();
    Operator m(model_shape(model));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            switch (table[r * n + c]) {
                case 'o':
                    m(r, c) = omega0;
                    break;
                case 'i':
                    m(r, c) = kI * omega0;
                    break;
                case 'j':
                    m(r, c) = -kI * omega0;
                    break;
                case 'w':
                    m(r, c) = omega1;
                    break;
                default:
                    break;
            }
        }
    }
    return m;
}

}  // namespace timeslit::reference
