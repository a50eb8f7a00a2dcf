// hilbert.hpp: dense complex linear algebra over photon ⊗ atom ⊗ position spaces.
//
// Storage is dense row-major. Composite spaces are ordered (photon n, atom s,
// position j) with the first factor varying slowest, so the flat index of
// |n, s, X_j⟩ is n·2L + s·L + (j−1) with s encoded − → 0, + → 1.
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace timeslit {

using Complex = std::complex<double>;

inline constexpr double kStructuralTol = 1e-14;
inline constexpr double kSpectralTol = 1e-11;

/// Ordered tensor factor dimensions; the total dimension is their product.
class SpaceShape {
public:
    SpaceShape() = default;
    SpaceShape(std::initializer_list<std::size_t> dims);
    explicit SpaceShape(std::vector<std::size_t> dims);

    /// Photon qubit ⊗ atom qubit ⊗ `sites` positions.
    static SpaceShape composite(std::size_t sites);

    const std::vector<std::size_t>& factor_dims() const noexcept { return dims_; }
    std::size_t total_dim() const noexcept { return total_; }
    /// Number of position sites for a composite shape; throws otherwise.
    std::size_t sites() const;
    bool is_composite() const noexcept;

    bool operator==(const SpaceShape&) const = default;

private:
    std::vector<std::size_t> dims_;
    std::size_t total_ = 0;
};

enum class Level { Lower = 0, Upper = 1 };

struct BasisLabel {
    int n = 0;  // photon number, 0 or 1
    Level s = Level::Lower;
    int j = 1;  // position site, 1-based

    bool operator==(const BasisLabel&) const = default;
};

std::size_t basis_index(const SpaceShape& shape, const BasisLabel& label);
BasisLabel basis_label(const SpaceShape& shape, std::size_t index);

class Ket {
public:
    Ket() = default;
    explicit Ket(SpaceShape shape);
    Ket(SpaceShape shape, std::vector<Complex> amplitudes);

    static Ket basis(const SpaceShape& shape, std::size_t index);

    const SpaceShape& shape() const noexcept { return shape_; }
    std::size_t size() const noexcept { return amps_.size(); }

    Complex& operator[](std::size_t i) { return amps_[i]; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }
    Complex& operator[](const BasisLabel& l) { return amps_[basis_index(shape_, l)]; }
    const Complex& operator[](const BasisLabel& l) const { return amps_[basis_index(shape_, l)]; }

    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    std::span<Complex> amplitudes() noexcept { return amps_; }

    double norm() const;
    Complex inner(const Ket& other) const;  // ⟨this|other⟩

    Ket& operator+=(const Ket& other);
    Ket& operator-=(const Ket& other);
    Ket& operator*=(Complex c);

private:
    SpaceShape shape_;
    std::vector<Complex> amps_;
};

Ket operator+(Ket a, const Ket& b);
Ket operator-(Ket a, const Ket& b);
Ket operator*(Complex c, Ket k);

/// Largest componentwise modulus of a − b.
double max_abs_diff(const Ket& a, const Ket& b);

/// Dense square complex matrix. The shape is informational for composite
/// operators; factor operators carry a single-factor shape.
class Operator {
public:
    Operator() = default;
    explicit Operator(std::size_t dim);
    explicit Operator(SpaceShape shape);
    Operator(std::size_t dim, std::initializer_list<Complex> row_major);

    static Operator identity(std::size_t dim);
    static Operator diagonal(std::span<const Complex> values);
    static Operator diagonal(std::initializer_list<Complex> values);

    std::size_t dim() const noexcept { return dim_; }
    const SpaceShape& shape() const noexcept { return shape_; }
    Operator& with_shape(SpaceShape shape);

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    Operator& operator+=(const Operator& other);
    Operator& operator-=(const Operator& other);
    Operator& operator*=(Complex c);

    Ket apply(const Ket& ket) const;
    double max_abs() const;

private:
    std::size_t dim_ = 0;
    SpaceShape shape_;
    std::vector<Complex> data_;
};

Operator operator+(Operator a, const Operator& b);
Operator operator-(Operator a, const Operator& b);
Operator operator*(Complex c, Operator a);
Operator operator*(const Operator& a, const Operator& b);
Ket operator*(const Operator& a, const Ket& k);

/// a ⊗ b with the first factor varying slowest.
Operator kron(const Operator& a, const Operator& b);
Operator dagger(const Operator& a);

double max_abs_diff(const Operator& a, const Operator& b);
bool is_hermitian(const Operator& a, double tol = kStructuralTol);
bool is_unitary(const Operator& a, double tol = kStructuralTol);
/// ‖ab − ba‖_max
double commutator_norm(const Operator& a, const Operator& b);

enum class Pauli { X, Z, Id };

Operator pauli(Pauli kind);
/// |X_j⟩⟨X_j| on `sites` positions, j is 1-based.
Operator projector(int j, std::size_t sites);

}  // namespace timeslit
