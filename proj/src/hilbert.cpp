// hilbert.cpp: dense complex vectors and matrices, Kronecker products.
#include "timeslit/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "timeslit/errors.hpp"

namespace timeslit {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// SpaceShape

SpaceShape::SpaceShape(std::initializer_list<std::size_t> dims)
    : SpaceShape(std::vector<std::size_t>(dims)) {}

SpaceShape::SpaceShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw InputError("SpaceShape: no factors");
    for (auto d : dims_) {
        if (d == 0) throw InputError("SpaceShape: zero-dimensional factor");
    }
    total_ = product(dims_);
}

SpaceShape SpaceShape::composite(std::size_t sites) { return SpaceShape{2, 2, sites}; }

bool SpaceShape::is_composite() const noexcept {
    return dims_.size() == 3 && dims_[0] == 2 && dims_[1] == 2;
}

std::size_t SpaceShape::sites() const {
    if (!is_composite()) throw InputError("SpaceShape: not a photon ⊗ atom ⊗ position shape");
    return dims_[2];
}

std::size_t basis_index(const SpaceShape& shape, const BasisLabel& label) {
    const auto sites = shape.sites();
    if (label.n != 0 && label.n != 1) {
        throw InputError("basis_index: photon number must be 0 or 1");
    }
    if (label.s != Level::Lower && label.s != Level::Upper) {
        throw InputError("basis_index: bad atom level");
    }
    if (label.j < 1 || static_cast<std::size_t>(label.j) > sites) {
        throw InputError("basis_index: position " + std::to_string(label.j) + " outside 1.." +
                         std::to_string(sites));
    }
    return static_cast<std::size_t>(label.n) * 2 * sites +
           static_cast<std::size_t>(label.s) * sites + static_cast<std::size_t>(label.j - 1);
}

BasisLabel basis_label(const SpaceShape& shape, std::size_t index) {
    const auto sites = shape.sites();
    if (index >= shape.total_dim()) throw InputError("basis_label: index out of range");
    BasisLabel l;
    l.n = static_cast<int>(index / (2 * sites));
    l.s = static_cast<Level>((index / sites) % 2);
    l.j = static_cast<int>(index % sites) + 1;
    return l;
}

// ---------------------------------------------------------------------------
// Ket

Ket::Ket(SpaceShape shape) : shape_(std::move(shape)), amps_(shape_.total_dim()) {}

Ket::Ket(SpaceShape shape, std::vector<Complex> amplitudes)
    : shape_(std::move(shape)), amps_(std::move(amplitudes)) {
    require_same_dim(amps_.size(), shape_.total_dim(), "Ket");
}

Ket Ket::basis(const SpaceShape& shape, std::size_t index) {
    Ket k(shape);
    if (index >= k.size()) throw InputError("Ket::basis: index out of range");
    k.amps_[index] = 1.0;
    return k;
}

double Ket::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

Complex Ket::inner(const Ket& other) const {
    require_same_dim(size(), other.size(), "Ket::inner");
    Complex s{};
    for (std::size_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
    return s;
}

Ket& Ket::operator+=(const Ket& other) {
    require_same_dim(size(), other.size(), "Ket +");
    for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += other.amps_[i];
    return *this;
}

Ket& Ket::operator-=(const Ket& other) {
    require_same_dim(size(), other.size(), "Ket -");
    for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] -= other.amps_[i];
    return *this;
}

Ket& Ket::operator*=(Complex c) {
    for (auto& a : amps_) a *= c;
    return *this;
}

Ket operator+(Ket a, const Ket& b) { return a += b; }
Ket operator-(Ket a, const Ket& b) { return a -= b; }
Ket operator*(Complex c, Ket k) { return k *= c; }

double max_abs_diff(const Ket& a, const Ket& b) {
    require_same_dim(a.size(), b.size(), "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(std::size_t dim) : dim_(dim), shape_{dim}, data_(dim * dim) {}

Operator::Operator(SpaceShape shape)
    : dim_(shape.total_dim()), shape_(std::move(shape)), data_(dim_ * dim_) {}

Operator::Operator(std::size_t dim, std::initializer_list<Complex> row_major) : Operator(dim) {
    require_same_dim(row_major.size(), dim * dim, "Operator");
    std::copy(row_major.begin(), row_major.end(), data_.begin());
}

Operator Operator::identity(std::size_t dim) {
    Operator m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Operator Operator::diagonal(std::span<const Complex> values) {
    Operator m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Operator Operator::diagonal(std::initializer_list<Complex> values) {
    return diagonal(std::span<const Complex>(values.begin(), values.size()));
}

Operator& Operator::with_shape(SpaceShape shape) {
    require_same_dim(shape.total_dim(), dim_, "Operator::with_shape");
    shape_ = std::move(shape);
    return *this;
}

Operator& Operator::operator+=(const Operator& other) {
    require_same_dim(dim_, other.dim_, "Operator +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Operator& Operator::operator-=(const Operator& other) {
    require_same_dim(dim_, other.dim_, "Operator -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Operator& Operator::operator*=(Complex c) {
    for (auto& x : data_) x *= c;
    return *this;
}

Ket Operator::apply(const Ket& ket) const {
    require_same_dim(dim_, ket.size(), "Operator::apply");
    Ket out(ket.shape());
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex s{};
        for (std::size_t c = 0; c < dim_; ++c) s += (*this)(r, c) * ket[c];
        out[r] = s;
    }
    return out;
}

double Operator::max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, std::abs(x));
    return m;
}

Operator operator+(Operator a, const Operator& b) { return a += b; }
Operator operator-(Operator a, const Operator& b) { return a -= b; }
Operator operator*(Complex c, Operator a) { return a *= c; }

Operator operator*(const Operator& a, const Operator& b) {
    require_same_dim(a.dim(), b.dim(), "Operator *");
    const auto n = a.dim();
    Operator out(n);
    if (a.shape() == b.shape()) out.with_shape(a.shape());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Ket operator*(const Operator& a, const Ket& k) { return a.apply(k); }

Operator kron(const Operator& a, const Operator& b) {
    const auto da = a.dim();
    const auto db = b.dim();
    std::vector<std::size_t> dims = a.shape().factor_dims();
    const auto& bd = b.shape().factor_dims();
    dims.insert(dims.end(), bd.begin(), bd.end());
    Operator out{SpaceShape(std::move(dims))};
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
            }
        }
    }
    return out;
}

Operator dagger(const Operator& a) {
    Operator out(a.dim());
    out.with_shape(a.shape());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
    }
    return out;
}

double max_abs_diff(const Operator& a, const Operator& b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    }
    return m;
}

bool is_hermitian(const Operator& a, double tol) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
        }
    }
    return true;
}

bool is_unitary(const Operator& a, double tol) {
    return max_abs_diff(dagger(a) * a, Operator::identity(a.dim())) <= tol;
}

double commutator_norm(const Operator& a, const Operator& b) { return (a * b - b * a).max_abs(); }

Operator pauli(Pauli kind) {
    switch (kind) {
        case Pauli::X:
            return Operator(2, {0.0, 1.0, 1.0, 0.0});
        case Pauli::Z:
            return Operator(2, {1.0, 0.0, 0.0, -1.0});
        case Pauli::Id:
            return Operator::identity(2);
    }
    throw InputError("pauli: unknown kind");
}

Operator projector(int j, std::size_t sites) {
    if (j < 1 || static_cast<std::size_t>(j) > sites) {
        throw InputError("projector: site " + std::to_string(j) + " outside 1.." +
                         std::to_string(sites));
    }
    Operator p(sites);
    p(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j - 1)) = 1.0;
    return p;
}

}  // namespace timeslit
