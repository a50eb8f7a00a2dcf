// errors.hpp: exception types shared by all timeslit modules.
#pragma once

#include <stdexcept>
#include <string>

namespace timeslit {

/// Caller supplied something out of range or malformed.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine did not reach its accuracy target.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operator did not have the block structure an algorithm relies on.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed form was requested outside the parameter point it is valid for.
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The Youngian fit ansatz does not reproduce the sampled probabilities.
class FitViolation : public std::runtime_error {
public:
    FitViolation(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace timeslit
