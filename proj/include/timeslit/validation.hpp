// validation.hpp: closed-form versus numerical acceptance checks.
//
// Each check belongs to one numbered criterion; a criterion passes when all of
// its checks pass. The Hamiltonian builder is injectable so that mutation
// tests can confirm the checks actually detect a broken engine.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "timeslit/hilbert.hpp"
#include "timeslit/models.hpp"

namespace timeslit {

enum class Bound {
    AtMost,  // value ≤ threshold
    Above,   // value > threshold
};

struct Check {
    int criterion = 0;
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    Bound bound = Bound::AtMost;
    bool error_bound = true;  // subject to a tolerance override
    bool pass = false;
};

struct CriterionSummary {
    int criterion = 0;
    std::string title;
    bool pass = true;
    std::vector<const Check*> checks;
};

struct ValidationReport {
    std::vector<Check> checks;

    bool passed() const;
    std::vector<CriterionSummary> by_criterion() const;
};

using HamiltonianBuilder = std::function<Operator(const ModelParams&)>;

struct ValidationOptions {
    /// Replaces the threshold of every error-bound check when set.
    std::optional<double> tolerance;
    HamiltonianBuilder hamiltonian = total_hamiltonian;
};

std::string criterion_title(int criterion);

ValidationReport run_validation(const ValidationOptions& options = {});

/// Fixed-width table, one row per check, followed by an overall line.
std::string format_report(const ValidationReport& report);

}  // namespace timeslit
