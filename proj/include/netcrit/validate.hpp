#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "netcrit/oracle.hpp"

namespace netcrit {

// Closed-form-vs-pseudoinverse comparison over the standard parameter grids.
// A point fails when the relative error (or, for complex-spectrum models,
// the imaginary residue) reaches 1e-9.
struct ValidationOutcome {
    std::string scope;
    std::size_t points = 0;
    double max_rel_err = 0.0;
    double max_imag_residue = 0.0;
    std::string worst_case;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// scope: cycle | torus | stochastic | asymmetric | all. cap bounds both the
// grid's node counts and the oracle size cap.
std::vector<ValidationOutcome> run_validation(std::string_view scope, std::size_t cap);

}  // namespace netcrit
