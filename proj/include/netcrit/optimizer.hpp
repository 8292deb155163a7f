#pragma once

#include <vector>

#include "netcrit/types.hpp"

namespace netcrit {

// Transmit-power model P = (r / sqrt(n))^alpha per node.
struct PowerModel {
    double alpha = 2.0;

    explicit PowerModel(double alpha_ = 2.0) : alpha(alpha_) {
        if (alpha < 1.0) throw SpecError("path-loss exponent alpha must be >= 1");
    }
};

double node_power(std::size_t n, int r, const PowerModel& model);

enum class OptimizeMode { min_tau, min_power };

// Pick the integer neighbor radius r in [1, r_max]:
//   min_tau:   minimize tau subject to P(r) <= p_max
//   min_power: minimize P subject to tau(r) <= tau_max
// tau(r) is strictly decreasing and P(r) strictly increasing in r, so the
// optimum is the largest (min_tau) / smallest (min_power) feasible radius;
// the solver still scans exhaustively and reports the whole frontier.
struct OptimizationProblem {
    TopologySpec topology;  // radius field is ignored; r is the free variable
    OptimizeMode mode = OptimizeMode::min_tau;
    int r_max = 1;
    double p_max = 0.0;    // min_tau bound
    double tau_max = 0.0;  // min_power bound
    PowerModel power{2.0};
};

struct FrontierPoint {
    int r = 0;
    double tau = 0.0;
    double power = 0.0;
    bool feasible = false;
};

struct OptimizationResult {
    bool feasible = false;
    int r_star = 0;
    double tau_at_r = 0.0;
    double power_at_r = 0.0;
    std::vector<FrontierPoint> frontier;  // exactly r_max entries, r = 1..r_max
};

OptimizationResult solve(const OptimizationProblem& problem);

}  // namespace netcrit
