#include "netcrit/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "netcrit/criticality.hpp"

namespace netcrit {

double node_power(std::size_t n, int r, const PowerModel& model) {
    if (n < 1) throw SpecError("node count must be >= 1");
    if (r < 1) throw RadiusOutOfRangeError("neighbor radius must be >= 1");
    return std::pow(static_cast<double>(r) / std::sqrt(static_cast<double>(n)), model.alpha);
}

OptimizationResult solve(const OptimizationProblem& problem) {
    const auto& dims = problem.topology.dims;
    if (dims.empty()) throw SpecError("optimization needs a topology");
    const int min_k = *std::min_element(dims.begin(), dims.end());
    const int r_bound = (min_k - 1) / 2;
    if (problem.r_max < 1) throw SpecError("r_max must be >= 1");
    if (problem.r_max > r_bound)
        throw SpecError("r_max " + std::to_string(problem.r_max) + " exceeds the topology bound " +
                        std::to_string(r_bound));

    const std::size_t n = problem.topology.node_count();
    OptimizationResult result;
    result.frontier.reserve(static_cast<std::size_t>(problem.r_max));

    for (int r = 1; r <= problem.r_max; ++r) {
        TopologySpec at_r = problem.topology;
        at_r.radius = r;
        const double tau = problem.topology.kind == TopologyKind::cycle
                               ? tau_cycle_closed_form(dims.front(), r).tau
                               : tau_torus_closed_form(at_r).tau;
        const double power = node_power(n, r, problem.power);
        const bool feasible = problem.mode == OptimizeMode::min_tau ? power <= problem.p_max
                                                                    : tau <= problem.tau_max;
        result.frontier.push_back({r, tau, power, feasible});
    }

    // exhaustive scan; strict improvement keeps the smallest r on ties
    for (const FrontierPoint& point : result.frontier) {
        if (!point.feasible) continue;
        const double objective = problem.mode == OptimizeMode::min_tau ? point.tau : point.power;
        const double best = problem.mode == OptimizeMode::min_tau ? result.tau_at_r : result.power_at_r;
        if (!result.feasible || objective < best) {
            result.feasible = true;
            result.r_star = point.r;
            result.tau_at_r = point.tau;
            result.power_at_r = point.power;
        }
    }
    return result;
}

}  // namespace netcrit
