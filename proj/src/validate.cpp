#include "netcrit/validate.hpp"

#include <cmath>
#include <functional>

#include "netcrit/criticality.hpp"
#include "netcrit/format.hpp"
#include "netcrit/parallel.hpp"
#include "netcrit/stochastic.hpp"

namespace netcrit {

namespace {

constexpr double kGate = 1e-9;

struct Point {
    std::string description;
    std::function<CriticalityValue()> closed;
    std::function<CriticalityValue()> oracle;
};

ValidationOutcome run_points(std::string scope, std::vector<Point> points) {
    struct Measured {
        double rel_err = 0.0;
        double imag_residue = 0.0;
    };
    std::vector<Measured> measured(points.size());
    detail::parallel_for_index(points.size(), [&](std::size_t i) {
        const CriticalityValue closed = points[i].closed();
        const CriticalityValue oracle = points[i].oracle();
        measured[i].rel_err = std::abs(closed.tau / oracle.tau - 1.0);
        measured[i].imag_residue = std::max(closed.imag_residue, oracle.imag_residue);
    });

    ValidationOutcome outcome;
    outcome.scope = std::move(scope);
    outcome.points = points.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (measured[i].rel_err > outcome.max_rel_err) {
            outcome.max_rel_err = measured[i].rel_err;
            outcome.worst_case = points[i].description;
        }
        outcome.max_imag_residue = std::max(outcome.max_imag_residue, measured[i].imag_residue);
        if (measured[i].rel_err >= kGate)
            outcome.failures.push_back(points[i].description + " rel_err=" +
                                       format_double(measured[i].rel_err));
        else if (measured[i].imag_residue >= kGate)
            outcome.failures.push_back(points[i].description + " imag_residue=" +
                                       format_double(measured[i].imag_residue));
    }
    return outcome;
}

ValidationOutcome validate_cycle(std::size_t cap) {
    std::vector<Point> points;
    for (int n = 3; static_cast<std::size_t>(n) <= cap; ++n)
        for (int r = 1; 2 * r + 1 <= n; ++r)
            points.push_back({"cycle n=" + std::to_string(n) + " r=" + std::to_string(r),
                              [n, r] { return tau_cycle_closed_form(n, r); },
                              [n, r, cap] {
                                  return pinv_trace_tau(build_laplacian(TopologySpec::cycle(n, r), cap), cap);
                              }});
    return run_points("cycle", std::move(points));
}

ValidationOutcome validate_torus(std::size_t cap) {
    std::vector<Point> points;
    for (int k1 = 3; k1 <= 12; ++k1)
        for (int k2 = 3; k2 <= 12; ++k2) {
            if (static_cast<std::size_t>(k1) * static_cast<std::size_t>(k2) > cap) continue;
            for (int r = 1; 2 * r + 1 <= std::min(k1, k2); ++r) {
                const TopologySpec spec = TopologySpec::torus({k1, k2}, r);
                points.push_back({"torus k=" + std::to_string(k1) + "x" + std::to_string(k2) +
                                      " r=" + std::to_string(r),
                                  [spec] { return tau_torus_closed_form(spec); },
                                  [spec, cap] { return pinv_trace_tau(build_laplacian(spec, cap), cap); }});
            }
        }
    if (cap >= 60) {
        const TopologySpec spec = TopologySpec::torus({3, 4, 5}, 1);
        points.push_back({"torus k=3x4x5 r=1",
                          [spec] { return tau_torus_closed_form(spec); },
                          [spec, cap] { return pinv_trace_tau(build_laplacian(spec, cap), cap); }});
    }
    return run_points("torus", std::move(points));
}

ValidationOutcome validate_stochastic(std::size_t cap) {
    std::vector<Point> points;
    for (int n = 3; static_cast<std::size_t>(n) <= cap; ++n) {
        for (double q : {0.2, 0.5, 0.7})
            points.push_back({"random-ring n=" + std::to_string(n) + " q=" + format_double(q),
                              [n, q] { return tau_random_links(n, q); },
                              [n, q, cap] {
                                  return pinv_trace_tau(
                                      build_laplacian(StochasticRingModel::random_links(n, q), cap), cap);
                              }});
        for (double p : {0.2, 0.5, 0.7})
            points.push_back({"failure-ring n=" + std::to_string(n) + " p=" + format_double(p),
                              [n, p] { return tau_link_failures(n, p); },
                              [n, p, cap] {
                                  return pinv_trace_tau(
                                      build_laplacian(StochasticRingModel::link_failures(n, p), cap), cap);
                              }});
        points.push_back({"switching-ring n=" + std::to_string(n),
                          [n] { return tau_neighbor_switching(n); },
                          [n, cap] {
                              return pinv_trace_tau(
                                  build_laplacian(StochasticRingModel::neighbor_switching(n), cap), cap);
                          }});
    }
    return run_points("stochastic", std::move(points));
}

ValidationOutcome validate_asymmetric(std::size_t cap) {
    std::vector<Point> points;
    for (int n = 3; static_cast<std::size_t>(n) <= cap; ++n)
        for (double eps : {0.0, 0.25, 0.5, 0.75, 1.0})
            points.push_back({"asym-ring n=" + std::to_string(n) + " eps=" + format_double(eps),
                              [n, eps] { return tau_asymmetric_ring({n, eps}); },
                              [n, eps, cap] {
                                  return pinv_trace_tau(build_laplacian(AsymmetricRingSpec{n, eps}, cap), cap);
                              }});
    return run_points("asymmetric", std::move(points));
}

}  // namespace

std::vector<ValidationOutcome> run_validation(std::string_view scope, std::size_t cap) {
    if (cap < 3) throw SpecError("validation cap must be >= 3");
    std::vector<ValidationOutcome> outcomes;
    if (scope == "cycle" || scope == "all") outcomes.push_back(validate_cycle(cap));
    if (scope == "torus" || scope == "all") outcomes.push_back(validate_torus(cap));
    if (scope == "stochastic" || scope == "all") outcomes.push_back(validate_stochastic(cap));
    if (scope == "asymmetric" || scope == "all") outcomes.push_back(validate_asymmetric(cap));
    if (outcomes.empty()) throw SpecError("unknown validation scope '" + std::string(scope) + "'");
    return outcomes;
}

}  // namespace netcrit
