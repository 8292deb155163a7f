#include "netcrit/stochastic.hpp"

#include <cmath>
#include <numbers>

#include "netcrit/circulant.hpp"
#include "netcrit/criticality.hpp"

namespace netcrit {

namespace {

void check_ring_size(int n) {
    if (n < 3) throw SpecError("ring model needs n >= 3, got " + std::to_string(n));
}

}  // namespace

StochasticRingModel StochasticRingModel::random_links(int n, double q) {
    check_ring_size(n);
    if (q < 0.0 || q > 1.0) throw SpecError("link probability q must lie in [0, 1]");
    if (q == 0.0) throw DegenerateModelError("q = 0 leaves the expected topology edgeless");
    return {n, RingModelKind::random_links, q, 0.0};
}

StochasticRingModel StochasticRingModel::link_failures(int n, double p) {
    check_ring_size(n);
    if (p < 0.0 || p > 1.0) throw SpecError("failure probability p must lie in [0, 1)");
    if (p == 1.0) throw DegenerateModelError("p = 1 fails every link in expectation");
    return {n, RingModelKind::link_failures, 0.0, p};
}

StochasticRingModel StochasticRingModel::neighbor_switching(int n) {
    check_ring_size(n);
    return {n, RingModelKind::neighbor_switching, 0.0, 0.0};
}

AsymmetricRingSpec::AsymmetricRingSpec(int n_, double epsilon_) : n(n_), epsilon(epsilon_) {
    check_ring_size(n);
    if (epsilon < 0.0 || epsilon > 1.0) throw SpecError("backward weight epsilon must lie in [0, 1]");
}

CirculantRow expected_laplacian(const StochasticRingModel& model) {
    const auto n = static_cast<std::size_t>(model.n);
    CirculantRow row;
    row.entries.assign(n, Complex{0.0, 0.0});
    switch (model.kind) {
        case RingModelKind::random_links:
            row.entries[0] = Complex{model.q * (model.n - 1), 0.0};
            for (std::size_t k = 1; k < n; ++k) row.entries[k] = Complex{-model.q, 0.0};
            break;
        case RingModelKind::link_failures:
            row.entries[0] = Complex{2.0 * (1.0 - model.p), 0.0};
            row.entries[1] = Complex{-(1.0 - model.p), 0.0};
            row.entries[n - 1] = Complex{-(1.0 - model.p), 0.0};
            break;
        case RingModelKind::neighbor_switching:
            row.entries[0] = Complex{2.0, 0.0};
            for (std::size_t k = 1; k < n; ++k)
                row.entries[k] = Complex{-2.0 / (model.n - 1), 0.0};
            break;
    }
    return row;
}

CirculantRow asymmetric_laplacian_row(const AsymmetricRingSpec& spec) {
    CirculantRow row;
    row.entries.assign(static_cast<std::size_t>(spec.n), Complex{0.0, 0.0});
    row.entries[0] = Complex{1.0 + spec.epsilon, 0.0};
    row.entries[1] = Complex{-1.0, 0.0};
    row.entries[static_cast<std::size_t>(spec.n - 1)] = Complex{-spec.epsilon, 0.0};
    return row;
}

CriticalityValue tau_random_links(int n, double q) {
    return tau_from_spectrum(circulant_eigenvalues(expected_laplacian(StochasticRingModel::random_links(n, q))));
}

CriticalityValue tau_link_failures(int n, double p) {
    return tau_from_spectrum(circulant_eigenvalues(expected_laplacian(StochasticRingModel::link_failures(n, p))));
}

CriticalityValue tau_neighbor_switching(int n) {
    return tau_from_spectrum(circulant_eigenvalues(expected_laplacian(StochasticRingModel::neighbor_switching(n))));
}

CriticalityValue tau_asymmetric_ring(const AsymmetricRingSpec& spec) {
    const int n = spec.n;
    Complex reciprocal_sum{0.0, 0.0};
    for (int j = 1; j < n; ++j) {
        const double half = std::numbers::pi * static_cast<double>(j) / n;
        const double s = std::sin(half);
        const double one_minus_cos = 2.0 * s * s;  // 1 - cos(2*pi*j/n), no cancellation
        const Complex lambda{(1.0 + spec.epsilon) * one_minus_cos,
                             -(1.0 - spec.epsilon) * std::sin(2.0 * half)};
        reciprocal_sum += 1.0 / lambda;
    }
    CriticalityValue value;
    value.tau = 2.0 * n * reciprocal_sum.real();
    value.imag_residue = std::abs(reciprocal_sum.imag());
    value.excluded_zeros = 1;
    return value;
}

}  // namespace netcrit
