#include "netcrit/criticality.hpp"

#include <cmath>
#include <numbers>

namespace netcrit {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// (2r+1) - sin((2r+1)u)/sin(u) in 80-bit precision. Near u -> 0 the ratio
// approaches 2r+1 and the subtraction cancels ~ (2r+1)/lambda leading digits;
// the extended-precision evaluation keeps the closed form accurate to ~1e-14
// relative even for the smallest cycle eigenvalues.
long double kernel_deficit_ext(int r, long double u) {
    return (2.0L * r + 1.0L) - sinl((2.0L * r + 1.0L) * u) / sinl(u);
}

}  // namespace

CriticalityValue tau_from_spectrum(const Spectrum& spectrum) {
    const std::size_t n = spectrum.node_count();
    if (n == 0) throw SpecError("empty spectrum");

    std::size_t zero_count = 0;
    Complex reciprocal_sum{0.0, 0.0};
    for (const Complex& lambda : spectrum.values) {
        if (std::abs(lambda) < kZeroEigenvalueTol)
            ++zero_count;
        else
            reciprocal_sum += 1.0 / lambda;
    }

    if (zero_count == n) throw DegenerateModelError("all-zero spectrum has no criticality");
    if (zero_count == 0) throw SpecError("spectrum has no zero eigenvalue; not a Laplacian spectrum");
    if (zero_count > 1) throw DisconnectedSpectrumError(zero_count);

    CriticalityValue value;
    value.tau = 2.0 * static_cast<double>(n) * reciprocal_sum.real();
    value.imag_residue = std::abs(reciprocal_sum.imag());
    value.excluded_zeros = zero_count;
    return value;
}

CriticalityValue tau_cycle_closed_form(int n, int r) {
    TopologySpec::cycle(n, r);

    const double peak = 2.0 * r + 1.0;
    // refine terms whose denominator lost more than ~1 digit to cancellation
    const double refine_below = 0.05 * peak;

    double tau = 0.0;
    for (int j = 1; j < n; ++j) {
        const double u = std::numbers::pi * static_cast<double>(j) / n;
        double lambda = peak - std::sin((2.0 * r + 1.0) * u) / std::sin(u);
        if (lambda < refine_below)
            lambda = static_cast<double>(kernel_deficit_ext(r, kPiL * j / n));
        tau += 2.0 * static_cast<double>(n) / lambda;
    }
    return CriticalityValue{tau, 0.0, 1};
}

CriticalityValue tau_torus_closed_form(const TopologySpec& spec) {
    spec.validate();
    if (spec.kind != TopologyKind::torus)
        throw SpecError("tau_torus_closed_form requires a torus topology");

    const int m = spec.dimension_count();
    const int r = spec.radius;
    const std::size_t n = spec.node_count();

    // Per-dimension deficits (2r+1) - D_r(2*pi*j/k), extended precision so the
    // per-axis values are nonnegative and accurate; their sums cannot cancel.
    std::vector<std::vector<double>> deficit(static_cast<std::size_t>(m));
    for (int d = 0; d < m; ++d) {
        const int k = spec.dims[static_cast<std::size_t>(d)];
        auto& col = deficit[static_cast<std::size_t>(d)];
        col.resize(static_cast<std::size_t>(k));
        col[0] = 0.0;  // D_r(0) = 2r+1 exactly
        for (int j = 1; j < k; ++j)
            col[static_cast<std::size_t>(j)] = static_cast<double>(kernel_deficit_ext(r, kPiL * j / k));
    }

    // lexicographic multi-index walk with an explicit partial-sum recursion
    double tau = 0.0;
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    auto recurse = [&](auto&& self, int dim, double partial) -> void {
        const auto& col = deficit[static_cast<std::size_t>(dim)];
        if (dim == m - 1) {
            for (int j = 0; j < spec.dims[static_cast<std::size_t>(dim)]; ++j) {
                const double lambda = partial + col[static_cast<std::size_t>(j)];
                if (lambda == 0.0) continue;  // only at the all-zero multi-index
                tau += 2.0 * static_cast<double>(n) / lambda;
            }
            return;
        }
        for (int j = 0; j < spec.dims[static_cast<std::size_t>(dim)]; ++j)
            self(self, dim + 1, partial + col[static_cast<std::size_t>(j)]);
    };
    recurse(recurse, 0, 0.0);

    return CriticalityValue{tau, 0.0, 1};
}

double tau_cycle_asymptotic(double n, int r) {
    if (n < 3.0) throw SpecError("cycle asymptotic needs n >= 3");
    if (r < 1) throw RadiusOutOfRangeError("neighbor radius must be >= 1");
    return n * n * n / (2.0 * r * (r + 1.0) * (2.0 * r + 1.0));
}

double tau_torus_asymptotic(double n, int r) {
    if (n <= 1.0) throw SpecError("torus asymptotic needs n > 1");
    if (r < 1) throw RadiusOutOfRangeError("neighbor radius must be >= 1");
    constexpr double pi_sq = std::numbers::pi * std::numbers::pi;
    return 3.0 * n * n * n * std::log(n) / (8.0 * r * (r + 1.0) * (2.0 * r + 1.0) * pi_sq);
}

}  // namespace netcrit
