#include "netcrit/circulant.hpp"

#include <cmath>
#include <numbers>

namespace netcrit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Spectrum circulant_eigenvalues(const CirculantRow& row) {
    const std::size_t n = row.size();
    if (n == 0) throw SpecError("circulant row must be nonempty");

    Spectrum spectrum;
    spectrum.dims = {static_cast<int>(n)};
    spectrum.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            // angle of w^{k*j}, with the exponent reduced mod n first so the
            // argument stays in [0, 2*pi)
            const std::size_t e = (k * j) % n;
            acc += row.entries[k] * std::polar(1.0, kTwoPi * static_cast<double>(e) / static_cast<double>(n));
        }
        spectrum.values[j] = acc;
    }
    return spectrum;
}

CirculantRow cycle_laplacian_row(int n, int r) {
    TopologySpec::cycle(n, r);  // validates n >= 3, 2r+1 <= n
    CirculantRow row;
    row.entries.assign(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    row.entries[0] = Complex{2.0 * r, 0.0};
    for (int i = 1; i <= r; ++i) {
        row.entries[static_cast<std::size_t>(i)] = Complex{-1.0, 0.0};
        row.entries[static_cast<std::size_t>(n - i)] = Complex{-1.0, 0.0};
    }
    return row;
}

Spectrum cycle_spectrum(int n, int r) {
    TopologySpec::cycle(n, r);

    Spectrum spectrum;
    spectrum.dims = {n};
    spectrum.values.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double lambda = 0.0;
        for (int i = 1; i <= r; ++i) {
            const double s = std::sin(std::numbers::pi * static_cast<double>(j) * i / n);
            lambda += 4.0 * s * s;
        }
        spectrum.values[static_cast<std::size_t>(j)] = Complex{lambda, 0.0};
    }
    return spectrum;
}

Spectrum torus_spectrum(const TopologySpec& spec) {
    spec.validate();
    if (spec.kind != TopologyKind::torus)
        throw SpecError("torus_spectrum requires a torus topology");

    const int m = spec.dimension_count();
    const int r = spec.radius;

    // per-dimension contribution 2r - 2*sum_{l=1..r} cos(2*pi*j*l/k)
    std::vector<std::vector<double>> per_dim(static_cast<std::size_t>(m));
    for (int d = 0; d < m; ++d) {
        const int k = spec.dims[static_cast<std::size_t>(d)];
        auto& col = per_dim[static_cast<std::size_t>(d)];
        col.resize(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            double cos_sum = 0.0;
            for (int l = 1; l <= r; ++l) cos_sum += std::cos(kTwoPi * static_cast<double>(j) * l / k);
            col[static_cast<std::size_t>(j)] = 2.0 * r - 2.0 * cos_sum;
        }
    }

    Spectrum spectrum;
    spectrum.dims = spec.dims;
    spectrum.values.resize(spec.node_count());

    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    for (std::size_t flat = 0; flat < spectrum.values.size(); ++flat) {
        double lambda = 0.0;
        for (int d = 0; d < m; ++d)
            lambda += per_dim[static_cast<std::size_t>(d)][static_cast<std::size_t>(idx[static_cast<std::size_t>(d)])];
        spectrum.values[flat] = Complex{lambda, 0.0};
        for (int d = m - 1; d >= 0; --d) {  // lexicographic odometer
            if (++idx[static_cast<std::size_t>(d)] < spec.dims[static_cast<std::size_t>(d)]) break;
            idx[static_cast<std::size_t>(d)] = 0;
        }
    }
    return spectrum;
}

double dirichlet_kernel(int r, double x) {
    if (r < 0) throw SpecError("dirichlet kernel order must be >= 0");
    // extended precision keeps the ratio within ~1e-14 of the cosine sum even
    // next to the removable singularities, where sin(x/2) amplifies rounding
    const long double half_sin = sinl(0.5L * static_cast<long double>(x));
    if (fabsl(half_sin) < 1e-9L) return 2.0 * r + 1.0;
    return static_cast<double>(sinl((r + 0.5L) * static_cast<long double>(x)) / half_sin);
}

}  // namespace netcrit
