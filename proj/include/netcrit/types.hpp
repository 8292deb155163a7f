#pragma once

#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace netcrit {

using Complex = std::complex<double>;

// Absolute threshold below which an eigenvalue (or singular value) is
// treated as zero when summing reciprocals. All in-scope topologies are
// connected, so exactly one zero per spectrum is expected and asserted.
inline constexpr double kZeroEigenvalueTol = 1e-9;

// ── Error taxonomy ────────────────────────────────────────────────────────
// SpecError: invalid parameters / precondition violations (CLI exit 2).
// DegenerateModelError: structurally valid input whose model degenerates
// (q = 0, p = 1, all-zero spectrum, disconnected spectrum; CLI exit 3).
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RadiusOutOfRangeError : public SpecError {
public:
    using SpecError::SpecError;
};

class SizeCapError : public SpecError {
public:
    using SpecError::SpecError;
};

class DegenerateModelError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DisconnectedSpectrumError : public DegenerateModelError {
public:
    explicit DisconnectedSpectrumError(std::size_t zero_count)
        : DegenerateModelError("spectrum has " + std::to_string(zero_count) +
                               " zero eigenvalues; criticality is defined only for "
                               "connected topologies (exactly one zero)"),
          zero_count_(zero_count) {}

    std::size_t zero_count() const noexcept { return zero_count_; }

private:
    std::size_t zero_count_;
};

// ── CirculantRow ──────────────────────────────────────────────────────────
// First row a_1..a_n of a circulant matrix. A Laplacian row sums to zero.
struct CirculantRow {
    std::vector<Complex> entries;

    std::size_t size() const noexcept { return entries.size(); }

    Complex row_sum() const {
        return std::accumulate(entries.begin(), entries.end(), Complex{0.0, 0.0});
    }
};

// ── TopologySpec ──────────────────────────────────────────────────────────
enum class TopologyKind { cycle, torus };

// r-nearest-neighbor cycle (m = 1) or torus (m >= 2): node (j_1..j_m) links
// to every node reachable by changing one coordinate by at most r (mod k_i).
struct TopologySpec {
    TopologyKind kind = TopologyKind::cycle;
    std::vector<int> dims;  // k_1..k_m
    int radius = 1;

    static TopologySpec cycle(int n, int r) { return validated({TopologyKind::cycle, {n}, r}); }

    static TopologySpec torus(std::vector<int> dims, int r) {
        return validated({TopologyKind::torus, std::move(dims), r});
    }

    int dimension_count() const noexcept { return static_cast<int>(dims.size()); }

    std::size_t node_count() const {
        std::size_t n = 1;
        for (int k : dims) n *= static_cast<std::size_t>(k);
        return n;
    }

    // Throws SpecError / RadiusOutOfRangeError when the invariants fail:
    // every k_i >= 3, and 2r + 1 <= min(k_i) so the two r-blocks of
    // neighbors never wrap onto each other.
    void validate() const {
        if (dims.empty()) throw SpecError("topology needs at least one dimension");
        if (kind == TopologyKind::cycle && dims.size() != 1)
            throw SpecError("cycle topology must have exactly one dimension");
        if (kind == TopologyKind::torus && dims.size() < 2)
            throw SpecError("torus topology needs at least two dimensions");
        int min_k = dims.front();
        for (int k : dims) {
            if (k < 3) throw SpecError("every dimension size must be >= 3, got " + std::to_string(k));
            min_k = std::min(min_k, k);
        }
        if (radius < 1) throw RadiusOutOfRangeError("neighbor radius must be >= 1");
        if (2 * radius + 1 > min_k)
            throw RadiusOutOfRangeError("neighbor radius " + std::to_string(radius) +
                                        " out of range: 2r+1 must not exceed the smallest "
                                        "dimension (" + std::to_string(min_k) + ")");
    }

private:
    static TopologySpec validated(TopologySpec s) {
        s.validate();
        return s;
    }
};

// ── Spectrum ──────────────────────────────────────────────────────────────
// Laplacian eigenvalues in lexicographic multi-index order over
// (j_1..j_m), j_i in [0, k_i). The all-zero multi-index comes first and
// carries the zero eigenvalue for connected sources.
struct Spectrum {
    std::vector<Complex> values;
    std::vector<int> dims;  // index shape; {n} for one-dimensional sources

    std::size_t node_count() const noexcept { return values.size(); }

    std::size_t flat_index(std::span<const int> multi_index) const {
        std::size_t flat = 0;
        for (std::size_t i = 0; i < dims.size(); ++i)
            flat = flat * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(multi_index[i]);
        return flat;
    }

    Complex at(std::span<const int> multi_index) const { return values[flat_index(multi_index)]; }
};

// ── CriticalityValue ──────────────────────────────────────────────────────
// tau = 2n * Re(sum over nonzero eigenvalues of 1/lambda), together with
// the magnitude of the discarded imaginary part of the reciprocal sum and
// the number of eigenvalues treated as zero.
struct CriticalityValue {
    double tau = 0.0;
    double imag_residue = 0.0;
    std::size_t excluded_zeros = 0;
};

}  // namespace netcrit
