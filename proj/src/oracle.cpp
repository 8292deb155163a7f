#include "netcrit/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <deque>

#include "netcrit/parallel.hpp"

namespace netcrit {

namespace {

void check_cap(std::size_t nodes, std::size_t cap, const char* what) {
    if (nodes > cap)
        throw SizeCapError(std::string(what) + ": " + std::to_string(nodes) +
                           " nodes exceed the oracle cap of " + std::to_string(cap));
}

bool is_real_symmetric(const DenseMatrix& m) {
    constexpr double tol = 1e-12;
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (m.imag().cwiseAbs().maxCoeff() > tol * scale) return false;
    return (m.real() - m.real().transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

void check_laplacian_rows(const DenseMatrix& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (std::abs(m.row(i).sum()) > 1e-8 * scale)
            throw SpecError("matrix row " + std::to_string(i) + " does not sum to zero");
}

// SplitMix64: counter-based, splittable by seeding distinct streams.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // multiply-shift bounded draw; bias ~ bound/2^64, irrelevant here
    std::uint32_t next_below(std::uint32_t bound) {
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
};

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g{seed ^ (0xD1B54A32D192ED03ULL * (stream + 1))};
    return g.next();
}

}  // namespace

DenseMatrix circulant_matrix(const CirculantRow& row) {
    const auto n = static_cast<Eigen::Index>(row.size());
    if (n == 0) throw SpecError("circulant row must be nonempty");
    DenseMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = row.entries[static_cast<std::size_t>(((j - i) % n + n) % n)];
    return m;
}

std::vector<std::vector<int>> adjacency_lists(const TopologySpec& spec) {
    spec.validate();
    const int m = spec.dimension_count();
    const int n = static_cast<int>(spec.node_count());

    // node id = lexicographic rank of its coordinate tuple
    std::vector<int> stride(static_cast<std::size_t>(m), 1);
    for (int d = m - 2; d >= 0; --d)
        stride[static_cast<std::size_t>(d)] =
            stride[static_cast<std::size_t>(d + 1)] * spec.dims[static_cast<std::size_t>(d + 1)];

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<int> coord(static_cast<std::size_t>(m), 0);
    for (int id = 0; id < n; ++id) {
        auto& nbrs = adj[static_cast<std::size_t>(id)];
        nbrs.reserve(static_cast<std::size_t>(2 * spec.radius * m));
        for (int d = 0; d < m; ++d) {
            const int k = spec.dims[static_cast<std::size_t>(d)];
            const int c = coord[static_cast<std::size_t>(d)];
            for (int off = 1; off <= spec.radius; ++off) {
                const int fwd = (c + off) % k;
                const int bwd = (c - off + k) % k;
                nbrs.push_back(id + (fwd - c) * stride[static_cast<std::size_t>(d)]);
                nbrs.push_back(id + (bwd - c) * stride[static_cast<std::size_t>(d)]);
            }
        }
        for (int d = m - 1; d >= 0; --d) {
            if (++coord[static_cast<std::size_t>(d)] < spec.dims[static_cast<std::size_t>(d)]) break;
            coord[static_cast<std::size_t>(d)] = 0;
        }
    }
    return adj;
}

DenseMatrix build_laplacian(const TopologySpec& spec, std::size_t cap) {
    spec.validate();
    check_cap(spec.node_count(), cap, "topology Laplacian");
    const auto adj = adjacency_lists(spec);
    const auto n = static_cast<Eigen::Index>(adj.size());
    DenseMatrix lap = DenseMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        lap(i, i) = Complex{static_cast<double>(adj[static_cast<std::size_t>(i)].size()), 0.0};
        for (int j : adj[static_cast<std::size_t>(i)]) lap(i, j) = Complex{-1.0, 0.0};
    }
    return lap;
}

DenseMatrix build_laplacian(const StochasticRingModel& model, std::size_t cap) {
    check_cap(static_cast<std::size_t>(model.n), cap, "expected Laplacian");
    return circulant_matrix(expected_laplacian(model));
}

DenseMatrix build_laplacian(const AsymmetricRingSpec& spec, std::size_t cap) {
    check_cap(static_cast<std::size_t>(spec.n), cap, "asymmetric Laplacian");
    return circulant_matrix(asymmetric_laplacian_row(spec));
}

DenseMatrix pseudo_inverse(const DenseMatrix& matrix, std::size_t cap) {
    if (matrix.rows() != matrix.cols()) throw SpecError("pseudoinverse oracle expects a square matrix");
    check_cap(static_cast<std::size_t>(matrix.rows()), cap, "pseudoinverse");

    const auto n = matrix.rows();
    if (is_real_symmetric(matrix)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix.real());
        Eigen::VectorXd inv = solver.eigenvalues();
        for (Eigen::Index i = 0; i < n; ++i)
            inv(i) = std::abs(inv(i)) < kZeroEigenvalueTol ? 0.0 : 1.0 / inv(i);
        Eigen::MatrixXd pinv = solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose();
        return pinv.cast<Complex>();
    }
    Eigen::BDCSVD<DenseMatrix> svd(matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd inv = svd.singularValues();
    for (Eigen::Index i = 0; i < inv.size(); ++i)
        inv(i) = inv(i) < kZeroEigenvalueTol ? 0.0 : 1.0 / inv(i);
    return svd.matrixV() * inv.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
}

CriticalityValue pinv_trace_tau(const DenseMatrix& laplacian, std::size_t cap) {
    if (laplacian.rows() != laplacian.cols())
        throw SpecError("pseudoinverse oracle expects a square matrix");
    check_cap(static_cast<std::size_t>(laplacian.rows()), cap, "pseudoinverse trace");
    check_laplacian_rows(laplacian);

    const auto n = laplacian.rows();
    CriticalityValue value;
    if (is_real_symmetric(laplacian)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian.real(),
                                                              Eigen::EigenvaluesOnly);
        double trace = 0.0;
        std::size_t zeros = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double lam = solver.eigenvalues()(i);
            if (std::abs(lam) < kZeroEigenvalueTol)
                ++zeros;
            else
                trace += 1.0 / lam;
        }
        if (zeros == static_cast<std::size_t>(n))
            throw DegenerateModelError("all-zero spectrum has no criticality");
        if (zeros == 0) throw SpecError("Laplacian oracle found no zero eigenvalue");
        if (zeros > 1) throw DisconnectedSpectrumError(zeros);
        value.tau = 2.0 * static_cast<double>(n) * trace;
        value.imag_residue = 0.0;
        value.excluded_zeros = zeros;
        return value;
    }

    // Tr(V S+ U^H) = sum_k (u_k^H v_k) / s_k over nonzero singular values
    Eigen::BDCSVD<DenseMatrix> svd(laplacian, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Complex trace{0.0, 0.0};
    std::size_t zeros = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double s = svd.singularValues()(k);
        if (s < kZeroEigenvalueTol) {
            ++zeros;
            continue;
        }
        trace += svd.matrixU().col(k).dot(svd.matrixV().col(k)) / s;
    }
    if (zeros == static_cast<std::size_t>(n))
        throw DegenerateModelError("all-zero spectrum has no criticality");
    if (zeros == 0) throw SpecError("Laplacian oracle found no zero singular value");
    if (zeros > 1) throw DisconnectedSpectrumError(zeros);
    value.tau = 2.0 * static_cast<double>(n) * trace.real();
    value.imag_residue = std::abs(trace.imag());
    value.excluded_zeros = zeros;
    return value;
}

WalkStatistics simulate_walk_betweenness(const TopologySpec& spec, int walks_per_pair,
                                         std::uint64_t seed) {
    if (walks_per_pair < 1) throw SpecError("walks_per_pair must be >= 1");
    const auto adj = adjacency_lists(spec);
    const auto n = adj.size();

    // cheap reachability check; a walk on a disconnected graph never ends
    {
        std::vector<char> seen(n, 0);
        std::deque<int> queue{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    ++reached;
                    queue.push_back(v);
                }
        }
        if (reached != n) throw DegenerateModelError("topology is disconnected; walks may not terminate");
    }

    struct Pair {
        int source, destination;
    };
    std::vector<Pair> pairs;
    pairs.reserve(n * (n - 1));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d)
            if (s != d) pairs.push_back({static_cast<int>(s), static_cast<int>(d)});

    // per-pair integer tallies; combined in pair order below, so the result
    // is independent of which thread ran which pair
    std::vector<std::vector<std::uint32_t>> visits(pairs.size());
    std::vector<std::uint64_t> steps(pairs.size(), 0);
    detail::parallel_for_index(pairs.size(), [&](std::size_t pi) {
        const auto [src, dst] = pairs[pi];
        SplitMix64 rng{stream_seed(seed, pi)};
        std::vector<std::uint32_t> local(n, 0);
        std::uint64_t local_steps = 0;
        for (int w = 0; w < walks_per_pair; ++w) {
            int cur = src;
            while (cur != dst) {
                const auto& nbrs = adj[static_cast<std::size_t>(cur)];
                cur = nbrs[rng.next_below(static_cast<std::uint32_t>(nbrs.size()))];
                ++local_steps;
                if (cur != dst && cur != src) ++local[static_cast<std::size_t>(cur)];
            }
        }
        visits[pi] = std::move(local);
        steps[pi] = local_steps;
    });

    WalkStatistics stats;
    stats.node_betweenness.assign(n, 0.0);
    std::vector<std::uint64_t> totals(n, 0);
    std::uint64_t total_steps = 0;
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        for (std::size_t k = 0; k < n; ++k) totals[k] += visits[pi][k];
        total_steps += steps[pi];
    }
    for (std::size_t k = 0; k < n; ++k)
        stats.node_betweenness[k] = static_cast<double>(totals[k]) / walks_per_pair;

    stats.node_weight.resize(n);
    stats.node_criticality.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        stats.node_weight[k] = static_cast<double>(adj[k].size());
        stats.node_criticality[k] = stats.node_betweenness[k] / stats.node_weight[k];
    }
    stats.walk_count = static_cast<std::uint64_t>(pairs.size()) * static_cast<std::uint64_t>(walks_per_pair);
    stats.seed = seed;
    stats.mean_walk_length = static_cast<double>(total_steps) / static_cast<double>(stats.walk_count);
    return stats;
}

}  // namespace netcrit
