#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "netcrit/stochastic.hpp"
#include "netcrit/types.hpp"

namespace netcrit {

// Dense ground-truth path: explicit Laplacians, full-decomposition
// pseudoinverse, Monte-Carlo random-walk betweenness. O(n^3) decompositions,
// guarded by a node cap.
inline constexpr std::size_t kDefaultOracleCap = 4096;

using DenseMatrix = Eigen::MatrixXcd;

// Dense circulant matrix with the given first row: M(i, j) = row[(j - i) mod n].
DenseMatrix circulant_matrix(const CirculantRow& row);

// Unit-weight adjacency lists of an r-nearest-neighbor cycle or torus.
std::vector<std::vector<int>> adjacency_lists(const TopologySpec& spec);

// Explicit Laplacians built entrywise from the graph / model definition,
// independent of any spectral formula. Throw SizeCapError above the cap.
DenseMatrix build_laplacian(const TopologySpec& spec, std::size_t cap = kDefaultOracleCap);
DenseMatrix build_laplacian(const StochasticRingModel& model, std::size_t cap = kDefaultOracleCap);
DenseMatrix build_laplacian(const AsymmetricRingSpec& spec, std::size_t cap = kDefaultOracleCap);

// Moore-Penrose pseudoinverse by full decomposition: spectral for
// real-symmetric input, singular-value based otherwise.
DenseMatrix pseudo_inverse(const DenseMatrix& matrix, std::size_t cap = kDefaultOracleCap);

// Reference tau = 2n * Re(Tr(L^+)) at O(n^3) cost. Requires square input with
// zero row sums.
CriticalityValue pinv_trace_tau(const DenseMatrix& laplacian, std::size_t cap = kDefaultOracleCap);

// Per-node statistics of absorbing random walks over all ordered
// source-destination pairs: b_k counts expected intermediate visits,
// w_k is the node weight (degree for unit-weight graphs), eta_k = b_k / w_k.
struct WalkStatistics {
    std::vector<double> node_betweenness;
    std::vector<double> node_weight;
    std::vector<double> node_criticality;
    std::uint64_t walk_count = 0;
    std::uint64_t seed = 0;
    double mean_walk_length = 0.0;
};

// Seeded and reproducible: every ordered pair gets its own counter-derived
// stream, so results are independent of scheduling and identical across runs.
WalkStatistics simulate_walk_betweenness(const TopologySpec& spec, int walks_per_pair,
                                         std::uint64_t seed);

}  // namespace netcrit
