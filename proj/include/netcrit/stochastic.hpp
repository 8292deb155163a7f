#pragma once

#include "netcrit/types.hpp"

namespace netcrit {

// Expected-Laplacian ring models: every time slot draws a topology i.i.d.,
// and criticality is evaluated on the entrywise-averaged Laplacian.
enum class RingModelKind { random_links, link_failures, neighbor_switching };

struct StochasticRingModel {
    int n = 0;
    RingModelKind kind = RingModelKind::random_links;
    double q = 0.0;  // random_links: probability a link exists
    double p = 0.0;  // link_failures: probability a ring link fails

    static StochasticRingModel random_links(int n, double q);
    static StochasticRingModel link_failures(int n, double p);
    static StochasticRingModel neighbor_switching(int n);
};

// Ring with forward link weight 1 and backward link weight epsilon in [0, 1];
// epsilon = 1 recovers the symmetric cycle, epsilon = 0 the directed cycle.
struct AsymmetricRingSpec {
    int n = 0;
    double epsilon = 1.0;

    AsymmetricRingSpec(int n, double epsilon);
};

// First row of the expected (averaged) Laplacian:
//   random_links:       {q(n-1), -q, ..., -q}
//   link_failures:      {2(1-p), -(1-p), 0...0, -(1-p)}
//   neighbor_switching: {2, -2/(n-1), ..., -2/(n-1)}
CirculantRow expected_laplacian(const StochasticRingModel& model);

// First row of the asymmetric ring Laplacian {(1+eps), -1, 0...0, -eps}.
CirculantRow asymmetric_laplacian_row(const AsymmetricRingSpec& spec);

// tau of the expected Laplacian, via its circulant spectrum.
// Closed values: 2(n-1)/q, n(n^2-1)/(6(1-p)), (n-1)^2 respectively.
CriticalityValue tau_random_links(int n, double q);
CriticalityValue tau_link_failures(int n, double p);
CriticalityValue tau_neighbor_switching(int n);

// tau of the asymmetric ring from its complex circulant eigenvalues
//   lambda_j = (1+eps)(1 - cos(2*pi*j/n)) - i(1-eps)sin(2*pi*j/n);
// the reciprocal sum is real up to conjugate-pair rounding, recorded in
// imag_residue.
CriticalityValue tau_asymmetric_ring(const AsymmetricRingSpec& spec);

}  // namespace netcrit
