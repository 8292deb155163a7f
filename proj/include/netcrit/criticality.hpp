#pragma once

#include "netcrit/types.hpp"

namespace netcrit {

// Network criticality tau = 2n * Re(sum over nonzero eigenvalues of 1/lambda).
// Requires exactly one zero eigenvalue (|lambda| < 1e-9): throws
// DegenerateModelError on an all-zero spectrum, DisconnectedSpectrumError when
// more than one eigenvalue is zero, SpecError when none is.
CriticalityValue tau_from_spectrum(const Spectrum& spectrum);

// Closed form for the r-nearest-neighbor cycle:
//   tau(C_n^r) = sum_{j=1..n-1} 2n / (2r + 1 - sin((2r+1)*pi*j/n) / sin(pi*j/n)).
// Separate code path from tau_from_spectrum(cycle_spectrum(...)); the
// denominator is re-evaluated in extended precision where the kernel ratio
// approaches its peak 2r+1 and the subtraction would otherwise lose digits.
CriticalityValue tau_cycle_closed_form(int n, int r);

// Closed form for the m-dimensional r-nearest-neighbor torus (m >= 2):
//   tau = 2n * sum over all multi-indices except (0..0) of
//         1 / ((2r+1)m - sum_i sin((2r+1)*pi*j_i/k_i) / sin(pi*j_i/k_i)),
// n = prod k_i. The sum runs over every nonzero multi-index on every axis
// and carries the 2n numerator, so it matches 2n*Tr(L^+) for the product
// topology (the brute-force oracle certifies both choices).
CriticalityValue tau_torus_closed_form(const TopologySpec& spec);

// Large-n estimate for the cycle: n^3 / (2r(r+1)(2r+1)).
double tau_cycle_asymptotic(double n, int r);

// Order-of-growth estimate for the two-dimensional torus:
//   3n^3 * log(n) / (8r(r+1)(2r+1)*pi^2),
// natural log, growth constant taken as 1. Only the shape is meaningful;
// no absolute-value guarantees.
double tau_torus_asymptotic(double n, int r);

}  // namespace netcrit
