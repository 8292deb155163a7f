#pragma once

#include "netcrit/types.hpp"

namespace netcrit {

// Eigenvalues of the circulant matrix circ{a_1..a_n}:
//   lambda_j = sum_k a_k * w^{(k-1)j},  w = e^{2*pi*i/n},  j = 0..n-1.
// Full O(n^2) summation; meant for oracle-scale rows, not large spectra.
Spectrum circulant_eigenvalues(const CirculantRow& row);

// Laplacian first row of the r-nearest-neighbor cycle C_n^r:
//   {2r, -1 x r, 0..., -1 x r}.
CirculantRow cycle_laplacian_row(int n, int r);

// Laplacian spectrum of C_n^r:
//   lambda_j = 2r - 2*sum_{i=1..r} cos(2*pi*j*i/n)   (= 4*sum sin^2(pi*j*i/n)),
// evaluated in the half-angle form, which is exact for the near-zero
// eigenvalues where the cosine differences cancel.
Spectrum cycle_spectrum(int n, int r);

// Laplacian spectrum of the m-dimensional r-nearest-neighbor torus:
//   lambda_{j_1..j_m} = 2mr - 2*sum_{l=1..r} sum_{i=1..m} cos(2*pi*j_i*l/k_i),
// in lexicographic multi-index order. Requires m >= 2.
Spectrum torus_spectrum(const TopologySpec& spec);

// Dirichlet kernel D_r(x) = 1 + 2*sum_{j=1..r} cos(jx) = sin((r+1/2)x)/sin(x/2),
// evaluated through the sine ratio; returns the limit 2r+1 where
// |sin(x/2)| < 1e-9 (removable singularity at multiples of 2*pi).
double dirichlet_kernel(int r, double x);

}  // namespace netcrit
