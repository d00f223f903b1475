#pragma once

// Spectra of the Fourier blocks U_G^(j) and the walk characteristic polynomial.
//
// For a circulant of even degree k every block j != 0 has eigenvalue +1 and -1
// with multiplicity (k - 2) / 2 each, plus one conjugate pair exp(+-i theta_j)
// with cos(theta_j) = A-hat(j) / k, so its characteristic polynomial is
//   (lambda - 1)^((k-2)/2) (lambda + 1)^((k-2)/2) (lambda^2 - 2 c_j lambda + 1).
// The j = 0 block is degenerate: +1 with multiplicity k/2 + 1 and -1 with
// multiplicity k/2 - 1.

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "qwiso/fourier.hpp"
#include "qwiso/polynomial.hpp"

namespace qwiso {

inline constexpr double kDefaultEigenTolerance = 1e-8;
inline constexpr double kUnitCircleTolerance = 1e-9;

struct BlockSpectrum {
  int j = 0;
  int mult_plus_one = 0;
  int mult_minus_one = 0;
  std::optional<double> theta;  // in (0, pi) when a conjugate pair exists
  std::optional<double> c;      // cos(theta)
  std::vector<std::complex<double>> eigenvalues;
};

// Dense eigendecomposition plus classification against +1, -1 and a single
// conjugate pair. Throws kNotUnitary (an eigenvalue off the unit circle),
// kUnpairedEigenvalue, or kMoreThanOnePair (the message lists the offending
// eigenvalues).
BlockSpectrum block_spectrum(const FourierBlock& block, double tol_eig = kDefaultEigenTolerance);

// Monic polynomial whose roots are the block's computed eigenvalues.
Polynomial spectrum_polynomial(const BlockSpectrum& spectrum);

// (lambda - 1)^((k-2)/2) (lambda + 1)^((k-2)/2) (lambda^2 - 2 c lambda + 1).
// Throws kCOutOfRange unless -1 < c < 1, kOddDegree / kDegreeTooSmall for k.
Polynomial predicted_block_poly(double c, int k);

// c_j read off the spectrum alone. Throws kDegenerateBlock when no eigenvalue
// lies off +-1 (the j = 0 block, where c = 1 for any k-regular graph).
double recover_c(const FourierBlock& block, double tol_eig = kDefaultEigenTolerance);

// det(lambda I - U_G^(j)) via Hessenberg reduction.
Polynomial block_char_poly(const FourierBlock& block);

// Product of the per-block characteristic polynomials by convolution.
Polynomial global_char_poly(std::span<const FourierBlock> blocks);

struct CValueCluster {
  double c = 0.0;
  int multiplicity = 0;  // number of conjugate pairs in the cluster

  friend bool operator==(const CValueCluster&, const CValueCluster&) = default;
};

// Single-linkage radius on real parts, and the minimum allowed distance
// between cluster centers (in units of the radius).
inline constexpr double kClusterRadius = 0.02;
inline constexpr double kClusterSeparationFactor = 10.0;
// Roots left after removing +-1 must lie this close to the unit circle.
inline constexpr double kRootUnitCircleSlack = 0.05;

// Multiplicities of +1 and -1 in chi_q of any circulant of degree k on Z_p.
int global_plus_one_multiplicity(int p, int k) noexcept;
int global_minus_one_multiplicity(int p, int k) noexcept;

// Clusters cos(theta) over the roots of a global chi_q that lie off +-1.
// The global_*_multiplicity roots nearest +1 and -1 are removed first, then
// real parts are grouped and each cluster is reported by its centroid, in
// ascending c. Throws kPolynomialIllConditioned when the remaining roots
// scatter off the unit circle (the expanded polynomial no longer pins its
// roots; this happens from p = 29 with Paley graphs), kClusteringAmbiguous
// when two centers are too close, and kInvalidArgument on a degree mismatch.
std::vector<CValueCluster> extract_c_multiset(const Polynomial& poly, int k, int p);

}  // namespace qwiso
