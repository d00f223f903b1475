#pragma once

// Reconstruction of a connection set from walk spectra, and the two
// isomorphism routes: chi_q comparison and Turner's multiplier test.

#include <optional>
#include <span>
#include <vector>

#include "qwiso/modp.hpp"
#include "qwiso/polynomial.hpp"
#include "qwiso/spectral.hpp"

namespace qwiso {

inline constexpr double kMaxRoundingResidual = 1e-6;
inline constexpr double kPolynomialRelativeTolerance = 1e-6;

struct RecoveryReport {
  int p = 0;
  int k = 0;
  std::vector<double> c_values;  // index j; c_values[0] = 1
  ConnectionSet recovered_set;
  // Largest distance of an inverse-DFT indicator value from {0, 1}.
  double max_rounding_residual = 0.0;
};

// 1_S(u) = (1/p) sum_j k c_j omega^{-j u}, rounded to {0, 1}.
// Throws kInvalidArgument (wrong length, c_0 != 1, |c_j| > 1),
// kNonzeroAtOrigin, kRoundingResidualTooLarge, kWrongCardinality, or the
// ConnectionSet construction errors.
RecoveryReport recover_connection_set(std::span<const double> c_values, int p, int k);

// Smallest t in [1, p-1] with t S1 = S2, or nullopt. Throws kModulusMismatch
// or kDegreeMismatch when the sets cannot be compared.
std::optional<int> turner_isomorphic(const ConnectionSet& s1, const ConnectionSet& s2);

// Vertex map u -> t u mod p as a permutation vector.
std::vector<int> multiplier_permutation(int p, int t);

struct IsoVerdict {
  bool isomorphic = false;
  std::optional<int> witness_multiplier;
  bool spectral_equal = false;
  bool method_agreement = false;
};

// chi_q of g via the full operator: U_G -> F U F^dagger -> blocks -> product.
Polynomial walk_char_poly(const CirculantGraph& g);

// Runs both routes and records whether they agree. For strongly regular
// inputs with k >= 6 the two routes are expected to agree; for anything else a
// disagreement is data, not an error. Throws kModulusMismatch.
IsoVerdict decide_isomorphism(const CirculantGraph& g1, const CirculantGraph& g2,
                              double relative_tolerance = kPolynomialRelativeTolerance);

// Overload taking precomputed characteristic polynomials.
IsoVerdict decide_isomorphism(const ConnectionSet& s1, const Polynomial& chi1,
                              const ConnectionSet& s2, const Polynomial& chi2,
                              double relative_tolerance = kPolynomialRelativeTolerance);

// c_j recovered from the spectrum of each conjugated block, c_0 = 1.
std::vector<double> spectral_c_values(const CirculantGraph& g,
                                      double tol_eig = kDefaultEigenTolerance);

// Build U_G, decompose, recover every c_j from its block, invert the DFT and
// require the original set back. Throws kRecoveredSetMismatch otherwise.
RecoveryReport full_pipeline_from_spectra(const CirculantGraph& g,
                                          double tol_eig = kDefaultEigenTolerance);

}  // namespace qwiso
