#pragma once

// Block diagonalization of the walk operator by F (x) I_k, where
// (F e_u)_j = omega^{j u} / sqrt(p).

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "qwiso/modp.hpp"
#include "qwiso/walk.hpp"

namespace qwiso {

struct DftMatrix {
  int p = 0;
  Eigen::MatrixXcd matrix;  // entry (j, u) = omega^{j u} / sqrt(p)
};

DftMatrix dft_matrix(const PrimeModulus& p);

struct FourierBlock {
  int j = 0;
  Eigen::MatrixXcd matrix;  // k x k, coin basis in ascending element order
};

struct BlockDecomposition {
  std::vector<FourierBlock> blocks;
  // Frobenius norm of everything outside the p diagonal k x k blocks.
  double off_diagonal_residual = 0.0;
};

// Above this residual the conjugated operator is not block diagonal, which
// means the basis ordering or the DFT sign convention is wrong.
inline constexpr double kMaxOffDiagonalResidual = 1e-8;

// Conjugates U by F (x) I_k with dense products and slices out the blocks.
// Throws kResidualTooLarge when the off-diagonal residual exceeds max_residual.
BlockDecomposition block_decompose(const WalkOperator& u,
                                   double max_residual = kMaxOffDiagonalResidual);

// S-hat^(j): column s holds omega^{j s} in row -s and zeros elsewhere.
Eigen::MatrixXcd shift_block(const ConnectionSet& s, int j);

// S-hat^(j) C assembled without touching the full operator.
FourierBlock block_direct(const CirculantGraph& g, int j);

// All p blocks via block_direct; the per-j work runs concurrently.
std::vector<FourierBlock> blocks_direct(const CirculantGraph& g);

// phi_j = k^{-1/2} sum_s omega^{j s} |s>.
Eigen::VectorXcd fourier_mode(const ConnectionSet& s, int j);

// v_+ = 1 / sqrt(k), the +1 eigenvector of the Grover coin.
Eigen::VectorXcd uniform_coin_state(int k);

// <phi_j | S-hat^(j) | phi_j>.
std::complex<double> key_identity_value(const ConnectionSet& s, int j);

// <v_+ | S-hat^(j) | v_+>, which equals A-hat(j) / k for every j.
std::complex<double> coin_shift_overlap(const ConnectionSet& s, int j);

// Determinant of the 2 x 2 Gram matrix of {phi_j, S-hat^(j) v_+}; positive iff
// the two vectors are linearly independent.
double independence_gram_determinant(const ConnectionSet& s, int j);

}  // namespace qwiso
