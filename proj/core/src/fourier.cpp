#include "qwiso/fourier.hpp"

#include <cmath>
#include <string>

#include "qwiso/error.hpp"
#include "qwiso/parallel.hpp"

namespace qwiso {

namespace {

void check_frequency(const ConnectionSet& s, int j) {
  if (j < 0 || j >= s.p()) {
    throw Error(ErrorCode::kInvalidArgument,
                "frequency " + std::to_string(j) + " outside [0, " + std::to_string(s.p() - 1) + "]");
  }
}

}  // namespace

DftMatrix dft_matrix(const PrimeModulus& modulus) {
  const int p = modulus.value();
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  DftMatrix f{p, Eigen::MatrixXcd(p, p)};
  for (int j = 0; j < p; ++j) {
    for (int u = 0; u < p; ++u) {
      f.matrix(j, u) = root_of_unity(p, static_cast<std::int64_t>(j) * u) * scale;
    }
  }
  return f;
}

BlockDecomposition block_decompose(const WalkOperator& u, double max_residual) {
  const int p = u.ordering.p();
  const int k = u.ordering.k();
  const int n = u.ordering.dimension();
  const DftMatrix f = dft_matrix(u.ordering.connection_set().modulus());

  Eigen::MatrixXcd extended = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < p; ++j) {
    for (int v = 0; v < p; ++v) {
      for (int c = 0; c < k; ++c) extended(j * k + c, v * k + c) = f.matrix(j, v);
    }
  }
  const Eigen::MatrixXcd conjugated = extended * u.matrix * extended.adjoint();

  BlockDecomposition out;
  out.blocks.reserve(p);
  for (int j = 0; j < p; ++j) {
    out.blocks.push_back(FourierBlock{j, conjugated.block(j * k, j * k, k, k)});
  }
  // Summed block by block rather than as total minus diagonal, which would cancel.
  double outside = 0.0;
  for (int bj = 0; bj < p; ++bj) {
    for (int bi = 0; bi < p; ++bi) {
      if (bi == bj) continue;
      outside += conjugated.block(bi * k, bj * k, k, k).squaredNorm();
    }
  }
  out.off_diagonal_residual = std::sqrt(outside);
  if (out.off_diagonal_residual > max_residual) {
    throw Error(ErrorCode::kResidualTooLarge,
                "off-diagonal residual " + std::to_string(out.off_diagonal_residual) +
                    " exceeds " + std::to_string(max_residual));
  }
  return out;
}

Eigen::MatrixXcd shift_block(const ConnectionSet& s, int j) {
  check_frequency(s, j);
  const int k = s.degree();
  Eigen::MatrixXcd shat = Eigen::MatrixXcd::Zero(k, k);
  for (int col = 0; col < k; ++col) {
    const int e = s.elements()[col];
    shat(s.position(s.modulus().negate(e)), col) =
        root_of_unity(s.p(), static_cast<std::int64_t>(j) * e);
  }
  return shat;
}

FourierBlock block_direct(const CirculantGraph& g, int j) {
  const ConnectionSet& s = g.connection_set();
  const GroverCoin coin = grover_coin(s.degree());
  return FourierBlock{j, shift_block(s, j) * coin.matrix.cast<std::complex<double>>()};
}

std::vector<FourierBlock> blocks_direct(const CirculantGraph& g) {
  std::vector<FourierBlock> blocks(g.order());
  parallel_for(blocks.size(), [&](std::size_t j) { blocks[j] = block_direct(g, static_cast<int>(j)); });
  return blocks;
}

Eigen::VectorXcd fourier_mode(const ConnectionSet& s, int j) {
  check_frequency(s, j);
  const int k = s.degree();
  Eigen::VectorXcd phi(k);
  for (int i = 0; i < k; ++i) {
    phi(i) = root_of_unity(s.p(), static_cast<std::int64_t>(j) * s.elements()[i]);
  }
  return phi / std::sqrt(static_cast<double>(k));
}

Eigen::VectorXcd uniform_coin_state(int k) {
  return Eigen::VectorXcd::Constant(k, 1.0 / std::sqrt(static_cast<double>(k)));
}

std::complex<double> key_identity_value(const ConnectionSet& s, int j) {
  const Eigen::VectorXcd phi = fourier_mode(s, j);
  return phi.dot(shift_block(s, j) * phi);
}

std::complex<double> coin_shift_overlap(const ConnectionSet& s, int j) {
  const Eigen::VectorXcd v = uniform_coin_state(s.degree());
  return v.dot(shift_block(s, j) * v);
}

double independence_gram_determinant(const ConnectionSet& s, int j) {
  const Eigen::VectorXcd a = fourier_mode(s, j);
  const Eigen::VectorXcd b = shift_block(s, j) * uniform_coin_state(s.degree());
  const double aa = a.squaredNorm();
  const double bb = b.squaredNorm();
  return aa * bb - std::norm(a.dot(b));
}

}  // namespace qwiso
