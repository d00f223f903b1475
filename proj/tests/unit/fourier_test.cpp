#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwiso/fourier.hpp"
#include "test_support.hpp"

namespace qwiso {
namespace {

using testing::code_of;
using testing::kPaleyPrimes;

TEST(Dft, ThreePoint) {
  const auto f = dft_matrix(PrimeModulus(3)).matrix;
  const double r = 1.0 / std::sqrt(3.0);
  const std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi / 3);
  EXPECT_NEAR(std::abs(f(0, 0) - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f(1, 1) - w * r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f(2, 1) - w * w * r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f(2, 2) - w * r), 0.0, 1e-15);
}

TEST(Dft, UnitarySymmetric) {
  for (int p : {5, 13, 41}) {
    const auto f = dft_matrix(PrimeModulus(p)).matrix;
    EXPECT_LT((f * f.adjoint() - Eigen::MatrixXcd::Identity(p, p)).norm(), 1e-12) << p;
    EXPECT_LT((f - f.transpose()).norm(), 1e-14) << p;
  }
}

TEST(BlockDecompose, PaleyResidualAndUnitaryBlocks) {
  for (int p : {13, 17}) {
    const CirculantGraph g(paley_connection_set(p));
    const auto d = block_decompose(walk_operator(g));
    EXPECT_LE(d.off_diagonal_residual, 1e-10) << p;
    ASSERT_EQ(static_cast<int>(d.blocks.size()), p);
    const int k = g.degree();
    for (const auto& b : d.blocks) {
      EXPECT_EQ(b.matrix.rows(), k);
      EXPECT_LT((b.matrix.adjoint() * b.matrix - Eigen::MatrixXcd::Identity(k, k)).norm(), 1e-12);
    }
  }
}

TEST(BlockDecompose, MatchesDirectBlocksOnAllPaley) {
  for (int p : kPaleyPrimes) {
    const CirculantGraph g(paley_connection_set(p));
    const auto d = block_decompose(walk_operator(g));
    const auto direct = blocks_direct(g);
    double worst = 0.0;
    for (int j = 0; j < p; ++j) {
      EXPECT_EQ(d.blocks[j].j, j);
      worst = std::max(worst, (d.blocks[j].matrix - direct[j].matrix).cwiseAbs().maxCoeff());
    }
    EXPECT_LE(worst, 1e-10) << p;
  }
}

TEST(BlockDecompose, TraceIsPreservedProperty) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const int p = std::array{7, 11, 13}[trial % 3];
    const CirculantGraph g(testing::random_symmetric_set(p, rng));
    const auto w = walk_operator(g);
    const auto d = block_decompose(w);
    std::complex<double> trace = 0.0;
    for (const auto& b : d.blocks) trace += b.matrix.trace();
    EXPECT_NEAR(std::abs(trace - w.matrix.trace()), 0.0, 1e-10);
  }
}

TEST(BlockDecompose, ScrambledOperatorIsRejected) {
  auto w = walk_operator(CirculantGraph(paley_connection_set(13)));
  w.matrix(0, 3 * 6) += 0.25;
  EXPECT_EQ(code_of([&] { block_decompose(w); }), ErrorCode::kResidualTooLarge);
  // A loose enough threshold lets it through with the residual reported.
  const auto d = block_decompose(w, 1.0);
  EXPECT_GT(d.off_diagonal_residual, 0.1);
}

TEST(ShiftBlock, Entries) {
  const auto s = paley_connection_set(13);
  const int j = 2;
  const auto shat = shift_block(s, j);
  for (int col = 0; col < s.degree(); ++col) {
    const int e = s.elements()[col];
    const int row = s.position(13 - e);
    EXPECT_NEAR(std::abs(shat(row, col) - root_of_unity(13, j * e)), 0.0, 1e-15);
    EXPECT_NEAR(shat.col(col).cwiseAbs().sum(), 1.0, 1e-15);
  }
  EXPECT_EQ(code_of([&] { shift_block(s, 13); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { shift_block(s, -1); }), ErrorCode::kInvalidArgument);
}

TEST(ShiftBlock, ZeroFrequencyIsTheInversionPermutation) {
  const auto s = paley_connection_set(17);
  const auto shat = shift_block(s, 0);
  EXPECT_LT(shat.imag().norm(), 1e-15);
  for (int col = 0; col < s.degree(); ++col) {
    EXPECT_DOUBLE_EQ(shat(s.position(17 - s.elements()[col]), col).real(), 1.0);
  }
}

TEST(ShiftBlock, SquaresToIdentity) {
  // (S^)^2 = I because omega^{j s} omega^{-j s} = 1.
  for (int p : kPaleyPrimes) {
    const auto s = paley_connection_set(p);
    const int k = s.degree();
    for (int j = 0; j < p; ++j) {
      const auto shat = shift_block(s, j);
      EXPECT_LT((shat * shat - Eigen::MatrixXcd::Identity(k, k)).norm(), 1e-12);
    }
  }
}

TEST(Overlaps, UniformStateGivesTheFourierCoefficient) {
  // <v+| S^ |v+> = A-hat(j) / k holds for every j and every set.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = std::array{13, 17, 29, 41}[trial % 4];
    const auto s = testing::random_symmetric_set(p, rng);
    for (int j = 0; j < p; ++j) {
      const auto z = coin_shift_overlap(s, j);
      EXPECT_NEAR(z.real(), testing::naive_fourier(s, j) / s.degree(), 1e-12);
      EXPECT_NEAR(z.imag(), 0.0, 1e-12);
    }
  }
}

TEST(Overlaps, FourierModeOverlapIsTheTripledFrequency) {
  // <phi_j| S^ |phi_j> = A-hat(3 j) / k. This coincides with A-hat(j) / k on
  // Paley sets exactly when 3 is a square mod p.
  for (int p : kPaleyPrimes) {
    const auto s = paley_connection_set(p);
    const bool three_is_square = s.contains(3);
    double worst_against_j = 0.0;
    for (int j = 1; j < p; ++j) {
      const auto z = key_identity_value(s, j);
      EXPECT_NEAR(z.real(), testing::naive_fourier(s, 3 * j) / s.degree(), 1e-12);
      EXPECT_NEAR(z.imag(), 0.0, 1e-12);
      worst_against_j = std::max(worst_against_j, std::abs(z.real() - testing::naive_fourier(s, j) / s.degree()));
    }
    if (three_is_square) {
      EXPECT_LT(worst_against_j, 1e-12) << p;
    } else {
      EXPECT_GT(worst_against_j, 0.3) << p;
    }
  }
  EXPECT_TRUE(paley_connection_set(13).contains(3));
  EXPECT_FALSE(paley_connection_set(17).contains(3));
}

TEST(Overlaps, GramDeterminantIsPositiveOffZero) {
  for (int p : kPaleyPrimes) {
    const auto s = paley_connection_set(p);
    for (int j = 1; j < p; ++j) EXPECT_GT(independence_gram_determinant(s, j), 1e-6) << p << " " << j;
  }
}

TEST(Modes, Normalized) {
  const auto s = paley_connection_set(29);
  EXPECT_NEAR(fourier_mode(s, 4).norm(), 1.0, 1e-14);
  EXPECT_NEAR(uniform_coin_state(14).norm(), 1.0, 1e-14);
}

}  // namespace
}  // namespace qwiso
