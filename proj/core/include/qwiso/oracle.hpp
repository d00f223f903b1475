#pragma once

// Brute-force ground truth for tests and cross-checks. Size-guarded; not
// meant for production-scale inputs.

#include <chrono>
#include <variant>

#include <Eigen/Core>

#include "qwiso/polynomial.hpp"
#include "qwiso/walk.hpp"

namespace qwiso::oracle {

inline constexpr int kMaxCharPolyDimension = 1000;
inline constexpr int kMaxBruteForceOrder = 8;

// Eigendecomposes the whole pk x pk operator and builds the monic polynomial
// from its eigenvalue multiset. Throws kTooLarge above max_dimension.
Polynomial char_poly_oracle(const WalkOperator& u, int max_dimension = kMaxCharPolyDimension);

// Exhaustive search over vertex permutations, after comparing sorted degree
// sequences. Throws kShapeMismatch for non-square or differently sized
// inputs and kTooLarge above max_order vertices.
bool brute_force_isomorphic(const Eigen::MatrixXi& a1, const Eigen::MatrixXi& a2,
                            int max_order = kMaxBruteForceOrder);

enum class OracleKind { kCharPoly, kIso };

struct OracleResult {
  OracleKind kind;
  std::variant<Polynomial, bool> payload;
  std::chrono::duration<double> cost;
};

OracleResult timed_char_poly(const WalkOperator& u);
OracleResult timed_isomorphism(const Eigen::MatrixXi& a1, const Eigen::MatrixXi& a2);

}  // namespace qwiso::oracle
