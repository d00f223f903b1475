#include "qwiso/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qwiso/error.hpp"

namespace qwiso::oracle {

Polynomial char_poly_oracle(const WalkOperator& u, int max_dimension) {
  const int n = static_cast<int>(u.matrix.rows());
  if (n > max_dimension) {
    throw Error(ErrorCode::kTooLarge, "operator dimension " + std::to_string(n) + " exceeds " +
                                          std::to_string(max_dimension));
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u.matrix, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotUnitary, "full-operator eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return poly_from_roots(std::span(ev.data(), static_cast<std::size_t>(ev.size())), 1e-7);
}

bool brute_force_isomorphic(const Eigen::MatrixXi& a1, const Eigen::MatrixXi& a2, int max_order) {
  if (a1.rows() != a1.cols() || a2.rows() != a2.cols() || a1.rows() != a2.rows()) {
    throw Error(ErrorCode::kShapeMismatch, "adjacency matrices must be square and the same size");
  }
  const int n = static_cast<int>(a1.rows());
  if (n > max_order) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(n) + " vertices exceeds the brute-force limit " + std::to_string(max_order));
  }

  const Eigen::VectorXi d1 = a1.rowwise().sum();
  const Eigen::VectorXi d2 = a2.rowwise().sum();
  std::vector<int> s1(d1.data(), d1.data() + n);
  std::vector<int> s2(d2.data(), d2.data() + n);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return false;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (d1(u) != d2(perm[u])) ok = false;
      for (int v = 0; v < n && ok; ++v) ok = a1(u, v) == a2(perm[u], perm[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

OracleResult timed_char_poly(const WalkOperator& u) {
  const auto start = std::chrono::steady_clock::now();
  Polynomial poly = char_poly_oracle(u);
  return {OracleKind::kCharPoly, std::move(poly), std::chrono::steady_clock::now() - start};
}

OracleResult timed_isomorphism(const Eigen::MatrixXi& a1, const Eigen::MatrixXi& a2) {
  const auto start = std::chrono::steady_clock::now();
  const bool iso = brute_force_isomorphic(a1, a2);
  return {OracleKind::kIso, iso, std::chrono::steady_clock::now() - start};
}

}  // namespace qwiso::oracle
