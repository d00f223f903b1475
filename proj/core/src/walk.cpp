#include "qwiso/walk.hpp"

#include <string>

#include "qwiso/error.hpp"

namespace qwiso {

BasisOrdering::BasisOrdering(ConnectionSet connection_set) : coins_(std::move(connection_set)) {}

int BasisOrdering::index(int u, int s) const {
  const int pos = coins_.position(s);
  if (u < 0 || u >= p() || pos < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "no basis state |" + std::to_string(u) + ", " + std::to_string(s) + ">");
  }
  return u * k() + pos;
}

std::pair<int, int> BasisOrdering::vertex_and_coin(int index) const {
  if (index < 0 || index >= dimension()) {
    throw Error(ErrorCode::kInvalidArgument, "basis index " + std::to_string(index) + " out of range");
  }
  return {index / k(), coin_order()[index % k()]};
}

GroverCoin grover_coin(int k) {
  if (k < 2) {
    throw Error(ErrorCode::kDegreeTooSmall, "Grover coin needs k >= 2, got " + std::to_string(k));
  }
  if (k % 2 != 0) {
    throw Error(ErrorCode::kOddDegree, "Grover coin degree must be even, got " + std::to_string(k));
  }
  GroverCoin coin{k, Eigen::MatrixXd::Constant(k, k, 2.0 / k)};
  coin.matrix.diagonal().array() -= 1.0;
  return coin;
}

std::vector<int> shift_permutation(const CirculantGraph& g) {
  const BasisOrdering ordering(g.connection_set());
  const PrimeModulus& mod = g.connection_set().modulus();
  std::vector<int> image(ordering.dimension());
  for (int u = 0; u < ordering.p(); ++u) {
    for (int s : ordering.coin_order()) {
      image[ordering.index(u, s)] = ordering.index(mod.reduce(u + s), mod.negate(s));
    }
  }
  return image;
}

Eigen::MatrixXd shift_operator(const CirculantGraph& g) {
  const std::vector<int> image = shift_permutation(g);
  const int n = static_cast<int>(image.size());
  Eigen::MatrixXd shift = Eigen::MatrixXd::Zero(n, n);
  for (int col = 0; col < n; ++col) shift(image[col], col) = 1.0;
  return shift;
}

WalkOperator walk_operator(const CirculantGraph& g) {
  BasisOrdering ordering(g.connection_set());
  const GroverCoin coin = grover_coin(ordering.k());
  const std::vector<int> image = shift_permutation(g);
  const int k = ordering.k();
  const int n = ordering.dimension();

  // S_sh (I (x) C): column (u, s) of the coin layer is C's column s placed in
  // vertex block u; the shift then permutes its rows.
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
  for (int vertex = 0; vertex < ordering.p(); ++vertex) {
    for (int col = 0; col < k; ++col) {
      for (int row = 0; row < k; ++row) {
        u(image[vertex * k + row], vertex * k + col) = coin.matrix(row, col);
      }
    }
  }
  return WalkOperator{std::move(ordering), std::move(u)};
}

}  // namespace qwiso
