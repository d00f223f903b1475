#pragma once

// Coined quantum walk U_G = S_sh (I_p (x) C) on C^p (x) C^k.

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qwiso/modp.hpp"

namespace qwiso {

// |u, s> sits at index u * k + (position of s among the sorted elements of S).
class BasisOrdering {
 public:
  explicit BasisOrdering(ConnectionSet connection_set);

  int p() const noexcept { return coins_.p(); }
  int k() const noexcept { return coins_.degree(); }
  int dimension() const noexcept { return p() * k(); }
  const std::vector<int>& coin_order() const noexcept { return coins_.elements(); }
  const ConnectionSet& connection_set() const noexcept { return coins_; }

  int index(int u, int s) const;
  std::pair<int, int> vertex_and_coin(int index) const;

 private:
  ConnectionSet coins_;
};

struct GroverCoin {
  int k = 0;
  Eigen::MatrixXd matrix;
};

// (2/k) 1 1^T - I_k. Throws kDegreeTooSmall for k < 2 and kOddDegree for odd k.
GroverCoin grover_coin(int k);

// Index image of the shift |u, s> -> |u + s, -s>: column j of the permutation
// matrix has its single one in row shift_permutation(g)[j].
std::vector<int> shift_permutation(const CirculantGraph& g);
Eigen::MatrixXd shift_operator(const CirculantGraph& g);

struct WalkOperator {
  BasisOrdering ordering;
  Eigen::MatrixXcd matrix;
};

WalkOperator walk_operator(const CirculantGraph& g);

}  // namespace qwiso
