#include <gtest/gtest.h>

#include <random>
#include <variant>

#include "qwiso/oracle.hpp"
#include "qwiso/recovery.hpp"
#include "test_support.hpp"

namespace qwiso {
namespace {

using testing::code_of;

TEST(CharPolyOracle, AgreesWithBlockRouteOnPaley) {
  for (int p : testing::kPaleyPrimes) {
    const CirculantGraph g(paley_connection_set(p));
    const auto oracle = oracle::char_poly_oracle(walk_operator(g));
    EXPECT_LE(relative_coefficient_distance(oracle, walk_char_poly(g)), 1e-6) << p;
  }
}

TEST(CharPolyOracle, AgreesOnRandomSetsProperty) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 10; ++trial) {
    const int p = std::array{7, 11, 13}[trial % 3];
    const CirculantGraph g(testing::random_symmetric_set(p, rng));
    EXPECT_LE(relative_coefficient_distance(oracle::char_poly_oracle(walk_operator(g)), walk_char_poly(g)), 1e-6);
  }
}

TEST(CharPolyOracle, SizeLimit) {
  const auto w = walk_operator(CirculantGraph(paley_connection_set(13)));
  EXPECT_EQ(code_of([&] { oracle::char_poly_oracle(w, 50); }), ErrorCode::kTooLarge);
}

TEST(BruteForce, SmallGraphs) {
  const auto c5 = adjacency_matrix(CirculantGraph(ConnectionSet::make(5, {1, 4})));
  const auto c5b = adjacency_matrix(CirculantGraph(ConnectionSet::make(5, {2, 3})));
  EXPECT_TRUE(oracle::brute_force_isomorphic(c5, c5b));

  // C7 against the two-cycle-free 4-regular circulant: different degrees.
  const auto c7 = adjacency_matrix(CirculantGraph(ConnectionSet::make(7, {1, 6})));
  const auto k7 = adjacency_matrix(CirculantGraph(ConnectionSet::make(7, {1, 2, 5, 6})));
  EXPECT_FALSE(oracle::brute_force_isomorphic(c7, k7));

  // Same degree sequence, not isomorphic: C6 against two triangles.
  Eigen::MatrixXi hexagon = Eigen::MatrixXi::Zero(6, 6);
  Eigen::MatrixXi triangles = Eigen::MatrixXi::Zero(6, 6);
  for (int u = 0; u < 6; ++u) {
    hexagon(u, (u + 1) % 6) = hexagon((u + 1) % 6, u) = 1;
    const int base = u < 3 ? 0 : 3;
    triangles(u, base + (u - base + 1) % 3) = triangles(base + (u - base + 1) % 3, u) = 1;
  }
  EXPECT_FALSE(oracle::brute_force_isomorphic(hexagon, triangles));
  EXPECT_TRUE(oracle::brute_force_isomorphic(triangles, triangles));
}

TEST(BruteForce, Errors) {
  const Eigen::MatrixXi a = Eigen::MatrixXi::Zero(3, 3);
  const Eigen::MatrixXi b = Eigen::MatrixXi::Zero(4, 4);
  EXPECT_EQ(code_of([&] { oracle::brute_force_isomorphic(a, b); }), ErrorCode::kShapeMismatch);
  const Eigen::MatrixXi big = Eigen::MatrixXi::Zero(9, 9);
  EXPECT_EQ(code_of([&] { oracle::brute_force_isomorphic(big, big); }), ErrorCode::kTooLarge);
}

TEST(Timed, ResultsCarryPayloadAndCost) {
  const auto w = walk_operator(CirculantGraph(ConnectionSet::make(5, {1, 4})));
  const auto r = oracle::timed_char_poly(w);
  EXPECT_EQ(r.kind, oracle::OracleKind::kCharPoly);
  ASSERT_TRUE(std::holds_alternative<Polynomial>(r.payload));
  EXPECT_EQ(std::get<Polynomial>(r.payload).degree(), 10);
  EXPECT_GE(r.cost.count(), 0.0);

  const auto a = adjacency_matrix(CirculantGraph(ConnectionSet::make(7, {1, 6})));
  const auto b = adjacency_matrix(CirculantGraph(ConnectionSet::make(7, {3, 4})));
  const auto iso = oracle::timed_isomorphism(a, b);
  EXPECT_EQ(iso.kind, oracle::OracleKind::kIso);
  EXPECT_TRUE(std::get<bool>(iso.payload));
}

}  // namespace
}  // namespace qwiso
