#include "qwiso/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwiso/error.hpp"
#include "qwiso/fourier.hpp"
#include "qwiso/parallel.hpp"
#include "qwiso/walk.hpp"

namespace qwiso {

RecoveryReport recover_connection_set(std::span<const double> c_values, int p, int k) {
  const PrimeModulus modulus(p);
  if (static_cast<int>(c_values.size()) != p) {
    throw Error(ErrorCode::kInvalidArgument, "expected " + std::to_string(p) + " c values, got " +
                                                 std::to_string(c_values.size()));
  }
  if (c_values[0] != 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "c_0 must be 1");
  }
  for (double c : c_values) {
    if (!(std::abs(c) <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "|c| must not exceed 1, got " + std::to_string(c));
    }
  }

  std::vector<double> indicator(p);
  for (int u = 0; u < p; ++u) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < p; ++j) {
      acc += k * c_values[j] * root_of_unity(p, -static_cast<std::int64_t>(j) * u);
    }
    indicator[u] = acc.real() / p;
  }

  if (std::abs(indicator[0]) > kMaxRoundingResidual) {
    throw Error(ErrorCode::kNonzeroAtOrigin,
                "indicator at u = 0 is " + std::to_string(indicator[0]));
  }
  double residual = 0.0;
  std::vector<int> members;
  for (int u = 0; u < p; ++u) {
    const double x = indicator[u];
    const double distance = std::min(std::abs(x), std::abs(x - 1.0));
    if (distance > kMaxRoundingResidual) {
      throw Error(ErrorCode::kRoundingResidualTooLarge,
                  "indicator at u = " + std::to_string(u) + " is " + std::to_string(x));
    }
    residual = std::max(residual, distance);
    if (std::abs(x - 1.0) < std::abs(x)) members.push_back(u);
  }
  if (static_cast<int>(members.size()) != k) {
    throw Error(ErrorCode::kWrongCardinality, "recovered " + std::to_string(members.size()) +
                                                  " elements, expected " + std::to_string(k));
  }
  return RecoveryReport{p, k, {c_values.begin(), c_values.end()}, ConnectionSet::make(p, members),
                        residual};
}

std::optional<int> turner_isomorphic(const ConnectionSet& s1, const ConnectionSet& s2) {
  if (s1.p() != s2.p()) {
    throw Error(ErrorCode::kModulusMismatch,
                "moduli " + std::to_string(s1.p()) + " and " + std::to_string(s2.p()));
  }
  if (s1.degree() != s2.degree()) {
    throw Error(ErrorCode::kDegreeMismatch,
                "degrees " + std::to_string(s1.degree()) + " and " + std::to_string(s2.degree()));
  }
  const PrimeModulus& mod = s1.modulus();
  for (int t = 1; t < s1.p(); ++t) {
    const bool maps = std::all_of(s1.elements().begin(), s1.elements().end(), [&](int s) {
      return s2.contains(mod.reduce(static_cast<std::int64_t>(t) * s));
    });
    if (maps) return t;
  }
  return std::nullopt;
}

std::vector<int> multiplier_permutation(int p, int t) {
  const PrimeModulus mod(p);
  std::vector<int> perm(p);
  for (int u = 0; u < p; ++u) perm[u] = mod.reduce(static_cast<std::int64_t>(t) * u);
  return perm;
}

Polynomial walk_char_poly(const CirculantGraph& g) {
  const BlockDecomposition d = block_decompose(walk_operator(g));
  return global_char_poly(d.blocks);
}

IsoVerdict decide_isomorphism(const ConnectionSet& s1, const Polynomial& chi1, const ConnectionSet& s2,
                              const Polynomial& chi2, double relative_tolerance) {
  if (s1.p() != s2.p()) {
    throw Error(ErrorCode::kModulusMismatch,
                "moduli " + std::to_string(s1.p()) + " and " + std::to_string(s2.p()));
  }
  IsoVerdict v;
  v.spectral_equal = relative_coefficient_distance(chi1, chi2) <= relative_tolerance;
  if (s1.degree() == s2.degree()) v.witness_multiplier = turner_isomorphic(s1, s2);
  v.isomorphic = v.witness_multiplier.has_value();
  v.method_agreement = v.spectral_equal == v.isomorphic;
  return v;
}

IsoVerdict decide_isomorphism(const CirculantGraph& g1, const CirculantGraph& g2,
                              double relative_tolerance) {
  if (g1.order() != g2.order()) {
    throw Error(ErrorCode::kModulusMismatch,
                "orders " + std::to_string(g1.order()) + " and " + std::to_string(g2.order()));
  }
  return decide_isomorphism(g1.connection_set(), walk_char_poly(g1), g2.connection_set(),
                            walk_char_poly(g2), relative_tolerance);
}

std::vector<double> spectral_c_values(const CirculantGraph& g, double tol_eig) {
  const BlockDecomposition d = block_decompose(walk_operator(g));
  std::vector<double> c(g.order(), 1.0);
  parallel_for(d.blocks.size() - 1, [&](std::size_t i) { c[i + 1] = recover_c(d.blocks[i + 1], tol_eig); });
  return c;
}

RecoveryReport full_pipeline_from_spectra(const CirculantGraph& g, double tol_eig) {
  const std::vector<double> c = spectral_c_values(g, tol_eig);
  RecoveryReport report = recover_connection_set(c, g.order(), g.degree());
  if (!(report.recovered_set == g.connection_set())) {
    throw Error(ErrorCode::kRecoveredSetMismatch, "spectral recovery returned a different set");
  }
  return report;
}

}  // namespace qwiso
