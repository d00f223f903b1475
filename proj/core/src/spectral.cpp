#include "qwiso/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "qwiso/error.hpp"

namespace qwiso {

namespace {

std::string describe(std::span<const std::complex<double>> values) {
  std::ostringstream out;
  out.precision(12);
  out << "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << values[i].real() << (values[i].imag() < 0 ? " - " : " + ") << std::abs(values[i].imag())
        << "i";
  }
  out << "]";
  return out.str();
}

void check_block_degree(int k) {
  if (k < 2) throw Error(ErrorCode::kDegreeTooSmall, "degree " + std::to_string(k));
  if (k % 2 != 0) throw Error(ErrorCode::kOddDegree, "degree " + std::to_string(k));
}

}  // namespace

BlockSpectrum block_spectrum(const FourierBlock& block, double tol_eig) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(block.matrix, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotUnitary, "eigensolver failed on block " + std::to_string(block.j));
  }
  BlockSpectrum out;
  out.j = block.j;
  const auto& ev = solver.eigenvalues();
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());

  std::vector<std::complex<double>> rest;
  for (const auto& lambda : out.eigenvalues) {
    if (std::abs(std::abs(lambda) - 1.0) > kUnitCircleTolerance) {
      throw Error(ErrorCode::kNotUnitary, "eigenvalue of modulus " + std::to_string(std::abs(lambda)) +
                                              " in block " + std::to_string(block.j));
    }
    if (std::abs(lambda - 1.0) <= tol_eig) {
      ++out.mult_plus_one;
    } else if (std::abs(lambda + 1.0) <= tol_eig) {
      ++out.mult_minus_one;
    } else {
      rest.push_back(lambda);
    }
  }
  if (rest.empty()) return out;

  // Greedy conjugate matching.
  std::vector<bool> used(rest.size(), false);
  std::vector<std::pair<std::complex<double>, std::complex<double>>> pairs;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::size_t best = rest.size();
    double best_distance = 0.0;
    for (std::size_t m = 0; m < rest.size(); ++m) {
      if (used[m]) continue;
      const double d = std::abs(rest[m] - std::conj(rest[i]));
      if (best == rest.size() || d < best_distance) {
        best = m;
        best_distance = d;
      }
    }
    if (best == rest.size() || best_distance > tol_eig) {
      throw Error(ErrorCode::kUnpairedEigenvalue, "block " + std::to_string(block.j) +
                                                      ": no conjugate partner among " + describe(rest));
    }
    used[best] = true;
    pairs.emplace_back(rest[i], rest[best]);
  }
  if (pairs.size() > 1) {
    throw Error(ErrorCode::kMoreThanOnePair,
                "block " + std::to_string(block.j) + " has " + std::to_string(pairs.size()) +
                    " conjugate pairs off +-1: " + describe(rest));
  }
  const double c = 0.5 * (pairs.front().first.real() + pairs.front().second.real());
  out.c = c;
  out.theta = std::acos(std::clamp(c, -1.0, 1.0));
  return out;
}

Polynomial spectrum_polynomial(const BlockSpectrum& spectrum) {
  return poly_from_roots(spectrum.eigenvalues);
}

Polynomial predicted_block_poly(double c, int k) {
  check_block_degree(k);
  if (!(c > -1.0 && c < 1.0)) {
    throw Error(ErrorCode::kCOutOfRange, "c = " + std::to_string(c) + " must lie in (-1, 1)");
  }
  const int half = (k - 2) / 2;
  return linear_power(1.0, half) * linear_power(-1.0, half) * Polynomial::monic({1.0, -2.0 * c, 1.0});
}

double recover_c(const FourierBlock& block, double tol_eig) {
  const BlockSpectrum spectrum = block_spectrum(block, tol_eig);
  if (!spectrum.c) {
    throw Error(ErrorCode::kDegenerateBlock,
                "block " + std::to_string(block.j) + " has no eigenvalue off +-1");
  }
  return *spectrum.c;
}

Polynomial block_char_poly(const FourierBlock& block) {
  return real_characteristic_polynomial(block.matrix);
}

Polynomial global_char_poly(std::span<const FourierBlock> blocks) {
  Polynomial out;
  for (const FourierBlock& b : blocks) out = out * block_char_poly(b);
  return out;
}

int global_plus_one_multiplicity(int p, int k) noexcept { return k / 2 + 1 + (p - 1) * (k - 2) / 2; }

int global_minus_one_multiplicity(int p, int k) noexcept { return k / 2 - 1 + (p - 1) * (k - 2) / 2; }

std::vector<CValueCluster> extract_c_multiset(const Polynomial& poly, int k, int p) {
  check_block_degree(k);
  if (poly.degree() != p * k) {
    throw Error(ErrorCode::kInvalidArgument, "expected degree " + std::to_string(p * k) + ", got " +
                                                 std::to_string(poly.degree()));
  }
  std::vector<std::complex<double>> roots = polynomial_roots(poly);

  auto drop_nearest = [&roots](double target, int count) {
    std::sort(roots.begin(), roots.end(), [target](const auto& a, const auto& b) {
      return std::abs(a - target) < std::abs(b - target);
    });
    roots.erase(roots.begin(), roots.begin() + count);
  };
  drop_nearest(1.0, global_plus_one_multiplicity(p, k));
  drop_nearest(-1.0, global_minus_one_multiplicity(p, k));

  std::vector<double> re;
  re.reserve(roots.size());
  for (const auto& r : roots) {
    if (std::abs(std::abs(r) - 1.0) > kRootUnitCircleSlack) {
      throw Error(ErrorCode::kPolynomialIllConditioned,
                  "root " + describe(std::span(&r, 1)) +
                      " is off the unit circle; the expanded polynomial no longer determines its roots");
    }
    re.push_back(r.real());
  }
  std::sort(re.begin(), re.end());

  std::vector<std::vector<double>> groups;
  for (double x : re) {
    if (groups.empty() || x - groups.back().back() > kClusterRadius) {
      groups.push_back({x});
    } else {
      groups.back().push_back(x);
    }
  }

  std::vector<CValueCluster> out;
  for (const auto& g : groups) {
    if (g.size() % 2 != 0) {
      throw Error(ErrorCode::kClusteringAmbiguous,
                  "cluster near c = " + std::to_string(g.front()) + " has an odd root count");
    }
    double sum = 0.0;
    for (double x : g) sum += x;
    out.push_back({sum / static_cast<double>(g.size()), static_cast<int>(g.size() / 2)});
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].c - out[i - 1].c < kClusterSeparationFactor * kClusterRadius) {
      throw Error(ErrorCode::kClusteringAmbiguous,
                  "cluster centers " + std::to_string(out[i - 1].c) + " and " + std::to_string(out[i].c) +
                      " are closer than " + std::to_string(kClusterSeparationFactor * kClusterRadius));
    }
  }
  return out;
}

}  // namespace qwiso
