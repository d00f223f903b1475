#include "qwiso/modp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwiso/error.hpp"

namespace qwiso {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(int p) : p_(p) {
  if (!is_prime(p) || p == 2) {
    throw Error(ErrorCode::kNotPrime, "modulus must be an odd prime, got " + std::to_string(p));
  }
}

int PrimeModulus::reduce(std::int64_t x) const noexcept {
  const std::int64_t r = x % p_;
  return static_cast<int>(r < 0 ? r + p_ : r);
}

std::complex<double> root_of_unity(int p, std::int64_t exponent) {
  std::int64_t r = exponent % p;
  if (r < 0) r += p;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / p;
  return {std::cos(angle), std::sin(angle)};
}

ConnectionSet::ConnectionSet(PrimeModulus modulus, std::vector<int> elements)
    : modulus_(modulus), elements_(std::move(elements)), position_(modulus.value(), -1) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    position_[elements_[i]] = static_cast<int>(i);
  }
}

ConnectionSet ConnectionSet::make(int p, std::span<const int> elements) {
  const PrimeModulus modulus(p);
  if (elements.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "connection set must be nonempty");
  }
  std::vector<int> normalized;
  normalized.reserve(elements.size());
  for (int e : elements) normalized.push_back(modulus.reduce(e));
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  if (normalized.front() == 0) {
    throw Error(ErrorCode::kZeroInSet, "0 is not allowed in a connection set mod " + std::to_string(p));
  }
  for (int s : normalized) {
    const int neg = modulus.negate(s);
    if (!std::binary_search(normalized.begin(), normalized.end(), neg)) {
      throw Error(ErrorCode::kNotSymmetric, "element " + std::to_string(s) + " present but -" +
                                                std::to_string(s) + " = " + std::to_string(neg) +
                                                " mod " + std::to_string(p) + " is missing");
    }
  }
  // p odd and s != -s for s != 0, so symmetry already pairs the elements up.
  return ConnectionSet(modulus, std::move(normalized));
}

bool ConnectionSet::contains(int s) const noexcept { return position(s) >= 0; }

int ConnectionSet::position(int s) const noexcept {
  if (s < 0 || s >= p()) return -1;
  return position_[s];
}

ConnectionSet ConnectionSet::scaled(int t) const {
  const int tr = modulus_.reduce(t);
  if (tr == 0) {
    throw Error(ErrorCode::kInvalidArgument, "multiplier must be coprime to p");
  }
  std::vector<int> image;
  image.reserve(elements_.size());
  for (int s : elements_) {
    image.push_back(modulus_.reduce(static_cast<std::int64_t>(tr) * s));
  }
  return make(p(), image);
}

ConnectionSet paley_connection_set(int p) {
  const PrimeModulus modulus(p);
  if (p % 4 != 1) {
    throw Error(ErrorCode::kNotCongruentOneModFour,
                "Paley graphs need p = 1 (mod 4), got " + std::to_string(p));
  }
  std::vector<int> squares;
  for (int x = 1; x < p; ++x) {
    squares.push_back(modulus.reduce(static_cast<std::int64_t>(x) * x));
  }
  return ConnectionSet::make(p, squares);
}

std::uint64_t count_symmetric_connection_sets(int p, int k) {
  const int pairs = (p - 1) / 2;
  const int choose = k / 2;
  if (choose < 0 || choose > pairs) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= choose; ++i) {
    result = result * static_cast<std::uint64_t>(pairs - choose + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::vector<ConnectionSet> symmetric_connection_sets(int p, int k) {
  const PrimeModulus modulus(p);
  const int pairs = (p - 1) / 2;
  if (k < 2 || k % 2 != 0 || k > p - 1) {
    throw Error(ErrorCode::kInvalidArgument, "symmetric sets over Z_" + std::to_string(p) +
                                                 " have even size in [2, " + std::to_string(p - 1) +
                                                 "], got " + std::to_string(k));
  }
  const int choose = k / 2;

  // Walk the combinations of negation pairs {s, p - s}, s in [1, pairs].
  std::vector<int> pick(choose);
  for (int i = 0; i < choose; ++i) pick[i] = i + 1;

  std::vector<ConnectionSet> out;
  out.reserve(count_symmetric_connection_sets(p, k));
  std::vector<int> elements;
  while (true) {
    elements.clear();
    for (int s : pick) {
      elements.push_back(s);
      elements.push_back(p - s);
    }
    out.push_back(ConnectionSet::make(p, elements));

    int i = choose - 1;
    while (i >= 0 && pick[i] == pairs - choose + i + 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int m = i + 1; m < choose; ++m) pick[m] = pick[m - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::MatrixXi adjacency_matrix(const CirculantGraph& g) {
  const ConnectionSet& s = g.connection_set();
  const int p = s.p();
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(p, p);
  for (int u = 0; u < p; ++u) {
    for (int e : s.elements()) {
      a(u, s.modulus().reduce(static_cast<std::int64_t>(u) + e)) = 1;
    }
  }
  return a;
}

std::optional<SrgParameters> srg_parameters(const CirculantGraph& g) {
  const Eigen::MatrixXi a = adjacency_matrix(g);
  const int n = g.order();
  const int k = g.degree();
  const Eigen::MatrixXi a2 = a * a;

  std::optional<int> lambda;
  std::optional<int> mu;
  for (int v = 1; v < n && !(lambda && mu); ++v) {
    if (a(0, v) == 1 && !lambda) lambda = a2(0, v);
    if (a(0, v) == 0 && !mu) mu = a2(0, v);
  }
  if (!lambda || !mu) return std::nullopt;

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      int expected;
      if (u == v) {
        expected = k;
      } else if (a(u, v) == 1) {
        expected = *lambda;
      } else {
        expected = *mu;
      }
      if (a2(u, v) != expected) return std::nullopt;
    }
  }
  return SrgParameters{n, k, *lambda, *mu};
}

FourierCoefficient fourier_coefficient(const ConnectionSet& s, int j) {
  const int p = s.p();
  if (j < 0 || j >= p) {
    throw Error(ErrorCode::kInvalidArgument,
                "frequency " + std::to_string(j) + " outside [0, " + std::to_string(p - 1) + "]");
  }
  std::complex<double> sum = 0.0;
  for (int e : s.elements()) {
    sum += root_of_unity(p, static_cast<std::int64_t>(j) * e);
  }
  if (std::abs(sum.imag()) > kFourierRealityTolerance) {
    throw Error(ErrorCode::kImaginaryResidualTooLarge,
                "imaginary part " + std::to_string(sum.imag()) + " at j = " + std::to_string(j));
  }
  return {j, sum.real()};
}

std::vector<double> fourier_coefficients(const ConnectionSet& s) {
  std::vector<double> out(s.p());
  for (int j = 0; j < s.p(); ++j) out[j] = fourier_coefficient(s, j).value;
  return out;
}

}  // namespace qwiso
