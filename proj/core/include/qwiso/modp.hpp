#pragma once

// Arithmetic over Z_p, connection sets and circulant graphs of prime order.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace qwiso {

// Deterministic trial division.
bool is_prime(std::int64_t n) noexcept;

// An odd prime modulus. Construction throws Error(kNotPrime) otherwise.
class PrimeModulus {
 public:
  explicit PrimeModulus(int p);

  int value() const noexcept { return p_; }
  // Canonical representative in [0, p).
  int reduce(std::int64_t x) const noexcept;
  int negate(int x) const noexcept { return reduce(-static_cast<std::int64_t>(x)); }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  int p_;
};

// omega^exponent with omega = exp(2 pi i / p). The exponent is reduced mod p
// before the trigonometric evaluation so the phase stays in [0, 2 pi).
std::complex<double> root_of_unity(int p, std::int64_t exponent);

// Symmetric subset S of Z_p \ {0}, stored as sorted representatives in [1, p-1].
// Equality is structural on that normal form.
class ConnectionSet {
 public:
  // Reduces mod p, sorts and deduplicates. Throws kNotPrime, kZeroInSet,
  // kNotSymmetric (naming the element whose negation is missing) or
  // kInvalidArgument for an empty set.
  static ConnectionSet make(int p, std::span<const int> elements);
  static ConnectionSet make(int p, std::initializer_list<int> elements) {
    return make(p, std::span<const int>(elements.begin(), elements.size()));
  }

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  int p() const noexcept { return modulus_.value(); }
  int degree() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const noexcept { return elements_; }

  bool contains(int s) const noexcept;
  // Index of s in the sorted element list, or -1.
  int position(int s) const noexcept;

  // {t s mod p : s in S}. Requires gcd(t, p) = 1.
  ConnectionSet scaled(int t) const;

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
    return a.modulus_ == b.modulus_ && a.elements_ == b.elements_;
  }
  friend bool operator<(const ConnectionSet& a, const ConnectionSet& b) {
    if (a.p() != b.p()) return a.p() < b.p();
    return a.elements_ < b.elements_;
  }

 private:
  ConnectionSet(PrimeModulus modulus, std::vector<int> elements);

  PrimeModulus modulus_;
  std::vector<int> elements_;
  std::vector<int> position_;  // size p, -1 for non-members
};

inline ConnectionSet make_connection_set(int p, std::span<const int> elements) {
  return ConnectionSet::make(p, elements);
}

// Nonzero quadratic residues mod p. Requires p prime and p = 1 (mod 4).
ConnectionSet paley_connection_set(int p);

// Every symmetric connection set of size k over Z_p, in lexicographic order
// of the sorted element lists. k must be even with 2 <= k <= p - 1.
std::vector<ConnectionSet> symmetric_connection_sets(int p, int k);

// Number of sets symmetric_connection_sets(p, k) would return.
std::uint64_t count_symmetric_connection_sets(int p, int k);

class CirculantGraph {
 public:
  explicit CirculantGraph(ConnectionSet connection_set)
      : connection_set_(std::move(connection_set)) {}

  const ConnectionSet& connection_set() const noexcept { return connection_set_; }
  int order() const noexcept { return connection_set_.p(); }
  int degree() const noexcept { return connection_set_.degree(); }

 private:
  ConnectionSet connection_set_;
};

struct SrgParameters {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  // k (k - lambda - 1) = (n - k - 1) mu
  bool feasible() const noexcept {
    return k * (k - lambda - 1) == (n - k - 1) * mu;
  }

  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

// A[u][v] = 1 iff v - u mod p lies in S.
Eigen::MatrixXi adjacency_matrix(const CirculantGraph& g);

// Checks A^2 = k I + lambda A + mu (J - I - A) exactly over the integers.
// Returns nullopt when the identity fails, and for the complete graph, which
// has no non-adjacent pair to fix mu.
std::optional<SrgParameters> srg_parameters(const CirculantGraph& g);

struct FourierCoefficient {
  int j = 0;
  double value = 0.0;
};

// Sum over s in S of omega^{j s}, with the imaginary part checked against
// kFourierRealityTolerance before being dropped.
inline constexpr double kFourierRealityTolerance = 1e-10;
FourierCoefficient fourier_coefficient(const ConnectionSet& s, int j);

// All p coefficients, index j.
std::vector<double> fourier_coefficients(const ConnectionSet& s);

}  // namespace qwiso
