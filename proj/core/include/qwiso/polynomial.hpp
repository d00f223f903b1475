#pragma once

// Dense real polynomials in ascending-power form, with the handful of
// operations the characteristic-polynomial routes need.

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace qwiso {

// Monic real polynomial; coefficients()[i] multiplies lambda^i.
class Polynomial {
 public:
  Polynomial() : coeffs_{1.0} {}

  // Throws kInvalidArgument unless the last coefficient is exactly 1.
  static Polynomial monic(std::vector<double> ascending);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  double operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  double max_abs_coefficient() const noexcept;

  std::complex<double> evaluate(std::complex<double> x) const noexcept;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  explicit Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) {}

  std::vector<double> coeffs_;
};

// Coefficient convolution.
Polynomial multiply(const Polynomial& a, const Polynomial& b);

// (lambda - root)^multiplicity for a real root.
Polynomial linear_power(double root, int multiplicity);

// max_i |a_i - b_i| / max(max |a_i|, max |b_i|); infinity when degrees differ.
double relative_coefficient_distance(const Polynomial& a, const Polynomial& b);

// Monic polynomial with the given roots. The product is evaluated at N
// rotated N-th roots of unity (N = degree + 1) and the coefficients are read
// back with an inverse DFT, which stays accurate for hundreds of roots on the
// unit circle where sequential multiplication of linear factors does not.
// Imaginary parts above imag_tolerance * max(1, max |a_i|) throw
// kImaginaryResidualTooLarge; the rest are dropped.
Polynomial poly_from_roots(std::span<const std::complex<double>> roots,
                           double imag_tolerance = 1e-7);

// Roots as eigenvalues of the balanced companion matrix.
std::vector<std::complex<double>> polynomial_roots(const Polynomial& poly);

// det(lambda I - M) through an upper Hessenberg reduction and the Hessenberg
// determinant recurrence. Complex coefficients, ascending, monic.
std::vector<std::complex<double>> characteristic_coefficients(const Eigen::MatrixXcd& m);

// characteristic_coefficients with the imaginary parts checked and dropped.
Polynomial real_characteristic_polynomial(const Eigen::MatrixXcd& m,
                                          double imag_tolerance = 1e-9);

}  // namespace qwiso
