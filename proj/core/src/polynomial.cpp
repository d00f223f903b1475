#include "qwiso/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "qwiso/error.hpp"

namespace qwiso {

namespace {

std::vector<double> drop_imaginary(const std::vector<std::complex<double>>& c, double tolerance) {
  double scale = 1.0;
  for (const auto& z : c) scale = std::max(scale, std::abs(z.real()));
  std::vector<double> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::abs(c[i].imag()) > tolerance * scale) {
      throw Error(ErrorCode::kImaginaryResidualTooLarge,
                  "coefficient " + std::to_string(i) + " has imaginary part " +
                      std::to_string(c[i].imag()));
    }
    out[i] = c[i].real();
  }
  out.back() = 1.0;
  return out;
}

// Parlett-Reinsch balancing of a matrix whose diagonal is ignored in the norms.
void balance(Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  constexpr double kGamma = 0.9;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      const double row = m.row(i).lpNorm<1>() - std::abs(m(i, i));
      const double col = m.col(i).lpNorm<1>() - std::abs(m(i, i));
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_row = std::ldexp(row, -exponent);
      const double scaled_col = std::ldexp(col, exponent);
      if (scaled_row + scaled_col < kGamma * (row + col)) {
        changed = true;
        m.row(i) *= std::ldexp(1.0, -exponent);
        m.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  }
}

}  // namespace

Polynomial Polynomial::monic(std::vector<double> ascending) {
  if (ascending.empty() || ascending.back() != 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "polynomial must be monic");
  }
  return Polynomial(std::move(ascending));
}

double Polynomial::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

std::complex<double> Polynomial::evaluate(std::complex<double> x) const noexcept {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial linear_power(double root, int multiplicity) {
  Polynomial out;
  const Polynomial factor = Polynomial::monic({-root, 1.0});
  for (int i = 0; i < multiplicity; ++i) out = out * factor;
  return out;
}

double relative_coefficient_distance(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return std::numeric_limits<double>::infinity();
  const double scale = std::max(a.max_abs_coefficient(), b.max_abs_coefficient());
  double worst = 0.0;
  for (int i = 0; i <= a.degree(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst / scale;
}

Polynomial poly_from_roots(std::span<const std::complex<double>> roots, double imag_tolerance) {
  const std::size_t degree = roots.size();
  if (degree == 0) return Polynomial();
  const std::size_t n = degree + 1;
  const double step = std::numbers::pi / static_cast<double>(n);

  // z_m = exp(i pi (2m + 1) / n); the half-step rotation keeps the samples
  // off +1 and -1, where walk polynomials have high-multiplicity roots.
  std::vector<std::complex<double>> values(n);
  for (std::size_t m = 0; m < n; ++m) {
    const std::complex<double> z = std::polar(1.0, step * static_cast<double>(2 * m + 1));
    std::complex<double> product = 1.0;
    for (const auto& r : roots) product *= z - r;
    values[m] = product;
  }

  // a_i = (1/n) sum_m P(z_m) z_m^{-i}; the angle index is reduced mod 2n.
  std::vector<std::complex<double>> coeffs(n);
  const std::size_t period = 2 * n;
  for (std::size_t i = 0; i < n; ++i) {
    std::complex<double> acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t index = ((2 * m + 1) * i) % period;
      acc += values[m] * std::polar(1.0, -step * static_cast<double>(index));
    }
    coeffs[i] = acc / static_cast<double>(n);
  }
  return Polynomial::monic(drop_imaginary(coeffs, imag_tolerance));
}

std::vector<std::complex<double>> polynomial_roots(const Polynomial& poly) {
  const int n = poly.degree();
  if (n == 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -poly[i];
  balance(companion);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kPolynomialIllConditioned, "companion eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<std::complex<double>> characteristic_coefficients(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "characteristic polynomial needs a square matrix");
  }
  using Complex = std::complex<double>;
  const int n = static_cast<int>(m.rows());
  Eigen::MatrixXcd h = m;
  if (n > 2) {
    Eigen::HessenbergDecomposition<Eigen::MatrixXcd> hess(m);
    h = hess.matrixH();
  }

  // p_r is det(lambda I - H[0:r, 0:r]); each is stored ascending with degree r.
  std::vector<std::vector<Complex>> p(n + 1);
  p[0] = {Complex(1.0)};
  for (int r = 1; r <= n; ++r) {
    std::vector<Complex> next(r + 1, Complex(0.0));
    const Complex diag = h(r - 1, r - 1);
    for (int d = 0; d < r; ++d) {
      next[d + 1] += p[r - 1][d];
      next[d] -= diag * p[r - 1][d];
    }
    Complex subdiag_product = 1.0;
    for (int i = 1; i < r; ++i) {
      subdiag_product *= h(r - i, r - i - 1);
      const Complex weight = subdiag_product * h(r - i - 1, r - 1);
      for (std::size_t d = 0; d < p[r - i - 1].size(); ++d) next[d] -= weight * p[r - i - 1][d];
    }
    p[r] = std::move(next);
  }
  return p[n];
}

Polynomial real_characteristic_polynomial(const Eigen::MatrixXcd& m, double imag_tolerance) {
  return Polynomial::monic(drop_imaginary(characteristic_coefficients(m), imag_tolerance));
}

}  // namespace qwiso
