#include "modlab/linalg.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <functional>

namespace modlab {

double op_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.rows() <= 64 && a.cols() <= 64) {
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues()(0);
  }
  // sqrt of the largest eigenvalue of A*A; cheaper than a full SVD for
  // the d^2 x d^2 span projections.
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.adjoint() * a);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double op_norm(const Antilinear& a) { return op_norm(a.entries); }

HermitianEig hermitian_eig(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success)
    throw Error("hermitian_eig: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

static Matrix spectral_map(const Matrix& a, const Tolerance& tol,
                           const std::function<Complex(double)>& f,
                           bool require_positive) {
  HermitianEig eig = hermitian_eig((a + a.adjoint()) / 2.0);
  const double scale = std::max(std::abs(eig.values(0)),
                                std::abs(eig.values(eig.values.size() - 1)));
  Vector mapped(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (require_positive && eig.values(i) <= tol.cutoff(scale))
      throw NotPositive("spectral map: eigenvalue " + std::to_string(eig.values(i)) +
                        " not positive");
    mapped(i) = f(eig.values(i));
  }
  return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

Matrix fractional_power(const Matrix& a, double t, const Tolerance& tol) {
  return spectral_map(a, tol, [t](double l) { return Complex(std::pow(l, t), 0.0); },
                      true);
}

Matrix imaginary_power(const Matrix& a, double t, const Tolerance& tol) {
  return spectral_map(a, tol,
                      [t](double l) { return std::exp(Complex(0.0, t * std::log(l))); },
                      true);
}

Matrix complex_power(const Matrix& a, Complex z, const Tolerance& tol) {
  return spectral_map(a, tol, [z](double l) { return std::exp(z * std::log(l)); },
                      true);
}

AntilinearPolar polar_antilinear(const Antilinear& s, const Tolerance& tol) {
  Eigen::JacobiSVD<Matrix> svd(s.entries);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= tol.cutoff(sv(0)))
    throw SingularOperator("polar_antilinear: operator not invertible");
  // Delta = S*S, an antilinear-antilinear composition.
  Matrix delta = s.adjoint() * s;
  delta = (delta + delta.adjoint()) / 2.0;
  // The singular-value guard above already bounds spec(Delta) away from
  // zero by tol^2, so the inverse square root gets a matching cutoff.
  Antilinear j = s * fractional_power(delta, -0.5, Tolerance{0.5 * tol.rel * tol.rel});
  return {std::move(j), std::move(delta)};
}

Eigen::Index numerical_rank(const Matrix& a, const Tolerance& tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cut = tol.cutoff(sv(0));
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

bool all_finite(const Matrix& a) {
  return a.allFinite();
}

}  // namespace modlab
