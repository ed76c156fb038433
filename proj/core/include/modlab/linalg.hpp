#ifndef MODLAB_LINALG_HPP
#define MODLAB_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "modlab/errors.hpp"

namespace modlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Scale-relative tolerance. Rank decisions use cutoff(sigma_max),
/// residual checks compare against cutoff(norm of the data).
struct Tolerance {
  double rel = 1e-9;
  double cutoff(double scale) const { return rel * std::max(1.0, scale); }
};

/// Antilinear map on C^d in the fixed computational basis:
/// x |-> entries * conj(x). Kept explicit so composition and adjoints
/// stay algebraic.
struct Antilinear {
  Matrix entries;

  Antilinear() = default;
  explicit Antilinear(Matrix m) : entries(std::move(m)) {}

  Eigen::Index dim() const { return entries.rows(); }
  Vector operator()(const Vector& x) const { return entries * x.conjugate(); }

  /// Adjoint characterized by <A* y, x> = <A x, y>: plain transpose.
  Antilinear adjoint() const { return Antilinear(entries.transpose()); }

  static Antilinear conjugation(Eigen::Index d) {
    return Antilinear(Matrix::Identity(d, d));
  }
};

// Compositions, (f * g)(x) = f(g(x)).
inline Matrix operator*(const Antilinear& a, const Antilinear& b) {
  return a.entries * b.entries.conjugate();
}
inline Antilinear operator*(const Antilinear& a, const Matrix& b) {
  return Antilinear(a.entries * b.conjugate());
}
inline Antilinear operator*(const Matrix& a, const Antilinear& b) {
  return Antilinear(a * b.entries);
}

/// J B J for antilinear J and linear B (again linear).
inline Matrix sandwich(const Antilinear& j, const Matrix& b) {
  return j.entries * b.conjugate() * j.entries.conjugate();
}

/// Largest singular value.
double op_norm(const Matrix& a);
double op_norm(const Antilinear& a);

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
struct HermitianEig {
  RealVector values;
  Matrix vectors;
};
HermitianEig hermitian_eig(const Matrix& a);

/// A^t for Hermitian positive-definite A. Throws NotPositive if an
/// eigenvalue falls below the cutoff.
Matrix fractional_power(const Matrix& a, double t, const Tolerance& tol = {});

/// A^{it}, a unitary for Hermitian positive-definite A.
Matrix imaginary_power(const Matrix& a, double t, const Tolerance& tol = {});

/// A^z for complex z via the spectral calculus, eigenvalue lambda -> exp(z ln lambda).
Matrix complex_power(const Matrix& a, Complex z, const Tolerance& tol = {});

/// Polar decomposition S = J Delta^{1/2} of an invertible antilinear map:
/// Delta = S*S positive, J antiunitary. Throws SingularOperator when the
/// smallest singular value of S is below the cutoff.
struct AntilinearPolar {
  Antilinear j;
  Matrix delta;
};
AntilinearPolar polar_antilinear(const Antilinear& s, const Tolerance& tol = {});

/// Numerical rank by singular-value cutoff tol.cutoff(sigma_max).
Eigen::Index numerical_rank(const Matrix& a, const Tolerance& tol = {});

/// Column-major vectorization (Hilbert-Schmidt coordinates).
inline Vector vectorize(const Matrix& a) {
  return Eigen::Map<const Vector>(a.data(), a.size());
}
inline Matrix unvectorize(const Vector& v, Eigen::Index d) {
  return Eigen::Map<const Matrix>(v.data(), d, d);
}

Matrix kron(const Matrix& a, const Matrix& b);

bool all_finite(const Matrix& a);

}  // namespace modlab

#endif
