#include "modlab/subspace.hpp"

#include <Eigen/SVD>

namespace modlab {

Subspace Subspace::from_span(Eigen::Index ambient_dim, const Matrix& vectors,
                             const Tolerance& tol) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  if (vectors.cols() == 0) {
    s.frame_ = Matrix(ambient_dim, 0);
    return s;
  }
  if (vectors.rows() != ambient_dim)
    throw DimensionMismatch("Subspace::from_span: ambient dimension mismatch");
  Eigen::JacobiSVD<Matrix> svd(vectors, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() ? tol.cutoff(sv(0)) : 0.0;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  s.frame_ = svd.matrixU().leftCols(r);
  return s;
}

Subspace Subspace::from_frame(Matrix frame, const Tolerance& tol) {
  Subspace s;
  s.ambient_dim_ = frame.rows();
  Matrix gram = frame.adjoint() * frame - Matrix::Identity(frame.cols(), frame.cols());
  if (op_norm(gram) > tol.cutoff(1.0))
    throw ValidationError("Subspace::from_frame: columns not orthonormal");
  s.frame_ = std::move(frame);
  return s;
}

Subspace Subspace::zero(Eigen::Index ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.frame_ = Matrix(ambient_dim, 0);
  return s;
}

Subspace Subspace::full(Eigen::Index ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.frame_ = Matrix::Identity(ambient_dim, ambient_dim);
  return s;
}

Matrix Subspace::projection() const { return frame_ * frame_.adjoint(); }

bool Subspace::contains(const Vector& v, const Tolerance& tol) const {
  Vector residual = v - frame_ * (frame_.adjoint() * v);
  return residual.norm() <= tol.cutoff(v.norm());
}

Subspace intersect(const Subspace& p, const Subspace& q, const Tolerance& tol) {
  if (p.ambient_dim() != q.ambient_dim())
    throw DimensionMismatch("intersect: ambient dimension mismatch");
  const Eigen::Index d = p.ambient_dim();
  // PQP restricted to range(P) in frame coordinates: (F_p* F_q)(F_q* F_p),
  // a rank(p) x rank(p) problem instead of d x d.
  const Matrix cross = p.frame().adjoint() * q.frame();
  HermitianEig eig = hermitian_eig(Matrix(cross * cross.adjoint()));
  Matrix cols(d, 0);
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (std::abs(eig.values(i) - 1.0) <= tol.cutoff(1.0)) {
      cols.conservativeResize(Eigen::NoChange, cols.cols() + 1);
      cols.col(cols.cols() - 1) = p.frame() * eig.vectors.col(i);
    }
  }
  return Subspace::from_span(d, cols, tol);
}

Subspace ortho_complement(const Subspace& p, const Tolerance& tol) {
  const Eigen::Index d = p.ambient_dim();
  Matrix comp = Matrix::Identity(d, d) - p.projection();
  HermitianEig eig = hermitian_eig((comp + comp.adjoint()) / 2.0);
  Matrix cols(d, 0);
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > 0.5) {
      cols.conservativeResize(Eigen::NoChange, cols.cols() + 1);
      cols.col(cols.cols() - 1) = eig.vectors.col(i);
    }
  }
  return Subspace::from_span(d, cols, tol);
}

double norm_product(const Matrix& p, const Matrix& q) {
  if (p.rows() != q.rows()) throw DimensionMismatch("norm_product: dimension mismatch");
  return op_norm(Matrix(p * q));
}

double norm_product(const Subspace& p, const Subspace& q) {
  return norm_product(p.projection(), q.projection());
}

}  // namespace modlab
