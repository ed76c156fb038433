#ifndef MODLAB_SUBSPACE_HPP
#define MODLAB_SUBSPACE_HPP

#include "modlab/linalg.hpp"

namespace modlab {

/// Subspace of C^d held as an orthonormal frame; all predicates reduce
/// to projection algebra.
class Subspace {
 public:
  Subspace() = default;

  /// Orthonormalizes the given spanning set (rank decided by SVD cutoff).
  static Subspace from_span(Eigen::Index ambient_dim, const Matrix& vectors,
                            const Tolerance& tol = {});
  /// Frame columns must already be orthonormal within tol.
  static Subspace from_frame(Matrix frame, const Tolerance& tol = {});
  static Subspace zero(Eigen::Index ambient_dim);
  static Subspace full(Eigen::Index ambient_dim);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index rank() const { return frame_.cols(); }
  const Matrix& frame() const { return frame_; }
  Matrix projection() const;

  bool contains(const Vector& v, const Tolerance& tol = {}) const;

 private:
  Eigen::Index ambient_dim_ = 0;
  Matrix frame_;  // ambient_dim x rank, orthonormal columns
};

/// Span of eigenvectors of P Q P with eigenvalue 1 (within tol).
Subspace intersect(const Subspace& p, const Subspace& q, const Tolerance& tol = {});

Subspace ortho_complement(const Subspace& p, const Tolerance& tol = {});

/// Largest singular value of P Q (projection matrices).
double norm_product(const Matrix& p, const Matrix& q);
double norm_product(const Subspace& p, const Subspace& q);

}  // namespace modlab

#endif
