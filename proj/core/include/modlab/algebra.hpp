#ifndef MODLAB_ALGEBRA_HPP
#define MODLAB_ALGEBRA_HPP

#include <vector>

#include "modlab/linalg.hpp"
#include "modlab/subspace.hpp"

namespace modlab {

/// A *-closed unital operator algebra on C^d, stored as a basis that is
/// orthonormal under the Hilbert-Schmidt inner product <A,B> = tr(A*B).
/// In finite dimension the bicommutant closure is the algebraic closure,
/// so this represents a von Neumann algebra.
class OperatorAlgebra {
 public:
  OperatorAlgebra() = default;
  OperatorAlgebra(Eigen::Index ambient_dim, std::vector<Matrix> basis);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<Matrix>& basis() const { return basis_; }

  /// Vectorized basis as columns, d^2 x dim.
  Matrix frame() const;
  /// HS-orthogonal projection onto the span, d^2 x d^2.
  Matrix span_projection() const;

  bool contains(const Matrix& a, const Tolerance& tol = {}) const;

  /// Structural sanity: unit in span, span closed under adjoint and product.
  void validate(const Tolerance& tol = {}) const;

 private:
  Eigen::Index ambient_dim_ = 0;
  std::vector<Matrix> basis_;
};

/// Smallest unit-containing *-closed algebra containing the generators,
/// computed by rounds of pairwise-product adjunction and deterministic
/// Gram-Schmidt until the dimension stabilizes.
OperatorAlgebra generate(const std::vector<Matrix>& generators,
                         const Tolerance& tol = {});

/// Commutant: null space of X |-> (B_i X - X B_i)_i over the basis.
OperatorAlgebra commutant(const OperatorAlgebra& m, const Tolerance& tol = {});

bool is_cyclic(const OperatorAlgebra& m, const Vector& omega,
               const Tolerance& tol = {});
bool is_separating(const OperatorAlgebra& m, const Vector& omega,
                   const Tolerance& tol = {});

/// Rank of the column stack {B_i omega}; ambient_dim - this is the
/// cyclicity defect.
Eigen::Index cyclic_rank(const OperatorAlgebra& m, const Vector& omega,
                         const Tolerance& tol = {});
Eigen::Index separating_rank(const OperatorAlgebra& m, const Vector& omega,
                             const Tolerance& tol = {});

OperatorAlgebra center(const OperatorAlgebra& m, const Tolerance& tol = {});
bool is_factor(const OperatorAlgebra& m, const Tolerance& tol = {});

bool is_abelian(const OperatorAlgebra& m, const Tolerance& tol = {});

/// Distance between the HS span projections; zero iff equal spans.
double span_distance(const OperatorAlgebra& a, const OperatorAlgebra& b);
bool span_equal(const OperatorAlgebra& a, const OperatorAlgebra& b,
                const Tolerance& tol = {});

/// Algebra spanned by {a_i (x) b_j} on the tensor product space.
OperatorAlgebra tensor_algebra(const OperatorAlgebra& a, const OperatorAlgebra& b,
                               const Tolerance& tol = {});

}  // namespace modlab

#endif
