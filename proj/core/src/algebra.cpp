#include "modlab/algebra.hpp"

#include <Eigen/SVD>

namespace modlab {

namespace {

// Modified Gram-Schmidt with one re-orthogonalization pass. Returns true
// and appends when the candidate has a component outside the current span.
bool try_adjoin(std::vector<Vector>& basis, const Vector& candidate,
                const Tolerance& tol) {
  const double scale = candidate.norm();
  Vector v = candidate;
  for (int pass = 0; pass < 2; ++pass)
    for (const Vector& b : basis) v -= b * (b.dot(v));
  if (v.norm() <= tol.cutoff(scale)) return false;
  basis.push_back(v / v.norm());
  return true;
}

std::vector<Matrix> to_matrices(const std::vector<Vector>& vecs, Eigen::Index d) {
  std::vector<Matrix> out;
  out.reserve(vecs.size());
  for (const Vector& v : vecs) out.push_back(unvectorize(v, d));
  return out;
}

}  // namespace

OperatorAlgebra::OperatorAlgebra(Eigen::Index ambient_dim, std::vector<Matrix> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

Matrix OperatorAlgebra::frame() const {
  Matrix f(ambient_dim_ * ambient_dim_, dim());
  for (Eigen::Index i = 0; i < dim(); ++i) f.col(i) = vectorize(basis_[i]);
  return f;
}

Matrix OperatorAlgebra::span_projection() const {
  Matrix f = frame();
  return f * f.adjoint();
}

bool OperatorAlgebra::contains(const Matrix& a, const Tolerance& tol) const {
  Vector v = vectorize(a);
  Vector residual = v;
  Matrix f = frame();
  residual -= f * (f.adjoint() * v);
  return residual.norm() <= tol.cutoff(v.norm());
}

void OperatorAlgebra::validate(const Tolerance& tol) const {
  if (!contains(Matrix::Identity(ambient_dim_, ambient_dim_), tol))
    throw ValidationError("OperatorAlgebra: unit not in span");
  for (const Matrix& b : basis_) {
    if (!contains(b.adjoint(), tol))
      throw ValidationError("OperatorAlgebra: span not *-closed");
  }
  for (const Matrix& a : basis_)
    for (const Matrix& b : basis_)
      if (!contains(a * b, tol))
        throw ValidationError("OperatorAlgebra: span not closed under products");
}

OperatorAlgebra generate(const std::vector<Matrix>& generators,
                         const Tolerance& tol) {
  if (generators.empty())
    throw ValidationError("generate: no generators");
  const Eigen::Index d = generators.front().rows();
  for (const Matrix& g : generators)
    if (g.rows() != d || g.cols() != d)
      throw DimensionMismatch("generate: generators of mixed dimension");

  std::vector<Vector> basis;
  try_adjoin(basis, vectorize(Matrix::Identity(d, d)), tol);
  for (const Matrix& g : generators) try_adjoin(basis, vectorize(g), tol);
  for (const Matrix& g : generators) try_adjoin(basis, vectorize(g.adjoint()), tol);

  const Eigen::Index max_dim = d * d;
  bool grew = true;
  while (grew && static_cast<Eigen::Index>(basis.size()) < max_dim) {
    grew = false;
    std::vector<Matrix> current = to_matrices(basis, d);
    for (const Matrix& a : current) {
      for (const Matrix& b : current) {
        if (try_adjoin(basis, vectorize(a * b), tol)) grew = true;
        if (static_cast<Eigen::Index>(basis.size()) >= max_dim) break;
      }
      if (static_cast<Eigen::Index>(basis.size()) >= max_dim) break;
    }
  }
  return OperatorAlgebra(d, to_matrices(basis, d));
}

OperatorAlgebra commutant(const OperatorAlgebra& m, const Tolerance& tol) {
  const Eigen::Index d = m.ambient_dim();
  const Eigen::Index d2 = d * d;
  const Matrix id = Matrix::Identity(d, d);
  // vec(BX - XB) = (I (x) B - B^T (x) I) vec(X); accumulate sum K_i^* K_i
  // so the commutant is the kernel of a Hermitian matrix.
  // K^* K expanded through kron(A,B) kron(C,D) = kron(AC, BD), so each term
  // costs O(d^4) assembly instead of a d^2 x d^2 product.
  Matrix acc = Matrix::Zero(d2, d2);
  for (const Matrix& b : m.basis()) {
    const Matrix bt = b.transpose();
    const Matrix bc = b.conjugate();
    acc += kron(id, Matrix(b.adjoint() * b)) - kron(bt, b.adjoint()) -
           kron(bc, b) + kron(Matrix(bc * bt), id);
  }
  HermitianEig eig = hermitian_eig((acc + acc.adjoint()) / 2.0);
  const double scale = eig.values.size() ? std::abs(eig.values(eig.values.size() - 1)) : 1.0;
  std::vector<Matrix> basis;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    if (std::abs(eig.values(i)) <= tol.cutoff(scale))
      basis.push_back(unvectorize(eig.vectors.col(i), d));
  return OperatorAlgebra(d, std::move(basis));
}

Eigen::Index cyclic_rank(const OperatorAlgebra& m, const Vector& omega,
                         const Tolerance& tol) {
  if (omega.size() != m.ambient_dim())
    throw DimensionMismatch("cyclic_rank: vector dimension mismatch");
  Matrix cols(m.ambient_dim(), m.dim());
  for (Eigen::Index i = 0; i < m.dim(); ++i) cols.col(i) = m.basis()[i] * omega;
  return numerical_rank(cols, tol);
}

Eigen::Index separating_rank(const OperatorAlgebra& m, const Vector& omega,
                             const Tolerance& tol) {
  return cyclic_rank(m, omega, tol);
}

bool is_cyclic(const OperatorAlgebra& m, const Vector& omega, const Tolerance& tol) {
  return cyclic_rank(m, omega, tol) == m.ambient_dim();
}

bool is_separating(const OperatorAlgebra& m, const Vector& omega,
                   const Tolerance& tol) {
  // B |-> B omega restricted to the span is injective iff the columns
  // {B_i omega} are linearly independent.
  return separating_rank(m, omega, tol) == m.dim();
}

OperatorAlgebra center(const OperatorAlgebra& m, const Tolerance& tol) {
  OperatorAlgebra comm = commutant(m, tol);
  const Eigen::Index d2 = m.ambient_dim() * m.ambient_dim();
  Subspace sm = Subspace::from_frame(m.frame(), tol);
  Subspace sc = Subspace::from_frame(comm.frame(), tol);
  Subspace inter = intersect(sm, sc, tol);
  std::vector<Matrix> basis;
  for (Eigen::Index i = 0; i < inter.rank(); ++i)
    basis.push_back(unvectorize(inter.frame().col(i), m.ambient_dim()));
  (void)d2;
  return OperatorAlgebra(m.ambient_dim(), std::move(basis));
}

bool is_factor(const OperatorAlgebra& m, const Tolerance& tol) {
  return center(m, tol).dim() == 1;
}

bool is_abelian(const OperatorAlgebra& m, const Tolerance& tol) {
  double worst = 0.0;
  for (const Matrix& a : m.basis())
    for (const Matrix& b : m.basis())
      worst = std::max(worst, op_norm(Matrix(a * b - b * a)));
  return worst <= tol.cutoff(1.0);
}

double span_distance(const OperatorAlgebra& a, const OperatorAlgebra& b) {
  // For projections P = FF*, Q = GG* with orthonormal frames,
  // ||P - Q|| = max(||(1-Q)F||, ||(1-P)G||); avoids forming d^2 x d^2 matrices.
  const Matrix f = a.frame();
  const Matrix g = b.frame();
  if (f.cols() == 0 && g.cols() == 0) return 0.0;
  const double s1 = op_norm(Matrix(f - g * (g.adjoint() * f)));
  const double s2 = op_norm(Matrix(g - f * (f.adjoint() * g)));
  return std::max(s1, s2);
}

bool span_equal(const OperatorAlgebra& a, const OperatorAlgebra& b,
                const Tolerance& tol) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  return span_distance(a, b) <= tol.cutoff(1.0);
}

OperatorAlgebra tensor_algebra(const OperatorAlgebra& a, const OperatorAlgebra& b,
                               const Tolerance& tol) {
  std::vector<Matrix> basis;
  basis.reserve(a.dim() * b.dim());
  for (const Matrix& x : a.basis())
    for (const Matrix& y : b.basis()) basis.push_back(kron(x, y));
  (void)tol;
  return OperatorAlgebra(a.ambient_dim() * b.ambient_dim(), std::move(basis));
}

}  // namespace modlab
