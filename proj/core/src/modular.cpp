#include "modlab/modular.hpp"

#include <Eigen/LU>
#include <cmath>

namespace modlab {

namespace {

// Antilinear map sending the columns of `dom` to the columns of `img`,
// i.e. the solution of M conj(dom) = img.
Antilinear antilinear_from_action(const Matrix& dom, const Matrix& img,
                                  const Tolerance& tol) {
  if (numerical_rank(dom, tol) < dom.rows())
    throw SingularOperator("antilinear_from_action: domain columns not spanning");
  Matrix conj_dom = dom.conjugate();
  return Antilinear(conj_dom.transpose()
                        .fullPivLu()
                        .solve(img.transpose())
                        .transpose());
}

CheckRecord residual_check(std::string id, std::string anchor, double residual,
                           double tolerance) {
  CheckRecord r;
  r.check_id = std::move(id);
  r.anchor = std::move(anchor);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;
  return r;
}

}  // namespace

ModularData build_modular(const OperatorAlgebra& m, const Vector& omega,
                          const Tolerance& tol) {
  const Eigen::Index d = m.ambient_dim();
  if (omega.size() != d)
    throw DimensionMismatch("build_modular: vector dimension mismatch");
  const Eigen::Index rank = cyclic_rank(m, omega, tol);
  if (rank < d)
    throw NotCyclic("build_modular: vector not cyclic, rank defect " +
                    std::to_string(d - rank));
  if (rank < m.dim())
    throw NotSeparating("build_modular: vector not separating, rank defect " +
                        std::to_string(m.dim() - rank));

  Matrix dom(d, m.dim()), img(d, m.dim());
  for (Eigen::Index i = 0; i < m.dim(); ++i) {
    dom.col(i) = m.basis()[i] * omega;
    img.col(i) = m.basis()[i].adjoint() * omega;
  }

  ModularData md;
  md.omega = omega;
  md.s = antilinear_from_action(dom, img, tol);

  OperatorAlgebra comm = commutant(m, tol);
  Matrix dom_c(d, comm.dim()), img_c(d, comm.dim());
  for (Eigen::Index i = 0; i < comm.dim(); ++i) {
    dom_c.col(i) = comm.basis()[i] * omega;
    img_c.col(i) = comm.basis()[i].adjoint() * omega;
  }
  md.f = antilinear_from_action(dom_c, img_c, tol);

  AntilinearPolar polar = polar_antilinear(md.s, tol);
  md.j = std::move(polar.j);
  md.delta = std::move(polar.delta);
  md.delta_eig = hermitian_eig(md.delta);
  return md;
}

std::vector<double> default_t_grid() {
  return {-2.7, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.7};
}

std::vector<CheckRecord> verify_modular_relations(const ModularData& md,
                                                  const Tolerance& tol) {
  const Eigen::Index d = md.delta.rows();
  const Matrix id = Matrix::Identity(d, d);
  const double t = tol.cutoff(1.0);
  const Matrix delta_half = fractional_power(md.delta, 0.5, tol);
  const Matrix delta_minus_half = fractional_power(md.delta, -0.5, tol);
  const Matrix delta_inv = fractional_power(md.delta, -1.0, tol);

  std::vector<CheckRecord> out;
  out.push_back(residual_check("delta_eq_fs", "modular.relations",
                               op_norm(Matrix(md.f * md.s - md.delta)), t));
  out.push_back(residual_check("delta_inv_eq_sf", "modular.relations",
                               op_norm(Matrix(md.s * md.f - delta_inv)), t));
  out.push_back(residual_check("f_eq_j_delta_minus_half", "modular.relations",
                               op_norm(Matrix((md.j * delta_minus_half).entries -
                                              md.f.entries)),
                               t));
  out.push_back(residual_check("j_selfadjoint", "modular.relations",
                               op_norm(Matrix(md.j.entries - md.j.adjoint().entries)),
                               t));
  out.push_back(residual_check("j_squared_eq_id", "modular.relations",
                               op_norm(Matrix(md.j * md.j - id)), t));
  out.push_back(residual_check(
      "delta_minus_half_eq_j_delta_half_j", "modular.relations",
      op_norm(Matrix(md.j.entries * delta_half.conjugate() * md.j.entries.conjugate() -
                     delta_minus_half)),
      t));
  out.push_back(residual_check("s_omega_fixed", "modular.fixed-vector",
                               (md.s(md.omega) - md.omega).norm(), t));
  out.push_back(residual_check("j_omega_fixed", "modular.fixed-vector",
                               (md.j(md.omega) - md.omega).norm(), t));
  out.push_back(residual_check("delta_omega_fixed", "modular.fixed-vector",
                               (md.delta * md.omega - md.omega).norm(), t));
  out.push_back(residual_check("s_squared_eq_id", "modular.involution",
                               op_norm(Matrix(md.s * md.s - id)), t));
  return out;
}

std::vector<CheckRecord> verify_tomita_takesaki(const OperatorAlgebra& m,
                                                const ModularData& md,
                                                const std::vector<double>& t_grid,
                                                const Tolerance& tol) {
  std::vector<CheckRecord> out;
  OperatorAlgebra comm = commutant(m, tol);

  std::vector<Matrix> conjugated;
  conjugated.reserve(m.dim());
  for (const Matrix& b : m.basis()) conjugated.push_back(sandwich(md.j, b));
  OperatorAlgebra jmj(m.ambient_dim(), std::move(conjugated));
  out.push_back(residual_check("jmj_eq_commutant", "tomita-takesaki.conjugation",
                               span_distance(jmj, comm), tol.cutoff(1.0)));

  double worst = 0.0;
  for (double t : t_grid) {
    std::vector<Matrix> flowed;
    flowed.reserve(m.dim());
    for (const Matrix& b : m.basis()) flowed.push_back(modular_flow(md, b, t, tol));
    worst = std::max(worst, span_distance(OperatorAlgebra(m.ambient_dim(), flowed), m));
  }
  out.push_back(residual_check("modular_flow_preserves_algebra",
                               "tomita-takesaki.flow", worst, tol.cutoff(1.0)));
  return out;
}

double trace_defect(const StateFunctional& omega, const OperatorAlgebra& m) {
  double worst = 0.0;
  for (const Matrix& a : m.basis())
    for (const Matrix& b : m.basis())
      worst = std::max(worst, std::abs(omega(a * b) - omega(b * a)));
  return worst;
}

bool is_trace(const StateFunctional& omega, const OperatorAlgebra& m,
              const Tolerance& tol) {
  return trace_defect(omega, m) <= tol.cutoff(1.0);
}

double tomita_isometry_defect(const ModularData& md) {
  const Eigen::Index d = md.delta.rows();
  return op_norm(Matrix(md.s.adjoint() * md.s - Matrix::Identity(d, d)));
}

Matrix modular_flow(const ModularData& md, const Matrix& m, double t,
                    const Tolerance& tol) {
  Matrix u = imaginary_power(md.delta, t, tol);
  return u * m * u.adjoint();
}

std::vector<CheckRecord> kms_check(const ModularData& md, const OperatorAlgebra& m,
                                   const Matrix& m_op, const Matrix& n_op,
                                   const std::vector<double>& t_grid,
                                   const Tolerance& tol) {
  StateFunctional omega{md.omega};
  const double t_tol = tol.cutoff(1.0);

  auto f_of = [&](Complex z) {
    Matrix left = complex_power(md.delta, Complex(0, 1) * z, tol);
    Matrix right = complex_power(md.delta, Complex(0, -1) * z, tol);
    return omega(left * m_op * right * n_op);
  };

  double boundary_real = 0.0, boundary_shift = 0.0, invariance = 0.0;
  for (double t : t_grid) {
    Matrix sigma_m = modular_flow(md, m_op, t, tol);
    boundary_real = std::max(boundary_real,
                             std::abs(f_of(Complex(t, 0)) - omega(sigma_m * n_op)));
    boundary_shift = std::max(boundary_shift,
                              std::abs(f_of(Complex(t, 1)) - omega(n_op * sigma_m)));
    for (const Matrix& b : m.basis())
      invariance = std::max(invariance,
                            std::abs(omega(modular_flow(md, b, t, tol)) - omega(b)));
  }

  std::vector<CheckRecord> out;
  out.push_back(residual_check("kms_real_boundary", "kms.boundary", boundary_real, t_tol));
  out.push_back(residual_check("kms_shifted_boundary", "kms.boundary", boundary_shift, t_tol));
  out.push_back(residual_check("state_flow_invariance", "kms.invariance", invariance, t_tol));
  return out;
}

}  // namespace modlab
