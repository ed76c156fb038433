#ifndef MODLAB_MODULAR_HPP
#define MODLAB_MODULAR_HPP

#include <string>
#include <vector>

#include "modlab/algebra.hpp"

namespace modlab {

/// One verification clause: an identity of the theory evaluated on a
/// concrete scenario. `anchor` is a stable id naming the identity.
struct CheckRecord {
  std::string check_id;
  std::string anchor;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

/// Modular objects (S, F, Delta, J) of a pair (algebra, cyclic and
/// separating unit vector), plus the spectral data of Delta.
struct ModularData {
  Antilinear s;
  Antilinear f;
  Matrix delta;
  Antilinear j;
  HermitianEig delta_eig;
  Vector omega;
};

/// Vector state omega(M) = <Omega, M Omega>.
struct StateFunctional {
  Vector omega;
  Complex operator()(const Matrix& m) const { return omega.dot(m * omega); }
};

/// Solves S(B Omega) = B* Omega over the algebra basis (cyclicity and
/// separation make the system square and invertible), builds F from the
/// commutant the same way, and factors S = J Delta^{1/2}.
ModularData build_modular(const OperatorAlgebra& m, const Vector& omega,
                          const Tolerance& tol = {});

/// Default modular-flow sample points; fixed so reports are stable.
std::vector<double> default_t_grid();

/// The six identities relating S, F, Delta, J plus the fixed-vector
/// equations S Omega = J Omega = Delta Omega = Omega and S^2 = 1.
std::vector<CheckRecord> verify_modular_relations(const ModularData& md,
                                                  const Tolerance& tol = {});

/// J M J = M' and Delta^{it} M Delta^{-it} = M on the grid.
std::vector<CheckRecord> verify_tomita_takesaki(const OperatorAlgebra& m,
                                                const ModularData& md,
                                                const std::vector<double>& t_grid,
                                                const Tolerance& tol = {});

bool is_trace(const StateFunctional& omega, const OperatorAlgebra& m,
              const Tolerance& tol = {});
/// max over basis pairs of |omega(AB) - omega(BA)|.
double trace_defect(const StateFunctional& omega, const OperatorAlgebra& m);
/// ||S*S - 1||; zero iff the vector state is tracial.
double tomita_isometry_defect(const ModularData& md);

/// sigma_t(M) = Delta^{it} M Delta^{-it}.
Matrix modular_flow(const ModularData& md, const Matrix& m, double t,
                    const Tolerance& tol = {});

/// KMS boundary condition for F(z) = <Omega, (Delta^{iz} M Delta^{-iz}) N Omega>:
/// F(t) = omega(sigma_t(M) N) and F(t+i) = omega(N sigma_t(M)) on the grid,
/// plus invariance omega(sigma_t(B)) = omega(B) over the basis.
std::vector<CheckRecord> kms_check(const ModularData& md, const OperatorAlgebra& m,
                                   const Matrix& m_op, const Matrix& n_op,
                                   const std::vector<double>& t_grid,
                                   const Tolerance& tol = {});

}  // namespace modlab

#endif
