#ifndef MODLAB_CROSSED_HPP
#define MODLAB_CROSSED_HPP

#include <map>
#include <string>
#include <vector>

#include "modlab/models.hpp"
#include "modlab/modular.hpp"

namespace modlab {

/// Finite probability space. The Hilbert space L^2(points, weights) is
/// identified with C^n via f |-> (sqrt(w_x) f(x)), so all operators below
/// live on plain C^n with the standard inner product.
struct FiniteMeasureSpace {
  std::vector<std::string> points;
  std::vector<double> weights;

  int size() const { return static_cast<int>(points.size()); }
  void validate(const Tolerance& tol = {}) const;
};

/// Measure-preserving action of a finite group on the points.
/// perms[g][x] = T_g(x); must be a homomorphism and leave weights fixed.
struct GroupAction {
  FiniteGroup group;
  std::vector<std::vector<int>> perms;

  void validate(const FiniteMeasureSpace& ms, const Tolerance& tol = {}) const;
};

struct ActionClassification {
  bool free = false;
  bool ergodic = false;
};
/// free: every non-identity permutation is fixed-point free (weights are
/// strictly positive, so measure zero means empty). ergodic: the action on
/// points is transitive.
ActionClassification classify_action(const FiniteMeasureSpace& ms,
                                     const GroupAction& act);

/// The group measure space construction on l2(Gamma) (x) H, basis ordered
/// group-element major, point minor.
struct CrossedProductModel {
  FiniteMeasureSpace space;
  GroupAction action;
  Eigen::Index k_dim = 0;               // |Gamma| * n
  std::vector<Matrix> pi_images;        // pi(1_x) for each point indicator
  std::vector<Matrix> u_images;         // U(gamma)
  OperatorAlgebra algebra;
  Vector omega;                         // (Omega)_gamma = delta_{e gamma} 1

  /// pi(f) for a function given by its values on the points.
  Matrix pi(const Vector& f) const;
  Matrix u(int gamma) const { return u_images[gamma]; }
};

CrossedProductModel build_crossed_product(const FiniteMeasureSpace& ms,
                                          const GroupAction& act,
                                          const Tolerance& tol = {});

/// A symbol assigns to each group element a function on the points.
using Symbol = std::vector<Vector>;

/// N with blocks N_{g' g} = alpha_g^{-1}(A(g' g^{-1})).
Matrix element_from_symbol(const CrossedProductModel& model, const Symbol& a);
/// Inverse of the above on the algebra; throws NotInAlgebra when the
/// reconstruction from the recovered symbol misses the input beyond tol.
Symbol symbol_from_element(const CrossedProductModel& model, const Matrix& n,
                           const Tolerance& tol = {});

/// True when pi(M) is abelian and equals its relative commutant inside the
/// crossed product algebra; holds exactly for free actions.
bool pi_maximal_abelian(const CrossedProductModel& model, const Tolerance& tol = {});

/// Explicit antilinear block matrix S_{g' g} = delta_{g', g^{-1}} alpha_g(conj(.)).
Antilinear explicit_tomita_operator(const CrossedProductModel& model);

/// Modular battery for a free ergodic action: Delta = 1, S = J, the block
/// formula matches the engine operator, and the vector state is a trace.
std::vector<CheckRecord> verify_crossed_tomita(const CrossedProductModel& model,
                                               const ModularData& md,
                                               const Tolerance& tol = {});

}  // namespace modlab

#endif
