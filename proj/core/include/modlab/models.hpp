#ifndef MODLAB_MODELS_HPP
#define MODLAB_MODELS_HPP

#include <string>
#include <vector>

#include "modlab/algebra.hpp"
#include "modlab/modular.hpp"
#include "modlab/subspace.hpp"

namespace modlab {

/// Finite group as an explicit Cayley table: cayley[g][h] = index of g*h.
class FiniteGroup {
 public:
  FiniteGroup() : cayley_{{0}}, inverse_{0} {}  // trivial group
  FiniteGroup(std::vector<std::vector<int>> cayley);

  int order() const { return static_cast<int>(cayley_.size()); }
  int mul(int g, int h) const { return cayley_[g][h]; }
  int identity() const { return identity_; }
  int inverse(int g) const { return inverse_[g]; }

  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);  // n <= 4
  static FiniteGroup dihedral4();
  /// Named built-ins: "z2".."z12", "s3", "s4", "d4".
  static FiniteGroup named(const std::string& name);

 private:
  std::vector<std::vector<int>> cayley_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// Left and right regular representations on l2(G) with Omega = delta_e.
struct RegularRepresentations {
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  Vector omega;
};
RegularRepresentations regular_representations(const FiniteGroup& g);

/// The tensor-factor model: M = L(H) (x) C1 on H (x) H' with the entangled
/// vector Omega = sum_k lambda_k e_k (x) e_k'. Basis order on the product is
/// e_k (x) e_s' -> index k*n + s.
struct TensorScenario {
  int n = 0;
  std::vector<double> lambdas;  // positive, sum of squares = 1

  void validate(const Tolerance& tol = {}) const;
};

struct TensorModel {
  OperatorAlgebra algebra;
  Vector omega;
  /// Closed-form modular objects assembled directly from the scenario data,
  /// independent of the engine.
  Antilinear predicted_s;
  Antilinear predicted_s_star;
  Matrix predicted_delta;
  Antilinear predicted_j;
};
TensorModel tensor_scenario(const TensorScenario& ts, const Tolerance& tol = {});

/// The C^2 pair: P = diag(1,0), Q = [[1,1],[1,1]]/2 with involution
/// Gamma(a,b) = (conj b, conj a); in generic position with ||PQ|| = 1/sqrt(2).
struct ProjectionPairC2 {
  Subspace p;
  Subspace q;
  Antilinear gamma;
};
ProjectionPairC2 projection_pair_c2();

}  // namespace modlab

#endif
