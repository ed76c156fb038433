#ifndef MODLAB_CAR_HPP
#define MODLAB_CAR_HPP

#include <functional>
#include <utility>
#include <vector>

#include "modlab/algebra.hpp"
#include "modlab/modular.hpp"
#include "modlab/subspace.hpp"

namespace modlab {

/// Reference space (h, Gamma): even-dimensional C^d with an antiunitary
/// involution.
struct ReferenceSpace {
  Eigen::Index dim = 0;
  Antilinear gamma;

  void validate(const Tolerance& tol = {}) const;
  /// Standard involution on C^{2m}: (x, y) |-> (conj y, conj x) blockwise.
  static ReferenceSpace standard(Eigen::Index m);
};

/// Projection with P + Gamma P Gamma = 1; selects the one-particle space.
Subspace basis_projection(const ReferenceSpace& ref, const Subspace& p,
                          const Tolerance& tol = {});
/// Gamma-invariant subspace (Gamma Q Gamma = Q); rejected, never repaired.
Subspace invariant_subspace(const ReferenceSpace& ref, const Subspace& q,
                            const Tolerance& tol = {});

/// Antisymmetric Fock space over m modes. Basis states are occupation
/// bitmasks over the particle basis; dimension 2^m.
class FockSpace {
 public:
  explicit FockSpace(int modes);

  int modes() const { return modes_; }
  Eigen::Index dim() const { return Eigen::Index(1) << modes_; }
  Vector vacuum() const;

  /// c*(p_i) for the i-th particle basis mode, a signed shift matrix.
  const Matrix& creation_mode(int i) const { return creation_[i]; }
  /// Creation operator of a vector given in particle coordinates
  /// (linear in the coordinates).
  Matrix creation_coords(const Vector& coords) const;
  /// Adjoint of creation (antilinear in the coordinates).
  Matrix annihilation_coords(const Vector& coords) const;
  /// Wedge product of particle-coordinate vectors as a Fock vector.
  Vector wedge(const std::vector<Vector>& coords) const;

  /// Block of a Fock operator on the n-particle masks (lexicographic order
  /// of occupation sets within the grade).
  Matrix particle_block(const Matrix& fock_op, int n) const;
  std::vector<Eigen::Index> grade_indices(int n) const;

 private:
  int modes_;
  std::vector<Matrix> creation_;
};

/// Fock representation of CAR(h, Gamma) attached to a basis projection.
class CarSystem {
 public:
  CarSystem(ReferenceSpace ref, Subspace p, const Tolerance& tol = {});

  const ReferenceSpace& ref() const { return ref_; }
  const Subspace& particle_space() const { return p_; }
  const FockSpace& fock() const { return fock_; }
  int modes() const { return fock_.modes(); }

  /// Particle coordinates of an ambient vector; throws NotInParticleSpace
  /// when the vector has a component outside p.
  Vector particle_coords(const Vector& v, const Tolerance& tol = {}) const;

  Matrix creation(const Vector& p_vec, const Tolerance& tol = {}) const;
  Matrix annihilation(const Vector& p_vec, const Tolerance& tol = {}) const;
  /// pi(a(f)) = c(P Gamma f)* + c(P f) for any reference-space vector.
  Matrix field(const Vector& f) const;

 private:
  ReferenceSpace ref_;
  Subspace p_;
  FockSpace fock_;
};

/// Worst residual of the three CAR axioms for a generator map f |-> a(f)
/// over the given test vectors: antilinearity, a(f)* = a(Gamma f), and
/// a(f)a(g)* + a(g)*a(f) = <f,g> 1.
double car_axiom_residual(const CarSystem& sys,
                          const std::function<Matrix(const Vector&)>& a,
                          const std::vector<Vector>& test_vectors);

/// Generator images of the Bogoljubov automorphism a(f) |-> a(Uf); throws
/// NotGammaCommuting unless U is unitary and commutes with Gamma.
std::vector<Matrix> bogoljubov(const CarSystem& sys, const Matrix& u,
                               const std::vector<Vector>& generators,
                               const Tolerance& tol = {});

/// One summand of the vacuum expansion: a signed pairing of {1..n} into
/// p ordered pairs (alpha_l, beta_l) and k = n - 2p free indices.
struct PairingTerm {
  int sign = 1;
  std::vector<std::pair<int, int>> pairs;  // (alpha_l, beta_l), alpha descending
  std::vector<int> free;                   // j_1 > ... > j_k
};
/// All pairings for fixed n and p; size binom(n, n-2p) (2p)!/(p! 2^p).
std::vector<PairingTerm> enumerate_pairings(int n, int p);

/// Combinatorial formula for a(f_n)...a(f_1) Omega as a Fock vector.
/// Throws LimitExceeded for n beyond the limit.
Vector vacuum_expansion(const CarSystem& sys, const std::vector<Vector>& fs,
                        int limit = 8);

struct GenericPositionReport {
  Eigen::Index dim_p_q = 0;          // p cap q
  Eigen::Index dim_p_qperp = 0;      // p cap q-perp
  Eigen::Index dim_pperp_q = 0;
  Eigen::Index dim_pperp_qperp = 0;
  bool generic = false;
  double delta = 0.0;                // ||PQ||
};
GenericPositionReport generic_position_report(const CarSystem& sys,
                                              const Subspace& q,
                                              const Tolerance& tol = {});

/// One-particle modular data in particle coordinates: beta(Pq) = P Gamma q,
/// alpha(Pq_perp) = -P Gamma q_perp, Delta_p = beta* beta computed both from
/// the graph {(PQp, PQ_perp p)} and as a matrix product, J_p(Pq) =
/// Delta_p^{1/2}(P Gamma q).
struct OneParticleModular {
  Antilinear beta;
  Antilinear alpha;
  Matrix delta_p;        // beta* beta
  Matrix delta_p_graph;  // from the graph formula
  Antilinear j_p;
};
OneParticleModular modular_one_particle(const CarSystem& sys, const Subspace& q,
                                        const Tolerance& tol = {});

/// Full Fock-space modular data of (M(q), vacuum) where
/// M(q) = {a(q) | q in q}''.
struct FockModular {
  OperatorAlgebra algebra;
  ModularData md;
};
FockModular modular_fock(const CarSystem& sys, const Subspace& q,
                         const Tolerance& tol = {});

}  // namespace modlab

#endif
