#include "doctest.h"
#include "modlab/car.hpp"
#include "modlab/models.hpp"
#include "modlab/random.hpp"

using namespace modlab;

namespace {

CarSystem standard_system(Eigen::Index m) {
  const ReferenceSpace ref = ReferenceSpace::standard(m);
  Matrix frame = Matrix::Zero(2 * m, m);
  frame.topLeftCorner(m, m).setIdentity();
  return CarSystem(ref, Subspace::from_frame(frame));
}

Subspace gamma_fixed_subspace(const ReferenceSpace& ref, Eigen::Index rank,
                              std::uint64_t seed) {
  Rng rng(seed);
  Matrix span(ref.dim, rank);
  for (Eigen::Index i = 0; i < rank; ++i) {
    const Vector v = rng.vector(ref.dim);
    span.col(i) = v + ref.gamma(v);
  }
  return Subspace::from_span(ref.dim, span);
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("fock creation operators satisfy the anticommutation relations") {
  const FockSpace fock(3);
  const Matrix id = Matrix::Identity(8, 8);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Matrix ci = fock.creation_mode(i);
      const Matrix cj = fock.creation_mode(j);
      CHECK(op_norm(ci * cj + cj * ci) < 1e-14);
      const Matrix anti = ci * cj.adjoint() + cj.adjoint() * ci;
      CHECK(op_norm(anti - (i == j ? id : Matrix::Zero(8, 8))) < 1e-14);
    }
}

TEST_CASE("field operators satisfy the CAR axioms") {
  for (Eigen::Index m : {2, 3}) {
    const CarSystem sys = standard_system(m);
    Rng rng(10 + m);
    std::vector<Vector> probes;
    for (int i = 0; i < 6; ++i) probes.push_back(rng.vector(2 * m));
    CHECK(car_axiom_residual(sys, [&](const Vector& f) { return sys.field(f); },
                             probes) < 1e-12);
  }
}

TEST_CASE("pairing families have the predicted sizes") {
  for (int n = 0; n <= 6; ++n)
    for (int p = 0; 2 * p <= n; ++p) {
      const long expected =
          binom(n, n - 2 * p) * factorial(2 * p) / (factorial(p) * (1L << p));
      CHECK(static_cast<long>(enumerate_pairings(n, p).size()) == expected);
    }
}

TEST_CASE("vacuum expansion equals direct operator application") {
  const CarSystem sys = standard_system(2);
  Rng rng(11);
  for (int n = 1; n <= 4; ++n) {
    std::vector<Vector> fs;
    for (int i = 0; i < n; ++i) fs.push_back(rng.vector(4));
    Vector direct = sys.fock().vacuum();
    for (int i = 0; i < n; ++i) direct = sys.field(fs[i]) * direct;
    CHECK((direct - vacuum_expansion(sys, fs)).norm() < 1e-10);
  }
  CHECK_THROWS_AS(vacuum_expansion(sys, std::vector<Vector>(9, Vector::Zero(4))),
                  LimitExceeded);
}

TEST_CASE("the half-angle pair is generic with norm product 1/sqrt(2)") {
  const ProjectionPairC2 pair = projection_pair_c2();
  const ReferenceSpace ref{2, pair.gamma};
  const CarSystem sys(ref, pair.p);
  const GenericPositionReport gp = generic_position_report(sys, pair.q);
  CHECK(gp.generic);
  CHECK(gp.delta == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  // The three norms tied to the pair all coincide with ||P - Q||.
  const Matrix p = pair.p.projection();
  const Matrix q = pair.q.projection();
  const Matrix id = Matrix::Identity(2, 2);
  const double d0 = op_norm(p - q);
  CHECK(op_norm((id - q) * p) == doctest::Approx(d0).epsilon(1e-12));
  CHECK(op_norm((id - q) * (id - p)) == doctest::Approx(d0).epsilon(1e-12));
}

TEST_CASE("one-particle modular data agrees with its graph characterization") {
  const ReferenceSpace ref = ReferenceSpace::standard(3);
  const CarSystem sys = standard_system(3);
  const Subspace q = gamma_fixed_subspace(ref, 3, 12);
  REQUIRE(generic_position_report(sys, q).generic);
  const OneParticleModular op = modular_one_particle(sys, q);
  CHECK(op_norm(op.delta_p - op.delta_p_graph) < 1e-9);
  const Matrix inv = fractional_power(op.delta_p, -1.0);
  CHECK(op_norm(inv - op.beta * op.beta.adjoint()) < 1e-9);
  CHECK(op_norm(inv - op.alpha.adjoint() * op.alpha) < 1e-9);
}

TEST_CASE("fock modular operator restricts to the one-particle data") {
  const ReferenceSpace ref = ReferenceSpace::standard(2);
  const CarSystem sys = standard_system(2);
  const Subspace q = gamma_fixed_subspace(ref, 2, 13);
  REQUIRE(generic_position_report(sys, q).generic);
  const OneParticleModular op = modular_one_particle(sys, q);
  const FockModular fm = modular_fock(sys, q);
  CHECK(op_norm(sys.fock().particle_block(fm.md.delta, 1) - op.delta_p) < 1e-9);
  CHECK(op_norm(sys.fock().particle_block(fm.md.j.entries, 1) - op.j_p.entries) <
        1e-9);
}

TEST_CASE("intersection patterns control cyclicity and separation") {
  const ReferenceSpace ref = ReferenceSpace::standard(2);
  const CarSystem sys = standard_system(2);

  // q = span{e1 + e3}: p meets q-perp, so the vacuum is not cyclic.
  Matrix f1 = Matrix::Zero(4, 1);
  f1(1, 0) = 1.0 / std::sqrt(2.0);
  f1(3, 0) = 1.0 / std::sqrt(2.0);
  const Subspace q1 = invariant_subspace(ref, Subspace::from_frame(f1));
  std::vector<Matrix> gens1{sys.field(q1.frame().col(0))};
  const OperatorAlgebra m1 = generate(gens1);
  CHECK_FALSE(is_cyclic(m1, sys.fock().vacuum()));
  CHECK(is_separating(m1, sys.fock().vacuum()));

  // q = span{e1, e3, e0 + e2}: p meets q, so the vacuum is not separating.
  Matrix f2 = Matrix::Zero(4, 3);
  f2(1, 0) = 1.0;
  f2(3, 1) = 1.0;
  f2(0, 2) = 1.0 / std::sqrt(2.0);
  f2(2, 2) = 1.0 / std::sqrt(2.0);
  const Subspace q2 = invariant_subspace(ref, Subspace::from_frame(f2));
  std::vector<Matrix> gens2;
  for (int i = 0; i < 3; ++i) gens2.push_back(sys.field(q2.frame().col(i)));
  const OperatorAlgebra m2 = generate(gens2);
  CHECK(is_cyclic(m2, sys.fock().vacuum()));
  CHECK_FALSE(is_separating(m2, sys.fock().vacuum()));
}

TEST_CASE("a subspace that is not gamma-invariant is rejected") {
  const ReferenceSpace ref = ReferenceSpace::standard(2);
  Matrix f = Matrix::Zero(4, 1);
  f(0, 0) = 1.0;  // gamma maps e0 to e2, outside the span
  CHECK_THROWS_AS(invariant_subspace(ref, Subspace::from_frame(f)),
                  NotGammaCommuting);
}

TEST_CASE("bogoljubov images satisfy the CAR axioms; bad unitaries are rejected") {
  const CarSystem sys = standard_system(2);
  const ReferenceSpace& ref = sys.ref();

  // A gamma-commuting unitary: permutation swapping the two mode pairs.
  Matrix u = Matrix::Zero(4, 4);
  u(0, 1) = u(1, 0) = u(2, 3) = u(3, 2) = 1.0;
  Rng rng(14);
  std::vector<Vector> probes;
  for (int i = 0; i < 4; ++i) probes.push_back(rng.vector(4));
  const std::vector<Matrix> images = bogoljubov(sys, u, probes);
  REQUIRE(images.size() == probes.size());
  for (size_t i = 0; i < probes.size(); ++i)
    CHECK(op_norm(images[i] - sys.field(u * probes[i])) < 1e-12);

  Matrix bad = Matrix::Identity(4, 4);
  bad(0, 0) = Complex(0, 1);  // unitary but fails to commute with gamma
  CHECK_THROWS_AS(bogoljubov(sys, bad, probes), NotGammaCommuting);
  CHECK_THROWS_AS(bogoljubov(sys, 2.0 * u, probes), NotGammaCommuting);
}
