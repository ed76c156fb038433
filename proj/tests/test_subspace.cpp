#include "doctest.h"
#include "modlab/models.hpp"
#include "modlab/random.hpp"
#include "modlab/subspace.hpp"

using namespace modlab;

TEST_CASE("from_span orthonormalizes and finds the rank") {
  Matrix span(3, 3);
  span << 1, 2, 3, 0, 0, 0, 1, 2, 3;  // rank 1
  const Subspace s = Subspace::from_span(3, span);
  CHECK(s.rank() == 1);
  CHECK(op_norm(s.frame().adjoint() * s.frame() - Matrix::Identity(1, 1)) < 1e-12);
  Vector v(3);
  v << 2, 0, 2;
  CHECK(s.contains(v));
  v << 1, 1, 1;
  CHECK_FALSE(s.contains(v));
}

TEST_CASE("intersection and complement of coordinate planes") {
  Matrix f1(4, 2), f2(4, 2);
  f1.setZero();
  f1(0, 0) = 1;
  f1(1, 1) = 1;  // span{e0, e1}
  f2.setZero();
  f2(1, 0) = 1;
  f2(2, 1) = 1;  // span{e1, e2}
  const Subspace a = Subspace::from_frame(f1);
  const Subspace b = Subspace::from_frame(f2);
  const Subspace meet = intersect(a, b);
  REQUIRE(meet.rank() == 1);
  Vector e1 = Vector::Zero(4);
  e1(1) = 1;
  CHECK(meet.contains(e1));
  CHECK(ortho_complement(a).rank() == 2);
  CHECK(intersect(a, ortho_complement(a)).rank() == 0);
}

TEST_CASE("norm of the projection product on the half-angle pair") {
  const ProjectionPairC2 pair = projection_pair_c2();
  CHECK(norm_product(pair.p, pair.q) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("rejects a non-orthonormal frame") {
  Matrix f(2, 2);
  f << 1, 1, 0, 1;
  CHECK_THROWS_AS(Subspace::from_frame(f), ValidationError);
}
