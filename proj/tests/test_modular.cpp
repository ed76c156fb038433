#include "doctest.h"
#include "modlab/models.hpp"
#include "modlab/modular.hpp"

using namespace modlab;

namespace {

TensorModel two_level() {
  TensorScenario ts;
  ts.n = 2;
  ts.lambdas = {0.8, 0.6};
  return tensor_scenario(ts);
}

}  // namespace

TEST_CASE("modular spectrum of the 2x2 entangled pair is {9/16, 1, 1, 16/9}") {
  const TensorModel tm = two_level();
  const ModularData md = build_modular(tm.algebra, tm.omega);
  REQUIRE(md.delta_eig.values.size() == 4);
  CHECK(md.delta_eig.values(0) == doctest::Approx(9.0 / 16.0).epsilon(1e-12));
  CHECK(md.delta_eig.values(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(md.delta_eig.values(2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(md.delta_eig.values(3) == doctest::Approx(16.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("the relation battery passes on the entangled pair") {
  const TensorModel tm = two_level();
  const ModularData md = build_modular(tm.algebra, tm.omega);
  for (const CheckRecord& rec : verify_modular_relations(md)) {
    INFO(rec.check_id);
    CHECK(rec.passed);
  }
  for (const CheckRecord& rec :
       verify_tomita_takesaki(tm.algebra, md, default_t_grid())) {
    INFO(rec.check_id);
    CHECK(rec.passed);
  }
}

TEST_CASE("unequal weights break the trace property and the isometry") {
  const TensorModel tm = two_level();
  const ModularData md = build_modular(tm.algebra, tm.omega);
  const StateFunctional state{tm.omega};
  CHECK_FALSE(is_trace(state, tm.algebra));
  CHECK(tomita_isometry_defect(md) > 1e-3);
}

TEST_CASE("the regular representation gives a tracial state and S an isometry") {
  const RegularRepresentations reg =
      regular_representations(FiniteGroup::named("s3"));
  const OperatorAlgebra m = generate(reg.left);
  const ModularData md = build_modular(m, reg.omega);
  CHECK(is_trace(StateFunctional{reg.omega}, m));
  CHECK(tomita_isometry_defect(md) < 1e-10);
}

TEST_CASE("build_modular rejects a non-cyclic vector") {
  const TensorModel tm = two_level();
  Vector product_state = Vector::Zero(4);
  product_state(0) = 1.0;  // e_0 (x) e_0 is not cyclic for L(H) (x) 1
  CHECK_THROWS_AS(build_modular(tm.algebra, product_state), NotCyclic);
}

TEST_CASE("modular flow fixes the state and satisfies the boundary condition") {
  const TensorModel tm = two_level();
  const ModularData md = build_modular(tm.algebra, tm.omega);
  const Matrix& a = tm.algebra.basis()[1];
  const Matrix& b = tm.algebra.basis()[2];
  for (const CheckRecord& rec :
       kms_check(md, tm.algebra, a, b, default_t_grid())) {
    INFO(rec.check_id);
    CHECK(rec.passed);
  }
  CHECK(op_norm(modular_flow(md, a, 0.0) - a) < 1e-12);
}
