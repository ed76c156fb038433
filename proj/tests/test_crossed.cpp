#include "doctest.h"
#include "modlab/crossed.hpp"
#include "modlab/random.hpp"
#include "modlab/scenario.hpp"

using namespace modlab;

namespace {

FiniteMeasureSpace uniform(int n) {
  FiniteMeasureSpace ms;
  for (int i = 0; i < n; ++i) {
    ms.points.push_back("x" + std::to_string(i));
    ms.weights.push_back(1.0 / n);
  }
  return ms;
}

GroupAction z5_translation() {
  GroupAction act;
  act.group = FiniteGroup::cyclic(5);
  for (int g = 0; g < 5; ++g) {
    std::vector<int> perm(5);
    for (int x = 0; x < 5; ++x) perm[x] = (x + g) % 5;
    act.perms.push_back(perm);
  }
  return act;
}

}  // namespace

TEST_CASE("translation action is free and ergodic; trivial action is neither") {
  const FiniteMeasureSpace ms = uniform(5);
  const ActionClassification good = classify_action(ms, z5_translation());
  CHECK(good.free);
  CHECK(good.ergodic);

  GroupAction trivial;
  trivial.group = FiniteGroup::cyclic(5);
  trivial.perms.assign(5, {0, 1, 2, 3, 4});
  const ActionClassification bad = classify_action(ms, trivial);
  CHECK_FALSE(bad.free);
  CHECK_FALSE(bad.ergodic);
}

TEST_CASE("a weight-changing permutation is rejected") {
  FiniteMeasureSpace ms = uniform(2);
  ms.weights = {0.75, 0.25};
  GroupAction act;
  act.group = FiniteGroup::cyclic(2);
  act.perms = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(act.validate(ms), NotMeasurePreserving);
}

TEST_CASE("a non-homomorphic assignment of permutations is rejected") {
  const FiniteMeasureSpace ms = uniform(3);
  GroupAction act;
  act.group = FiniteGroup::cyclic(3);
  act.perms = {{0, 1, 2}, {1, 2, 0}, {1, 2, 0}};  // g^2 mapped wrong
  CHECK_THROWS_AS(act.validate(ms), NotHomomorphism);
}

TEST_CASE("crossed product of z5 is a 25-dimensional factor with covariance") {
  const FiniteMeasureSpace ms = uniform(5);
  const GroupAction act = z5_translation();
  const CrossedProductModel model = build_crossed_product(ms, act);
  CHECK(model.k_dim == 25);
  CHECK(model.algebra.dim() == 25);
  CHECK(is_factor(model.algebra));
  CHECK(is_cyclic(model.algebra, model.omega));
  CHECK(is_separating(model.algebra, model.omega));

  // Covariance on a sample function.
  Rng rng(6);
  const Vector f = rng.vector(5);
  for (int g = 0; g < 5; ++g) {
    Vector alpha_f(5);
    for (int x = 0; x < 5; ++x) alpha_f(x) = f(act.perms[act.group.inverse(g)][x]);
    CHECK(op_norm(model.pi(alpha_f) -
                  model.u(g) * model.pi(f) * model.u(g).adjoint()) < 1e-12);
  }
}

TEST_CASE("symbols round-trip through matrix elements") {
  const CrossedProductModel model =
      build_crossed_product(uniform(5), z5_translation());
  Rng rng(7);
  Symbol a;
  for (int g = 0; g < 5; ++g) a.push_back(rng.vector(5));
  const Matrix elem = element_from_symbol(model, a);
  CHECK(model.algebra.contains(elem));
  const Symbol back = symbol_from_element(model, elem);
  for (int g = 0; g < 5; ++g) CHECK((a[g] - back[g]).norm() < 1e-10);
  // A matrix outside the algebra has no symbol.
  Matrix outside = Matrix::Zero(25, 25);
  outside(0, 1) = 1.0;
  CHECK_THROWS_AS(symbol_from_element(model, outside), NotInAlgebra);
}

TEST_CASE("the explicit block operator is the modular conjugation data") {
  const CrossedProductModel model =
      build_crossed_product(uniform(5), z5_translation());
  const ModularData md = build_modular(model.algebra, model.omega);
  for (const CheckRecord& rec : verify_crossed_tomita(model, md)) {
    INFO(rec.check_id);
    CHECK(rec.passed);
  }
  CHECK(op_norm(explicit_tomita_operator(model).entries - md.s.entries) < 1e-10);
}

TEST_CASE("cycle notation parses and validates") {
  CHECK(parse_cycles("()", 3) == std::vector<int>{0, 1, 2});
  CHECK(parse_cycles("(0 1 2)", 3) == std::vector<int>{1, 2, 0});
  CHECK(parse_cycles("(0 1)(2 3)", 4) == std::vector<int>{1, 0, 3, 2});
  CHECK_THROWS_AS(parse_cycles("(0 5)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)", 3), ParseError);
}
