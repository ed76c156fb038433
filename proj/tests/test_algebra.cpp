#include "doctest.h"
#include "modlab/algebra.hpp"
#include "modlab/random.hpp"

using namespace modlab;

namespace {

Matrix unit(int d, int i, int j) {
  Matrix e = Matrix::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

}  // namespace

TEST_CASE("a single off-diagonal generator produces the full matrix algebra") {
  const OperatorAlgebra m = generate({unit(2, 0, 1)});
  CHECK(m.dim() == 4);
  m.validate();
  const OperatorAlgebra mp = commutant(m);
  CHECK(mp.dim() == 1);  // scalars only
  CHECK(span_equal(commutant(mp), m));
}

TEST_CASE("diagonal generators stay abelian and self-commutant") {
  const OperatorAlgebra m = generate({unit(3, 0, 0), unit(3, 1, 1)});
  CHECK(m.dim() == 3);  // unit adjoined
  CHECK(is_abelian(m));
  CHECK(span_equal(m, commutant(m)));
  CHECK_FALSE(is_factor(m));
  CHECK(center(m).dim() == 3);
}

TEST_CASE("cyclic and separating vectors for the diagonal algebra") {
  const OperatorAlgebra m = generate({unit(3, 0, 0), unit(3, 1, 1)});
  Vector good(3), bad(3);
  good << 1, 1, 1;
  good /= good.norm();
  bad << 1, 1, 0;
  bad /= bad.norm();
  CHECK(is_cyclic(m, good));
  CHECK(is_separating(m, good));
  CHECK_FALSE(is_cyclic(m, bad));
  CHECK_FALSE(is_separating(m, bad));
  CHECK(cyclic_rank(m, bad) == 2);
}

TEST_CASE("tensor of full algebras has product dimension and trivial center") {
  const OperatorAlgebra a = generate({unit(2, 0, 1)});
  const OperatorAlgebra t = tensor_algebra(a, a);
  CHECK(t.ambient_dim() == 4);
  CHECK(t.dim() == 16);
  CHECK(is_factor(t));
}

TEST_CASE("commutant of a tensor factor is the other factor") {
  std::vector<Matrix> left;
  const Matrix id2 = Matrix::Identity(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) left.push_back(kron(unit(2, i, j), id2));
  std::vector<Matrix> right;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) right.push_back(kron(id2, unit(2, i, j)));
  CHECK(span_equal(commutant(generate(left)), generate(right)));
}
