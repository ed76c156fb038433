#include "modlab/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace modlab {

namespace {

constexpr int kAssociativityCheckLimit = 64;

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley)
    : cayley_(std::move(cayley)) {
  const int n = static_cast<int>(cayley_.size());
  if (n == 0) throw ValidationError("FiniteGroup: empty table");
  for (const auto& row : cayley_) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("FiniteGroup: table not square");
    for (int v : row)
      if (v < 0 || v >= n) throw ValidationError("FiniteGroup: index out of range");
  }
  // Latin square check.
  for (int g = 0; g < n; ++g) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int h = 0; h < n; ++h) {
      if (seen_row[cayley_[g][h]] || seen_col[cayley_[h][g]])
        throw ValidationError("FiniteGroup: table not a Latin square");
      seen_row[cayley_[g][h]] = true;
      seen_col[cayley_[h][g]] = true;
    }
  }
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n; ++g)
      if (cayley_[e][g] != g || cayley_[g][e] != g) { ok = false; break; }
    if (ok) { identity_ = e; break; }
  }
  if (identity_ < 0) throw ValidationError("FiniteGroup: no identity element");
  inverse_.assign(n, -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (cayley_[g][h] == identity_) inverse_[g] = h;
  for (int g = 0; g < n; ++g) {
    if (inverse_[g] < 0 || cayley_[inverse_[g]][g] != identity_)
      throw ValidationError("FiniteGroup: missing inverse");
  }
  if (n <= kAssociativityCheckLimit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]])
            throw ValidationError("FiniteGroup: table not associative");
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic: order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 4) throw ValidationError("symmetric: supported for n in 1..4");
  std::vector<std::vector<int>> perms;
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  const int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> ab(n);
      for (int i = 0; i < n; ++i) ab[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(ab);
    }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral4() {
  // Elements r^i s^j, j in {0,1}, indexed i + 4j; r s = s r^{-1}.
  auto idx = [](int i, int j) { return ((i % 4) + 4) % 4 + 4 * (j % 2); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i1 = 0; i1 < 4; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^{i1 + (-1)^{j1} i2} s^{j1+j2}
          int i = j1 == 0 ? i1 + i2 : i1 - i2;
          t[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 + j2);
        }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::named(const std::string& name) {
  if (name == "s3") return symmetric(3);
  if (name == "s4") return symmetric(4);
  if (name == "d4") return dihedral4();
  if (name.size() >= 2 && name[0] == 'z') {
    int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 12) return cyclic(n);
  }
  throw ValidationError("unknown group name: " + name);
}

RegularRepresentations regular_representations(const FiniteGroup& g) {
  const int n = g.order();
  RegularRepresentations rep;
  rep.left.reserve(n);
  rep.right.reserve(n);
  for (int g0 = 0; g0 < n; ++g0) {
    Matrix l = Matrix::Zero(n, n);
    Matrix r = Matrix::Zero(n, n);
    for (int h = 0; h < n; ++h) {
      l(g.mul(g0, h), h) = 1.0;                // L(g0) delta_h = delta_{g0 h}
      r(g.mul(h, g.inverse(g0)), h) = 1.0;     // R(g0) delta_h = delta_{h g0^{-1}}
    }
    rep.left.push_back(std::move(l));
    rep.right.push_back(std::move(r));
  }
  rep.omega = Vector::Zero(n);
  rep.omega(g.identity()) = 1.0;
  return rep;
}

void TensorScenario::validate(const Tolerance& tol) const {
  if (n <= 0 || static_cast<int>(lambdas.size()) != n)
    throw ValidationError("TensorScenario: need n positive weights");
  double sum = 0.0;
  for (double l : lambdas) {
    if (l <= 0.0) throw ValidationError("TensorScenario: weights must be positive");
    sum += l * l;
  }
  if (std::abs(sum - 1.0) > tol.cutoff(1.0))
    throw ValidationError("TensorScenario: weights not normalized");
}

TensorModel tensor_scenario(const TensorScenario& ts, const Tolerance& tol) {
  ts.validate(tol);
  const int n = ts.n;
  const int d = n * n;
  auto idx = [n](int k, int s) { return k * n + s; };

  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      gens.push_back(kron(e, Matrix::Identity(n, n)));
    }

  TensorModel model;
  model.algebra = generate(gens, tol);
  model.omega = Vector::Zero(d);
  for (int k = 0; k < n; ++k) model.omega(idx(k, k)) = ts.lambdas[k];

  Matrix s = Matrix::Zero(d, d), s_star = Matrix::Zero(d, d), j = Matrix::Zero(d, d);
  Matrix delta = Matrix::Zero(d, d);
  for (int k = 0; k < n; ++k)
    for (int sx = 0; sx < n; ++sx) {
      const double ratio = ts.lambdas[k] / ts.lambdas[sx];
      s(idx(sx, k), idx(k, sx)) = ratio;
      s_star(idx(sx, k), idx(k, sx)) = 1.0 / ratio;
      j(idx(sx, k), idx(k, sx)) = 1.0;
      delta(idx(k, sx), idx(k, sx)) = ratio * ratio;
    }
  model.predicted_s = Antilinear(std::move(s));
  model.predicted_s_star = Antilinear(std::move(s_star));
  model.predicted_j = Antilinear(std::move(j));
  model.predicted_delta = std::move(delta);
  return model;
}

ProjectionPairC2 projection_pair_c2() {
  ProjectionPairC2 pair;
  Matrix pf(2, 1), qf(2, 1);
  pf << 1.0, 0.0;
  qf << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  pair.p = Subspace::from_frame(pf);
  pair.q = Subspace::from_frame(qf);
  Matrix g(2, 2);
  g << 0, 1, 1, 0;  // (a, b) -> (conj b, conj a)
  pair.gamma = Antilinear(std::move(g));
  return pair;
}

}  // namespace modlab
