#include "modlab/crossed.hpp"

#include <cmath>

namespace modlab {

void FiniteMeasureSpace::validate(const Tolerance& tol) const {
  if (points.empty() || points.size() != weights.size())
    throw ValidationError("FiniteMeasureSpace: points/weights mismatch");
  double sum = 0.0;
  for (double w : weights) {
    if (w <= 0.0)
      throw ValidationError("FiniteMeasureSpace: weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol.cutoff(1.0))
    throw ValidationError("FiniteMeasureSpace: weights must sum to 1");
}

void GroupAction::validate(const FiniteMeasureSpace& ms, const Tolerance& tol) const {
  const int n = ms.size();
  const int order = group.order();
  if (static_cast<int>(perms.size()) != order)
    throw ValidationError("GroupAction: one permutation per group element required");
  for (const auto& p : perms) {
    if (static_cast<int>(p.size()) != n)
      throw ValidationError("GroupAction: permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int x : p) {
      if (x < 0 || x >= n || seen[x])
        throw ValidationError("GroupAction: not a permutation");
      seen[x] = true;
    }
  }
  for (int x = 0; x < n; ++x)
    if (perms[group.identity()][x] != x)
      throw NotHomomorphism("GroupAction: identity element must act trivially");
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      for (int x = 0; x < n; ++x)
        if (perms[group.mul(g, h)][x] != perms[g][perms[h][x]])
          throw NotHomomorphism("GroupAction: perms do not form a homomorphism");
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < n; ++x)
      if (std::abs(ms.weights[perms[g][x]] - ms.weights[x]) > tol.cutoff(1.0))
        throw NotMeasurePreserving("GroupAction: weights not invariant");
}

ActionClassification classify_action(const FiniteMeasureSpace& ms,
                                     const GroupAction& act) {
  const int n = ms.size();
  ActionClassification c;
  c.free = true;
  for (int g = 0; g < act.group.order(); ++g) {
    if (g == act.group.identity()) continue;
    for (int x = 0; x < n; ++x)
      if (act.perms[g][x] == x) { c.free = false; break; }
    if (!c.free) break;
  }
  // Orbit of point 0; transitive iff it exhausts the points.
  std::vector<bool> in_orbit(n, false);
  in_orbit[0] = true;
  int count = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int g = 0; g < act.group.order(); ++g)
      for (int x = 0; x < n; ++x)
        if (in_orbit[x] && !in_orbit[act.perms[g][x]]) {
          in_orbit[act.perms[g][x]] = true;
          ++count;
          grew = true;
        }
  }
  c.ergodic = (count == n);
  return c;
}

Matrix CrossedProductModel::pi(const Vector& f) const {
  const int n = space.size();
  const int order = action.group.order();
  Matrix out = Matrix::Zero(k_dim, k_dim);
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < n; ++x)
      out(g * n + x, g * n + x) = f(action.perms[g][x]);  // alpha_g^{-1}(f) = f o T_g
  return out;
}

CrossedProductModel build_crossed_product(const FiniteMeasureSpace& ms,
                                          const GroupAction& act,
                                          const Tolerance& tol) {
  ms.validate(tol);
  act.validate(ms, tol);
  const int n = ms.size();
  const int order = act.group.order();

  CrossedProductModel model;
  model.space = ms;
  model.action = act;
  model.k_dim = static_cast<Eigen::Index>(order) * n;

  for (int y = 0; y < n; ++y) {
    Vector indicator = Vector::Zero(n);
    indicator(y) = 1.0;
    model.pi_images.push_back(model.pi(indicator));
  }
  for (int g0 = 0; g0 < order; ++g0) {
    Matrix u = Matrix::Zero(model.k_dim, model.k_dim);
    const int g0inv = act.group.inverse(g0);
    for (int g = 0; g < order; ++g)
      for (int x = 0; x < n; ++x)
        u(g * n + x, act.group.mul(g0inv, g) * n + x) = 1.0;
    model.u_images.push_back(std::move(u));
  }

  // Covariance pi(alpha_g(f)) = U(g) pi(f) U(g)^{-1} on the indicator basis.
  for (int g = 0; g < order; ++g) {
    const int ginv = act.group.inverse(g);
    for (int y = 0; y < n; ++y) {
      Vector shifted = Vector::Zero(n);  // alpha_g(1_y) = 1_{T_g(y)}
      shifted(act.perms[g][y]) = 1.0;
      Matrix lhs = model.pi(shifted);
      Matrix rhs = model.u_images[g] * model.pi_images[y] * model.u_images[ginv];
      if (op_norm(Matrix(lhs - rhs)) > tol.cutoff(1.0))
        throw VerificationFailure("build_crossed_product: covariance relation failed");
    }
  }

  std::vector<Matrix> gens = model.pi_images;
  gens.insert(gens.end(), model.u_images.begin(), model.u_images.end());
  model.algebra = generate(gens, tol);

  model.omega = Vector::Zero(model.k_dim);
  const int e = act.group.identity();
  for (int x = 0; x < n; ++x) model.omega(e * n + x) = std::sqrt(ms.weights[x]);
  return model;
}

Matrix element_from_symbol(const CrossedProductModel& model, const Symbol& a) {
  const int n = model.space.size();
  const int order = model.action.group.order();
  if (static_cast<int>(a.size()) != order)
    throw ValidationError("element_from_symbol: one function per group element required");
  Matrix out = Matrix::Zero(model.k_dim, model.k_dim);
  for (int gp = 0; gp < order; ++gp)
    for (int g = 0; g < order; ++g) {
      const int key = model.action.group.mul(gp, model.action.group.inverse(g));
      for (int x = 0; x < n; ++x)
        out(gp * n + x, g * n + x) = a[key](model.action.perms[g][x]);
    }
  return out;
}

Symbol symbol_from_element(const CrossedProductModel& model, const Matrix& n_mat,
                           const Tolerance& tol) {
  const int n = model.space.size();
  const int order = model.action.group.order();
  const int e = model.action.group.identity();
  Symbol a(order, Vector::Zero(n));
  // Read the symbol off the gamma = e column of blocks, where alpha is trivial.
  for (int gp = 0; gp < order; ++gp)
    for (int x = 0; x < n; ++x) a[gp](x) = n_mat(gp * n + x, e * n + x);
  Matrix rebuilt = element_from_symbol(model, a);
  const double err = op_norm(Matrix(rebuilt - n_mat));
  if (err > tol.cutoff(op_norm(n_mat)))
    throw NotInAlgebra("symbol_from_element: reconstruction error " +
                       std::to_string(err));
  return a;
}

bool pi_maximal_abelian(const CrossedProductModel& model, const Tolerance& tol) {
  const OperatorAlgebra pi_alg = generate(model.pi_images, tol);
  if (!is_abelian(pi_alg, tol)) return false;
  // Relative commutant inside the crossed product, as an HS-span intersection.
  const Subspace rel =
      intersect(Subspace::from_frame(commutant(pi_alg, tol).frame(), tol),
                Subspace::from_frame(model.algebra.frame(), tol), tol);
  std::vector<Matrix> rel_basis;
  for (Eigen::Index i = 0; i < rel.rank(); ++i)
    rel_basis.push_back(unvectorize(rel.frame().col(i), model.k_dim));
  return span_equal(OperatorAlgebra(model.k_dim, std::move(rel_basis)), pi_alg,
                    tol);
}

Antilinear explicit_tomita_operator(const CrossedProductModel& model) {
  const int n = model.space.size();
  const int order = model.action.group.order();
  Matrix s = Matrix::Zero(model.k_dim, model.k_dim);
  // (S xi)_{g^{-1}} = alpha_g(conj(xi_g)); alpha_g(f)(x) = f(T_{g^{-1}} x).
  for (int g = 0; g < order; ++g) {
    const int ginv = model.action.group.inverse(g);
    for (int x = 0; x < n; ++x)
      s(ginv * n + x, g * n + model.action.perms[ginv][x]) = 1.0;
  }
  return Antilinear(std::move(s));
}

std::vector<CheckRecord> verify_crossed_tomita(const CrossedProductModel& model,
                                               const ModularData& md,
                                               const Tolerance& tol) {
  const double t = tol.cutoff(1.0);
  const Matrix id = Matrix::Identity(model.k_dim, model.k_dim);
  std::vector<CheckRecord> out;

  auto push = [&](std::string id_, std::string anchor, double residual) {
    CheckRecord r;
    r.check_id = std::move(id_);
    r.anchor = std::move(anchor);
    r.residual = residual;
    r.tolerance = t;
    r.passed = residual <= t;
    out.push_back(std::move(r));
  };

  push("delta_eq_identity", "crossed.tomita",
       op_norm(Matrix(md.delta - id)));
  push("s_eq_j", "crossed.tomita",
       op_norm(Matrix(md.s.entries - md.j.entries)));
  push("explicit_block_formula", "crossed.tomita",
       op_norm(Matrix(explicit_tomita_operator(model).entries - md.s.entries)));
  StateFunctional omega{md.omega};
  push("vector_state_tracial", "crossed.trace", trace_defect(omega, model.algebra));
  return out;
}

}  // namespace modlab
