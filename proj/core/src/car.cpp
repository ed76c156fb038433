#include "modlab/car.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <bit>
#include <cmath>

namespace modlab {

void ReferenceSpace::validate(const Tolerance& tol) const {
  if (dim <= 0 || dim % 2 != 0)
    throw ValidationError("ReferenceSpace: dimension must be even and positive");
  if (gamma.dim() != dim)
    throw DimensionMismatch("ReferenceSpace: involution dimension mismatch");
  const Matrix id = Matrix::Identity(dim, dim);
  if (op_norm(Matrix(gamma * gamma - id)) > tol.cutoff(1.0))
    throw ValidationError("ReferenceSpace: Gamma^2 != 1");
  // Antiunitary: <Gamma f, Gamma h> = <h, f> iff the entries are unitary.
  if (op_norm(Matrix(gamma.entries.adjoint() * gamma.entries - id)) > tol.cutoff(1.0))
    throw ValidationError("ReferenceSpace: Gamma not antiunitary");
}

ReferenceSpace ReferenceSpace::standard(Eigen::Index m) {
  ReferenceSpace ref;
  ref.dim = 2 * m;
  Matrix g = Matrix::Zero(2 * m, 2 * m);
  g.block(0, m, m, m) = Matrix::Identity(m, m);
  g.block(m, 0, m, m) = Matrix::Identity(m, m);
  ref.gamma = Antilinear(std::move(g));
  return ref;
}

Subspace basis_projection(const ReferenceSpace& ref, const Subspace& p,
                          const Tolerance& tol) {
  ref.validate(tol);
  if (p.ambient_dim() != ref.dim)
    throw DimensionMismatch("basis_projection: ambient dimension mismatch");
  Matrix proj = p.projection();
  Matrix reflected = sandwich(ref.gamma, proj);
  if (op_norm(Matrix(proj + reflected - Matrix::Identity(ref.dim, ref.dim))) >
      tol.cutoff(1.0))
    throw ValidationError("basis_projection: P + Gamma P Gamma != 1");
  return p;
}

Subspace invariant_subspace(const ReferenceSpace& ref, const Subspace& q,
                            const Tolerance& tol) {
  if (q.ambient_dim() != ref.dim)
    throw DimensionMismatch("invariant_subspace: ambient dimension mismatch");
  Matrix proj = q.projection();
  if (op_norm(Matrix(sandwich(ref.gamma, proj) - proj)) > tol.cutoff(1.0))
    throw NotGammaCommuting("invariant_subspace: Gamma Q Gamma != Q");
  return q;
}

FockSpace::FockSpace(int modes) : modes_(modes) {
  if (modes < 0 || modes > 12)
    throw LimitExceeded("FockSpace: mode count outside [0, 12]");
  const Eigen::Index d = dim();
  creation_.reserve(modes);
  for (int i = 0; i < modes; ++i) {
    Matrix c = Matrix::Zero(d, d);
    for (Eigen::Index mask = 0; mask < d; ++mask) {
      if (mask & (Eigen::Index(1) << i)) continue;
      const int below = std::popcount(static_cast<unsigned long long>(
          mask & ((Eigen::Index(1) << i) - 1)));
      c(mask | (Eigen::Index(1) << i), mask) = (below % 2 == 0) ? 1.0 : -1.0;
    }
    creation_.push_back(std::move(c));
  }
}

Vector FockSpace::vacuum() const {
  Vector v = Vector::Zero(dim());
  v(0) = 1.0;
  return v;
}

Matrix FockSpace::creation_coords(const Vector& coords) const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (int i = 0; i < modes_; ++i) out += coords(i) * creation_[i];
  return out;
}

Matrix FockSpace::annihilation_coords(const Vector& coords) const {
  return creation_coords(coords).adjoint();
}

Vector FockSpace::wedge(const std::vector<Vector>& coords) const {
  Vector v = vacuum();
  for (auto it = coords.rbegin(); it != coords.rend(); ++it)
    v = creation_coords(*it) * v;
  return v;
}

std::vector<Eigen::Index> FockSpace::grade_indices(int n) const {
  std::vector<Eigen::Index> out;
  for (Eigen::Index mask = 0; mask < dim(); ++mask)
    if (std::popcount(static_cast<unsigned long long>(mask)) == n)
      out.push_back(mask);
  return out;
}

Matrix FockSpace::particle_block(const Matrix& fock_op, int n) const {
  const auto idx = grade_indices(n);
  Matrix block(idx.size(), idx.size());
  for (size_t r = 0; r < idx.size(); ++r)
    for (size_t c = 0; c < idx.size(); ++c) block(r, c) = fock_op(idx[r], idx[c]);
  return block;
}

CarSystem::CarSystem(ReferenceSpace ref, Subspace p, const Tolerance& tol)
    : ref_(std::move(ref)),
      p_(basis_projection(ref_, std::move(p), tol)),
      fock_(static_cast<int>(p_.rank())) {}

Vector CarSystem::particle_coords(const Vector& v, const Tolerance& tol) const {
  Vector coords = p_.frame().adjoint() * v;
  if ((v - p_.frame() * coords).norm() > tol.cutoff(v.norm()))
    throw NotInParticleSpace("particle_coords: vector not in the particle space");
  return coords;
}

Matrix CarSystem::creation(const Vector& p_vec, const Tolerance& tol) const {
  return fock_.creation_coords(particle_coords(p_vec, tol));
}

Matrix CarSystem::annihilation(const Vector& p_vec, const Tolerance& tol) const {
  return creation(p_vec, tol).adjoint();
}

Matrix CarSystem::field(const Vector& f) const {
  Vector pf = p_.frame().adjoint() * f;
  Vector pgf = p_.frame().adjoint() * ref_.gamma(f);
  return fock_.creation_coords(pgf) + fock_.annihilation_coords(pf);
}

double car_axiom_residual(const CarSystem& sys,
                          const std::function<Matrix(const Vector&)>& a,
                          const std::vector<Vector>& test_vectors) {
  const Eigen::Index d = sys.fock().dim();
  const Matrix id = Matrix::Identity(d, d);
  double worst = 0.0;
  const Complex lambda(0.37, -1.21);  // fixed probe scalar for antilinearity
  for (const Vector& f : test_vectors) {
    for (const Vector& g : test_vectors) {
      worst = std::max(worst, op_norm(Matrix(a(Vector(lambda * f + g)) -
                                             std::conj(lambda) * a(f) - a(g))));
      Matrix anti = a(f) * a(g).adjoint() + a(g).adjoint() * a(f);
      worst = std::max(worst, op_norm(Matrix(anti - f.dot(g) * id)));
    }
    worst = std::max(worst,
                     op_norm(Matrix(a(f).adjoint() - a(sys.ref().gamma(f)))));
  }
  return worst;
}

std::vector<Matrix> bogoljubov(const CarSystem& sys, const Matrix& u,
                               const std::vector<Vector>& generators,
                               const Tolerance& tol) {
  const Matrix id = Matrix::Identity(sys.ref().dim, sys.ref().dim);
  if (op_norm(Matrix(u.adjoint() * u - id)) > tol.cutoff(1.0))
    throw NotGammaCommuting("bogoljubov: U not unitary");
  if (op_norm(Matrix(u * sys.ref().gamma.entries -
                     sys.ref().gamma.entries * u.conjugate())) > tol.cutoff(1.0))
    throw NotGammaCommuting("bogoljubov: U does not commute with Gamma");
  std::vector<Matrix> images;
  images.reserve(generators.size());
  for (const Vector& f : generators) images.push_back(sys.field(u * f));
  return images;
}

namespace {

int permutation_sign(const std::vector<int>& one_line) {
  int inversions = 0;
  for (size_t i = 0; i < one_line.size(); ++i)
    for (size_t j = i + 1; j < one_line.size(); ++j)
      if (one_line[i] > one_line[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

void enumerate_matchings(std::vector<int>& remaining,
                         std::vector<std::pair<int, int>>& pairs,
                         std::vector<std::vector<std::pair<int, int>>>& out) {
  if (remaining.empty()) {
    out.push_back(pairs);
    return;
  }
  // Largest remaining element leads each pair; alphas come out descending.
  int alpha = remaining.back();
  std::vector<int> rest(remaining.begin(), remaining.end() - 1);
  for (size_t bi = 0; bi < rest.size(); ++bi) {
    std::vector<int> next = rest;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(bi));
    pairs.emplace_back(alpha, rest[bi]);
    enumerate_matchings(next, pairs, out);
    pairs.pop_back();
  }
}

}  // namespace

std::vector<PairingTerm> enumerate_pairings(int n, int p) {
  if (p < 0 || 2 * p > n) return {};
  std::vector<PairingTerm> terms;
  // Choose the 2p paired values out of {1..n}.
  std::vector<int> subset(2 * p);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == 2 * p) {
      std::vector<bool> paired(n + 1, false);
      for (int v : subset) paired[v] = true;
      std::vector<int> free_desc;
      for (int v = n; v >= 1; --v)
        if (!paired[v]) free_desc.push_back(v);

      std::vector<int> pool = subset;  // ascending
      std::vector<std::pair<int, int>> pairs;
      std::vector<std::vector<std::pair<int, int>>> matchings;
      enumerate_matchings(pool, pairs, matchings);
      for (const auto& m : matchings) {
        PairingTerm term;
        term.pairs = m;
        term.free = free_desc;
        std::vector<int> one_line;
        for (const auto& [a, b] : m) {
          one_line.push_back(a);
          one_line.push_back(b);
        }
        for (int v : free_desc) one_line.push_back(v);
        // one_line lists images of the domain read n down to 1; reverse to
        // standard ascending one-line notation before taking the parity.
        std::reverse(one_line.begin(), one_line.end());
        term.sign = permutation_sign(one_line);
        terms.push_back(std::move(term));
      }
      return;
    }
    for (int v = start; v <= n; ++v) {
      subset[depth] = v;
      choose(v + 1, depth + 1);
    }
  };
  choose(1, 0);
  return terms;
}

Vector vacuum_expansion(const CarSystem& sys, const std::vector<Vector>& fs,
                        int limit) {
  const int n = static_cast<int>(fs.size());
  if (n > limit)
    throw LimitExceeded("vacuum_expansion: n = " + std::to_string(n) +
                        " exceeds limit " + std::to_string(limit));
  const Matrix pf = sys.particle_space().frame();
  auto p_coords = [&](int one_based) { return Vector(pf.adjoint() * fs[one_based - 1]); };
  auto pgamma_coords = [&](int one_based) {
    return Vector(pf.adjoint() * sys.ref().gamma(fs[one_based - 1]));
  };

  Vector result = Vector::Zero(sys.fock().dim());
  for (int p = 0; 2 * p <= n; ++p) {
    for (const PairingTerm& term : enumerate_pairings(n, p)) {
      Complex coeff(term.sign, 0.0);
      for (const auto& [alpha, beta] : term.pairs)
        coeff *= p_coords(alpha).dot(pgamma_coords(beta));  // <Pf_a, P Gamma f_b>
      std::vector<Vector> factors;
      factors.reserve(term.free.size());
      for (int j : term.free) factors.push_back(pgamma_coords(j));
      result += coeff * sys.fock().wedge(factors);
    }
  }
  return result;
}

namespace {

Antilinear antilinear_from_columns(const Matrix& dom, const Matrix& img,
                                   const Tolerance& tol) {
  if (numerical_rank(dom, tol) < dom.rows())
    throw NotGenericPosition("one-particle map: domain columns not spanning");
  Matrix conj_dom = dom.conjugate();
  return Antilinear(
      conj_dom.transpose().fullPivLu().solve(img.transpose()).transpose());
}

}  // namespace

GenericPositionReport generic_position_report(const CarSystem& sys,
                                              const Subspace& q,
                                              const Tolerance& tol) {
  invariant_subspace(sys.ref(), q, tol);
  const Subspace& p = sys.particle_space();
  Subspace p_perp = ortho_complement(p, tol);
  Subspace q_perp = ortho_complement(q, tol);

  GenericPositionReport rep;
  rep.dim_p_q = intersect(p, q, tol).rank();
  rep.dim_p_qperp = intersect(p, q_perp, tol).rank();
  rep.dim_pperp_q = intersect(p_perp, q, tol).rank();
  rep.dim_pperp_qperp = intersect(p_perp, q_perp, tol).rank();
  rep.generic = rep.dim_p_q == 0 && rep.dim_p_qperp == 0 && rep.dim_pperp_q == 0 &&
                rep.dim_pperp_qperp == 0;
  rep.delta = norm_product(p, q);
  return rep;
}

OneParticleModular modular_one_particle(const CarSystem& sys, const Subspace& q,
                                        const Tolerance& tol) {
  GenericPositionReport rep = generic_position_report(sys, q, tol);
  if (!rep.generic)
    throw NotGenericPosition("modular_one_particle: subspaces not in generic position");

  const Matrix pf = sys.particle_space().frame();
  const Subspace q_perp = ortho_complement(q, tol);
  const Matrix& gamma = sys.ref().gamma.entries;

  // beta : Pq -> P Gamma q on a basis of q.
  Matrix dom_b = pf.adjoint() * q.frame();
  Matrix img_b = pf.adjoint() * gamma * q.frame().conjugate();
  OneParticleModular out;
  out.beta = antilinear_from_columns(dom_b, img_b, tol);

  // alpha : Pq_perp -> -P Gamma q_perp.
  Matrix dom_a = pf.adjoint() * q_perp.frame();
  Matrix img_a = -(pf.adjoint() * gamma * q_perp.frame().conjugate());
  out.alpha = antilinear_from_columns(dom_a, img_a, tol);

  out.delta_p = out.beta.adjoint() * out.beta;
  out.delta_p = (out.delta_p + out.delta_p.adjoint()) / 2.0;

  // Graph route: Delta_p (PQp) = PQ_perp p over a basis of p.
  const Matrix qproj = q.projection();
  const Matrix qperp_proj =
      Matrix::Identity(sys.ref().dim, sys.ref().dim) - qproj;
  Matrix dom_g = pf.adjoint() * qproj * pf;
  Matrix img_g = pf.adjoint() * qperp_proj * pf;
  if (numerical_rank(dom_g, tol) < dom_g.rows())
    throw NotGenericPosition("modular_one_particle: PQP not invertible on p");
  out.delta_p_graph = dom_g.transpose()
                          .fullPivLu()
                          .solve(img_g.transpose())
                          .transpose();

  // J_p(Pq) = Delta_p^{1/2} (P Gamma q).
  Matrix delta_half = fractional_power(out.delta_p, 0.5, tol);
  out.j_p = antilinear_from_columns(dom_b, Matrix(delta_half * img_b), tol);
  return out;
}

FockModular modular_fock(const CarSystem& sys, const Subspace& q,
                         const Tolerance& tol) {
  invariant_subspace(sys.ref(), q, tol);
  std::vector<Matrix> gens;
  gens.reserve(q.rank());
  for (Eigen::Index i = 0; i < q.rank(); ++i)
    gens.push_back(sys.field(q.frame().col(i)));
  FockModular out;
  out.algebra = generate(gens, tol);
  out.md = build_modular(out.algebra, sys.fock().vacuum(), tol);
  return out;
}

}  // namespace modlab
