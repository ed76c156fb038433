#include "modlab/runner.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "modlab/car.hpp"
#include "modlab/crossed.hpp"
#include "modlab/models.hpp"
#include "modlab/random.hpp"

namespace modlab {

namespace {

void add_residual(Report& rep, std::string id, std::string anchor, double residual,
                  double tol_value) {
  CheckRecord rec;
  rec.check_id = std::move(id);
  rec.anchor = std::move(anchor);
  rec.residual = residual;
  rec.tolerance = tol_value;
  rec.passed = std::isfinite(residual) && residual <= tol_value;
  rep.checks.push_back(std::move(rec));
}

void add_flag(Report& rep, std::string id, std::string anchor, bool ok) {
  add_residual(rep, std::move(id), std::move(anchor), ok ? 0.0 : 1.0, 0.5);
}

void append(Report& rep, std::vector<CheckRecord> recs) {
  for (auto& r : recs) rep.checks.push_back(std::move(r));
}

void check_expected_flag(Report& rep, const std::optional<bool>& expected,
                         bool computed, const std::string& what) {
  if (expected)
    add_flag(rep, "expect." + what, "scenario.expectation", computed == *expected);
}

struct UniversalResult {
  OperatorAlgebra commutant_alg;
  bool has_modular = false;
  ModularData md;
};

/// The checks every scenario runs: cyclicity/separation and their duality
/// under passing to the commutant, the bicommutant closure, and (when the
/// vector qualifies) the full modular battery with KMS and the
/// trace-iff-isometry equivalence.
UniversalResult universal_battery(Report& rep, const Scenario& sc,
                                  const OperatorAlgebra& m, const Vector& omega) {
  const Tolerance tol = sc.tol;
  UniversalResult out;
  out.commutant_alg = commutant(m, tol);
  const OperatorAlgebra& mp = out.commutant_alg;
  const OperatorAlgebra zm = center(m, tol);

  rep.dim_algebra = m.dim();
  rep.dim_commutant = mp.dim();
  rep.dim_center = zm.dim();

  add_flag(rep, "algebra.bicommutant", "algebra.closure",
           span_equal(commutant(mp, tol), m, tol));

  const bool cyc = is_cyclic(m, omega, tol);
  const bool sep = is_separating(m, omega, tol);
  add_flag(rep, "vector.cyclic_iff_commutant_separating", "algebra.duality",
           cyc == is_separating(mp, omega, tol));
  add_flag(rep, "vector.separating_iff_commutant_cyclic", "algebra.duality",
           sep == is_cyclic(mp, omega, tol));
  check_expected_flag(rep, sc.expect.cyclic, cyc, "cyclic");
  check_expected_flag(rep, sc.expect.separating, sep, "separating");
  if (sc.expect.algebra_dim)
    add_flag(rep, "expect.algebra_dim", "scenario.expectation",
             m.dim() == *sc.expect.algebra_dim);

  if (!cyc || !sep) return out;

  out.md = build_modular(m, omega, tol);
  out.has_modular = true;
  const ModularData& md = out.md;

  rep.delta_spectrum.assign(md.delta_eig.values.data(),
                            md.delta_eig.values.data() + md.delta_eig.values.size());

  append(rep, verify_modular_relations(md, tol));
  const std::vector<double>& grid = sc.t_grid.empty() ? default_t_grid() : sc.t_grid;
  append(rep, verify_tomita_takesaki(m, md, grid, tol));

  const StateFunctional state{omega};
  const bool tracial = is_trace(state, m, tol);
  const double iso = tomita_isometry_defect(md);
  add_flag(rep, "state.trace_iff_s_isometry", "modular.trace_criterion",
           tracial == (iso <= tol.cutoff(1.0)));
  check_expected_flag(rep, sc.expect.trace, tracial, "trace");

  const auto& basis = m.basis();
  const Matrix m_op = basis[std::min<size_t>(1, basis.size() - 1)];
  const Matrix n_op = basis[std::min<size_t>(2, basis.size() - 1)];
  append(rep, kms_check(md, m, m_op, n_op, grid, tol));

  if (sc.expect.factor)
    add_flag(rep, "expect.factor", "scenario.expectation",
             is_factor(m, tol) == *sc.expect.factor);

  return out;
}

void run_group(Report& rep, const Scenario& sc, const GroupPayload& p) {
  const Tolerance tol = sc.tol;
  FiniteGroup g = p.cayley.empty() ? FiniteGroup::named(p.group_name)
                                   : FiniteGroup(p.cayley);
  const RegularRepresentations reg = regular_representations(g);
  const OperatorAlgebra m = generate(reg.left, tol);
  const UniversalResult uni = universal_battery(rep, sc, m, reg.omega);
  if (!uni.has_modular) return;
  const ModularData& md = uni.md;
  const int n = g.order();

  add_residual(rep, "group.delta_is_identity", "group.regular",
               op_norm(md.delta - Matrix::Identity(n, n)), tol.cutoff(1.0));
  add_residual(rep, "group.s_equals_j", "group.regular",
               op_norm(md.s.entries - md.j.entries), tol.cutoff(1.0));

  double worst_inv = 0.0;
  for (int h = 0; h < n; ++h) {
    Vector delta_h = Vector::Zero(n);
    delta_h(h) = 1.0;
    Vector expect = Vector::Zero(n);
    expect(g.inverse(h)) = 1.0;
    worst_inv = std::max(worst_inv, (md.j(delta_h) - expect).norm());
  }
  add_residual(rep, "group.j_sends_point_to_inverse", "group.regular", worst_inv,
               tol.cutoff(1.0));

  double worst_flip = 0.0;
  for (int h = 0; h < n; ++h)
    worst_flip = std::max(worst_flip, op_norm(sandwich(md.j, reg.left[h]) - reg.right[h]));
  add_residual(rep, "group.j_left_j_equals_right", "group.regular", worst_flip,
               tol.cutoff(1.0));

  add_flag(rep, "group.commutant_is_right_algebra", "group.regular",
           span_equal(uni.commutant_alg, generate(reg.right, tol), tol));
}

void run_tensor(Report& rep, const Scenario& sc, const TensorPayload& p) {
  const Tolerance tol = sc.tol;
  TensorScenario ts;
  ts.n = p.n;
  if (p.lambdas.empty()) {
    Rng rng(sc.seed ^ 0x7e5a11u);
    double norm2 = 0.0;
    for (int i = 0; i < p.n; ++i) {
      const double v = 0.25 + rng.uniform();
      ts.lambdas.push_back(v);
      norm2 += v * v;
    }
    for (double& v : ts.lambdas) v /= std::sqrt(norm2);
  } else {
    ts.lambdas = p.lambdas;
  }
  const TensorModel tm = tensor_scenario(ts, tol);
  const UniversalResult uni = universal_battery(rep, sc, tm.algebra, tm.omega);
  if (!uni.has_modular) return;
  const ModularData& md = uni.md;
  const int n = ts.n;

  add_residual(rep, "tensor.s_matches_closed_form", "tensor.entangled",
               op_norm(md.s.entries - tm.predicted_s.entries),
               tol.cutoff(op_norm(tm.predicted_s)));
  add_residual(rep, "tensor.f_matches_closed_form", "tensor.entangled",
               op_norm(md.f.entries - tm.predicted_s_star.entries),
               tol.cutoff(op_norm(tm.predicted_s_star)));
  add_residual(rep, "tensor.delta_matches_closed_form", "tensor.entangled",
               op_norm(md.delta - tm.predicted_delta),
               tol.cutoff(op_norm(tm.predicted_delta)));
  add_residual(rep, "tensor.j_matches_closed_form", "tensor.entangled",
               op_norm(md.j.entries - tm.predicted_j.entries), tol.cutoff(1.0));

  std::vector<Matrix> right_gens;
  const Matrix id_n = Matrix::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      right_gens.push_back(kron(id_n, e));
    }
  add_flag(rep, "tensor.commutant_is_second_factor", "tensor.entangled",
           span_equal(uni.commutant_alg, generate(right_gens, tol), tol));

  Rng rng(sc.seed ^ 0x2fca9bu);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix a = rng.matrix(n, n);
    const Matrix lhs = sandwich(md.j, kron(a, id_n));
    const Matrix rhs = kron(id_n, a.conjugate());
    worst = std::max(worst, op_norm(lhs - rhs) / std::max(1.0, op_norm(a)));
  }
  add_residual(rep, "tensor.j_conjugates_factor_to_conjugate", "tensor.entangled",
               worst, tol.cutoff(1.0));
}

void run_crossed(Report& rep, const Scenario& sc, const CrossedPayload& p) {
  const Tolerance tol = sc.tol;
  FiniteMeasureSpace ms = p.space;
  ms.validate(tol);
  GroupAction act;
  act.group = FiniteGroup::named(p.group_name);
  if (static_cast<int>(p.action_cycles.size()) != act.group.order())
    throw ValidationError("crossed scenario: one cycle string per group element");
  for (const std::string& text : p.action_cycles)
    act.perms.push_back(parse_cycles(text, ms.size()));
  act.validate(ms, tol);

  const ActionClassification cls = classify_action(ms, act);
  check_expected_flag(rep, sc.expect.free_action, cls.free, "free");
  check_expected_flag(rep, sc.expect.ergodic, cls.ergodic, "ergodic");

  const CrossedProductModel model = build_crossed_product(ms, act, tol);
  const UniversalResult uni = universal_battery(rep, sc, model.algebra, model.omega);

  const bool max_abelian = pi_maximal_abelian(model, tol);
  add_flag(rep, "crossed.pi_maximal_abelian_iff_free", "crossed.freeness",
           max_abelian == cls.free);
  check_expected_flag(rep, sc.expect.pi_maximal_abelian, max_abelian,
                      "pi_maximal_abelian");
  if (sc.expect.factor)
    add_flag(rep, "expect.factor", "scenario.expectation",
             is_factor(model.algebra, tol) == *sc.expect.factor);

  Rng rng(sc.seed ^ 0x5eedc0u);
  Symbol a;
  double sym_norm2 = 0.0;
  for (int g = 0; g < act.group.order(); ++g) {
    a.push_back(rng.vector(ms.size()));
    for (int x = 0; x < ms.size(); ++x)
      sym_norm2 += ms.weights[x] * std::norm(a.back()(x));
  }
  const Matrix elem = element_from_symbol(model, a);
  add_flag(rep, "crossed.symbol_element_in_algebra", "crossed.symbols",
           model.algebra.contains(elem, tol));
  const Symbol back = symbol_from_element(model, elem, tol);
  double round_trip = 0.0;
  for (size_t g = 0; g < a.size(); ++g)
    round_trip = std::max(round_trip, (a[g] - back[g]).norm());
  add_residual(rep, "crossed.symbol_round_trip", "crossed.symbols", round_trip,
               tol.cutoff(1.0));
  add_residual(rep, "crossed.symbol_norm_square", "crossed.symbols",
               std::abs(sym_norm2 - (elem * model.omega).squaredNorm()),
               tol.cutoff(sym_norm2));

  if (uni.has_modular) append(rep, verify_crossed_tomita(model, uni.md, tol));
}

CarSystem car_system_from(const CarPayload& p, std::uint64_t seed, Subspace& q_out,
                          const Tolerance& tol) {
  if (p.dim <= 0 || p.dim % 2 != 0)
    throw ValidationError("car scenario: dim must be a positive even number");
  const Eigen::Index m = p.dim / 2;
  ReferenceSpace ref = p.gamma.size() == 0 ? ReferenceSpace::standard(m)
                                           : ReferenceSpace{p.dim, Antilinear(p.gamma)};
  ref.validate(tol);

  Subspace p_space;
  if (p.p_frame.size() == 0) {
    Matrix frame = Matrix::Zero(p.dim, m);
    frame.topLeftCorner(m, m).setIdentity();
    p_space = Subspace::from_frame(frame, tol);
  } else {
    p_space = Subspace::from_span(p.dim, p.p_frame, tol);
  }

  Matrix q_span;
  if (p.q_frame.size() == 0) {
    // Gamma-fixed spanning vectors give a Gamma-invariant subspace.
    Rng rng(seed ^ 0xca11abu);
    q_span.resize(p.dim, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const Vector v = rng.vector(p.dim);
      q_span.col(i) = v + ref.gamma(v);
    }
  } else {
    q_span = p.q_frame;
  }
  q_out = invariant_subspace(ref, Subspace::from_span(p.dim, q_span, tol), tol);
  Subspace pb = basis_projection(ref, p_space, tol);
  return CarSystem(std::move(ref), std::move(pb), tol);
}

void run_car(Report& rep, const Scenario& sc, const CarPayload& p) {
  const Tolerance tol = sc.tol;
  Subspace q;
  const CarSystem sys = car_system_from(p, sc.seed, q, tol);
  const Eigen::Index d = sys.ref().dim;

  Rng rng(sc.seed ^ 0xfe14d5u);
  std::vector<Vector> probes;
  for (int i = 0; i < 4; ++i) probes.push_back(rng.vector(d));
  add_residual(rep, "car.axioms_on_fields", "car.axioms",
               car_axiom_residual(sys, [&](const Vector& f) { return sys.field(f); },
                                  probes),
               tol.cutoff(1.0));

  const GenericPositionReport gp = generic_position_report(sys, q, tol);
  check_expected_flag(rep, sc.expect.generic_position, gp.generic,
                      "generic_position");
  add_flag(rep, "car.norm_product_below_one", "car.generic_position",
           gp.delta < 1.0 + tol.cutoff(1.0));

  if (!gp.generic) {
    // Outside generic position only the vacuum flags are meaningful; the
    // universal battery computes them and skips the modular objects.
    std::vector<Matrix> gens;
    for (Eigen::Index i = 0; i < q.rank(); ++i) gens.push_back(sys.field(q.frame().col(i)));
    const OperatorAlgebra m = generate(gens, tol);
    universal_battery(rep, sc, m, sys.fock().vacuum());
    return;
  }

  const OneParticleModular op = modular_one_particle(sys, q, tol);
  add_residual(rep, "car.delta_p_graph_agreement", "car.one_particle",
               op_norm(op.delta_p - op.delta_p_graph),
               tol.cutoff(op_norm(op.delta_p)));
  const Matrix delta_p_inv = fractional_power(op.delta_p, -1.0, tol);
  add_residual(rep, "car.delta_p_inverse_beta_beta_star", "car.one_particle",
               op_norm(delta_p_inv - op.beta * op.beta.adjoint()),
               tol.cutoff(op_norm(delta_p_inv)));
  add_residual(rep, "car.delta_p_inverse_alpha_star_alpha", "car.one_particle",
               op_norm(delta_p_inv - op.alpha.adjoint() * op.alpha),
               tol.cutoff(op_norm(delta_p_inv)));

  const FockModular fm = modular_fock(sys, q, tol);
  const UniversalResult uni = universal_battery(rep, sc, fm.algebra, fm.md.omega);
  if (!uni.has_modular) return;
  const ModularData& md = uni.md;
  const FockSpace& fock = sys.fock();
  const int modes = sys.modes();

  add_residual(rep, "car.delta_one_particle_block", "car.three_way",
               op_norm(fock.particle_block(md.delta, 1) - op.delta_p),
               tol.cutoff(op_norm(op.delta_p)));
  add_residual(rep, "car.j_one_particle_block", "car.three_way",
               op_norm(fock.particle_block(md.j.entries, 1) - op.j_p.entries),
               tol.cutoff(1.0));

  const Matrix delta_p_half = fractional_power(op.delta_p, 0.5, tol);
  const Antilinear s_p = op.j_p * delta_p_half;
  double worst_delta = 0.0, worst_j = 0.0, worst_s = 0.0;
  Rng wrng(sc.seed ^ 0x3ed6e5u);
  for (int n = 1; n <= std::min(modes, 4); ++n) {
    std::vector<Vector> vs, dvs, jvs, svs;
    for (int i = 0; i < n; ++i) vs.push_back(wrng.vector(modes));
    for (int i = 0; i < n; ++i) dvs.push_back(op.delta_p * vs[i]);
    for (int i = n - 1; i >= 0; --i) jvs.push_back(op.j_p(vs[i]));
    for (int i = n - 1; i >= 0; --i) svs.push_back(s_p(vs[i]));
    const Vector w = fock.wedge(vs);
    const double scale = std::max(1.0, w.norm());
    worst_delta = std::max(worst_delta, (md.delta * w - fock.wedge(dvs)).norm() / scale);
    worst_j = std::max(worst_j, (md.j(w) - fock.wedge(jvs)).norm() / scale);
    worst_s = std::max(worst_s, (md.s(w) - fock.wedge(svs)).norm() / scale);
  }
  add_residual(rep, "car.delta_product_formula", "car.n_particle", worst_delta,
               tol.cutoff(1.0));
  add_residual(rep, "car.j_reversal_formula", "car.n_particle", worst_j,
               tol.cutoff(1.0));
  add_residual(rep, "car.s_reversal_formula", "car.n_particle", worst_s,
               tol.cutoff(1.0));

  double worst_vac = 0.0;
  Rng vrng(sc.seed ^ 0x7ac007u);
  for (int n = 1; n <= std::min(2 * modes, 5); ++n) {
    std::vector<Vector> fs;
    for (int i = 0; i < n; ++i) fs.push_back(vrng.vector(d));
    Vector direct = fock.vacuum();
    for (int i = 0; i < n; ++i) direct = sys.field(fs[i]) * direct;
    const Vector formula = vacuum_expansion(sys, fs);
    worst_vac = std::max(worst_vac, (direct - formula).norm() /
                                        std::max(1.0, direct.norm()));
  }
  add_residual(rep, "car.vacuum_expansion", "car.vacuum_formula", worst_vac,
               tol.cutoff(1.0));
}

void run_custom(Report& rep, const Scenario& sc, const CustomPayload& p) {
  const Tolerance tol = sc.tol;
  if (p.generators.empty()) throw ValidationError("custom scenario: no generators");
  const OperatorAlgebra m = generate(p.generators, tol);
  if (p.omega.size() != m.ambient_dim())
    throw ValidationError("custom scenario: omega dimension mismatch");
  const UniversalResult uni = universal_battery(rep, sc, m, p.omega);
  if (sc.has_tag("abelian")) {
    add_flag(rep, "custom.abelian", "abelian.maximal", is_abelian(m, tol));
    add_flag(rep, "custom.maximal_abelian_self_commutant", "abelian.maximal",
             span_equal(m, uni.commutant_alg, tol));
  }
}

}  // namespace

int Report::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckRecord& c) { return c.passed; }));
}

int Report::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["summary"] = {{"passed", passed()}, {"failed", failed()}};
  j["dimensions"] = {{"algebra", dim_algebra},
                     {"commutant", dim_commutant},
                     {"center", dim_center}};
  j["delta_spectrum"] = delta_spectrum;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckRecord& c : checks) {
    arr.push_back({{"check_id", c.check_id},
                   {"anchor", c.anchor},
                   {"passed", c.passed},
                   {"residual", c.residual},
                   {"tolerance", c.tolerance}});
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

Report run_scenario(const Scenario& sc) {
  Report rep;
  rep.scenario = sc.name;
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, GroupPayload>) run_group(rep, sc, payload);
        else if constexpr (std::is_same_v<T, TensorPayload>) run_tensor(rep, sc, payload);
        else if constexpr (std::is_same_v<T, CrossedPayload>) run_crossed(rep, sc, payload);
        else if constexpr (std::is_same_v<T, CarPayload>) run_car(rep, sc, payload);
        else run_custom(rep, sc, payload);
      },
      sc.payload);
  return rep;
}

std::vector<Report> run_suite(const std::string& filter) {
  std::vector<Scenario> all = builtin_scenarios();
  std::sort(all.begin(), all.end(),
            [](const Scenario& a, const Scenario& b) { return a.name < b.name; });
  std::vector<Report> out;
  for (const Scenario& sc : all) {
    if (!filter.empty() && !sc.has_tag(filter)) continue;
    out.push_back(run_scenario(sc));
  }
  return out;
}

std::string format_report_text(const Report& rep) {
  std::ostringstream os;
  os << "scenario " << rep.scenario << ": " << rep.passed() << " passed, "
     << rep.failed() << " failed (dim M = " << rep.dim_algebra << ", dim M' = "
     << rep.dim_commutant << ", dim center = " << rep.dim_center << ")\n";
  for (const CheckRecord& c : rep.checks) {
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.check_id
       << "  residual " << c.residual << "  tol " << c.tolerance << "\n";
  }
  return os.str();
}

}  // namespace modlab
