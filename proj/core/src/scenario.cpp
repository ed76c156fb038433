#include "modlab/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "modlab/random.hpp"

namespace modlab {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw ParseError("expected a number or a [re, im] pair");
}

Matrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a non-empty matrix");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
      throw ParseError("ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c]);
  }
  return m;
}

Vector parse_vector(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a non-empty vector");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = parse_complex(j[i]);
  return v;
}

void parse_expectations(const json& j, Expectations& e) {
  auto get_flag = [&](const char* key, std::optional<bool>& slot) {
    if (j.contains(key)) slot = j.at(key).get<bool>();
  };
  get_flag("cyclic", e.cyclic);
  get_flag("separating", e.separating);
  get_flag("trace", e.trace);
  get_flag("factor", e.factor);
  get_flag("free", e.free_action);
  get_flag("ergodic", e.ergodic);
  get_flag("pi_maximal_abelian", e.pi_maximal_abelian);
  get_flag("generic_position", e.generic_position);
  if (j.contains("algebra_dim"))
    e.algebra_dim = j.at("algebra_dim").get<Eigen::Index>();
}

}  // namespace

std::vector<int> parse_cycles(const std::string& text, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  size_t pos = 0;
  auto skip_space = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("cycle notation: expected '('");
    ++pos;
    std::vector<int> cycle;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw ParseError("cycle notation: expected a point index");
      int v = std::stoi(text.substr(pos, end - pos));
      if (v < 0 || v >= n) throw ParseError("cycle notation: point index out of range");
      cycle.push_back(v);
      pos = end;
      skip_space();
      if (pos < text.size() && (text[pos] == ',')) { ++pos; skip_space(); }
    }
    if (pos >= text.size()) throw ParseError("cycle notation: unterminated cycle");
    ++pos;  // ')'
    for (size_t i = 0; i < cycle.size(); ++i)
      perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (seen[v]) throw ParseError("cycle notation: repeated point");
    seen[v] = true;
  }
  return perm;
}

Scenario Scenario::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
  try {
    Scenario sc;
    sc.name = j.at("name").get<std::string>();
    sc.kind = j.at("kind").get<std::string>();
    if (j.contains("tolerance")) {
      sc.tol.rel = j.at("tolerance").get<double>();
      if (sc.tol.rel <= 0.0) throw ValidationError("scenario: tolerance must be positive");
    }
    if (j.contains("t_grid")) sc.t_grid = j.at("t_grid").get<std::vector<double>>();
    if (j.contains("seed")) sc.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tags")) sc.tags = j.at("tags").get<std::vector<std::string>>();
    if (j.contains("expect")) parse_expectations(j.at("expect"), sc.expect);

    const json payload = j.value("payload", json::object());
    if (sc.kind == "group") {
      GroupPayload p;
      if (payload.contains("group")) p.group_name = payload.at("group").get<std::string>();
      if (payload.contains("cayley"))
        p.cayley = payload.at("cayley").get<std::vector<std::vector<int>>>();
      if (p.group_name.empty() && p.cayley.empty())
        throw ValidationError("group scenario: need 'group' or 'cayley'");
      sc.payload = std::move(p);
    } else if (sc.kind == "tensor") {
      TensorPayload p;
      if (payload.contains("lambdas")) {
        p.lambdas = payload.at("lambdas").get<std::vector<double>>();
        p.n = static_cast<int>(p.lambdas.size());
      } else {
        p.n = payload.at("n").get<int>();
      }
      if (p.n <= 0) throw ValidationError("tensor scenario: n must be positive");
      sc.payload = std::move(p);
    } else if (sc.kind == "crossed_product") {
      CrossedPayload p;
      p.space.points = payload.at("points").get<std::vector<std::string>>();
      p.space.weights = payload.at("weights").get<std::vector<double>>();
      p.group_name = payload.at("group").get<std::string>();
      p.action_cycles = payload.at("action").get<std::vector<std::string>>();
      sc.payload = std::move(p);
    } else if (sc.kind == "car_fock") {
      CarPayload p;
      p.dim = payload.at("dim").get<Eigen::Index>();
      if (payload.contains("gamma")) p.gamma = parse_matrix(payload.at("gamma"));
      if (payload.contains("p_frame")) p.p_frame = parse_matrix(payload.at("p_frame"));
      if (payload.contains("q_frame")) p.q_frame = parse_matrix(payload.at("q_frame"));
      sc.payload = std::move(p);
    } else if (sc.kind == "custom_matrices") {
      CustomPayload p;
      for (const json& g : payload.at("generators"))
        p.generators.push_back(parse_matrix(g));
      p.omega = parse_vector(payload.at("omega"));
      sc.payload = std::move(p);
    } else {
      throw ValidationError("unknown scenario kind: " + sc.kind);
    }
    return sc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
}

Scenario Scenario::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

bool Scenario::has_tag(const std::string& tag) const {
  for (const auto& t : tags)
    if (t == tag) return true;
  return false;
}

namespace {

Scenario group_scenario(std::string name, std::string group) {
  Scenario sc;
  sc.name = std::move(name);
  sc.kind = "group";
  sc.tags = {"group"};
  sc.expect.cyclic = true;
  sc.expect.separating = true;
  sc.expect.trace = true;
  GroupPayload p;
  p.group_name = std::move(group);
  sc.payload = std::move(p);
  return sc;
}

Scenario tensor_builtin(std::string name, std::vector<double> lambdas, int n,
                        std::uint64_t seed) {
  Scenario sc;
  sc.name = std::move(name);
  sc.kind = "tensor";
  sc.tags = {"tensor"};
  sc.seed = seed;
  sc.expect.cyclic = true;
  sc.expect.separating = true;
  TensorPayload p;
  p.lambdas = std::move(lambdas);
  p.n = p.lambdas.empty() ? n : static_cast<int>(p.lambdas.size());
  sc.payload = std::move(p);
  return sc;
}

Scenario crossed_builtin(std::string name, FiniteMeasureSpace space,
                         std::string group, std::vector<std::string> action,
                         bool free, bool ergodic) {
  Scenario sc;
  sc.name = std::move(name);
  sc.kind = "crossed_product";
  sc.tags = {"crossed"};
  sc.expect.cyclic = true;
  sc.expect.separating = true;
  sc.expect.trace = true;
  sc.expect.free_action = free;
  sc.expect.ergodic = ergodic;
  sc.expect.pi_maximal_abelian = free;
  if (free) sc.expect.factor = ergodic;
  CrossedPayload p;
  p.space = std::move(space);
  p.group_name = std::move(group);
  p.action_cycles = std::move(action);
  sc.payload = std::move(p);
  return sc;
}

FiniteMeasureSpace uniform_space(int n) {
  FiniteMeasureSpace ms;
  for (int i = 0; i < n; ++i) {
    ms.points.push_back("x" + std::to_string(i));
    ms.weights.push_back(1.0 / n);
  }
  return ms;
}

Scenario car_builtin(std::string name, CarPayload p, std::uint64_t seed,
                     bool generic) {
  Scenario sc;
  sc.name = std::move(name);
  sc.kind = "car_fock";
  sc.tags = {"car"};
  sc.seed = seed;
  sc.expect.generic_position = generic;
  sc.expect.cyclic = generic;
  sc.expect.separating = generic;
  sc.payload = std::move(p);
  return sc;
}

}  // namespace

std::vector<Scenario> builtin_scenarios() {
  std::vector<Scenario> out;

  out.push_back(group_scenario("group-z2", "z2"));
  out.push_back(group_scenario("group-z5", "z5"));
  out.push_back(group_scenario("s3-left-regular", "s3"));
  out.push_back(group_scenario("group-d4", "d4"));

  out.push_back(tensor_builtin("tensor-2-(0.8,0.6)", {0.8, 0.6}, 2, 0));
  {
    Scenario sc = tensor_builtin("tensor-3-random", {}, 3, 7);
    sc.expect.trace = false;  // random weights are unequal
    out.push_back(std::move(sc));
  }
  {
    Scenario sc = tensor_builtin("tensor-5-random", {}, 5, 11);
    sc.expect.trace = false;
    out.push_back(std::move(sc));
  }

  out.push_back(crossed_builtin("crossed-z5-translation", uniform_space(5), "z5",
                                {"()", "(0 1 2 3 4)", "(0 2 4 1 3)",
                                 "(0 3 1 4 2)", "(0 4 3 2 1)"},
                                true, true));
  out.push_back(crossed_builtin("crossed-z2-swap", uniform_space(2), "z2",
                                {"()", "(0 1)"}, true, true));
  // S4-ordering of S3 elements matches FiniteGroup::symmetric(3):
  // permutations of {0,1,2} in lexicographic order.
  out.push_back(crossed_builtin("crossed-s3-natural", uniform_space(3), "s3",
                                {"()", "(1 2)", "(0 1)", "(0 1 2)",
                                 "(0 2 1)", "(0 2)"},
                                false, true));
  out.push_back(crossed_builtin("crossed-z2-trivial", uniform_space(2), "z2",
                                {"()", "()"}, false, false));

  {
    // The C^2 reference pair: P = diag(1,0), Q = [[1,1],[1,1]]/2.
    CarPayload p;
    p.dim = 2;
    p.gamma = Matrix::Zero(2, 2);
    p.gamma(0, 1) = 1.0;
    p.gamma(1, 0) = 1.0;
    p.p_frame = Matrix::Zero(2, 1);
    p.p_frame(0, 0) = 1.0;
    p.q_frame = Matrix::Constant(2, 1, 1.0 / std::sqrt(2.0));
    out.push_back(car_builtin("car-c2", std::move(p), 0, true));
  }
  {
    CarPayload p;
    p.dim = 4;
    out.push_back(car_builtin("car-dim4-random", std::move(p), 3, true));
  }
  {
    CarPayload p;
    p.dim = 6;
    out.push_back(car_builtin("car-dim6-random", std::move(p), 5, true));
  }
  {
    // p cap q-perp nontrivial: vacuum fails to be cyclic.
    CarPayload p;
    p.dim = 4;
    p.q_frame = Matrix::Zero(4, 1);
    p.q_frame(1, 0) = 1.0 / std::sqrt(2.0);
    p.q_frame(3, 0) = 1.0 / std::sqrt(2.0);
    Scenario sc = car_builtin("car-dim4-noncyclic", std::move(p), 0, false);
    sc.expect.cyclic = false;
    sc.expect.separating = true;
    out.push_back(std::move(sc));
  }
  {
    // p cap q nontrivial: vacuum fails to be separating.
    CarPayload p;
    p.dim = 4;
    p.q_frame = Matrix::Zero(4, 3);
    p.q_frame(1, 0) = 1.0;
    p.q_frame(3, 1) = 1.0;
    p.q_frame(0, 2) = 1.0 / std::sqrt(2.0);
    p.q_frame(2, 2) = 1.0 / std::sqrt(2.0);
    Scenario sc = car_builtin("car-dim4-nonseparating", std::move(p), 0, false);
    sc.expect.cyclic = true;
    sc.expect.separating = false;
    out.push_back(std::move(sc));
  }

  for (int n = 2; n <= 6; ++n) {
    // Diagonal algebra with an everywhere-nonzero vector: maximal abelian.
    Scenario sc;
    sc.name = "custom-diagonal-" + std::to_string(n);
    sc.kind = "custom_matrices";
    sc.tags = {"custom", "abelian"};
    sc.expect.cyclic = true;
    sc.expect.separating = true;
    sc.expect.trace = true;  // states on abelian algebras are tracial
    CustomPayload p;
    for (int i = 0; i < n; ++i) {
      Matrix e = Matrix::Zero(n, n);
      e(i, i) = 1.0;
      p.generators.push_back(std::move(e));
    }
    p.omega = Vector(n);
    for (int i = 0; i < n; ++i) p.omega(i) = Complex(1.0 + i, 0.5 * i);
    p.omega /= p.omega.norm();
    sc.payload = std::move(p);
    out.push_back(std::move(sc));
  }

  return out;
}

}  // namespace modlab
