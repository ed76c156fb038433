#ifndef MODLAB_SCENARIO_HPP
#define MODLAB_SCENARIO_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modlab/crossed.hpp"
#include "modlab/linalg.hpp"

namespace modlab {

/// Expected outcomes a scenario may pin down; checked when present.
struct Expectations {
  std::optional<bool> cyclic;
  std::optional<bool> separating;
  std::optional<bool> trace;
  std::optional<bool> factor;
  std::optional<bool> free_action;
  std::optional<bool> ergodic;
  std::optional<bool> pi_maximal_abelian;
  std::optional<bool> generic_position;
  std::optional<Eigen::Index> algebra_dim;
};

struct GroupPayload {
  std::string group_name;                    // empty when an explicit table is given
  std::vector<std::vector<int>> cayley;
};

struct TensorPayload {
  int n = 0;
  std::vector<double> lambdas;  // empty means: draw seeded random positive weights
};

struct CrossedPayload {
  FiniteMeasureSpace space;
  std::string group_name;
  std::vector<std::string> action_cycles;  // cycle notation, one per group element
};

struct CarPayload {
  Eigen::Index dim = 0;
  Matrix gamma;    // empty means the standard blockwise involution
  Matrix p_frame;  // empty means the standard first-half frame
  Matrix q_frame;  // empty means: draw a seeded random Gamma-invariant subspace
};

struct CustomPayload {
  std::vector<Matrix> generators;
  Vector omega;
};

struct Scenario {
  std::string name;
  std::string kind;
  Tolerance tol;
  std::vector<double> t_grid;
  std::uint64_t seed = 0;
  std::vector<std::string> tags;
  Expectations expect;
  std::variant<GroupPayload, TensorPayload, CrossedPayload, CarPayload, CustomPayload>
      payload;

  /// Throws ParseError / ValidationError on malformed input.
  static Scenario from_json_text(const std::string& text);
  static Scenario from_file(const std::string& path);

  bool has_tag(const std::string& tag) const;
};

/// The shipped scenario set covering all four model kinds.
std::vector<Scenario> builtin_scenarios();

/// Permutation of {0..n-1} from cycle notation such as "(0 1 2)(3 4)";
/// "()" is the identity.
std::vector<int> parse_cycles(const std::string& text, int n);

}  // namespace modlab

#endif
