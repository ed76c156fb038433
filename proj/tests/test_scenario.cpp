#include "doctest.h"
#include "modlab/runner.hpp"
#include "modlab/scenario.hpp"

using namespace modlab;

TEST_CASE("scenario json parses complex entries and expectations") {
  const char* text = R"({
    "name": "t", "kind": "tensor", "tolerance": 1e-8, "seed": 9,
    "tags": ["tensor", "demo"],
    "expect": {"cyclic": true, "trace": false, "algebra_dim": 4},
    "payload": {"lambdas": [0.8, 0.6]}
  })";
  const Scenario sc = Scenario::from_json_text(text);
  CHECK(sc.name == "t");
  CHECK(sc.tol.rel == 1e-8);
  CHECK(sc.seed == 9);
  CHECK(sc.has_tag("demo"));
  CHECK_FALSE(sc.has_tag("group"));
  REQUIRE(sc.expect.algebra_dim.has_value());
  CHECK(*sc.expect.algebra_dim == 4);
  const auto& p = std::get<TensorPayload>(sc.payload);
  CHECK(p.n == 2);
}

TEST_CASE("custom payload reads [re, im] pairs and row-major matrices") {
  const char* text = R"({
    "name": "c", "kind": "custom_matrices",
    "payload": {
      "generators": [[[0, [0, -1]], [[0, 1], 0]]],
      "omega": [1, 0]
    }
  })";
  const Scenario sc = Scenario::from_json_text(text);
  const auto& p = std::get<CustomPayload>(sc.payload);
  REQUIRE(p.generators.size() == 1);
  CHECK(p.generators[0](0, 1) == Complex(0, -1));
  CHECK(p.generators[0](1, 0) == Complex(0, 1));
  CHECK(p.omega(0) == Complex(1, 0));
}

TEST_CASE("malformed scenarios raise input errors") {
  CHECK_THROWS_AS(Scenario::from_json_text("{ not json"), ParseError);
  CHECK_THROWS_AS(Scenario::from_json_text(R"({"name":"x","kind":"nope"})"),
                  ValidationError);
  CHECK_THROWS_AS(
      Scenario::from_json_text(R"({"name":"x","kind":"tensor","payload":{}})"),
      ParseError);
  CHECK_THROWS_AS(Scenario::from_file("/nonexistent/path.json"), ParseError);
}

TEST_CASE("builtin scenarios cover all four model kinds") {
  const std::vector<Scenario> all = builtin_scenarios();
  CHECK(all.size() >= 10);
  int group = 0, tensor = 0, crossed = 0, car = 0;
  for (const Scenario& sc : all) {
    group += sc.kind == "group";
    tensor += sc.kind == "tensor";
    crossed += sc.kind == "crossed_product";
    car += sc.kind == "car_fock";
  }
  CHECK(group >= 2);
  CHECK(tensor >= 2);
  CHECK(crossed >= 2);
  CHECK(car >= 2);
}

TEST_CASE("reports serialize deterministically") {
  Scenario sc;
  for (const Scenario& b : builtin_scenarios())
    if (b.name == "tensor-3-random") sc = b;
  REQUIRE(sc.kind == "tensor");
  const std::string once = run_scenario(sc).to_json();
  const std::string twice = run_scenario(sc).to_json();
  CHECK(once == twice);
  CHECK(once.find("\"scenario\"") != std::string::npos);
  CHECK(once.find("elapsed") == std::string::npos);
}

TEST_CASE("suite filtering by tag") {
  const std::vector<Report> groups = run_suite("group");
  CHECK(groups.size() >= 2);
  for (const Report& r : groups) CHECK(r.failed() == 0);
  CHECK(run_suite("no-such-tag").empty());
}
