#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "dgla/frontend.hpp"
#include "dgla/serialize.hpp"

using namespace dgla;

namespace {

std::pair<int, std::string> run(int (*driver)(const RunConfig&, std::ostream&),
                                const RunConfig& config) {
  std::ostringstream out;
  const int status = driver(config, out);
  return {status, out.str()};
}

}  // namespace

TEST_CASE("coefficients: text table carries the published rows") {
  RunConfig config;
  config.depth = 2;
  auto [status, text] = run(run_coefficients, config);
  CHECK(status == kExitOk);
  CHECK(text.find("-1/3") != std::string::npos);
  CHECK(text.find("-2/3") != std::string::npos);
  CHECK(text.find("[e0,f0]") != std::string::npos);
  CHECK(text.find("-1/54") != std::string::npos);
  CHECK(text.find("1/36") != std::string::npos);
}

TEST_CASE("coefficients: json document with universal word") {
  RunConfig config;
  config.depth = 2;
  config.output = RunConfig::Output::json;
  config.universal = true;
  auto [status, text] = run(run_coefficients, config);
  CHECK(status == kExitOk);
  const Json doc = Json::parse(text);
  CHECK(doc["alpha"]["e0"] == "-1/3");
  CHECK(doc["alpha"]["f0"] == "-2/3");
  CHECK(doc["alpha"]["[e0,f0]"] == "-1/6");
  CHECK(doc["alpha"]["[e0,[e0,f0]]"] == "-1/54");
  CHECK(doc["alpha"]["[f0,[e0,f0]]"] == "1/36");
  CHECK(doc["gamma"]["e0"] == "-1/3");
  CHECK(doc["gamma"]["f0"] == "1/3");
  CHECK(doc["universal_word"]["alpha"] == "-1");
  CHECK(doc["universal_word"]["beta"] == "-1");
  CHECK_FALSE(doc["universal_word"].contains("[alpha,beta]"));
}

TEST_CASE("coefficients rejects the kgon shape") {
  RunConfig config;
  config.shape = RunConfig::Shape::kgon;
  std::ostringstream out;
  CHECK_THROWS_AS(run_coefficients(config, out), ConfigError);
}

TEST_CASE("verify: triangle passes and emits a certificate document") {
  RunConfig config;
  config.depth = 2;
  config.output = RunConfig::Output::json;
  auto [status, text] = run(run_verify, config);
  CHECK(status == kExitOk);
  const Json doc = Json::parse(text);
  CHECK(doc["pass"] == true);
  CHECK(doc["elements"].contains("alpha"));
  CHECK(doc["elements"].contains("q"));
  CHECK(element_from_json(doc["elements"]["x"]).algebra().max_word_len() == 3);
  bool has_fixed_point = false;
  for (const auto& cert : doc["certificates"])
    if (cert["name"] == "fixed_point.sigma_alpha") has_fixed_point = cert["pass"] == true;
  CHECK(has_fixed_point);
}

TEST_CASE("verify: corrupted alpha fails the fixed-point certificate") {
  RunConfig config;
  config.depth = 2;
  config.corrupt = "alpha";
  config.output = RunConfig::Output::json;
  auto [status, text] = run(run_verify, config);
  CHECK(status == kExitCheckFailed);
  const Json doc = Json::parse(text);
  CHECK(doc["pass"] == false);
  bool fixed_point_failed = false;
  for (const auto& cert : doc["certificates"])
    if (cert["name"] == "fixed_point.sigma_alpha") fixed_point_failed = cert["pass"] == false;
  CHECK(fixed_point_failed);

  std::ostringstream out;
  config.corrupt = "nonsense";
  CHECK_THROWS_AS(run_verify(config, out), ConfigError);
}

TEST_CASE("verify: kgon k=4 passes with a spectrum section") {
  RunConfig config;
  config.shape = RunConfig::Shape::kgon;
  config.k = 4;
  config.depth = 2;
  config.output = RunConfig::Output::json;
  auto [status, text] = run(run_verify, config);
  CHECK(status == kExitOk);
  const Json doc = Json::parse(text);
  CHECK(doc["pass"] == true);
  CHECK(doc["spectrum"]["characteristic_polynomial"] == "x^3 - x^2 + 1/2*x");
  CHECK(doc["spectrum"]["contracting"] == true);
  CHECK(doc["spectrum"].contains("note"));
}

TEST_CASE("model: based document equals BCH(g,e,f) - [a,h]") {
  RunConfig config;
  config.depth = 3;
  config.based = "a";
  auto [status, text] = run(run_model, config);
  CHECK(status == kExitOk);
  const Json doc = Json::parse(text);
  CHECK(doc["variant"] == "based_a");
  const Algebra alg = triangle_algebra(4);
  Json dh = doc["differentials"]["h"];
  dh["generators"] = doc["generators"];
  dh["truncation"] = doc["truncation"];
  const Element parsed = element_from_json(dh, alg);
  const Element expected =
      bch_list(alg, {alg.gen("g"), alg.gen("e"), alg.gen("f")}) -
      bracket(alg.gen("a"), alg.gen("h"));
  CHECK(parsed == expected);
}

TEST_CASE("model: symmetric document has the boundary at depth 0 of dh") {
  RunConfig config;
  config.depth = 2;
  auto [status, text] = run(run_model, config);
  CHECK(status == kExitOk);
  const Json doc = Json::parse(text);
  CHECK(doc["variant"] == "symmetric");
  int boundary_terms = 0;
  for (const auto& term : doc["differentials"]["h"]["terms"])
    if (term["word"].size() == 1) {
      const std::string name = term["word"][0];
      if (name == "e" || name == "f" || name == "g") {
        CHECK(term["coeff"] == "1");
        ++boundary_terms;
      }
    }
  CHECK(boundary_terms == 3);
}

TEST_CASE("kgon spectrum output") {
  RunConfig config;
  config.k = 3;
  config.output = RunConfig::Output::json;
  auto [status, text] = run(run_kgon_spectrum, config);
  CHECK(status == kExitOk);
  const Json doc = Json::parse(text);
  CHECK(doc["characteristic_polynomial"] == "x^2 - 1/2*x + 1/4");
  CHECK(doc["coefficients_ascending"] == Json::array({"1/4", "-1/2", "1"}));
  CHECK(doc["contracting"] == true);
}

TEST_CASE("deterministic output for identical configs") {
  RunConfig config;
  config.depth = 2;
  config.seed = 7;
  config.output = RunConfig::Output::json;
  auto [s1, t1] = run(run_verify, config);
  auto [s2, t2] = run(run_verify, config);
  CHECK(s1 == s2);
  CHECK(t1 == t2);
}

TEST_CASE("randomized property suite passes at depth 4") {
  const auto checks = random_property_suite(4, 12345, 5);
  for (const auto& c : checks) CHECK(c.pass);
}
