#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dgla/serialize.hpp"
#include "dgla/symmetric.hpp"

using namespace dgla;

TEST_CASE("element documents round trip bit-exactly") {
  const Algebra alg({{"a", -1}, {"e", 0}}, 4);
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> letter(0, 1);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  for (int instance = 0; instance < 40; ++instance) {
    Element x(alg);
    for (int t = 0; t < 5; ++t) {
      Word w;
      const int l = len(rng);
      for (int i = 0; i < l; ++i) w.push_back(static_cast<char>(letter(rng)));
      x.add_term(w, Rational(num(rng), den(rng)));
    }
    const Json doc = element_to_json(x);
    CHECK(element_from_json(doc) == x);
    CHECK(element_from_json(doc, alg) == x);
    // canonical emission is deterministic
    CHECK(element_to_json(element_from_json(doc)).dump() == doc.dump());
  }
}

TEST_CASE("element document shape") {
  const Algebra alg({{"e", 0}, {"f", 0}}, 3);
  const Element x = Rational(1, 2) * (alg.gen("e") * alg.gen("f"));
  const Json doc = element_to_json(x);
  CHECK(doc["truncation"] == 3);
  CHECK(doc["generators"][0]["name"] == "e");
  CHECK(doc["generators"][0]["grading"] == 0);
  REQUIRE(doc["terms"].size() == 1);
  CHECK(doc["terms"][0]["word"] == Json::array({"e", "f"}));
  CHECK(doc["terms"][0]["coeff"] == "1/2");
}

TEST_CASE("parse errors") {
  const Algebra alg({{"e", 0}}, 2);
  Json doc = element_to_json(alg.gen("e"));
  doc["terms"][0]["coeff"] = "not-a-number";
  CHECK_THROWS_AS(element_from_json(doc, alg), DomainError);
  doc["terms"][0]["coeff"] = "1/2";
  doc["terms"][0]["word"] = Json::array({"zz"});
  CHECK_THROWS_AS(element_from_json(doc, alg), ConfigError);
  doc["terms"][0]["word"] = Json::array({"e", "e", "e"});
  CHECK_THROWS_AS(element_from_json(doc, alg), DomainError);
}

TEST_CASE("model and realisation documents") {
  const CellModelSpec model = based_triangle_model("a", 4);
  const Json doc = model_to_json(model);
  CHECK(doc["truncation"] == 4);
  CHECK(doc["differentials"].contains("h"));
  // dh starts with the topological boundary e+f+g
  bool found_e = false;
  for (const auto& term : doc["differentials"]["h"]["terms"])
    if (term["word"] == Json::array({"e"})) {
      found_e = true;
      CHECK(term["coeff"] == "1");
    }
  CHECK(found_e);

  const SymmetricTriangleData data = build_symmetric_triangle(2);
  const Json rdoc = realisation_to_json(tetrahedron_realisation(data));
  CHECK(rdoc["graph"]["vertices"].size() == 4);
  CHECK(rdoc["graph"]["edges"].size() == 6);
  CHECK(rdoc["edge_labels"].contains("alpha"));
  CHECK(element_from_json(rdoc["vertex_labels"]["x"]) == data.x);
}
