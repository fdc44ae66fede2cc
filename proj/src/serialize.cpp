#include "dgla/serialize.hpp"

namespace dgla {

Json algebra_to_json(const Algebra& alg) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < alg.table().size(); ++i)
    gens.push_back({{"name", alg.table()[i].name}, {"grading", alg.table()[i].grading}});
  return Json{{"generators", std::move(gens)}, {"truncation", alg.max_word_len()}};
}

Algebra algebra_from_json(const Json& doc) {
  if (!doc.contains("generators") || !doc.contains("truncation"))
    throw DomainError("element document: missing generators or truncation");
  std::vector<Generator> gens;
  for (const auto& g : doc.at("generators"))
    gens.push_back({g.at("name").get<std::string>(), g.at("grading").get<int>()});
  return Algebra(std::move(gens), doc.at("truncation").get<int>());
}

Json element_to_json(const Element& x) {
  Json doc = algebra_to_json(x.algebra());
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json word = Json::array();
    for (unsigned char letter : w) word.push_back(x.algebra().table()[letter].name);
    terms.push_back({{"word", std::move(word)}, {"coeff", to_fraction_string(c)}});
  }
  doc["terms"] = std::move(terms);
  return doc;
}

Element element_from_json(const Json& doc, const Algebra& alg) {
  Element out(alg);
  for (const auto& t : doc.at("terms")) {
    std::vector<std::string> names;
    for (const auto& n : t.at("word")) names.push_back(n.get<std::string>());
    const Word w = alg.word_from_names(names);
    if (static_cast<int>(w.size()) > alg.max_word_len())
      throw DomainError("element document: word longer than the truncation");
    out.add_term(w, rational_from_string(t.at("coeff").get<std::string>()));
  }
  return out;
}

Element element_from_json(const Json& doc) {
  return element_from_json(doc, algebra_from_json(doc));
}

Json model_to_json(const CellModelSpec& model) {
  Json doc = algebra_to_json(model.algebra());
  Json diffs = Json::object();
  for (const auto& [name, rule] : model.rules()) {
    Json d = element_to_json(model.differential_of(name));
    // the table is shared by the enclosing document
    d.erase("generators");
    d.erase("truncation");
    diffs[name] = std::move(d);
  }
  doc["differentials"] = std::move(diffs);
  return doc;
}

Json realisation_to_json(const Realisation& r) {
  Json vertices = Json::array();
  for (const auto& v : r.graph.vertices) vertices.push_back(v);
  Json edges = Json::array();
  for (const auto& e : r.graph.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"name", e.name}});
  Json vlabels = Json::object();
  for (const auto& [name, el] : r.vertex_labels) vlabels[name] = element_to_json(el);
  Json elabels = Json::object();
  for (const auto& [name, el] : r.edge_labels) elabels[name] = element_to_json(el);
  return Json{{"graph", {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}}},
              {"vertex_labels", std::move(vlabels)},
              {"edge_labels", std::move(elabels)}};
}

}  // namespace dgla
