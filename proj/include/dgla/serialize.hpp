#pragma once

#include "dgla/cell_model.hpp"
#include "dgla/realisation.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace dgla {

using Json = nlohmann::ordered_json;

// Element format shared by every module:
//   { "generators": [{"name": .., "grading": ..}, ..],
//     "truncation": m+,
//     "terms": [{"word": ["e","f"], "coeff": "1/2"}, ..] }
// Rationals are decimal-free "p" / "p/q" strings in lowest terms, bit-exact.
// Terms are emitted in canonical (length, lex) order.
Json element_to_json(const Element& x);

// Reads both the table and the terms from the document.
Element element_from_json(const Json& doc);
// Validates that the document's table and truncation match the given algebra.
Element element_from_json(const Json& doc, const Algebra& alg);

Json algebra_to_json(const Algebra& alg);
Algebra algebra_from_json(const Json& doc);

// Model document: generators, truncation and all differentials as elements.
Json model_to_json(const CellModelSpec& model);

Json realisation_to_json(const Realisation& r);

}  // namespace dgla
