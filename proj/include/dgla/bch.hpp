#pragma once

#include <span>
#include <string>
#include <vector>

#include "dgla/element.hpp"
#include "dgla/lyndon.hpp"

namespace dgla {

// Truncated Baker-Campbell-Hausdorff product log(exp(x) exp(y)) of
// constant-free grading-0 elements. Exact through the truncation; the result
// is a Lie element degree-wise whenever the inputs are.
Element bch(const Element& x, const Element& y);

// n-ary BCH: one log of the product of all exponentials (not an iterated
// binary fold, though associativity makes the two agree). Empty list -> 0.
Element bch_list(const Algebra& alg, std::span<const Element> xs);
Element bch_list(const Algebra& alg, std::initializer_list<Element> xs);

// Coordinates of bch(e,f) in the Lyndon basis through max_depth, in
// (depth, lex) order. Reported in the sign-normalized display basis.
struct BchCoefficient {
  int depth;
  std::string monomial;            // e.g. "[e,[e,f]]"
  std::vector<std::string> word;   // the underlying Lyndon word, as names
  Rational value;
};
std::vector<BchCoefficient> bch_coefficient_table(int max_depth);

}  // namespace dgla
