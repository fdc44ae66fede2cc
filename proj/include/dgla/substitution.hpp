#pragma once

#include <optional>
#include <vector>

#include "dgla/element.hpp"

namespace dgla {

// A map given by images of generators, extended multiplicatively to words and
// hence as a Lie-algebra endomorphism on Lie elements, truncated. Images must
// be grading-preserving and constant-free, so substitution never decreases
// word length and truncated results are exact through the truncation.
class Substitution {
 public:
  Substitution(Algebra source, Algebra target);

  static Substitution identity(const Algebra& alg);

  Substitution& define(std::string_view source_gen, Element image);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const std::optional<Element>& image(std::size_t gen_index) const;

  Element apply(const Element& x) const;
  Element operator()(const Element& x) const { return apply(x); }

  // Same map with every image replaced by its single-letter (depth-0) part;
  // this is the induced linear action on each depth slice.
  Substitution linear_part() const;

 private:
  Algebra source_;
  Algebra target_;
  std::vector<std::optional<Element>> images_;
};

}  // namespace dgla
