#pragma once

#include <string>
#include <vector>

#include "dgla/element.hpp"
#include "dgla/substitution.hpp"

namespace dgla {

// Lyndon-word basis of the free Lie algebra on the (grading-0) generators of
// an algebra, one bracketed monomial per Lyndon word of length <= m+.
//
// Internally monomials carry the standard (Chen-Fox-Lyndon) bracketing, whose
// associative expansion is triangular: the Lyndon word itself appears with
// coefficient 1 and every other word of the expansion is lexicographically
// larger. Coordinates are extracted by peeling in increasing lex order.
//
// For reporting, each monomial is sign-normalized towards the right-nested
// form used in the literature: [T, letter] is rewritten as -[letter, T]
// recursively, so e.g. the standard bracketing [[e,f],f] is displayed as
// [f,[e,f]] and its reported coordinate absorbs the sign.
class LyndonBasis {
 public:
  struct Monomial {
    Word word;               // the Lyndon word
    int left = -1;           // children for the standard factorization
    int right = -1;          // (-1 for single letters)
    Element expansion;       // associative expansion of the standard bracketing
    std::string display;     // normalized bracket string, e.g. "[f0,[e0,f0]]"
    int display_sign = 1;    // standard bracketing == display_sign * displayed monomial
  };

  LyndonBasis(Algebra alg, int max_len);
  explicit LyndonBasis(const Algebra& alg) : LyndonBasis(alg, alg.max_word_len()) {}

  const Algebra& algebra() const { return alg_; }
  int max_len() const { return max_len_; }

  std::size_t size() const { return monomials_.size(); }
  const Monomial& monomial(int id) const { return monomials_[id]; }
  // Monomial ids of the given word length, in lex order.
  const std::vector<int>& ids_of_length(int len) const;
  int dim(int len) const { return static_cast<int>(ids_of_length(len).size()); }

  // Coordinates w.r.t. the standard bracketing. Throws DomainError when x is
  // not a Lie element of this basis' alphabet.
  struct Coordinate {
    int id;
    Rational value;
  };
  std::vector<Coordinate> coordinates(const Element& x) const;

  // Inverse expansion: sum of value * standard-bracketing monomials.
  Element expand(const std::vector<Coordinate>& coords) const;

  // Reported form of a coordinate: display string and sign-adjusted value.
  std::pair<std::string, Rational> display_coordinate(const Coordinate& c) const;

 private:
  Algebra alg_;
  int max_len_;
  std::vector<Monomial> monomials_;
  std::vector<std::vector<int>> by_length_;  // [len] -> ids
};

// Exact rational matrices, row-major.
using RatMatrix = std::vector<std::vector<Rational>>;

// Matrix of the depth-slice action induced on B^(len) by a length-preserving
// (linear) substitution: column j holds the coordinates of the image of the
// j-th basis monomial of that length.
RatMatrix slice_matrix(const LyndonBasis& basis, const Substitution& linear, int len);

// Coordinates of the length-len part of x as a column vector.
std::vector<Rational> slice_coordinates(const LyndonBasis& basis, const Element& x, int len);

}  // namespace dgla
