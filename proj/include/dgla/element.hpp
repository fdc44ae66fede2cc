#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgla/algebra.hpp"
#include "dgla/rational.hpp"

namespace dgla {

// A finite rational linear combination of words in graded generators,
// truncated by word length. The free graded Lie algebra is carried inside
// this free associative algebra via the graded commutator; in characteristic
// zero the embedding is injective, so equality of Lie elements is
// coefficient-wise equality of words.
class Element {
 public:
  using TermMap = std::map<Word, Rational, DegLexLess>;

  explicit Element(Algebra alg) : alg_(std::move(alg)) {}
  Element(Algebra alg, TermMap terms);

  const Algebra& algebra() const { return alg_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(const Word& w) const;
  bool has_constant_term() const;
  Rational constant_term() const;

  // Smallest stored word length; max_word_len()+1 when zero.
  int min_word_len() const;

  // True when every stored word has total grading g (vacuously for zero).
  bool is_grading(int g) const;
  // The common grading of all words, nullopt when mixed or zero.
  std::optional<int> homogeneous_grading() const;

  // Adds c * w, pruning zeros; words beyond the truncation are dropped.
  void add_term(const Word& w, const Rational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);

  bool operator==(const Element& o) const;

 private:
  Algebra alg_;
  TermMap terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(const Element& a);
Element operator*(const Rational& c, Element a);
Element operator*(Element a, const Rational& c);

// Concatenation product in the tensor algebra, truncated.
Element operator*(const Element& a, const Element& b);

// Graded commutator [x,y] = xy - (-1)^{|x||y|} yx, extended bilinearly from
// grading-homogeneous words (each word carries its own Koszul sign).
Element bracket(const Element& x, const Element& y);

// ad_e(x) = [e,x].
inline Element ad(const Element& e, const Element& x) { return bracket(e, x); }

// exp of a constant-free grading-0 element; log of 1 + (constant-free
// grading-0). Exact truncated power series, mutually inverse.
Element exp_grading0(const Element& x);
Element log_near_identity(const Element& y);

// Terms with exactly r Lie brackets, i.e. word length r+1.
Element depth_component(const Element& x, int r);
// Terms of depth <= r.
Element truncate_depth(const Element& x, int r);

// exp(-ad_e) applied to x, truncated.
Element exp_neg_ad(const Element& e, const Element& x);

// True iff x (grading-homogeneous of grading 0) lies in the free Lie
// subalgebra, checked degree-wise with the Dynkin left-bracketing idempotent.
bool is_lie_element(const Element& x);

// Debug rendering, e.g. "-1/3*e0 + 1/6*e0.f0".
std::string to_string(const Element& x);

// Assembles an element from (word, coeff) pairs in any order.
Element element_from_unsorted(const Algebra& alg,
                              std::vector<std::pair<Word, Rational>> terms);

void require_compatible(const Element& a, const Element& b);

}  // namespace dgla
