#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgla/errors.hpp"

namespace dgla {

class Element;

struct Generator {
  std::string name;
  int grading = 0;
};

// Ordered list of named, integer-graded generators. Declaration order is the
// canonical order used for monomials.
class GeneratorTable {
 public:
  explicit GeneratorTable(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws ConfigError
  bool operator==(const GeneratorTable& other) const;

 private:
  std::vector<Generator> gens_;
};

// A word is a sequence of generator indices, one byte per letter.
using Word = std::string;

// Canonical monomial order: by length, then lexicographically.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Shared context for elements: generator table plus the word-length
// truncation m+ (words longer than max_word_len are dropped, exactly).
class Algebra {
 public:
  Algebra(std::vector<Generator> gens, int max_word_len);
  Algebra(std::shared_ptr<const GeneratorTable> table, int max_word_len);

  const GeneratorTable& table() const { return *table_; }
  const std::shared_ptr<const GeneratorTable>& table_ptr() const { return table_; }
  int max_word_len() const { return max_len_; }
  // Depth counts Lie brackets: a word of length n has depth n-1.
  int max_depth() const { return max_len_ - 1; }

  bool compatible(const Algebra& other) const;
  int grading_of(const Word& w) const;
  std::string word_name(const Word& w, char sep = '.') const;
  Word word_from_names(std::span<const std::string> names) const;

  Element zero() const;
  Element one() const;
  Element gen(std::string_view name) const;

 private:
  std::shared_ptr<const GeneratorTable> table_;
  int max_len_;
};

}  // namespace dgla
