#include "dgla/algebra.hpp"

#include <set>

#include "dgla/rational.hpp"

namespace dgla {

std::string to_fraction_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(s)));
    }
    Integer num{std::string(s.substr(0, slash))};
    Integer den{std::string(s.substr(slash + 1))};
    if (den == 0) throw DomainError("rational: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw DomainError("rational: malformed value '" + std::string(s) + "'");
  }
}

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

const Rational& bernoulli(int n) {
  static std::vector<Rational> cache{Rational(1)};
  // sum_{j=0}^{n} C(n+1,j) B_j = 0 for n >= 1
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    Rational sum = 0;
    Integer binom = 1;  // C(m+1, j), starting at j = 0
    for (int j = 0; j < m; ++j) {
      sum += Rational(binom) * cache[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    // at j = m, C(m+1,m) = m+1
    cache.push_back(-sum / Rational(m + 1));
  }
  return cache[n];
}

GeneratorTable::GeneratorTable(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty()) throw ConfigError("generator with empty name");
    if (!seen.insert(g.name).second)
      throw ConfigError("duplicate generator name '" + g.name + "'");
  }
}

std::optional<std::size_t> GeneratorTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

std::size_t GeneratorTable::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ConfigError("unknown generator '" + std::string(name) + "'");
}

bool GeneratorTable::operator==(const GeneratorTable& other) const {
  if (gens_.size() != other.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name != other.gens_[i].name || gens_[i].grading != other.gens_[i].grading)
      return false;
  return true;
}

Algebra::Algebra(std::vector<Generator> gens, int max_word_len)
    : Algebra(std::make_shared<const GeneratorTable>(std::move(gens)), max_word_len) {}

Algebra::Algebra(std::shared_ptr<const GeneratorTable> table, int max_word_len)
    : table_(std::move(table)), max_len_(max_word_len) {
  if (!table_) throw ConfigError("null generator table");
  if (max_len_ < 1) throw ConfigError("truncation must be a positive word length");
  if (table_->size() > 255) throw ConfigError("more than 255 generators");
}

bool Algebra::compatible(const Algebra& other) const {
  if (max_len_ != other.max_len_) return false;
  return table_ == other.table_ || *table_ == *other.table_;
}

int Algebra::grading_of(const Word& w) const {
  int g = 0;
  for (unsigned char c : w) g += (*table_)[c].grading;
  return g;
}

std::string Algebra::word_name(const Word& w, char sep) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += (*table_)[static_cast<unsigned char>(w[i])].name;
  }
  return out;
}

Word Algebra::word_from_names(std::span<const std::string> names) const {
  Word w;
  w.reserve(names.size());
  for (const auto& n : names) w.push_back(static_cast<char>(table_->index_of(n)));
  return w;
}

}  // namespace dgla
