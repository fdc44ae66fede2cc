#include "dgla/lyndon.hpp"

#include <algorithm>
#include <map>

namespace dgla {

namespace {

// All Lyndon words over alphabet {0..k-1} of length <= max_len, in lex order
// (Duval's generation).
std::vector<Word> lyndon_words(int k, int max_len) {
  std::vector<Word> out;
  Word w(1, 0);
  while (true) {
    if (static_cast<int>(w.size()) <= max_len) out.push_back(w);
    // extend periodically to max_len, then increment
    Word t = w;
    while (static_cast<int>(t.size()) < max_len) t.push_back(t[t.size() % w.size()]);
    while (!t.empty() && t.back() == static_cast<char>(k - 1)) t.pop_back();
    if (t.empty()) break;
    ++t.back();
    w = t;
  }
  return out;
}

bool is_lyndon(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.compare(i, Word::npos, w) <= 0) return false;
  return true;
}

}  // namespace

LyndonBasis::LyndonBasis(Algebra alg, int max_len)
    : alg_(std::move(alg)), max_len_(max_len), by_length_(max_len + 1) {
  if (max_len_ < 1 || max_len_ > alg_.max_word_len())
    throw ConfigError("lyndon basis: bad truncation");
  for (std::size_t i = 0; i < alg_.table().size(); ++i)
    if (alg_.table()[i].grading != 0)
      throw ConfigError("lyndon basis: alphabet must have grading 0");

  const int k = static_cast<int>(alg_.table().size());
  std::vector<Word> words = lyndon_words(k, max_len_);
  // children of the standard factorization are shorter, so build by length
  std::stable_sort(words.begin(), words.end(),
                   [](const Word& a, const Word& b) { return DegLexLess{}(a, b); });
  std::map<Word, int> id_of;
  for (Word& w : words) {
    Monomial m{w, -1, -1, Element(alg_), "", 1};
    if (w.size() == 1) {
      m.expansion.add_term(w, 1);
      m.display = alg_.table()[static_cast<unsigned char>(w[0])].name;
      m.display_sign = 1;
    } else {
      // standard factorization w = uv, v the longest proper Lyndon suffix
      std::size_t split = 1;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (is_lyndon(w.substr(i))) {
          split = i;
          break;
        }
      }
      m.left = id_of.at(w.substr(0, split));
      m.right = id_of.at(w.substr(split));
      const Monomial& l = monomials_[m.left];
      const Monomial& r = monomials_[m.right];
      m.expansion = bracket(l.expansion, r.expansion);
      if (r.word.size() == 1 && l.word.size() > 1) {
        // [T, letter] = -[letter, T]
        m.display = "[" + r.display + "," + l.display + "]";
        m.display_sign = -l.display_sign;
      } else {
        m.display = "[" + l.display + "," + r.display + "]";
        m.display_sign = l.display_sign * r.display_sign;
      }
      // Triangularity guard: lex-least word of the expansion is w itself,
      // with coefficient 1. The peel in coordinates() relies on this.
      const auto& first = *m.expansion.terms().begin();
      if (first.first != w || first.second != 1)
        throw InternalError("lyndon basis: triangularity violated");
    }
    const int id = static_cast<int>(monomials_.size());
    id_of.emplace(w, id);
    by_length_[w.size()].push_back(id);
    monomials_.push_back(std::move(m));
  }
}

const std::vector<int>& LyndonBasis::ids_of_length(int len) const {
  static const std::vector<int> empty;
  if (len < 1 || len > max_len_) return empty;
  return by_length_[len];
}

std::vector<LyndonBasis::Coordinate> LyndonBasis::coordinates(const Element& x) const {
  if (!x.algebra().compatible(alg_))
    throw ConfigError("lyndon coordinates: element over the wrong algebra");
  if (x.has_constant_term())
    throw DomainError("lyndon coordinates: not a Lie element (constant term)");
  Element residual = x;
  std::vector<Coordinate> coords;
  for (int len = 1; len <= max_len_; ++len) {
    for (int id : by_length_[len]) {
      const Rational c = residual.coeff(monomials_[id].word);
      if (c == 0) continue;
      coords.push_back({id, c});
      residual -= c * monomials_[id].expansion;
    }
    for (const auto& [w, c] : residual.terms()) {
      if (static_cast<int>(w.size()) != len) continue;
      throw DomainError("lyndon coordinates: not a Lie element (residual at word '" +
                        alg_.word_name(w) + "')");
    }
  }
  return coords;
}

Element LyndonBasis::expand(const std::vector<Coordinate>& coords) const {
  Element out(alg_);
  for (const auto& c : coords) out += c.value * monomials_[c.id].expansion;
  return out;
}

std::pair<std::string, Rational> LyndonBasis::display_coordinate(const Coordinate& c) const {
  const Monomial& m = monomials_[c.id];
  return {m.display, Rational(m.display_sign) * c.value};
}

RatMatrix slice_matrix(const LyndonBasis& basis, const Substitution& linear, int len) {
  const auto& ids = basis.ids_of_length(len);
  const std::size_t n = ids.size();
  RatMatrix mat(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    const Element img = linear.apply(basis.monomial(ids[j]).expansion);
    if (!img.is_zero() && img.min_word_len() != len)
      throw InternalError("slice_matrix: substitution is not length-preserving");
    const auto coords = basis.coordinates(img);
    for (const auto& c : coords) {
      const auto pos = std::find(ids.begin(), ids.end(), c.id);
      if (pos == ids.end()) throw InternalError("slice_matrix: coordinate outside the slice");
      mat[pos - ids.begin()][j] = c.value;
    }
  }
  return mat;
}

std::vector<Rational> slice_coordinates(const LyndonBasis& basis, const Element& x, int len) {
  const auto& ids = basis.ids_of_length(len);
  std::vector<Rational> v(ids.size(), Rational(0));
  const auto coords = basis.coordinates(depth_component(x, len - 1));
  for (const auto& c : coords) {
    const auto pos = std::find(ids.begin(), ids.end(), c.id);
    if (pos == ids.end()) throw InternalError("slice_coordinates: coordinate outside the slice");
    v[pos - ids.begin()] = c.value;
  }
  return v;
}

}  // namespace dgla
