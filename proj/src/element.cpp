#include "dgla/element.hpp"

#include <algorithm>

namespace dgla {

Element Algebra::zero() const { return Element(*this); }

Element Algebra::one() const {
  Element e(*this);
  e.add_term(Word{}, 1);
  return e;
}

Element Algebra::gen(std::string_view name) const {
  Element e(*this);
  e.add_term(Word(1, static_cast<char>(table_->index_of(name))), 1);
  return e;
}

Element::Element(Algebra alg, TermMap terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || static_cast<int>(it->first.size()) > alg_.max_word_len())
      it = terms_.erase(it);
    else
      ++it;
  }
}

Rational Element::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Element::has_constant_term() const { return terms_.count(Word{}) != 0; }

Rational Element::constant_term() const { return coeff(Word{}); }

int Element::min_word_len() const {
  if (terms_.empty()) return alg_.max_word_len() + 1;
  return static_cast<int>(terms_.begin()->first.size());
}

bool Element::is_grading(int g) const {
  for (const auto& [w, c] : terms_)
    if (alg_.grading_of(w) != g) return false;
  return true;
}

std::optional<int> Element::homogeneous_grading() const {
  if (terms_.empty()) return std::nullopt;
  const int g = alg_.grading_of(terms_.begin()->first);
  return is_grading(g) ? std::optional<int>(g) : std::nullopt;
}

void Element::add_term(const Word& w, const Rational& c) {
  if (c == 0 || static_cast<int>(w.size()) > alg_.max_word_len()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void require_compatible(const Element& a, const Element& b) {
  if (!a.algebra().compatible(b.algebra()))
    throw ConfigError("elements over mismatched generator tables or truncations");
}

Element& Element::operator+=(const Element& o) {
  require_compatible(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_compatible(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

bool Element::operator==(const Element& o) const {
  if (!alg_.compatible(o.alg_)) return false;
  return terms_ == o.terms_;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator-(const Element& a) { return Rational(-1) * a; }
Element operator*(const Rational& c, Element a) { return a *= c; }
Element operator*(Element a, const Rational& c) { return a *= c; }

Element element_from_unsorted(const Algebra& alg,
                              std::vector<std::pair<Word, Rational>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return DegLexLess{}(a.first, b.first); });
  Element::TermMap map;
  auto hint = map.end();
  std::size_t i = 0;
  while (i < terms.size()) {
    Word& w = terms[i].first;
    Rational c = std::move(terms[i].second);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].first == w) c += terms[j++].second;
    if (c != 0) hint = map.emplace_hint(map.end(), std::move(w), std::move(c));
    i = j;
  }
  return Element(alg, std::move(map));
}

Element operator*(const Element& a, const Element& b) {
  require_compatible(a, b);
  const int max_len = a.algebra().max_word_len();
  std::vector<std::pair<Word, Rational>> acc;
  for (const auto& [wa, ca] : a.terms()) {
    const int room = max_len - static_cast<int>(wa.size());
    if (room < 0) continue;
    for (const auto& [wb, cb] : b.terms()) {
      if (static_cast<int>(wb.size()) > room) break;  // deg-lex order: longer only from here
      acc.emplace_back(wa + wb, ca * cb);
    }
  }
  return element_from_unsorted(a.algebra(), std::move(acc));
}

Element bracket(const Element& x, const Element& y) {
  require_compatible(x, y);
  const Algebra& alg = x.algebra();
  const int max_len = alg.max_word_len();
  std::vector<std::pair<Word, Rational>> acc;
  for (const auto& [wx, cx] : x.terms()) {
    const int room = max_len - static_cast<int>(wx.size());
    if (room < 0) continue;
    const int gx = alg.grading_of(wx);
    for (const auto& [wy, cy] : y.terms()) {
      if (static_cast<int>(wy.size()) > room) break;
      const int gy = alg.grading_of(wy);
      const Rational c = cx * cy;
      acc.emplace_back(wx + wy, c);
      acc.emplace_back(wy + wx, ((gx * gy) % 2 != 0) ? c : -c);
    }
  }
  return element_from_unsorted(alg, std::move(acc));
}

Element exp_grading0(const Element& x) {
  if (x.has_constant_term()) throw DomainError("exp: argument has a constant term");
  if (!x.is_grading(0)) throw DomainError("exp: argument must have grading 0");
  Element result = x.algebra().one();
  Element power = x.algebra().one();
  for (int k = 1; k <= x.algebra().max_word_len(); ++k) {
    power = power * x;
    if (power.is_zero()) break;
    power *= Rational(1, k);
    result += power;
  }
  return result;
}

Element log_near_identity(const Element& y) {
  if (y.constant_term() != 1) throw DomainError("log: constant term must be 1");
  Element z = y;
  z.add_term(Word{}, -1);
  if (!z.is_grading(0)) throw DomainError("log: argument must have grading 0");
  Element result = z;
  Element power = z;
  for (int k = 2; k <= y.algebra().max_word_len(); ++k) {
    power = power * z;
    if (power.is_zero()) break;
    result += Rational((k % 2 == 0) ? -1 : 1, k) * power;
  }
  return result;
}

Element depth_component(const Element& x, int r) {
  if (r < 0) throw DomainError("depth_component: negative depth");
  Element out(x.algebra());
  for (const auto& [w, c] : x.terms())
    if (static_cast<int>(w.size()) == r + 1) out.add_term(w, c);
  return out;
}

Element truncate_depth(const Element& x, int r) {
  Element out(x.algebra());
  for (const auto& [w, c] : x.terms()) {
    if (static_cast<int>(w.size()) > r + 1) break;
    out.add_term(w, c);
  }
  return out;
}

Element exp_neg_ad(const Element& e, const Element& x) {
  require_compatible(e, x);
  Element result = x;
  Element term = x;
  for (int k = 1; k <= e.algebra().max_word_len(); ++k) {
    term = bracket(e, term);
    if (term.is_zero()) break;
    term *= Rational(-1, k);
    result += term;
  }
  return result;
}

namespace {

// Left-normed Dynkin bracketing [...[[w1,w2],w3],...,wn] of a single word.
Element left_normed_bracketing(const Algebra& alg, const Word& w) {
  Element acc(alg);
  acc.add_term(Word(1, w[0]), 1);
  for (std::size_t i = 1; i < w.size(); ++i) {
    Element letter(alg);
    letter.add_term(Word(1, w[i]), 1);
    acc = bracket(acc, letter);
  }
  return acc;
}

}  // namespace

bool is_lie_element(const Element& x) {
  if (!x.is_grading(0)) throw DomainError("is_lie_element: grading 0 required");
  if (x.has_constant_term()) return false;
  for (int len = 1; len <= x.algebra().max_word_len(); ++len) {
    Element component(x.algebra());
    for (const auto& [w, c] : x.terms())
      if (static_cast<int>(w.size()) == len) component.add_term(w, c);
    if (component.is_zero()) continue;
    Element dynkin(x.algebra());
    for (const auto& [w, c] : component.terms())
      dynkin += c * left_normed_bracketing(x.algebra(), w);
    if (!(dynkin == Rational(len) * component)) return false;
  }
  return true;
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += to_fraction_string(c);
    if (!w.empty()) {
      out += "*";
      out += x.algebra().word_name(w);
    }
  }
  return out;
}

}  // namespace dgla
