#include "dgla/cell_model.hpp"

namespace dgla {

std::optional<int> first_nonzero_depth(const Element& x) {
  if (x.is_zero()) return std::nullopt;
  return x.min_word_len() - 1;
}

Element edge_differential(const Element& e, const Element& source, const Element& target) {
  require_compatible(e, source);
  require_compatible(e, target);
  Element result = bracket(e, target);
  Element w = target - source;
  result += w;  // i = 0
  for (int i = 1; i <= e.algebra().max_word_len(); ++i) {
    w = bracket(e, w);
    if (w.is_zero()) break;
    const Rational& b = bernoulli(i);
    if (b != 0) result += (b / factorial(i)) * w;
  }
  return result;
}

CellModelSpec::CellModelSpec(Algebra alg, std::map<std::string, Rule> rules)
    : alg_(std::move(alg)), rules_(std::move(rules)), d_gen_(alg_.table().size()) {
  for (const auto& [name, rule] : rules_) {
    const std::size_t idx = alg_.table().index_of(name);
    const int grading = alg_.table()[idx].grading;
    const Element g = alg_.gen(name);
    if (std::holds_alternative<VertexRule>(rule)) {
      if (grading != -1) throw ConfigError("vertex rule on non-vertex generator '" + name + "'");
      d_gen_[idx] = Rational(-1, 2) * bracket(g, g);
    } else if (const auto* e = std::get_if<EdgeRule>(&rule)) {
      if (grading != 0) throw ConfigError("edge rule on non-edge generator '" + name + "'");
      const std::size_t si = alg_.table().index_of(e->source);
      const std::size_t ti = alg_.table().index_of(e->target);
      if (alg_.table()[si].grading != -1 || alg_.table()[ti].grading != -1)
        throw ConfigError("edge endpoints of '" + name + "' must be vertices");
      d_gen_[idx] = edge_differential(g, alg_.gen(e->source), alg_.gen(e->target));
    } else {
      const auto& value = std::get<ExplicitRule>(rule).value;
      if (!value.algebra().compatible(alg_))
        throw ConfigError("explicit differential of '" + name + "' over the wrong algebra");
      if (!value.is_grading(grading - 1))
        throw ConfigError("explicit differential of '" + name + "' has the wrong grading");
      d_gen_[idx] = value;
    }
    // Depth soundness: the image must not shorten words.
    if (!d_gen_[idx]->is_zero() && d_gen_[idx]->min_word_len() < 1)
      throw ConfigError("differential of '" + name + "' has a constant term");
  }
}

bool CellModelSpec::has_rule(std::string_view gen) const {
  return rules_.count(std::string(gen)) != 0;
}

const Element& CellModelSpec::differential_of(std::string_view gen) const {
  const std::size_t idx = alg_.table().index_of(gen);
  if (!d_gen_[idx])
    throw ConfigError("no differential rule for generator '" + std::string(gen) + "'");
  return *d_gen_[idx];
}

Element CellModelSpec::differential(const Element& x) const {
  if (!x.algebra().compatible(alg_))
    throw ConfigError("differential: element over the wrong algebra");
  const int max_len = alg_.max_word_len();
  std::vector<std::pair<Word, Rational>> acc;
  for (const auto& [w, c] : x.terms()) {
    int prefix_grading = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const unsigned char letter = static_cast<unsigned char>(w[k]);
      if (!d_gen_[letter])
        throw ConfigError("no differential rule for generator '" +
                          alg_.table()[letter].name + "'");
      const Rational sign_c = (prefix_grading % 2 != 0) ? -c : c;
      const int rest = static_cast<int>(w.size()) - 1;
      for (const auto& [dw, dc] : d_gen_[letter]->terms()) {
        if (rest + static_cast<int>(dw.size()) > max_len) break;
        Word nw;
        nw.reserve(rest + dw.size());
        nw.append(w, 0, k);
        nw.append(dw);
        nw.append(w, k + 1, Word::npos);
        acc.emplace_back(std::move(nw), sign_c * dc);
      }
      prefix_grading += alg_.table()[letter].grading;
    }
  }
  return element_from_unsorted(alg_, std::move(acc));
}

Element flow_unit(const Element& e, const Element& x, const CellModelSpec& model,
                  std::optional<int> grading_hint) {
  if (!e.is_grading(0) || e.has_constant_term())
    throw DomainError("flow: flowing element must be constant-free of grading 0");
  require_compatible(e, x);
  int grading;
  if (auto g = x.homogeneous_grading()) {
    grading = *g;
  } else if (x.is_zero()) {
    grading = grading_hint.value_or(-1);
  } else {
    throw DomainError("flow: argument must be grading-homogeneous");
  }
  Element result = exp_neg_ad(e, x);
  if (grading == -1) {
    // Phi(ad_e)(de) with Phi(E) = sum_{k>=0} (-1)^k E^k/(k+1)!
    Element term = model.differential(e);
    result += term;
    for (int k = 1; k <= e.algebra().max_word_len(); ++k) {
      term = bracket(e, term);
      if (term.is_zero()) break;
      term *= Rational(-1, k + 1);
      result += term;
    }
  }
  return result;
}

Element mc_residual(const Element& x, const CellModelSpec& model) {
  if (!x.is_grading(-1)) throw DomainError("mc_residual: grading -1 required");
  return model.differential(x) + Rational(1, 2) * bracket(x, x);
}

bool localized_kernel_check(const Element& e, const Element& x, const CellModelSpec& model) {
  return (model.differential(e) + bracket(x, e)).is_zero();
}

Element path_bch(const Algebra& alg, std::span<const OrientedLabel> edges) {
  std::vector<Element> labels;
  labels.reserve(edges.size());
  for (const auto& oe : edges) labels.push_back(oe.reversed ? -oe.label : oe.label);
  return bch_list(alg, labels);
}

DSquaredReport verify_d_squared(const CellModelSpec& model) {
  DSquaredReport report;
  for (const auto& [name, rule] : model.rules()) {
    const Element dd = model.differential(model.differential_of(name));
    DSquaredReport::Entry entry;
    entry.generator = name;
    entry.zero = dd.is_zero();
    entry.checked_depth = model.algebra().max_depth();
    entry.first_nonzero_depth = first_nonzero_depth(dd);
    if (!entry.zero) report.all_zero = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

Algebra triangle_algebra(int max_word_len) {
  return Algebra({{"a", -1}, {"b", -1}, {"c", -1}, {"e", 0}, {"f", 0}, {"g", 0}, {"h", 1}},
                 max_word_len);
}

CellModelSpec triangle_boundary_model(const Algebra& alg) {
  std::map<std::string, CellModelSpec::Rule> rules;
  rules["a"] = CellModelSpec::VertexRule{};
  rules["b"] = CellModelSpec::VertexRule{};
  rules["c"] = CellModelSpec::VertexRule{};
  rules["e"] = CellModelSpec::EdgeRule{"b", "c"};
  rules["f"] = CellModelSpec::EdgeRule{"c", "a"};
  rules["g"] = CellModelSpec::EdgeRule{"a", "b"};
  return CellModelSpec(alg, std::move(rules));
}

CellModelSpec based_triangle_model(std::string_view base, int max_word_len) {
  const Algebra alg = triangle_algebra(max_word_len);
  const Element e = alg.gen("e"), f = alg.gen("f"), g = alg.gen("g");
  Element cycle(alg);
  if (base == "a")
    cycle = bch_list(alg, {g, e, f});
  else if (base == "b")
    cycle = bch_list(alg, {e, f, g});
  else if (base == "c")
    cycle = bch_list(alg, {f, g, e});
  else
    throw ConfigError("based_triangle_model: base must be one of a, b, c");
  CellModelSpec boundary = triangle_boundary_model(alg);
  auto rules = boundary.rules();
  rules["h"] = CellModelSpec::ExplicitRule{cycle - bracket(alg.gen(std::string(base)), alg.gen("h"))};
  return CellModelSpec(alg, std::move(rules));
}

}  // namespace dgla
