#include "dgla/substitution.hpp"

namespace dgla {

Substitution::Substitution(Algebra source, Algebra target)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(source_.table().size()) {
  if (source_.max_word_len() != target_.max_word_len())
    throw ConfigError("substitution: source/target truncations differ");
}

Substitution Substitution::identity(const Algebra& alg) {
  Substitution s(alg, alg);
  for (std::size_t i = 0; i < alg.table().size(); ++i)
    s.define(alg.table()[i].name, alg.gen(alg.table()[i].name));
  return s;
}

Substitution& Substitution::define(std::string_view source_gen, Element image) {
  const std::size_t idx = source_.table().index_of(source_gen);
  if (!image.algebra().compatible(target_))
    throw ConfigError("substitution: image over the wrong algebra");
  if (image.has_constant_term())
    throw ConfigError("substitution: image has a constant term");
  if (!image.is_grading(source_.table()[idx].grading))
    throw ConfigError("substitution: image of '" + std::string(source_gen) +
                      "' does not preserve the grading");
  images_[idx] = std::move(image);
  return *this;
}

const std::optional<Element>& Substitution::image(std::size_t gen_index) const {
  return images_.at(gen_index);
}

Element Substitution::apply(const Element& x) const {
  if (!x.algebra().compatible(source_))
    throw ConfigError("substitution: argument over the wrong algebra");
  Element out(target_);
  for (const auto& [w, c] : x.terms()) {
    Element prod = target_.one();
    for (unsigned char letter : w) {
      const auto& img = images_[letter];
      if (!img)
        throw ConfigError("substitution: no image for generator '" +
                          source_.table()[letter].name + "'");
      prod = prod * *img;
      if (prod.is_zero()) break;
    }
    out += c * prod;
  }
  return out;
}

Substitution Substitution::linear_part() const {
  Substitution lin(source_, target_);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!images_[i]) continue;
    lin.images_[i] = depth_component(*images_[i], 0);
  }
  return lin;
}

}  // namespace dgla
