#include "dgla/group_action.hpp"

namespace dgla {

SignedPermutationAction::SignedPermutationAction(Algebra alg, std::string name)
    : alg_(std::move(alg)), name_(std::move(name)), perm_(alg_.table().size()),
      sign_(alg_.table().size(), 1) {
  for (std::size_t i = 0; i < perm_.size(); ++i) perm_[i] = i;
}

SignedPermutationAction& SignedPermutationAction::map(std::string_view from,
                                                      std::string_view to, int sign) {
  const std::size_t fi = alg_.table().index_of(from);
  const std::size_t ti = alg_.table().index_of(to);
  if (alg_.table()[fi].grading != alg_.table()[ti].grading)
    throw ConfigError("signed permutation must preserve the grading");
  if (sign != 1 && sign != -1) throw ConfigError("sign must be +1 or -1");
  perm_[fi] = ti;
  sign_[fi] = sign;
  return *this;
}

Element SignedPermutationAction::apply(const Element& x) const {
  if (!x.algebra().compatible(alg_))
    throw ConfigError("group action: element over the wrong algebra");
  Element out(alg_);
  for (const auto& [w, c] : x.terms()) {
    Word nw(w.size(), 0);
    int s = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const unsigned char letter = static_cast<unsigned char>(w[i]);
      nw[i] = static_cast<char>(perm_[letter]);
      s *= sign_[letter];
    }
    out.add_term(nw, Rational(s) * c);
  }
  return out;
}

SignedPermutationAction SignedPermutationAction::after(
    const SignedPermutationAction& first) const {
  SignedPermutationAction out(alg_, name_ + "*" + first.name_);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    out.perm_[i] = perm_[first.perm_[i]];
    out.sign_[i] = first.sign_[i] * sign_[first.perm_[i]];
  }
  return out;
}

bool SignedPermutationAction::same_mapping(const SignedPermutationAction& other) const {
  return perm_ == other.perm_ && sign_ == other.sign_;
}

std::vector<SignedPermutationAction> triangle_s3(const Algebra& alg) {
  const bool with_h = alg.table().find("h").has_value();
  SignedPermutationAction rot(alg, "rotation");
  rot.map("a", "b", 1).map("b", "c", 1).map("c", "a", 1);
  rot.map("e", "f", 1).map("f", "g", 1).map("g", "e", 1);
  SignedPermutationAction refl(alg, "reflection_a");
  refl.map("b", "c", 1).map("c", "b", 1);
  refl.map("e", "e", -1).map("f", "g", -1).map("g", "f", -1);
  if (with_h) refl.map("h", "h", -1);
  SignedPermutationAction id(alg, "identity");
  return {id, rot, rot.after(rot), refl, refl.after(rot), refl.after(rot.after(rot))};
}

SignedPermutationAction kgon_rotation(const Algebra& alg, int k) {
  SignedPermutationAction rot(alg, "rotation");
  for (int i = 1; i <= k; ++i) {
    const int j = i % k + 1;
    rot.map("v" + std::to_string(i), "v" + std::to_string(j), 1);
    rot.map("l" + std::to_string(i), "l" + std::to_string(j), 1);
  }
  return rot;
}

SignedPermutationAction kgon_reflection(const Algebra& alg, int k) {
  auto wrap = [k](int i) { return (i % k + k) % k == 0 ? k : (i % k + k) % k; };
  SignedPermutationAction refl(alg, "reflection_v1");
  for (int i = 1; i <= k; ++i) {
    refl.map("v" + std::to_string(i), "v" + std::to_string(wrap(2 - i)), 1);
    refl.map("l" + std::to_string(i), "l" + std::to_string(wrap(1 - i)), -1);
  }
  return refl;
}

}  // namespace dgla
