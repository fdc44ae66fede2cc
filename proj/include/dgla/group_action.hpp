#pragma once

#include <string>
#include <vector>

#include "dgla/element.hpp"

namespace dgla {

// A symmetry-group element acting on generators by a grading-preserving
// permutation with signs; extends to a Lie automorphism word-wise.
class SignedPermutationAction {
 public:
  SignedPermutationAction(Algebra alg, std::string name);

  SignedPermutationAction& map(std::string_view from, std::string_view to, int sign);

  const std::string& name() const { return name_; }
  const Algebra& algebra() const { return alg_; }

  Element apply(const Element& x) const;
  Element operator()(const Element& x) const { return apply(x); }

  // Composition: (this.after(first))(x) = this(first(x)).
  SignedPermutationAction after(const SignedPermutationAction& first) const;

  bool same_mapping(const SignedPermutationAction& other) const;

 private:
  Algebra alg_;
  std::string name_;
  std::vector<std::size_t> perm_;
  std::vector<int> sign_;
};

// The six triangle symmetries on any table containing a,b,c,e,f,g (and
// optionally h): rotation a->b->c, e->f->g, h fixed; reflection through the
// median at a: b<->c, e->-e, f->-g, g->-f, h->-h.
std::vector<SignedPermutationAction> triangle_s3(const Algebra& alg);

// Dihedral generators for the k-gon on vertices v1..vk and edges l1..lk
// (edge li runs vi -> vi+1): rotation vi->vi+1, li->li+1; reflection through
// v1, vi -> v_{2-i}, li -> -l_{1-i} (indices mod k).
SignedPermutationAction kgon_rotation(const Algebra& alg, int k);
SignedPermutationAction kgon_reflection(const Algebra& alg, int k);

}  // namespace dgla
