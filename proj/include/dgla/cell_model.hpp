#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dgla/bch.hpp"
#include "dgla/element.hpp"

namespace dgla {

// A DGLA model of a cell complex: a differential assignment per generator,
// extended to arbitrary elements as a graded derivation,
//   d(uv) = (du)v + (-1)^{|u|} u(dv).
// Vertices get the Maurer-Cartan rule da = -1/2 [a,a]; edges get the
// Bernoulli-series interval differential between their endpoints; anything
// else is given explicitly. The differential never decreases word length, so
// truncated d^2 checks are exact statements about the untruncated model
// through the truncation depth.
class CellModelSpec {
 public:
  struct VertexRule {};
  struct EdgeRule {
    std::string source;
    std::string target;
  };
  struct ExplicitRule {
    Element value;
  };
  using Rule = std::variant<VertexRule, EdgeRule, ExplicitRule>;

  CellModelSpec(Algebra alg, std::map<std::string, Rule> rules);

  const Algebra& algebra() const { return alg_; }
  const std::map<std::string, Rule>& rules() const { return rules_; }

  bool has_rule(std::string_view gen) const;
  const Element& differential_of(std::string_view gen) const;
  Element differential(const Element& x) const;

 private:
  Algebra alg_;
  std::map<std::string, Rule> rules_;
  std::vector<std::optional<Element>> d_gen_;  // by generator index
};

// d e = ad_e(target) + sum_{i>=0} B_i/i! ad_e^i(target - source), truncated.
// This is the unique interval differential: the flow by e carries source to
// target in unit time.
Element edge_differential(const Element& e, const Element& source, const Element& target);

// Unit-time flow by a grading-0 element e.
//   grading >= 0:  exp(-ad_e) x
//   grading -1:    exp(-ad_e) x + Phi(ad_e)(de),  Phi(E) = (1 - exp(-E))/E
// (the closed-form solution of dx/dt = de - ad_e x). For a zero x the -1
// branch (point flow) is taken unless a grading hint says otherwise.
Element flow_unit(const Element& e, const Element& x, const CellModelSpec& model,
                  std::optional<int> grading_hint = std::nullopt);

// dx + 1/2 [x,x]; zero iff x is a point at this truncation.
Element mc_residual(const Element& x, const CellModelSpec& model);

// True iff de + [x,e] = 0, i.e. e is localised at the point x.
bool localized_kernel_check(const Element& e, const Element& x, const CellModelSpec& model);

// BCH of an oriented edge path; reversed edges contribute negated labels.
struct OrientedLabel {
  Element label;
  bool reversed = false;
};
Element path_bch(const Algebra& alg, std::span<const OrientedLabel> edges);

struct DSquaredReport {
  struct Entry {
    std::string generator;
    bool zero;
    int checked_depth;
    std::optional<int> first_nonzero_depth;
  };
  std::vector<Entry> entries;
  bool all_zero = true;
};
DSquaredReport verify_d_squared(const CellModelSpec& model);

// The triangle-boundary algebra {a,b,c; e,f,g} with the 2-cell generator h,
// and the unique boundary model (edges e: b->c, f: c->a, g: a->b).
Algebra triangle_algebra(int max_word_len);
CellModelSpec triangle_boundary_model(const Algebra& alg);

// Model based at a vertex: dh = BCH(cyclic edges from the base) - [base, h].
CellModelSpec based_triangle_model(std::string_view base, int max_word_len);

// First depth at which x has a nonzero component, nullopt when x = 0.
std::optional<int> first_nonzero_depth(const Element& x);

}  // namespace dgla
