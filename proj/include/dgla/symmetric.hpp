#pragma once

#include "dgla/cell_model.hpp"
#include "dgla/group_action.hpp"
#include "dgla/lyndon.hpp"
#include "dgla/realisation.hpp"
#include "dgla/substitution.hpp"

namespace dgla {

// An ordered cycle of k >= 3 grading-0 edge labels over one algebra.
struct EdgeCycle {
  std::vector<Element> labels;

  int k() const { return static_cast<int>(labels.size()); }
  const Algebra& algebra() const;
};

// BCH of the cycle in order; zero iff the cycle is flat.
Element cycle_bch(const EdgeCycle& cycle);

// Edge flattening: label i is corrected by -1/k times the BCH of the loop
// word starting at edge i, so the corrected cycle's BCH telescopes to zero
// while each edge still flows between its original endpoints.
EdgeCycle flatten_cycle(const EdgeCycle& cycle);

// Inscribed-polygon subdivision of a flat cycle. For the triangle the labels
// follow the parallel-edge naming e' = BCH(f/2, g/2) (cyclically); for k >= 4
// the midpoint naming l_i' = BCH(l_i/2, l_{i+1}/2). Throws DomainError on a
// non-flat input, whose inner loop would not close.
EdgeCycle inscribe_step(const EdgeCycle& cycle);

// B: the free graded Lie algebra on the two flattened triangle edges.
Algebra triangle_b_algebra(int max_word_len);

// tau:   e0 -> BCH(f0/2, -BCH(e0,f0)/2),  f0 -> BCH(-BCH(e0,f0)/2, e0/2)
// sigma: e0 -> BCH(e0/2, f0/2),           f0 -> BCH(f0/2, -BCH(e0,f0)/2)
// tau generates the inscribed edges (e_n = tau^n(e0)); sigma composes tau
// with the rotation and generates the based-path increments.
Substitution make_tau(const Algebra& b);
Substitution make_sigma(const Algebra& b);

// The rotation on B: e0 -> f0, f0 -> -BCH(e0,f0).
Substitution b_rotation(const Algebra& b);

// The unique constant-free solution of phi(alpha) = BCH(c, alpha), solved
// depth slice by depth slice: on each slice (phi_0 - 1) is invertible because
// the induced eigenvalues have modulus 2^-(depth+1) != 1. A singular slice
// throws InternalError.
Element solve_flow_fixed_point(const LyndonBasis& basis, const Substitution& phi,
                               const Element& c);

// The connector from the triangle's base vertex to the limit point, in B.
Element alpha_exact(int max_depth);

// Partial BCH product BCH(g0/2, sigma(g0/2), ..., sigma^{n-1}(g0/2)) after
// n_steps terms; converges coefficient-wise to alpha_exact.
Element alpha_iterative(int n_steps, int max_depth);

struct Connectors {
  Element alpha;  // a -> x
  Element beta;   // b -> x, = BCH(-g0, alpha) = rotation(alpha)
  Element gamma;  // c -> x, = rotation(beta)
};
Connectors connectors(int max_depth);

// Everything the symmetric model needs, at one truncation.
struct SymmetricTriangleData {
  int depth;
  Algebra b;        // e0, f0
  Algebra ambient;  // a, b, c, e, f, g, h
  CellModelSpec boundary;
  Element e0, f0, g0;  // flattened edges, ambient
  Element alpha_b, beta_b, gamma_b;
  Element alpha, beta, gamma;  // ambient
  Element x;                   // symmetric point u_alpha(a)
  Element q;                   // BCH(-alpha, g, e, f, alpha)
};

SymmetricTriangleData build_symmetric_triangle(int max_depth);

// dh = q - [x,h].
CellModelSpec symmetric_triangle_model(const SymmetricTriangleData& data);

// The flat tetrahedron realisation: corners a,b,c, centre x, outer edges
// e0,f0,g0 and spokes alpha,beta,gamma.
Realisation tetrahedron_realisation(const SymmetricTriangleData& data);

// gamma as a universal Lie word in (alpha, beta): inverts the generator
// change (e0,f0) -> (alpha,beta) degree by degree and re-expresses gamma.
// In the returned element e0 stands for alpha and f0 for beta.
Element universal_word_element(const Algebra& b, const Element& alpha,
                               const Element& beta, const Element& gamma);
Element universal_word_element(int max_depth);

}  // namespace dgla
