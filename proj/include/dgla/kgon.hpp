#pragma once

#include "dgla/linalg.hpp"
#include "dgla/symmetric.hpp"

namespace dgla {

// Depth-0 data of the k-gon subdivision map on the k-1 free edge generators
// (for k = 3 this is the triangle's sigma). The unit-disc claim is checked
// exactly via Schur-Cohn on the characteristic polynomial; no floating point.
struct KgonSpectrum {
  int k = 0;
  RatMatrix matrix;                 // column j = image of generator j
  std::vector<Rational> poly;      // characteristic polynomial, ascending
  bool contracting = false;        // all roots strictly inside the unit disc
  std::string note;                // records the k=4 sign discrepancy
};

KgonSpectrum kgon_linear_part(int k);

// Flattened cycle, connectors and symmetric point of the k-gon, built by the
// same pipeline as the triangle: flatten with coefficient -1/k, solve the
// first connector as a fixed point of the inscribed substitution, rotate for
// the rest, then flow the first vertex to the centre. k = 3 is routed
// through the triangle-specialized construction.
struct KgonData {
  int k = 0;
  int depth = 0;
  Algebra b;        // free on the first k-1 flattened edges
  Algebra ambient;  // vertices and edges (triangle naming for k = 3)
  CellModelSpec boundary;
  std::vector<Element> flat_cycle;    // ambient flattened edge labels
  std::vector<Element> connectors_b;  // k connectors in B
  std::vector<Element> connectors;    // ambient, connector i runs vertex i -> x
  Element x;
  KgonSpectrum spectrum;
};

KgonData kgon_symmetric_data(int k, int max_depth);

// v1..vk (grading -1), l1..lk (grading 0), edge li: vi -> vi+1.
Algebra kgon_algebra(int k, int max_word_len);
CellModelSpec kgon_boundary_model(const Algebra& alg, int k);

// The inscribed substitution on B for k >= 4: l_i -> BCH(l_i/2, l_{i+1}/2)
// with l_k = -BCH(l_1, ..., l_{k-1}); and the rotation l_i -> l_{i+1}.
Substitution kgon_tau(const Algebra& b, int k);
Substitution kgon_b_rotation(const Algebra& b, int k);

// The wheel realisation (boundary plus spokes to the centre).
Realisation kgon_wheel_realisation(const KgonData& data);

}  // namespace dgla
