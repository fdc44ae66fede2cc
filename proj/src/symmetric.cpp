#include "dgla/symmetric.hpp"

#include "dgla/linalg.hpp"

namespace dgla {

const Algebra& EdgeCycle::algebra() const {
  if (labels.empty()) throw ConfigError("empty edge cycle");
  return labels.front().algebra();
}

Element cycle_bch(const EdgeCycle& cycle) {
  return bch_list(cycle.algebra(), cycle.labels);
}

EdgeCycle flatten_cycle(const EdgeCycle& cycle) {
  const int k = cycle.k();
  if (k < 3) throw ConfigError("flatten_cycle: need at least 3 edges");
  const Algebra& alg = cycle.algebra();
  EdgeCycle out;
  out.labels.reserve(k);
  for (int i = 0; i < k; ++i) {
    std::vector<Element> loop;
    loop.reserve(k);
    for (int j = 0; j < k; ++j) loop.push_back(cycle.labels[(i + j) % k]);
    const Element correction = Rational(-1, k) * bch_list(alg, loop);
    out.labels.push_back(bch(correction, cycle.labels[i]));
  }
  return out;
}

EdgeCycle inscribe_step(const EdgeCycle& cycle) {
  const int k = cycle.k();
  if (k < 3) throw ConfigError("inscribe_step: need at least 3 edges");
  if (!cycle_bch(cycle).is_zero())
    throw DomainError("inscribe_step: cycle is not flat, the inner loop would not close");
  const auto& l = cycle.labels;
  const Rational half(1, 2);
  EdgeCycle out;
  out.labels.reserve(k);
  if (k == 3) {
    out.labels.push_back(bch(half * l[1], half * l[2]));
    out.labels.push_back(bch(half * l[2], half * l[0]));
    out.labels.push_back(bch(half * l[0], half * l[1]));
  } else {
    for (int i = 0; i < k; ++i)
      out.labels.push_back(bch(half * l[i], half * l[(i + 1) % k]));
  }
  return out;
}

Algebra triangle_b_algebra(int max_word_len) {
  return Algebra({{"e0", 0}, {"f0", 0}}, max_word_len);
}

Substitution make_tau(const Algebra& b) {
  const Element e0 = b.gen("e0"), f0 = b.gen("f0");
  const Element g0 = -bch(e0, f0);
  const Rational half(1, 2);
  Substitution tau(b, b);
  tau.define("e0", bch(half * f0, half * g0));
  tau.define("f0", bch(half * g0, half * e0));
  return tau;
}

Substitution make_sigma(const Algebra& b) {
  const Element e0 = b.gen("e0"), f0 = b.gen("f0");
  const Element g0 = -bch(e0, f0);
  const Rational half(1, 2);
  Substitution sigma(b, b);
  sigma.define("e0", bch(half * e0, half * f0));
  sigma.define("f0", bch(half * f0, half * g0));
  return sigma;
}

Substitution b_rotation(const Algebra& b) {
  const Element e0 = b.gen("e0"), f0 = b.gen("f0");
  Substitution rho(b, b);
  rho.define("e0", f0);
  rho.define("f0", -bch(e0, f0));
  return rho;
}

Element solve_flow_fixed_point(const LyndonBasis& basis, const Substitution& phi,
                               const Element& c) {
  const Algebra& b = basis.algebra();
  const Substitution phi0 = phi.linear_part();
  Element alpha = b.zero();
  for (int len = 1; len <= basis.max_len(); ++len) {
    RatMatrix m = slice_matrix(basis, phi0, len);
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= 1;
    const Element rhs_el = bch(c, alpha) - phi.apply(alpha);
    const auto rhs = slice_coordinates(basis, rhs_el, len);
    const auto sol = solve_linear(std::move(m), rhs);
    if (!sol)
      throw InternalError("fixed-point solve: singular slice at depth " +
                          std::to_string(len - 1));
    const auto& ids = basis.ids_of_length(len);
    for (std::size_t j = 0; j < ids.size(); ++j)
      alpha += (*sol)[j] * basis.monomial(ids[j]).expansion;
  }
  if (!(phi.apply(alpha) == bch(c, alpha)))
    throw InternalError("fixed-point solve: residual after full solve");
  return alpha;
}

Element alpha_exact(int max_depth) {
  const Algebra b = triangle_b_algebra(max_depth + 1);
  const LyndonBasis basis(b);
  // sigma(alpha) = BCH(-g0/2, alpha) with g0 = -BCH(e0,f0)
  const Element c = Rational(1, 2) * bch(b.gen("e0"), b.gen("f0"));
  return solve_flow_fixed_point(basis, make_sigma(b), c);
}

Element alpha_iterative(int n_steps, int max_depth) {
  if (n_steps < 1) throw DomainError("alpha_iterative: need at least one step");
  const Algebra b = triangle_b_algebra(max_depth + 1);
  const Substitution sigma = make_sigma(b);
  const Element g0_half = Rational(-1, 2) * bch(b.gen("e0"), b.gen("f0"));
  Element increment = g0_half;
  Element partial = g0_half;
  for (int n = 1; n < n_steps; ++n) {
    increment = sigma.apply(increment);
    partial = bch(partial, increment);
  }
  return partial;
}

Connectors connectors(int max_depth) {
  const Element alpha = alpha_exact(max_depth);
  const Algebra& b = alpha.algebra();
  const Element minus_g0 = bch(b.gen("e0"), b.gen("f0"));
  const Substitution rho = b_rotation(b);
  Connectors out{alpha, bch(minus_g0, alpha), b.zero()};
  out.gamma = rho.apply(out.beta);
  if (!(rho.apply(out.gamma) == out.alpha))
    throw InternalError("connectors: rotation cyclicity fails at this truncation");
  return out;
}

SymmetricTriangleData build_symmetric_triangle(int max_depth) {
  const int max_len = max_depth + 1;
  Algebra ambient = triangle_algebra(max_len);
  CellModelSpec boundary = triangle_boundary_model(ambient);
  const Element e = ambient.gen("e"), f = ambient.gen("f"), g = ambient.gen("g");

  const EdgeCycle flat = flatten_cycle(EdgeCycle{{e, f, g}});
  const Connectors conn = connectors(max_depth);
  const Algebra& b = conn.alpha.algebra();

  Substitution expand(b, ambient);
  expand.define("e0", flat.labels[0]);
  expand.define("f0", flat.labels[1]);

  SymmetricTriangleData data{max_depth,
                             b,
                             ambient,
                             boundary,
                             flat.labels[0],
                             flat.labels[1],
                             flat.labels[2],
                             conn.alpha,
                             conn.beta,
                             conn.gamma,
                             expand.apply(conn.alpha),
                             expand.apply(conn.beta),
                             expand.apply(conn.gamma),
                             ambient.zero(),
                             ambient.zero()};
  data.x = flow_unit(data.alpha, ambient.gen("a"), boundary);
  data.q = bch_list(ambient, {-data.alpha, g, e, f, data.alpha});
  return data;
}

CellModelSpec symmetric_triangle_model(const SymmetricTriangleData& data) {
  auto rules = data.boundary.rules();
  rules["h"] = CellModelSpec::ExplicitRule{
      data.q - bracket(data.x, data.ambient.gen("h"))};
  return CellModelSpec(data.ambient, std::move(rules));
}

Realisation tetrahedron_realisation(const SymmetricTriangleData& data) {
  Realisation r;
  r.graph.vertices = {"a", "b", "c", "x"};
  r.graph.edges = {{"b", "c", "e0"}, {"c", "a", "f0"}, {"a", "b", "g0"},
                   {"a", "x", "alpha"}, {"b", "x", "beta"}, {"c", "x", "gamma"}};
  r.vertex_labels = {{"a", data.ambient.gen("a")},
                     {"b", data.ambient.gen("b")},
                     {"c", data.ambient.gen("c")},
                     {"x", data.x}};
  r.edge_labels = {{"e0", data.e0},   {"f0", data.f0},  {"g0", data.g0},
                   {"alpha", data.alpha}, {"beta", data.beta}, {"gamma", data.gamma}};
  return r;
}

Element universal_word_element(const Algebra& b, const Element& alpha,
                               const Element& beta, const Element& gamma) {
  const LyndonBasis basis(b);
  const Element e0 = b.gen("e0"), f0 = b.gen("f0");

  // Depth-0 parts of alpha, beta must be linearly independent.
  const RatMatrix l{{depth_component(alpha, 0).coeff(e0.terms().begin()->first),
                     depth_component(beta, 0).coeff(e0.terms().begin()->first)},
                    {depth_component(alpha, 0).coeff(f0.terms().begin()->first),
                     depth_component(beta, 0).coeff(f0.terms().begin()->first)}};
  if (l[0][0] * l[1][1] - l[0][1] * l[1][0] == 0)
    throw InternalError("universal word: depth-0 parts of alpha, beta are dependent");

  Substitution psi(b, b);
  psi.define("e0", alpha);
  psi.define("f0", beta);
  const Substitution psi0 = psi.linear_part();

  auto invert_on = [&](const Element& target) {
    Element u = b.zero();
    for (int len = 1; len <= basis.max_len(); ++len) {
      RatMatrix m = slice_matrix(basis, psi0, len);
      const Element rhs_el = target - psi.apply(u);
      const auto rhs = slice_coordinates(basis, rhs_el, len);
      const auto sol = solve_linear(std::move(m), rhs);
      if (!sol) throw InternalError("universal word: singular slice system");
      const auto& ids = basis.ids_of_length(len);
      for (std::size_t j = 0; j < ids.size(); ++j)
        u += (*sol)[j] * basis.monomial(ids[j]).expansion;
    }
    return u;
  };

  Substitution phi(b, b);
  phi.define("e0", invert_on(e0));
  phi.define("f0", invert_on(f0));
  const Element w = phi.apply(gamma);
  if (!(psi.apply(w) == gamma))
    throw InternalError("universal word: round trip through the generator change fails");
  return w;
}

Element universal_word_element(int max_depth) {
  const Connectors conn = connectors(max_depth);
  return universal_word_element(conn.alpha.algebra(), conn.alpha, conn.beta, conn.gamma);
}

}  // namespace dgla
