#include "dgla/kgon.hpp"

namespace dgla {

namespace {

std::string lname(int i) { return "l" + std::to_string(i); }
std::string vname(int i) { return "v" + std::to_string(i); }

Algebra kgon_b_algebra(int k, int max_word_len) {
  std::vector<Generator> gens;
  for (int i = 1; i < k; ++i) gens.push_back({lname(i), 0});
  return Algebra(std::move(gens), max_word_len);
}

Element kgon_last_edge(const Algebra& b, int k) {
  std::vector<Element> firsts;
  for (int i = 1; i < k; ++i) firsts.push_back(b.gen(lname(i)));
  return -bch_list(b, firsts);
}

}  // namespace

KgonSpectrum kgon_linear_part(int k) {
  if (k < 3) throw ConfigError("kgon_linear_part: k must be at least 3");
  KgonSpectrum s;
  s.k = k;
  if (k == 3) {
    // the triangle's sigma at depth 0: e0 -> (e0+f0)/2, f0 -> -e0/2
    s.matrix = {{Rational(1, 2), Rational(-1, 2)}, {Rational(1, 2), Rational(0)}};
  } else {
    // l_i -> (l_i + l_{i+1})/2, with l_k = -(l_1 + ... + l_{k-1})
    const int n = k - 1;
    s.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int j = 0; j < n; ++j) {
      s.matrix[j][j] += Rational(1, 2);
      if (j + 1 < n) {
        s.matrix[j + 1][j] += Rational(1, 2);
      } else {
        for (int i = 0; i < n; ++i) s.matrix[i][j] -= Rational(1, 2);
      }
    }
  }
  s.poly = char_poly(s.matrix);
  s.contracting = roots_in_open_unit_disc(s.poly);
  if (k == 4)
    s.note =
        "exact characteristic polynomial x*(x^2 - x + 1/2), nonzero roots (1 +/- i)/2; "
        "the published eigenvalues (-1 +/- i)/2 differ in sign, moduli agree (1/sqrt(2))";
  return s;
}

Algebra kgon_algebra(int k, int max_word_len) {
  std::vector<Generator> gens;
  for (int i = 1; i <= k; ++i) gens.push_back({vname(i), -1});
  for (int i = 1; i <= k; ++i) gens.push_back({lname(i), 0});
  return Algebra(std::move(gens), max_word_len);
}

CellModelSpec kgon_boundary_model(const Algebra& alg, int k) {
  std::map<std::string, CellModelSpec::Rule> rules;
  for (int i = 1; i <= k; ++i) {
    rules[vname(i)] = CellModelSpec::VertexRule{};
    rules[lname(i)] = CellModelSpec::EdgeRule{vname(i), vname(i % k + 1)};
  }
  return CellModelSpec(alg, std::move(rules));
}

Substitution kgon_tau(const Algebra& b, int k) {
  const Element last = kgon_last_edge(b, k);
  const Rational half(1, 2);
  Substitution tau(b, b);
  for (int i = 1; i < k; ++i) {
    const Element next = (i + 1 < k) ? b.gen(lname(i + 1)) : last;
    tau.define(lname(i), bch(half * b.gen(lname(i)), half * next));
  }
  return tau;
}

Substitution kgon_b_rotation(const Algebra& b, int k) {
  const Element last = kgon_last_edge(b, k);
  Substitution rho(b, b);
  for (int i = 1; i < k; ++i)
    rho.define(lname(i), (i + 1 < k) ? b.gen(lname(i + 1)) : last);
  return rho;
}

KgonData kgon_symmetric_data(int k, int max_depth) {
  if (k < 3) throw ConfigError("kgon_symmetric_data: k must be at least 3");
  KgonSpectrum spectrum = kgon_linear_part(k);
  if (!spectrum.contracting)
    throw DomainError("kgon_symmetric_data: subdivision map does not contract at depth 0");

  if (k == 3) {
    SymmetricTriangleData tri = build_symmetric_triangle(max_depth);
    KgonData data{3,
                  max_depth,
                  tri.b,
                  tri.ambient,
                  tri.boundary,
                  {tri.e0, tri.f0, tri.g0},
                  {tri.alpha_b, tri.beta_b, tri.gamma_b},
                  {tri.alpha, tri.beta, tri.gamma},
                  tri.x,
                  std::move(spectrum)};
    return data;
  }

  const int max_len = max_depth + 1;
  Algebra ambient = kgon_algebra(k, max_len);
  CellModelSpec boundary = kgon_boundary_model(ambient, k);

  EdgeCycle cycle;
  for (int i = 1; i <= k; ++i) cycle.labels.push_back(ambient.gen(lname(i)));
  const EdgeCycle flat = flatten_cycle(cycle);

  Algebra b = kgon_b_algebra(k, max_len);
  const LyndonBasis basis(b);
  // tau(alpha) = BCH(-l1/2, alpha)
  const Element c = Rational(-1, 2) * b.gen(lname(1));
  Element alpha = solve_flow_fixed_point(basis, kgon_tau(b, k), c);

  const Substitution rho = kgon_b_rotation(b, k);
  std::vector<Element> connectors_b{alpha};
  for (int i = 1; i < k; ++i) connectors_b.push_back(rho.apply(connectors_b.back()));
  if (!(rho.apply(connectors_b.back()) == alpha))
    throw InternalError("kgon connectors: rotation cyclicity fails at this truncation");

  Substitution expand(b, ambient);
  for (int i = 1; i < k; ++i) expand.define(lname(i), flat.labels[i - 1]);
  std::vector<Element> conn_ambient;
  for (const Element& cb : connectors_b) conn_ambient.push_back(expand.apply(cb));

  KgonData data{k,
                max_depth,
                b,
                ambient,
                boundary,
                flat.labels,
                std::move(connectors_b),
                std::move(conn_ambient),
                ambient.zero(),
                std::move(spectrum)};
  data.x = flow_unit(data.connectors[0], ambient.gen(vname(1)), boundary);
  return data;
}

Realisation kgon_wheel_realisation(const KgonData& data) {
  if (data.k == 3) {
    // triangle naming
    Realisation r;
    r.graph.vertices = {"a", "b", "c", "x"};
    r.graph.edges = {{"b", "c", "e0"}, {"c", "a", "f0"}, {"a", "b", "g0"},
                     {"a", "x", "s1"}, {"b", "x", "s2"}, {"c", "x", "s3"}};
    r.vertex_labels = {{"a", data.ambient.gen("a")},
                       {"b", data.ambient.gen("b")},
                       {"c", data.ambient.gen("c")},
                       {"x", data.x}};
    r.edge_labels = {{"e0", data.flat_cycle[0]}, {"f0", data.flat_cycle[1]},
                     {"g0", data.flat_cycle[2]}, {"s1", data.connectors[0]},
                     {"s2", data.connectors[1]}, {"s3", data.connectors[2]}};
    return r;
  }
  Realisation r;
  r.graph.vertices.reserve(data.k + 1);
  for (int i = 1; i <= data.k; ++i) r.graph.vertices.push_back(vname(i));
  r.graph.vertices.push_back("x");
  for (int i = 1; i <= data.k; ++i) {
    r.graph.edges.push_back({vname(i), vname(i % data.k + 1), lname(i) + "_0"});
    r.graph.edges.push_back({vname(i), "x", "s" + std::to_string(i)});
    r.edge_labels.emplace(lname(i) + "_0", data.flat_cycle[i - 1]);
    r.edge_labels.emplace("s" + std::to_string(i), data.connectors[i - 1]);
    r.vertex_labels.emplace(vname(i), data.ambient.gen(vname(i)));
  }
  r.vertex_labels.emplace("x", data.x);
  return r;
}

}  // namespace dgla
