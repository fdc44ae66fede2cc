#include "dgla/frontend.hpp"

#include <ostream>
#include <sstream>

#include "dgla/serialize.hpp"

namespace dgla {

namespace {

std::string residual_summary(const Element& residual) {
  if (residual.is_zero()) return "";
  std::ostringstream out;
  out << "residual ";
  int shown = 0;
  for (const auto& [w, c] : residual.terms()) {
    if (shown == 3) {
      out << " + (" << residual.term_count() - 3 << " more)";
      break;
    }
    if (shown) out << " + ";
    out << to_fraction_string(c) << "*" << residual.algebra().word_name(w);
    ++shown;
  }
  return out.str();
}

struct Suite {
  std::vector<CheckResult> results;
  int depth;

  void zero(const std::string& name, const Element& residual) {
    CheckResult r;
    r.name = name;
    r.pass = residual.is_zero();
    r.checked_depth = depth;
    r.first_failure_depth = first_nonzero_depth(residual);
    r.detail = residual_summary(residual);
    results.push_back(std::move(r));
  }

  void equal(const std::string& name, const Element& got, const Element& expected) {
    zero(name, got - expected);
  }

  void boolean(const std::string& name, bool ok, std::string detail = "") {
    results.push_back({name, ok, depth, std::nullopt, std::move(detail)});
  }
};

void apply_corruption(SymmetricTriangleData& data, const std::string& corrupt) {
  if (corrupt.empty()) return;
  const Rational eps(1, 7);
  if (corrupt == "alpha" || corrupt == "beta" || corrupt == "gamma") {
    Element* target = corrupt == "alpha" ? &data.alpha_b
                      : corrupt == "beta" ? &data.beta_b
                                          : &data.gamma_b;
    *target += eps * bracket(data.b.gen("e0"), data.b.gen("f0"));
  } else if (corrupt == "x") {
    data.x += eps * data.ambient.gen("a");
  } else if (corrupt == "q") {
    data.q += eps * data.ambient.gen("e");
  } else {
    throw ConfigError("unknown corruption target '" + corrupt + "'");
  }
}

}  // namespace

std::vector<CheckResult> verify_triangle_suite(int depth, unsigned seed,
                                               const std::string& corrupt) {
  SymmetricTriangleData data = build_symmetric_triangle(depth);
  return verify_triangle_suite(data, seed, corrupt);
}

std::vector<CheckResult> verify_triangle_suite(SymmetricTriangleData& data, unsigned seed,
                                               const std::string& corrupt) {
  apply_corruption(data, corrupt);
  const int depth = data.depth;

  Suite suite;
  suite.depth = depth;
  const Algebra& m = data.ambient;
  const CellModelSpec& boundary = data.boundary;
  const Element e = m.gen("e"), f = m.gen("f"), g = m.gen("g");

  // Lemma 3.2 flatness and Lemma 3.1 flow of the flattened boundary.
  suite.zero("flatten.loop_bch", bch_list(m, {data.e0, data.f0, data.g0}));
  suite.equal("flatten.flow_e0_b_to_c", flow_unit(data.e0, m.gen("b"), boundary), m.gen("c"));

  // Subdivision preserves flatness.
  suite.zero("inscribe.inner_loop_bch",
             cycle_bch(inscribe_step(EdgeCycle{{data.e0, data.f0, data.g0}})));

  // sigma(alpha) = BCH(-g0/2, alpha) in B.
  const Element c_el = Rational(1, 2) * bch(data.b.gen("e0"), data.b.gen("f0"));
  suite.equal("fixed_point.sigma_alpha", make_sigma(data.b).apply(data.alpha_b),
              bch(c_el, data.alpha_b));

  // beta = rotation(alpha), gamma = rotation(beta), rotation(gamma) = alpha.
  const Substitution rho = b_rotation(data.b);
  suite.equal("connectors.rotation_alpha_beta", rho.apply(data.alpha_b), data.beta_b);
  suite.equal("connectors.rotation_cyclicity", rho.apply(data.gamma_b), data.alpha_b);

  // Tetrahedron face loops in B: BCH(g0, beta, -alpha) = 0 and rotations.
  const Element g0_b = -bch(data.b.gen("e0"), data.b.gen("f0"));
  suite.zero("tetrahedron.loop_at_a",
             bch_list(data.b, {g0_b, data.beta_b, -data.alpha_b}));
  suite.zero("tetrahedron.loop_at_b",
             bch_list(data.b, {data.b.gen("e0"), data.gamma_b, -data.beta_b}));
  suite.zero("tetrahedron.loop_at_c",
             bch_list(data.b, {data.b.gen("f0"), data.alpha_b, -data.gamma_b}));

  // The ambient tetrahedron realisation is flat (edge flows and loop BCHs).
  {
    const FlatReport report = flat_realisation_check(tetrahedron_realisation(data), boundary);
    for (const auto& ec : report.edge_checks)
      suite.boolean("tetrahedron.edge_flow." + ec.edge, ec.flows);
    for (const auto& lc : report.loop_checks) {
      CheckResult r{"tetrahedron.loop_bch." + lc.via_edge, lc.zero, depth,
                    lc.first_nonzero_depth, ""};
      suite.results.push_back(std::move(r));
    }
  }

  // The symmetric point.
  suite.zero("point.maurer_cartan", mc_residual(data.x, boundary));
  for (const auto& action : triangle_s3(m))
    suite.equal("point.s3_invariance." + action.name(), action.apply(data.x), data.x);

  // q: boundary term, conjugation form, anti-symmetry, localisation at x.
  suite.equal("q.depth0", depth_component(data.q, 0), e + f + g);
  suite.equal("q.conjugation_form", data.q, exp_neg_ad(data.alpha, bch_list(m, {g, e, f})));
  {
    const auto s3 = triangle_s3(m);
    suite.equal("q.rotation", s3[1].apply(data.q), data.q);
    suite.equal("q.rotation2", s3[2].apply(data.q), data.q);
    suite.equal("q.reflection_a", s3[3].apply(data.q), -data.q);
    suite.equal("q.reflection_b", s3[4].apply(data.q), -data.q);
    suite.equal("q.reflection_c", s3[5].apply(data.q), -data.q);
  }
  suite.zero("q.localised_at_x", boundary.differential(data.q) + bracket(data.x, data.q));

  // d^2 = 0 for the symmetric model.
  {
    const DSquaredReport report = verify_d_squared(symmetric_triangle_model(data));
    for (const auto& entry : report.entries) {
      CheckResult r{"model.d_squared." + entry.generator, entry.zero, entry.checked_depth,
                    entry.first_nonzero_depth, ""};
      suite.results.push_back(std::move(r));
    }
  }

  auto random_checks = random_property_suite(depth, seed, 10);
  suite.results.insert(suite.results.end(), random_checks.begin(), random_checks.end());
  return suite.results;
}

std::vector<CheckResult> verify_kgon_suite(int k, int depth, unsigned seed) {
  const KgonData data = kgon_symmetric_data(k, depth);
  Suite suite;
  suite.depth = depth;

  suite.boolean("spectrum.contracting", data.spectrum.contracting,
                polynomial_to_string(data.spectrum.poly));
  if (!data.spectrum.note.empty())
    suite.boolean("spectrum.note", true, data.spectrum.note);

  suite.zero("flatten.loop_bch", bch_list(data.ambient, data.flat_cycle));
  suite.zero("inscribe.inner_loop_bch", cycle_bch(inscribe_step(EdgeCycle{data.flat_cycle})));

  // Fixed point of the first connector.
  if (k == 3) {
    const Element c_el = Rational(1, 2) * bch(data.b.gen("e0"), data.b.gen("f0"));
    suite.equal("fixed_point.connector", make_sigma(data.b).apply(data.connectors_b[0]),
                bch(c_el, data.connectors_b[0]));
  } else {
    const Element c_el = Rational(-1, 2) * data.b.gen("l1");
    suite.equal("fixed_point.connector", kgon_tau(data.b, k).apply(data.connectors_b[0]),
                bch(c_el, data.connectors_b[0]));
  }

  // Wheel realisation: edge flows plus loop BCHs.
  {
    const FlatReport report = flat_realisation_check(kgon_wheel_realisation(data), data.boundary);
    for (const auto& ec : report.edge_checks)
      suite.boolean("wheel.edge_flow." + ec.edge, ec.flows);
    for (const auto& lc : report.loop_checks) {
      CheckResult r{"wheel.loop_bch." + lc.via_edge, lc.zero, depth, lc.first_nonzero_depth, ""};
      suite.results.push_back(std::move(r));
    }
  }

  suite.zero("point.maurer_cartan", mc_residual(data.x, data.boundary));
  if (k == 3) {
    for (const auto& action : triangle_s3(data.ambient))
      suite.equal("point.symmetry." + action.name(), action.apply(data.x), data.x);
  } else {
    const auto rot = kgon_rotation(data.ambient, k);
    const auto refl = kgon_reflection(data.ambient, k);
    suite.equal("point.symmetry.rotation", rot.apply(data.x), data.x);
    suite.equal("point.symmetry.reflection", refl.apply(data.x), data.x);
  }

  (void)seed;
  return suite.results;
}

Element random_homogeneous_element(std::mt19937& rng, const Algebra& alg, int grading,
                                   int max_terms, int max_word_len,
                                   const std::vector<std::string>& letters) {
  std::uniform_int_distribution<int> n_terms(1, max_terms);
  std::uniform_int_distribution<int> word_len(1, max_word_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  Element out(alg);
  const int want = n_terms(rng);
  for (int t = 0; t < want; ++t) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      const int len = word_len(rng);
      Word w;
      for (int i = 0; i < len; ++i)
        w.push_back(static_cast<char>(alg.table().index_of(letters[pick(rng)])));
      if (alg.grading_of(w) != grading) continue;
      int n = num(rng);
      if (n == 0) n = 1;
      out.add_term(w, Rational(n, den(rng)));
      break;
    }
  }
  return out;
}

Element random_lie_element(std::mt19937& rng, const LyndonBasis& basis, int max_terms) {
  std::uniform_int_distribution<int> n_terms(1, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  Element out(basis.algebra());
  const int want = n_terms(rng);
  for (int t = 0; t < want; ++t) {
    int n = num(rng);
    if (n == 0) n = 1;
    out += Rational(n, den(rng)) * basis.monomial(static_cast<int>(pick(rng))).expansion;
  }
  return out;
}

std::vector<CheckResult> random_property_suite(int depth, unsigned seed, int instances) {
  std::mt19937 rng(seed);
  const Algebra alg = triangle_algebra(depth + 1);
  const CellModelSpec boundary = triangle_boundary_model(alg);
  const std::vector<std::string> all{"a", "b", "c", "e", "f", "g"};
  const std::vector<std::string> edges{"e", "f", "g"};

  Suite suite;
  suite.depth = depth;
  bool jacobi_ok = true, assoc_ok = true, flow_ok = true, mc_ok = true;
  std::string jacobi_detail, assoc_detail, flow_detail, mc_detail;

  for (int i = 0; i < instances; ++i) {
    // graded Jacobi via the adjoint identity on homogeneous x, y
    std::uniform_int_distribution<int> grading_pick(-1, 1);
    const int gx = grading_pick(rng), gy = grading_pick(rng);
    const Element x = random_homogeneous_element(rng, alg, gx, 2, 2, all);
    const Element y = random_homogeneous_element(rng, alg, gy, 2, 2, all);
    const Element z = random_homogeneous_element(rng, alg, grading_pick(rng), 2, 2, all);
    const Element lhs = bracket(bracket(x, y), z);
    Element rhs = bracket(x, bracket(y, z));
    const Element yxz = bracket(y, bracket(x, z));
    rhs += ((gx * gy) % 2 != 0) ? yxz : -yxz;
    if (jacobi_ok && !(lhs == rhs)) {
      jacobi_ok = false;
      jacobi_detail = "instance " + std::to_string(i);
    }

    // BCH associativity
    const Element u = random_homogeneous_element(rng, alg, 0, 3, 2, edges);
    const Element v = random_homogeneous_element(rng, alg, 0, 3, 2, edges);
    const Element w = random_homogeneous_element(rng, alg, 0, 3, 2, edges);
    if (assoc_ok && !(bch(bch(u, v), w) == bch(u, bch(v, w)))) {
      assoc_ok = false;
      assoc_detail = "instance " + std::to_string(i);
    }

    // u_f . u_e = u_BCH(e,f) on a point and on a grading-0 element
    const Element a = alg.gen("a");
    const Element composed = flow_unit(v, flow_unit(u, a, boundary), boundary);
    const Element direct = flow_unit(bch(u, v), a, boundary);
    const Element w_flowed = flow_unit(v, flow_unit(u, w, boundary), boundary);
    const Element w_direct = flow_unit(bch(u, v), w, boundary);
    if (flow_ok && !(composed == direct && w_flowed == w_direct)) {
      flow_ok = false;
      flow_detail = "instance " + std::to_string(i);
    }

    // flows preserve Maurer-Cartan
    if (mc_ok && !mc_residual(flow_unit(u, a, boundary), boundary).is_zero()) {
      mc_ok = false;
      mc_detail = "instance " + std::to_string(i);
    }
  }

  const std::string n = std::to_string(instances);
  suite.boolean("random.graded_jacobi[" + n + "]", jacobi_ok, jacobi_detail);
  suite.boolean("random.bch_associativity[" + n + "]", assoc_ok, assoc_detail);
  suite.boolean("random.flow_composition[" + n + "]", flow_ok, flow_detail);
  suite.boolean("random.mc_preserved_by_flows[" + n + "]", mc_ok, mc_detail);
  return suite.results;
}

namespace {

Json checks_to_json(const std::vector<CheckResult>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json entry{{"name", c.name}, {"pass", c.pass}, {"checked_depth", c.checked_depth}};
    entry["first_failure_depth"] =
        c.first_failure_depth ? Json(*c.first_failure_depth) : Json(nullptr);
    if (!c.detail.empty()) entry["detail"] = c.detail;
    arr.push_back(std::move(entry));
  }
  return arr;
}

void print_checks_text(const std::vector<CheckResult>& checks, std::ostream& out) {
  for (const auto& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.pass && c.first_failure_depth)
      out << "  (first failure at depth " << *c.first_failure_depth << ")";
    if (!c.pass && !c.detail.empty()) out << "  " << c.detail;
    if (c.pass && c.name == "spectrum.contracting") out << "  " << c.detail;
    out << "\n";
  }
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json coordinates_json(const LyndonBasis& basis, const Element& x) {
  Json out = Json::object();
  for (const auto& coord : basis.coordinates(x)) {
    auto [display, value] = basis.display_coordinate(coord);
    out[display] = to_fraction_string(value);
  }
  return out;
}

void coordinates_text(const LyndonBasis& basis, const Element& x, std::ostream& out) {
  for (const auto& coord : basis.coordinates(x)) {
    auto [display, value] = basis.display_coordinate(coord);
    const int depth = static_cast<int>(basis.monomial(coord.id).word.size()) - 1;
    out << "  depth " << depth << "  ";
    out.width(32);
    out.setf(std::ios::left, std::ios::adjustfield);
    out << display;
    out.width(0);
    out << to_fraction_string(value) << "\n";
  }
}

// Re-tags the universal word so its letters print as alpha, beta.
Element retag_universal(const Element& w) {
  Algebra ab({{"alpha", 0}, {"beta", 0}}, w.algebra().max_word_len());
  Substitution retag(w.algebra(), ab);
  retag.define("e0", ab.gen("alpha"));
  retag.define("f0", ab.gen("beta"));
  return retag.apply(w);
}

}  // namespace

int run_coefficients(const RunConfig& config, std::ostream& out) {
  if (config.shape != RunConfig::Shape::triangle)
    throw ConfigError("coefficients: only the triangle shape is supported");
  const Connectors conn = connectors(config.depth);
  const LyndonBasis basis(conn.alpha.algebra());

  std::optional<Element> universal;
  std::optional<LyndonBasis> universal_basis;
  if (config.universal) {
    universal = retag_universal(universal_word_element(
        conn.alpha.algebra(), conn.alpha, conn.beta, conn.gamma));
    universal_basis.emplace(universal->algebra());
  }

  if (config.output == RunConfig::Output::json) {
    Json doc{{"command", "coefficients"}, {"shape", "triangle"}, {"depth", config.depth}};
    doc["alpha"] = coordinates_json(basis, conn.alpha);
    doc["beta"] = coordinates_json(basis, conn.beta);
    doc["gamma"] = coordinates_json(basis, conn.gamma);
    if (universal) doc["universal_word"] = coordinates_json(*universal_basis, *universal);
    out << doc.dump(2) << "\n";
  } else {
    out << "triangle connector coefficients through depth " << config.depth << "\n";
    out << "alpha:\n";
    coordinates_text(basis, conn.alpha, out);
    out << "beta:\n";
    coordinates_text(basis, conn.beta, out);
    out << "gamma:\n";
    coordinates_text(basis, conn.gamma, out);
    if (universal) {
      out << "gamma as a Lie word in (alpha, beta):\n";
      coordinates_text(*universal_basis, *universal, out);
    }
  }
  return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  std::vector<CheckResult> checks;
  std::optional<SymmetricTriangleData> tri;
  if (config.shape == RunConfig::Shape::triangle) {
    tri.emplace(build_symmetric_triangle(config.depth));
    checks = verify_triangle_suite(*tri, config.seed, config.corrupt);
  } else {
    if (!config.corrupt.empty())
      throw ConfigError("verify: --corrupt is only supported for the triangle");
    checks = verify_kgon_suite(config.k, config.depth, config.seed);
  }
  const bool ok = all_pass(checks);

  if (config.output == RunConfig::Output::json) {
    Json doc{{"command", "verify"},
             {"shape", config.shape == RunConfig::Shape::triangle ? "triangle" : "kgon"},
             {"depth", config.depth},
             {"seed", config.seed}};
    if (config.shape == RunConfig::Shape::kgon) {
      doc["k"] = config.k;
      const KgonSpectrum spectrum = kgon_linear_part(config.k);
      Json spec_doc{{"characteristic_polynomial", polynomial_to_string(spectrum.poly)},
                    {"contracting", spectrum.contracting}};
      Json coeffs = Json::array();
      for (const auto& c : spectrum.poly) coeffs.push_back(to_fraction_string(c));
      spec_doc["coefficients_ascending"] = std::move(coeffs);
      if (!spectrum.note.empty()) spec_doc["note"] = spectrum.note;
      doc["spectrum"] = std::move(spec_doc);
    } else {
      const SymmetricTriangleData& data = *tri;
      Json elements = Json::object();
      elements["e0"] = element_to_json(data.e0);
      elements["f0"] = element_to_json(data.f0);
      elements["g0"] = element_to_json(data.g0);
      elements["alpha"] = element_to_json(data.alpha);
      elements["beta"] = element_to_json(data.beta);
      elements["gamma"] = element_to_json(data.gamma);
      elements["x"] = element_to_json(data.x);
      elements["q"] = element_to_json(data.q);
      doc["elements"] = std::move(elements);
    }
    doc["certificates"] = checks_to_json(checks);
    doc["pass"] = ok;
    out << doc.dump(2) << "\n";
  } else {
    print_checks_text(checks, out);
    out << (ok ? "all checks passed" : "CHECKS FAILED") << " (depth " << config.depth << ")\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int run_model(const RunConfig& config, std::ostream& out) {
  Json doc;
  if (!config.based.empty()) {
    const CellModelSpec model = based_triangle_model(config.based, config.depth + 1);
    doc = model_to_json(model);
    doc["variant"] = "based_" + config.based;
  } else {
    const SymmetricTriangleData data = build_symmetric_triangle(config.depth);
    doc = model_to_json(symmetric_triangle_model(data));
    doc["variant"] = "symmetric";
  }
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int run_kgon_spectrum(const RunConfig& config, std::ostream& out) {
  const KgonSpectrum spectrum = kgon_linear_part(config.k);
  if (config.output == RunConfig::Output::json) {
    Json doc{{"command", "kgon-spectrum"}, {"k", spectrum.k}};
    Json rows = Json::array();
    for (const auto& row : spectrum.matrix) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(to_fraction_string(v));
      rows.push_back(std::move(r));
    }
    doc["matrix"] = std::move(rows);
    Json coeffs = Json::array();
    for (const auto& c : spectrum.poly) coeffs.push_back(to_fraction_string(c));
    doc["characteristic_polynomial"] = polynomial_to_string(spectrum.poly);
    doc["coefficients_ascending"] = std::move(coeffs);
    doc["contracting"] = spectrum.contracting;
    if (!spectrum.note.empty()) doc["note"] = spectrum.note;
    out << doc.dump(2) << "\n";
  } else {
    out << "k = " << spectrum.k << " depth-0 subdivision matrix:\n";
    for (const auto& row : spectrum.matrix) {
      out << " ";
      for (const auto& v : row) {
        out.width(8);
        out << to_fraction_string(v);
      }
      out << "\n";
    }
    out << "characteristic polynomial: " << polynomial_to_string(spectrum.poly) << "\n";
    out << "all roots strictly inside the unit disc: "
        << (spectrum.contracting ? "yes" : "NO") << "\n";
    if (!spectrum.note.empty()) out << "note: " << spectrum.note << "\n";
  }
  return spectrum.contracting ? kExitOk : kExitCheckFailed;
}

}  // namespace dgla
