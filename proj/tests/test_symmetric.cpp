#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dgla/serialize.hpp"
#include "dgla/symmetric.hpp"

using namespace dgla;

namespace {

EdgeCycle triangle_cycle(const Algebra& alg) {
  return EdgeCycle{{alg.gen("e"), alg.gen("f"), alg.gen("g")}};
}

}  // namespace

TEST_CASE("flattening: depth-0 part, loop vanishing, idempotence, flow endpoints") {
  const Algebra alg = triangle_algebra(6);
  const CellModelSpec model = triangle_boundary_model(alg);
  const Element e = alg.gen("e"), f = alg.gen("f"), g = alg.gen("g");
  const EdgeCycle flat = flatten_cycle(triangle_cycle(alg));

  CHECK(depth_component(flat.labels[0], 0) ==
        Rational(1, 3) * (Rational(2) * e - f - g));
  CHECK(cycle_bch(flat).is_zero());

  // flattened edges still flow between the original endpoints (Lemma 3.1)
  CHECK(flow_unit(flat.labels[0], alg.gen("b"), model) == alg.gen("c"));
  CHECK(flow_unit(flat.labels[1], alg.gen("c"), model) == alg.gen("a"));
  CHECK(flow_unit(flat.labels[2], alg.gen("a"), model) == alg.gen("b"));

  // flattening a flat cycle is the identity: the correction term vanishes
  const EdgeCycle again = flatten_cycle(flat);
  for (int i = 0; i < 3; ++i) CHECK(again.labels[i] == flat.labels[i]);

  CHECK_THROWS_AS(flatten_cycle(EdgeCycle{{e, f}}), ConfigError);
}

TEST_CASE("inscribed subdivision preserves flatness and rejects non-flat input") {
  const Algebra alg = triangle_algebra(5);
  const EdgeCycle flat = flatten_cycle(triangle_cycle(alg));
  const EdgeCycle inner = inscribe_step(flat);
  CHECK(cycle_bch(inner).is_zero());
  const EdgeCycle inner2 = inscribe_step(inner);
  CHECK(cycle_bch(inner2).is_zero());
  CHECK_THROWS_AS(inscribe_step(triangle_cycle(alg)), DomainError);
}

TEST_CASE("iterated subdivision in B: depth-0 coordinates scale by (-2)^-n") {
  const int max_len = 4;
  const Algebra b = triangle_b_algebra(max_len);
  const Element e0 = b.gen("e0"), f0 = b.gen("f0");
  const Element g0 = -bch(e0, f0);
  EdgeCycle cycle{{e0, f0, g0}};
  Rational scale(1);
  for (int n = 1; n <= 3; ++n) {
    cycle = inscribe_step(cycle);
    scale /= -2;
    CHECK(depth_component(cycle.labels[0], 0) == scale * e0);
    CHECK(depth_component(cycle.labels[1], 0) == scale * f0);
  }
}

TEST_CASE("tau generates the inscribed edges: tau^n(e0) = e_n") {
  const Algebra b = triangle_b_algebra(5);
  const Substitution tau = make_tau(b);
  const Element e0 = b.gen("e0"), f0 = b.gen("f0");
  EdgeCycle cycle{{e0, f0, -bch(e0, f0)}};
  Element en = e0, fn = f0;
  for (int n = 1; n <= 2; ++n) {
    cycle = inscribe_step(cycle);
    en = tau.apply(en);
    fn = tau.apply(fn);
    CHECK(en == cycle.labels[0]);
    CHECK(fn == cycle.labels[1]);
  }
  // depth-0 matrix of tau is -1/2 times the identity
  CHECK(depth_component(tau.apply(e0), 0) == Rational(-1, 2) * e0);
  CHECK(depth_component(tau.apply(f0), 0) == Rational(-1, 2) * f0);
}

TEST_CASE("sigma is tau composed with the rotation") {
  const Algebra b = triangle_b_algebra(5);
  const Substitution sigma = make_sigma(b);
  const Element e0 = b.gen("e0"), f0 = b.gen("f0");
  const Element g0 = -bch(e0, f0);

  // depth-0 matrix ((1/2, -1/2), (1/2, 0)) acting on (e0, f0) coordinates
  CHECK(depth_component(sigma.apply(e0), 0) == Rational(1, 2) * (e0 + f0));
  CHECK(depth_component(sigma.apply(f0), 0) == Rational(-1, 2) * e0);

  // sigma(e_n) = g_{n+1}, sigma(f_n) = e_{n+1}, sigma(g_n) = f_{n+1}
  EdgeCycle cycle{{e0, f0, g0}};
  const EdgeCycle inner = inscribe_step(cycle);
  CHECK(sigma.apply(e0) == inner.labels[2]);  // g1
  CHECK(sigma.apply(f0) == inner.labels[0]);  // e1
  CHECK(sigma.apply(g0) == inner.labels[1]);  // f1
  const EdgeCycle inner2 = inscribe_step(inner);
  CHECK(sigma.apply(inner.labels[0]) == inner2.labels[2]);
}

TEST_CASE("alpha: published coefficients through depth 2") {
  const Element alpha = alpha_exact(3);
  const Algebra& b = alpha.algebra();
  const Element e0 = b.gen("e0"), f0 = b.gen("f0");
  CHECK(depth_component(alpha, 0) == Rational(-1, 3) * (e0 + Rational(2) * f0));
  CHECK(depth_component(alpha, 1) == Rational(-1, 6) * bracket(e0, f0));
  CHECK(depth_component(alpha, 2) ==
        Rational(-1, 54) * bracket(e0, bracket(e0, f0)) +
            Rational(1, 36) * bracket(f0, bracket(e0, f0)));
}

TEST_CASE("alpha solves the fixed-point equation at every depth") {
  for (int depth : {2, 5}) {
    const Element alpha = alpha_exact(depth);
    const Algebra& b = alpha.algebra();
    const Element c = Rational(1, 2) * bch(b.gen("e0"), b.gen("f0"));
    CHECK(make_sigma(b).apply(alpha) == bch(c, alpha));
  }
}

TEST_CASE("iterative alpha starts at g0/2 and converges to the exact solve") {
  const int depth = 3;
  const Algebra b = triangle_b_algebra(depth + 1);
  const Element g0_half = Rational(-1, 2) * bch(b.gen("e0"), b.gen("f0"));
  CHECK(alpha_iterative(1, depth) == g0_half);
  CHECK_THROWS_AS(alpha_iterative(0, depth), DomainError);

  const Element exact = alpha_exact(depth);
  auto distance = [&](const Element& approx) {
    Rational d(0);
    const Element diff = approx - exact;
    for (const auto& [w, c] : diff.terms()) d += abs(c);
    return d;
  };
  Rational last = distance(alpha_iterative(10, depth));
  for (int n = 11; n <= 30; ++n) {
    const Rational next = distance(alpha_iterative(n, depth));
    CHECK(next < last);
    last = next;
  }
  CHECK(last <= Rational(1, 1 << 20));
}

TEST_CASE("connectors: published depth-0/1/2 values and cyclicity") {
  const Connectors conn = connectors(3);
  const Algebra& b = conn.alpha.algebra();
  const Element e0 = b.gen("e0"), f0 = b.gen("f0");

  CHECK(depth_component(conn.beta, 0) == Rational(1, 3) * (Rational(2) * e0 + f0));
  CHECK(depth_component(conn.beta, 1) == Rational(1, 6) * bracket(e0, f0));
  CHECK(depth_component(conn.beta, 2) ==
        Rational(1, 36) * bracket(e0, bracket(e0, f0)) -
            Rational(1, 54) * bracket(f0, bracket(e0, f0)));

  CHECK(depth_component(conn.gamma, 0) == Rational(1, 3) * (f0 - e0));
  CHECK(depth_component(conn.gamma, 1).is_zero());
  CHECK(depth_component(conn.gamma, 2) ==
        Rational(-1, 108) * bracket(e0 + f0, bracket(e0, f0)));

  const Substitution rho = b_rotation(b);
  CHECK(rho.apply(conn.alpha) == conn.beta);
  CHECK(rho.apply(conn.beta) == conn.gamma);
  CHECK(rho.apply(conn.gamma) == conn.alpha);
}

TEST_CASE("tetrahedron loops close in B") {
  const Connectors conn = connectors(5);
  const Algebra& b = conn.alpha.algebra();
  const Element e0 = b.gen("e0"), f0 = b.gen("f0");
  const Element g0 = -bch(e0, f0);
  CHECK(bch_list(b, {g0, conn.beta, -conn.alpha}).is_zero());
  CHECK(bch_list(b, {e0, conn.gamma, -conn.beta}).is_zero());
  CHECK(bch_list(b, {f0, conn.alpha, -conn.gamma}).is_zero());
}

TEST_CASE("symmetric point: depth 0, Maurer-Cartan, full S3 invariance") {
  const SymmetricTriangleData data = build_symmetric_triangle(3);
  const Algebra& m = data.ambient;
  CHECK(depth_component(data.x, 0) ==
        Rational(1, 3) * (m.gen("a") + m.gen("b") + m.gen("c")));
  CHECK(mc_residual(data.x, data.boundary).is_zero());
  const auto s3 = triangle_s3(m);
  CHECK(s3.size() == 6);
  for (const auto& action : s3) CHECK(action.apply(data.x) == data.x);
}

TEST_CASE("S3 action composes like the group and signs follow orientation") {
  const Algebra m = triangle_algebra(3);
  const auto s3 = triangle_s3(m);
  const Element cyc = bch_list(m, {m.gen("g"), m.gen("e"), m.gen("f")});
  // reflections reverse the loop, rotations fix it up to basepoint: the
  // reflection through a sends BCH(g,e,f) to -BCH(g,e,f)
  CHECK(s3[3].apply(cyc) == -cyc);
  // composing a reflection with itself gives the identity mapping
  CHECK(s3[3].after(s3[3]).same_mapping(s3[0]));
  // the three rotations form a cyclic subgroup
  CHECK(s3[1].after(s3[1]).same_mapping(s3[2]));
  CHECK(s3[1].after(s3[2]).same_mapping(s3[0]));
  // closure: every composition lands in the group
  for (const auto& p : s3)
    for (const auto& q : s3) {
      const auto pq = p.after(q);
      bool found = false;
      for (const auto& r : s3) found = found || pq.same_mapping(r);
      CHECK(found);
    }
}

TEST_CASE("q: boundary term, conjugation form, anti-symmetry, localisation") {
  const SymmetricTriangleData data = build_symmetric_triangle(3);
  const Algebra& m = data.ambient;
  const Element e = m.gen("e"), f = m.gen("f"), g = m.gen("g");

  CHECK(depth_component(data.q, 0) == e + f + g);
  CHECK(data.q == exp_neg_ad(data.alpha, bch_list(m, {g, e, f})));
  CHECK((data.boundary.differential(data.q) + bracket(data.x, data.q)).is_zero());

  const auto s3 = triangle_s3(m);
  CHECK(s3[1].apply(data.q) == data.q);
  CHECK(s3[2].apply(data.q) == data.q);
  CHECK(s3[3].apply(data.q) == -data.q);
  CHECK(s3[4].apply(data.q) == -data.q);
  CHECK(s3[5].apply(data.q) == -data.q);
}

TEST_CASE("the symmetric model satisfies d^2 = 0") {
  const SymmetricTriangleData data = build_symmetric_triangle(3);
  const CellModelSpec model = symmetric_triangle_model(data);
  const DSquaredReport report = verify_d_squared(model);
  CHECK(report.all_zero);
  CHECK(report.entries.size() == 7);
}

TEST_CASE("the flat tetrahedron realisation passes the full check") {
  const SymmetricTriangleData data = build_symmetric_triangle(3);
  const FlatReport report =
      flat_realisation_check(tetrahedron_realisation(data), data.boundary);
  CHECK(report.flat);
  CHECK(report.components == 1);
  CHECK(report.loop_checks.size() == 3);  // 6 edges, 4 vertices
}

TEST_CASE("rotating the symmetric model yields the identical document") {
  const SymmetricTriangleData data = build_symmetric_triangle(3);
  const CellModelSpec model = symmetric_triangle_model(data);
  const auto rot = triangle_s3(data.ambient)[1];
  // rotate every differential and permute the generator assignment
  std::map<std::string, CellModelSpec::Rule> rules;
  for (const auto& [name, rule] : model.rules()) {
    const Element image = rot.apply(data.ambient.gen(name));
    REQUIRE(image.term_count() == 1);
    const auto& [word, coeff] = *image.terms().begin();
    const std::string target = data.ambient.table()[static_cast<unsigned char>(word[0])].name;
    rules[target] = CellModelSpec::ExplicitRule{coeff * rot.apply(model.differential_of(name))};
  }
  const CellModelSpec rotated(data.ambient, std::move(rules));
  CHECK(model_to_json(rotated) == model_to_json(model));
}

TEST_CASE("universal word: depth 0, vanishing depths 1-3, symmetry") {
  const int depth = 5;
  const Connectors conn = connectors(depth);
  const Algebra& b = conn.alpha.algebra();
  const Element w = universal_word_element(b, conn.alpha, conn.beta, conn.gamma);
  const Element e0 = b.gen("e0"), f0 = b.gen("f0");

  CHECK(depth_component(w, 0) == -e0 - f0);
  CHECK(depth_component(w, 1).is_zero());
  CHECK(depth_component(w, 2).is_zero());
  CHECK(depth_component(w, 3).is_zero());

  // f(beta, alpha) = f(alpha, beta): the word is symmetric under the swap
  Substitution swap(b, b);
  swap.define("e0", f0);
  swap.define("f0", e0);
  CHECK(swap.apply(w) == w);

  // f(alpha, f(alpha, beta)) = beta
  Substitution eval(b, b);
  eval.define("e0", conn.alpha);
  eval.define("f0", conn.gamma);
  CHECK(eval.apply(w) == conn.beta);
}

TEST_CASE("universal word: the depth-4 term matches the published expression") {
  const Element w = universal_word_element(4);
  const Algebra& b = w.algebra();
  const Element e0 = b.gen("e0"), f0 = b.gen("f0");
  auto ad_pow = [&](const Element& v, int n, Element t) {
    for (int i = 0; i < n; ++i) t = bracket(v, t);
    return t;
  };
  // 17/(2^2 3^3 5 11) (A^4 b + B^4 a - A^2 B^2 a - B^2 A^2 b + (A B^3 a + B A^3 b)/2)
  Element expr = ad_pow(e0, 4, f0);
  expr += ad_pow(f0, 4, e0);
  expr -= ad_pow(e0, 2, ad_pow(f0, 2, e0));
  expr -= ad_pow(f0, 2, ad_pow(e0, 2, f0));
  expr += Rational(1, 2) * bracket(e0, ad_pow(f0, 3, e0));
  expr += Rational(1, 2) * bracket(f0, ad_pow(e0, 3, f0));
  CHECK(depth_component(w, 4) == Rational(17, 5940) * expr);
}
