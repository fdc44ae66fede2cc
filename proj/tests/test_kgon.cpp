#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dgla/kgon.hpp"

using namespace dgla;

namespace {

// Independent oracle: characteristic polynomial of a 3x3 matrix by direct
// cofactor expansion of det(xI - M).
std::vector<Rational> char_poly_3x3(const RatMatrix& m) {
  const Rational tr = m[0][0] + m[1][1] + m[2][2];
  const Rational minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] +
                          m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                          m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return {-det, minors, -tr, Rational(1)};
}

}  // namespace

TEST_CASE("unit-disc test on known polynomials") {
  // z - 1/2: root 1/2 inside
  CHECK(roots_in_open_unit_disc({Rational(-1, 2), Rational(1)}));
  // z - 2: root outside
  CHECK_FALSE(roots_in_open_unit_disc({Rational(-2), Rational(1)}));
  // z^2 + 1: roots on the circle
  CHECK_FALSE(roots_in_open_unit_disc({Rational(1), Rational(0), Rational(1)}));
  // z(z - 1/2): zero root plus interior root
  CHECK(roots_in_open_unit_disc({Rational(0), Rational(-1, 2), Rational(1)}));
  // z^2 - 1/2 z + 1/4: moduli exactly 1/2
  CHECK(roots_in_open_unit_disc({Rational(1, 4), Rational(-1, 2), Rational(1)}));
  // (z - 1/2)(z - 2) = z^2 - 5/2 z + 1: one root outside
  CHECK_FALSE(roots_in_open_unit_disc({Rational(1), Rational(-5, 2), Rational(1)}));
}

TEST_CASE("k = 3 spectrum: sigma's depth-0 matrix and its polynomial") {
  const KgonSpectrum s = kgon_linear_part(3);
  CHECK(s.matrix ==
        RatMatrix{{Rational(1, 2), Rational(-1, 2)}, {Rational(1, 2), Rational(0)}});
  CHECK(s.poly == std::vector<Rational>{Rational(1, 4), Rational(-1, 2), Rational(1)});
  CHECK(s.contracting);
  // complex pair with |root|^2 = constant term = 1/4, so moduli exactly 1/2
  const Rational disc = s.poly[1] * s.poly[1] - Rational(4) * s.poly[0] * s.poly[2];
  CHECK(disc < 0);
  CHECK(s.poly[0] == Rational(1, 4));
}

TEST_CASE("k = 4 spectrum: map, exact polynomial, contraction, recorded note") {
  const KgonSpectrum s = kgon_linear_part(4);
  // columns are the images e -> (e+f)/2, f -> (f+g)/2, g -> -(e+f)/2
  const RatMatrix expected{{Rational(1, 2), Rational(0), Rational(-1, 2)},
                           {Rational(1, 2), Rational(1, 2), Rational(-1, 2)},
                           {Rational(0), Rational(1, 2), Rational(0)}};
  CHECK(s.matrix == expected);
  CHECK(s.poly == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(-1), Rational(1)});
  CHECK(s.poly == char_poly_3x3(expected));
  CHECK(s.contracting);
  CHECK_FALSE(s.note.empty());
  // nonzero quadratic factor z^2 - z + 1/2: complex pair, |root|^2 = 1/2 < 1
  const Rational disc = Rational(1) - Rational(4) * Rational(1, 2);
  CHECK(disc < 0);
}

TEST_CASE("k = 5 and k = 6 subdivision maps contract") {
  for (int k : {5, 6}) {
    const KgonSpectrum s = kgon_linear_part(k);
    CHECK(static_cast<int>(s.matrix.size()) == k - 1);
    CHECK(s.contracting);
  }
}

TEST_CASE("k < 3 is rejected") {
  CHECK_THROWS_AS(kgon_linear_part(2), ConfigError);
  CHECK_THROWS_AS(kgon_symmetric_data(2, 3), ConfigError);
}

TEST_CASE("k = 3 data reproduces the triangle construction") {
  const KgonData data = kgon_symmetric_data(3, 3);
  const SymmetricTriangleData tri = build_symmetric_triangle(3);
  CHECK(data.flat_cycle[0] == tri.e0);
  CHECK(data.flat_cycle[2] == tri.g0);
  CHECK(data.connectors[0] == tri.alpha);
  CHECK(data.connectors[2] == tri.gamma);
  CHECK(data.x == tri.x);
}

TEST_CASE("k = 4 symmetric data: flatness, fixed point, point symmetry") {
  const int depth = 3;
  const KgonData data = kgon_symmetric_data(4, depth);
  const Algebra& m = data.ambient;

  CHECK(bch_list(m, data.flat_cycle).is_zero());
  CHECK(cycle_bch(inscribe_step(EdgeCycle{data.flat_cycle})).is_zero());

  // first connector solves tau(alpha) = BCH(-l1/2, alpha)
  const Element c = Rational(-1, 2) * data.b.gen("l1");
  CHECK(kgon_tau(data.b, 4).apply(data.connectors_b[0]) ==
        bch(c, data.connectors_b[0]));

  // depth-0 coordinates of the first connector solve (M - I) v = -(depth-0 rhs)
  // independently: assemble and solve the 3x3 system by hand here
  {
    const KgonSpectrum s = data.spectrum;
    RatMatrix a = s.matrix;
    for (int i = 0; i < 3; ++i) a[i][i] -= 1;
    // the slice equation is (M - I) v = rhs with rhs the depth-0 part of the
    // constant BCH(-l1/2, .) contribution, i.e. -1/2 l1
    const std::vector<Rational> rhs{Rational(-1, 2), Rational(0), Rational(0)};
    const auto sol = solve_linear(a, rhs);
    REQUIRE(sol.has_value());
    Element expected(data.b);
    expected.add_term(data.b.word_from_names(std::vector<std::string>{"l1"}), (*sol)[0]);
    expected.add_term(data.b.word_from_names(std::vector<std::string>{"l2"}), (*sol)[1]);
    expected.add_term(data.b.word_from_names(std::vector<std::string>{"l3"}), (*sol)[2]);
    CHECK(depth_component(data.connectors_b[0], 0) == expected);
  }

  CHECK(mc_residual(data.x, data.boundary).is_zero());
  CHECK(kgon_rotation(m, 4).apply(data.x) == data.x);
  CHECK(kgon_reflection(m, 4).apply(data.x) == data.x);

  // all four spokes flow to the centre
  for (int i = 0; i < 4; ++i)
    CHECK(flow_unit(data.connectors[i], m.gen("v" + std::to_string(i + 1)),
                    data.boundary) == data.x);

  const FlatReport report =
      flat_realisation_check(kgon_wheel_realisation(data), data.boundary);
  CHECK(report.flat);
}

TEST_CASE("kgon dihedral actions compose correctly") {
  const Algebra m = kgon_algebra(4, 3);
  const auto rot = kgon_rotation(m, 4);
  const auto refl = kgon_reflection(m, 4);
  // r^4 = id, s^2 = id, s r s = r^-1
  const auto r2 = rot.after(rot);
  const auto r4 = r2.after(r2);
  const SignedPermutationAction id(m, "id");
  CHECK(r4.same_mapping(id));
  CHECK(refl.after(refl).same_mapping(id));
  CHECK(refl.after(rot.after(refl)).same_mapping(rot.after(r2)));
}
