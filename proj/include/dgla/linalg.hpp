#pragma once

#include <optional>
#include <vector>

#include "dgla/lyndon.hpp"
#include "dgla/rational.hpp"

namespace dgla {

// Gaussian elimination over the rationals; nullopt when the system is singular.
std::optional<std::vector<Rational>> solve_linear(RatMatrix a, std::vector<Rational> b);

// Monic characteristic polynomial det(lambda*I - M), coefficients in
// ascending degree order (Faddeev-LeVerrier, exact).
std::vector<Rational> char_poly(const RatMatrix& m);

// True iff every root of p (ascending coefficients, nonzero leading term)
// lies strictly inside the unit disc. Exact Schur-Cohn reduction; roots on
// the circle fail the test.
bool roots_in_open_unit_disc(std::vector<Rational> p);

std::string polynomial_to_string(const std::vector<Rational>& p, const std::string& var = "x");

}  // namespace dgla
