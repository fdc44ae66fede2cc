#include "dgla/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace dgla {

std::optional<std::vector<Rational>> solve_linear(RatMatrix a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

namespace {

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size();
  RatMatrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Rational trace(const RatMatrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

}  // namespace

std::vector<Rational> char_poly(const RatMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k given M_k = A M_{k-1} + c_{n-k+1} I.
  RatMatrix mk(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) mk[i][i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    mk = mat_mul(m, mk);
    const Rational c = -trace(mk) / Rational(static_cast<int>(k));
    coeffs[n - k] = c;
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c;
  }
  return coeffs;
}

bool roots_in_open_unit_disc(std::vector<Rational> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) throw DomainError("unit-disc test: zero polynomial");
  while (p.size() > 1) {
    const std::size_t n = p.size() - 1;
    const Rational a0 = p[0];
    const Rational an = p[n];
    if (!(abs(a0) < abs(an))) return false;
    // Schur transform: (an*p - a0*p~)/z with p~ the reversed polynomial.
    std::vector<Rational> q(n, Rational(0));
    for (std::size_t i = 1; i <= n; ++i) q[i - 1] = an * p[i] - a0 * p[n - i];
    p = std::move(q);
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return true;  // reduced to a nonzero constant times z^j
  }
  return true;
}

std::string polynomial_to_string(const std::vector<Rational>& p, const std::string& var) {
  std::string out;
  for (std::size_t d = p.size(); d-- > 0;) {
    if (p[d] == 0) continue;
    const bool neg = p[d] < 0;
    const Rational a = abs(p[d]);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = (a == 1) && d != 0;
    if (!unit) out += to_fraction_string(a);
    if (d > 0) {
      if (!unit) out += "*";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace dgla
