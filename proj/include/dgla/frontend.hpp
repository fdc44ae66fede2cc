#pragma once

#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dgla/kgon.hpp"
#include "dgla/symmetric.hpp"

namespace dgla {

// Exit-status contract: 0 = all certificates pass, 1 = mathematical check
// failed, 2 = usage/configuration error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  enum class Shape { triangle, kgon };
  enum class Output { text, json };

  Shape shape = Shape::triangle;
  int k = 4;
  int depth = 4;
  Output output = Output::text;
  unsigned seed = 0;
  std::string based;    // model command: "", "a", "b" or "c"
  std::string corrupt;  // verify command: element to perturb (negative control)
  bool universal = false;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  int checked_depth = 0;
  std::optional<int> first_failure_depth;
  std::string detail;
};

// The triangle certificate suite: flatness, the flow and fixed-point lemmas,
// tetrahedron loops, Maurer-Cartan and S3 symmetry of the point, q
// anti-symmetry, d^2 = 0 for the symmetric model, plus seeded randomized
// property checks. `corrupt` perturbs one named element after construction.
std::vector<CheckResult> verify_triangle_suite(int depth, unsigned seed,
                                               const std::string& corrupt = "");
// Same suite over already-built data; the corruption is applied in place, so
// the caller sees exactly what was checked.
std::vector<CheckResult> verify_triangle_suite(SymmetricTriangleData& data, unsigned seed,
                                               const std::string& corrupt = "");

std::vector<CheckResult> verify_kgon_suite(int k, int depth, unsigned seed);

// Seeded randomized property instances over the triangle boundary model:
// graded Jacobi, BCH associativity, flow composition and Maurer-Cartan
// preservation under flows. Exact checks on sparse random inputs.
std::vector<CheckResult> random_property_suite(int depth, unsigned seed, int instances);

// Random sparse element with every word of the given total grading (letters
// restricted to generators that have differential rules when `rules_only`).
Element random_homogeneous_element(std::mt19937& rng, const Algebra& alg, int grading,
                                   int max_terms, int max_word_len,
                                   const std::vector<std::string>& letters);

Element random_lie_element(std::mt19937& rng, const LyndonBasis& basis, int max_terms);

// Subcommand drivers; they write the report to `out` and return the exit status.
int run_coefficients(const RunConfig& config, std::ostream& out);
int run_verify(const RunConfig& config, std::ostream& out);
int run_model(const RunConfig& config, std::ostream& out);
int run_kgon_spectrum(const RunConfig& config, std::ostream& out);

}  // namespace dgla
