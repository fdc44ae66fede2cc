#include "dgla/bch.hpp"

namespace dgla {

namespace {

void require_bch_operand(const Element& x) {
  if (x.has_constant_term()) throw DomainError("bch: operand has a constant term");
  if (!x.is_grading(0)) throw DomainError("bch: operand must have grading 0");
}

}  // namespace

Element bch(const Element& x, const Element& y) {
  require_compatible(x, y);
  require_bch_operand(x);
  require_bch_operand(y);
  return log_near_identity(exp_grading0(x) * exp_grading0(y));
}

Element bch_list(const Algebra& alg, std::span<const Element> xs) {
  if (xs.empty()) return alg.zero();
  Element prod = alg.one();
  for (const Element& x : xs) {
    if (!x.algebra().compatible(alg))
      throw ConfigError("bch_list: element over the wrong algebra");
    require_bch_operand(x);
    prod = prod * exp_grading0(x);
  }
  return log_near_identity(prod);
}

Element bch_list(const Algebra& alg, std::initializer_list<Element> xs) {
  return bch_list(alg, std::span<const Element>(xs.begin(), xs.size()));
}

std::vector<BchCoefficient> bch_coefficient_table(int max_depth) {
  if (max_depth < 0) throw DomainError("bch_coefficient_table: negative depth");
  Algebra alg({{"e", 0}, {"f", 0}}, max_depth + 1);
  const LyndonBasis basis(alg);
  const Element z = bch(alg.gen("e"), alg.gen("f"));
  std::vector<BchCoefficient> table;
  for (const auto& coord : basis.coordinates(z)) {
    const auto& mono = basis.monomial(coord.id);
    auto [display, value] = basis.display_coordinate(coord);
    BchCoefficient row;
    row.depth = static_cast<int>(mono.word.size()) - 1;
    row.monomial = std::move(display);
    for (unsigned char c : mono.word) row.word.push_back(alg.table()[c].name);
    row.value = std::move(value);
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace dgla
