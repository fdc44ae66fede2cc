// pybind11 bindings for the exact free-graded-Lie-algebra engine. Rationals
// cross the boundary as "p/q" strings; documents as JSON strings which the
// python package decodes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dgla/frontend.hpp"
#include "dgla/serialize.hpp"

namespace py = pybind11;
using namespace dgla;

namespace {

Element scale(const Element& x, const std::string& c) {
  return rational_from_string(c) * x;
}

std::string verify_json(RunConfig config) {
  std::ostringstream out;
  config.output = RunConfig::Output::json;
  const int status = run_verify(config, out);
  (void)status;  // the document carries "pass"
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_dgla, m) {
  m.doc() = "exact-arithmetic engine for free graded Lie algebras with a truncated BCH kernel";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Algebra>(m, "Algebra")
      .def(py::init([](const std::vector<std::pair<std::string, int>>& gens, int max_word_len) {
             std::vector<Generator> table;
             for (const auto& [name, grading] : gens) table.push_back({name, grading});
             return Algebra(std::move(table), max_word_len);
           }),
           py::arg("generators"), py::arg("max_word_len"))
      .def_property_readonly("max_word_len", &Algebra::max_word_len)
      .def_property_readonly("max_depth", &Algebra::max_depth)
      .def("zero", &Algebra::zero)
      .def("one", &Algebra::one)
      .def("gen", &Algebra::gen, py::arg("name"));

  py::class_<Element>(m, "Element")
      .def_property_readonly("algebra", &Element::algebra)
      .def("is_zero", &Element::is_zero)
      .def("terms",
           [](const Element& x) {
             std::vector<std::pair<std::vector<std::string>, std::string>> out;
             for (const auto& [w, c] : x.terms()) {
               std::vector<std::string> word;
               for (unsigned char letter : w)
                 word.push_back(x.algebra().table()[letter].name);
               out.emplace_back(std::move(word), to_fraction_string(c));
             }
             return out;
           })
      .def("coeff",
           [](const Element& x, const std::vector<std::string>& word) {
             return to_fraction_string(x.coeff(x.algebra().word_from_names(word)));
           })
      .def("to_json", [](const Element& x) { return element_to_json(x).dump(); })
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__mul__", [](const Element& a, const Element& b) { return a * b; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__repr__", [](const Element& x) { return to_string(x); })
      .def("scale", &scale, py::arg("coeff"));

  m.def("element_from_json",
        [](const std::string& doc) { return element_from_json(Json::parse(doc)); });
  m.def("bracket", &bracket);
  m.def("bch", &bch);
  m.def("bch_list", [](const Algebra& alg, const std::vector<Element>& xs) {
    return bch_list(alg, xs);
  });
  m.def("exp", &exp_grading0);
  m.def("log", &log_near_identity);
  m.def("depth_component", &depth_component);
  m.def("is_lie_element", &is_lie_element);
  m.def("lyndon_coordinates", [](const Element& x) {
    const LyndonBasis basis(x.algebra());
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& coord : basis.coordinates(x)) {
      auto [display, value] = basis.display_coordinate(coord);
      out.emplace_back(std::move(display), to_fraction_string(value));
    }
    return out;
  });

  m.def("bch_coefficient_table", [](int max_depth) {
    std::vector<std::tuple<int, std::string, std::string>> out;
    for (const auto& row : bch_coefficient_table(max_depth))
      out.emplace_back(row.depth, row.monomial, to_fraction_string(row.value));
    return out;
  });

  m.def(
      "triangle_coefficients_json",
      [](int depth, bool universal) {
        RunConfig config;
        config.depth = depth;
        config.universal = universal;
        config.output = RunConfig::Output::json;
        std::ostringstream out;
        run_coefficients(config, out);
        return out.str();
      },
      py::arg("depth") = 4, py::arg("universal") = false);

  m.def(
      "verify_triangle_json",
      [](int depth, unsigned seed, const std::string& corrupt) {
        RunConfig config;
        config.depth = depth;
        config.seed = seed;
        config.corrupt = corrupt;
        return verify_json(config);
      },
      py::arg("depth") = 4, py::arg("seed") = 0, py::arg("corrupt") = "");

  m.def(
      "verify_kgon_json",
      [](int k, int depth, unsigned seed) {
        RunConfig config;
        config.shape = RunConfig::Shape::kgon;
        config.k = k;
        config.depth = depth;
        config.seed = seed;
        return verify_json(config);
      },
      py::arg("k") = 4, py::arg("depth") = 3, py::arg("seed") = 0);

  m.def(
      "model_json",
      [](int depth, const std::string& based) {
        RunConfig config;
        config.depth = depth;
        config.based = based;
        std::ostringstream out;
        run_model(config, out);
        return out.str();
      },
      py::arg("depth") = 4, py::arg("based") = "");

  m.def(
      "kgon_spectrum_json",
      [](int k) {
        RunConfig config;
        config.shape = RunConfig::Shape::kgon;
        config.k = k;
        config.output = RunConfig::Output::json;
        std::ostringstream out;
        run_kgon_spectrum(config, out);
        return out.str();
      },
      py::arg("k"));
}
