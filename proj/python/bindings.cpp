#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fockcb/canonical.hpp"
#include "fockcb/decomposition.hpp"

namespace py = pybind11;
using namespace fockcb;

namespace {

long long to_int64(const Laurent::Int& value) {
  static const Laurent::Int max = std::numeric_limits<long long>::max();
  static const Laurent::Int min = std::numeric_limits<long long>::min();
  if (value > max || value < min) throw error("coefficient exceeds the 64-bit range");
  return value.convert_to<long long>();
}

ParamSet make_params(int e, const std::vector<int>& v) { return ParamSet(e, v); }

Multipartition parse_mp(const std::string& text, const ParamSet& params) {
  Multipartition mp = Multipartition::parse(text);
  if (mp.level() != params.level())
    throw usage_error("multipartition '" + text + "' has " + std::to_string(mp.level()) +
                      " components but " + std::to_string(params.level()) +
                      " charges were given");
  return mp;
}

using PolyPairs = std::vector<std::pair<int, long long>>;

PolyPairs poly_pairs(const Laurent& value) {
  PolyPairs out;
  for (int exp = value.max_exp(); exp >= value.min_exp(); --exp)
    if (value.coeff(exp) != 0) out.emplace_back(exp, to_int64(value.coeff(exp)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Canonical bases of higher-level Fock spaces and decomposition matrices of "
            "Ariki-Koike algebras";

  // translators run newest-first, so the base class goes first
  py::register_exception<error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);

  m.def(
      "residue",
      [](int row, int col, int comp, int e, const std::vector<int>& v) {
        return residue(Node{row, col, comp}, make_params(e, v)).value();
      },
      py::arg("row"), py::arg("col"), py::arg("comp"), py::arg("e"), py::arg("v"),
      "Residue (col - row + v[comp]) mod e of the cell (row, col, comp).");

  m.def(
      "multipartitions",
      [](int n, int d) {
        std::vector<std::string> out;
        for (const auto& mp : enumerate_multipartitions(n, d)) out.push_back(mp.to_string());
        return out;
      },
      py::arg("n"), py::arg("d"),
      "All d-component multipartitions of rank n in canonical order.");

  m.def(
      "is_flotw",
      [](const std::string& mp, int e, const std::vector<int>& v) {
        ParamSet params = make_params(e, v);
        return is_flotw(parse_mp(mp, params), params);
      },
      py::arg("mp"), py::arg("e"), py::arg("v"));

  m.def(
      "flotw_multipartitions",
      [](int n, int e, const std::vector<int>& v) {
        std::vector<std::string> out;
        for (const auto& mp : enumerate_flotw(n, make_params(e, v))) out.push_back(mp.to_string());
        return out;
      },
      py::arg("n"), py::arg("e"), py::arg("v"),
      "FLOTW multipartitions of rank n in canonical order.");

  m.def(
      "a_sequence",
      [](const std::string& mp, int e, const std::vector<int>& v) {
        ParamSet params = make_params(e, v);
        std::vector<int> out;
        for (Residue r : a_sequence(parse_mp(mp, params), params)) out.push_back(r.value());
        return out;
      },
      py::arg("mp"), py::arg("e"), py::arg("v"),
      "Residue sequence of the peeling procedure, first applied first.");

  m.def(
      "a_value",
      [](const std::string& mp, int e, const std::vector<int>& v) {
        ParamSet params = make_params(e, v);
        Rational a = a_value(parse_mp(mp, params), params);
        return std::make_pair(to_int64(numerator(a)), to_int64(denominator(a)));
      },
      py::arg("mp"), py::arg("e"), py::arg("v"),
      "a-value as a reduced (numerator, denominator) pair.");

  m.def(
      "canonical_basis",
      [](int n, int e, const std::vector<int>& v) {
        CanonicalBasis basis = compute_canonical_basis(n, make_params(e, v));
        std::vector<std::pair<std::string, std::vector<std::pair<std::string, PolyPairs>>>> out;
        for (const CanonicalBasis::Entry* entry : basis.by_ascending_a()) {
          std::vector<std::pair<std::string, PolyPairs>> terms;
          for (const auto& [mp, coeff] : entry->vector.terms())
            terms.emplace_back(mp.to_string(), poly_pairs(coeff));
          out.emplace_back(entry->label.to_string(), std::move(terms));
        }
        return out;
      },
      py::arg("n"), py::arg("e"), py::arg("v"),
      "Canonical basis elements in ascending a-value order. Each element is\n"
      "(label, [(multipartition, [(exponent, coefficient), ...]), ...]).");

  m.def(
      "decomposition_matrix_json",
      [](int n, int e, const std::vector<int>& v, bool q_mode) {
        DecompositionMatrix matrix = assemble(compute_canonical_basis(n, make_params(e, v)));
        std::ostringstream os;
        write_matrix(matrix, os, MatrixFormat::json, q_mode);
        return os.str();
      },
      py::arg("n"), py::arg("e"), py::arg("v"), py::arg("q_mode") = false,
      "Decomposition matrix serialized as json.");

#ifdef FOCKCB_VERSION
  m.attr("__version__") = FOCKCB_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
