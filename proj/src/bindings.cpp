#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affmult/crystal.hpp"
#include "affmult/multiplicity.hpp"
#include "affmult/partition.hpp"
#include "affmult/paths.hpp"
#include "affmult/permutations.hpp"
#include "affmult/rsk.hpp"
#include "affmult/tableau.hpp"

namespace py = pybind11;
using namespace affmult;

namespace {

// Exact conversion; values can exceed 64 bits.
py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

MultiplicityQuery make_query(int k, int a, int b, int ell, std::optional<int> n) {
  return MultiplicityQuery{k, a, b, ell, n};
}

std::vector<std::vector<int>> parts_list(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

std::vector<Filling> filling_list(const std::vector<StandardTableau>& ts) {
  std::vector<Filling> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(t.rows());
  return out;
}

}  // namespace

PYBIND11_MODULE(_affmult, mod) {
  mod.doc() = "Weight multiplicities for affine sl(n) by four independent methods";

  mod.def("n_min", &n_min, py::arg("ell"), py::arg("a"), py::arg("b"),
          "Smallest rank in the stable range for (ell, a, b).");

  mod.def(
      "lambda_coeffs",
      [](int ell, int a, int b, int n) { return lambda_coeffs(ell, a, b, n).c; },
      py::arg("ell"), py::arg("a"), py::arg("b"), py::arg("n"),
      "Coefficients c_0..c_{n-1} of the root-lattice part of the weight for (ell, a, b).");

  mod.def(
      "multiplicity",
      [](int k, int a, int b, int ell, std::optional<int> n, const std::string& method) {
        auto table = default_methods();
        auto it = table.find(method);
        if (it == table.end()) throw std::invalid_argument("unknown method: " + method);
        return to_py(it->second(make_query(k, a, b, ell, n)));
      },
      py::arg("k"), py::arg("a"), py::arg("b"), py::arg("ell"), py::arg("n") = std::nullopt,
      py::arg("method") = "formula",
      "Multiplicity of the weight; method is one of formula, permutations, paths, crystal.");

  mod.def(
      "cross_check",
      [](int k, int a, int b, int ell, std::optional<int> n,
         std::optional<std::vector<std::string>> methods) {
        std::vector<std::string> names;
        if (methods) {
          names = *methods;
        } else {
          for (const auto& [name, fn] : default_methods()) names.push_back(name);
        }
        MultiplicityReport rep = cross_check(make_query(k, a, b, ell, n), names);
        py::dict values;
        for (const auto& [name, v] : rep.values) values[py::str(name)] = to_py(v);
        py::list breakdown;
        for (const auto& [mu, term] : rep.breakdown)
          breakdown.append(py::make_tuple(mu.parts(), to_py(term)));
        py::dict out;
        out["values"] = values;
        out["agree"] = rep.agree;
        out["breakdown"] = breakdown;
        return out;
      },
      py::arg("k"), py::arg("a"), py::arg("b"), py::arg("ell"), py::arg("n") = std::nullopt,
      py::arg("methods") = std::nullopt,
      "Runs the named methods (default all four) and reports values, agreement, and the "
      "per-partition breakdown of the hook sum.");

  mod.def(
      "formula_term",
      [](int k, int a, int b, int ell, const std::vector<int>& mu, std::optional<int> n) {
        return to_py(formula_term(make_query(k, a, b, ell, n), Partition(mu)));
      },
      py::arg("k"), py::arg("a"), py::arg("b"), py::arg("ell"), py::arg("mu"),
      py::arg("n") = std::nullopt);

  mod.def(
      "partitions",
      [](int n, int min_len, int max_len) { return parts_list(gen_partitions(n, min_len, max_len)); },
      py::arg("n"), py::arg("min_len"), py::arg("max_len"));

  mod.def(
      "decrement_set",
      [](const std::vector<int>& mu, int j) { return parts_list(decrement_set(Partition(mu), j)); },
      py::arg("mu"), py::arg("j"));

  mod.def(
      "hook_count",
      [](const std::vector<int>& shape) { return to_py(hook_count(Partition(shape))); },
      py::arg("shape"), "Number of standard Young tableaux of the shape.");

  mod.def(
      "standard_tableaux",
      [](const std::vector<int>& shape) { return filling_list(enumerate_syt(Partition(shape))); },
      py::arg("shape"));

  mod.def(
      "anchored_tableaux",
      [](const std::vector<int>& shape, int a) {
        return filling_list(enumerate_anchored_syt(Partition(shape), a));
      },
      py::arg("shape"), py::arg("a"),
      "Standard tableaux whose first column starts with 1..a.");

  mod.def(
      "rsk",
      [](const Word& w) {
        auto [m, n] = rsk_forward(w);
        return py::make_tuple(m.rows(), n.rows());
      },
      py::arg("word"), "Row insertion; returns the (M, N) tableau pair as nested lists.");

  mod.def(
      "rsk_inverse",
      [](const Filling& m, const Filling& n) {
        return rsk_inverse(StandardTableau(m), StandardTableau(n));
      },
      py::arg("m"), py::arg("n"));

  mod.def(
      "lds_length", [](const Word& w) { return lds_length(w); }, py::arg("word"),
      "Length of the longest strictly decreasing subsequence.");

  mod.def(
      "is_admissible_permutation",
      [](const Word& w, int k, int a, int b, int ell) {
        return is_admissible(w, Constraint(k, a, b, ell));
      },
      py::arg("word"), py::arg("k"), py::arg("a"), py::arg("b"), py::arg("ell"));

  mod.def(
      "rectify",
      [](const Filling& rows, const std::vector<int>& inner_parts) {
        Partition inner(inner_parts);
        if (inner.length() > static_cast<int>(rows.size()))
          throw std::invalid_argument("inner shape longer than the filling");
        std::vector<int> outer_parts;
        for (std::size_t i = 0; i < rows.size(); ++i)
          outer_parts.push_back(inner.part(static_cast<int>(i)) + static_cast<int>(rows[i].size()));
        auto [rect, log] = rectify(SkewTableau{Partition(outer_parts), inner, rows});
        (void)log;
        return rect;
      },
      py::arg("rows"), py::arg("inner"),
      "Jeu de taquin rectification of a skew filling given row by row.");

  mod.def(
      "strip_rectify",
      [](const Filling& rows, int a) {
        auto [tau, v] = strip_rectify(StandardTableau(rows), a);
        return py::make_tuple(tau.parts(), v.rows());
      },
      py::arg("rows"), py::arg("a"));

  mod.def(
      "unstrip",
      [](const Filling& v, const std::vector<int>& mu, int a) {
        return unstrip(StandardTableau(v), Partition(mu), a).rows();
      },
      py::arg("v"), py::arg("mu"), py::arg("a"));

  mod.def(
      "weight_space",
      [](int k, int a, int b, int ell, std::optional<int> n) {
        int rank = n ? *n : n_min(ell, a, b);
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& t : enumerate_weight_space(rank, k, ell, a, b)) {
          std::vector<std::vector<int>> tup;
          for (const auto& d : t.diagrams) tup.push_back(d.seq());
          out.push_back(std::move(tup));
        }
        return out;
      },
      py::arg("k"), py::arg("a"), py::arg("b"), py::arg("ell"), py::arg("n") = std::nullopt,
      "Crystal elements of the weight as k-tuples of column-depth sequences.");

  mod.def(
      "path_pairs",
      [](int k, int a, int b, int ell, const std::vector<int>& mu) {
        Region r = build_region(ell, a, b);
        std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
        for (const auto& p : enumerate_pairs(r, k, Partition(mu)))
          out.emplace_back(p.lower.moves, p.upper.moves);
        return out;
      },
      py::arg("k"), py::arg("a"), py::arg("b"), py::arg("ell"), py::arg("mu"),
      "Admissible (lower, upper) move-word pairs whose types decrement mu.");
}
