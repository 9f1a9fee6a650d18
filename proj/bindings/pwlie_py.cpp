#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pwlie/oracle.hpp"
#include "pwlie/polyalg.hpp"
#include "pwlie/pweights.hpp"
#include "pwlie/signatures.hpp"
#include "pwlie/weylkac.hpp"

namespace py = pybind11;
using namespace pwlie;

namespace {

AffineDominant make_source(int rank, const std::vector<Int>& labels) {
    AlgebraContext ctx(rank);
    return AffineDominant(ctx, labels);
}

Specialization make_spec(int rank, const std::optional<std::vector<Int>>& t) {
    AlgebraContext ctx(rank);
    if (!t) return Specialization::default_for(ctx);
    return Specialization(*t);
}

py::dict pweights_py(int rank, const std::vector<Int>& labels, Int max_depth) {
    AlgebraContext ctx(rank);
    PermutationWeightSet set = pweights(make_source(rank, labels), max_depth, ctx);
    py::dict out;
    for (Int d = 0; d <= max_depth; ++d) {
        py::list lst;
        for (const FiniteWeight& w : set.at_depth(d)) lst.append(w.coords());
        out[py::int_(d)] = lst;
    }
    return out;
}

py::list maximal_classes_py(int rank, const std::vector<Int>& labels) {
    AlgebraContext ctx(rank);
    py::list out;
    for (const MaximalClass& mc : maximal_classes(make_source(rank, labels), ctx)) {
        py::dict cls;
        cls["labels"] = to_dynkin(mc.finite);
        cls["coords"] = mc.finite.coords();
        cls["offset"] = mc.offset;
        out.append(std::move(cls));
    }
    return out;
}

py::list string_functions_py(int rank, const std::vector<Int>& labels, Int max_depth,
                             const std::optional<std::vector<Int>>& spec) {
    AlgebraContext ctx(rank);
    StringSolution solution =
        solve_strings(make_source(rank, labels), max_depth, ctx, make_spec(rank, spec));
    py::list out;
    for (const StringFunction& sf : solution.table().strings()) {
        py::dict row;
        row["labels"] = to_dynkin(sf.cls.finite);
        row["coords"] = sf.cls.finite.coords();
        row["m0"] = sf.cls.offset;
        row["coeffs"] = sf.coeffs;
        out.append(std::move(row));
    }
    return out;
}

Int multiplicity_py(int rank, const std::vector<Int>& labels, const std::vector<Int>& coords,
                    Int depth, Int max_depth) {
    AlgebraContext ctx(rank);
    AffineDominant source = make_source(rank, labels);
    StringSolution solution = solve_strings(source, max_depth, ctx);
    return solution.multiplicity({source.level(), depth, FiniteWeight(coords)}, ctx);
}

int signature_py(int rank, const std::vector<Int>& coords, Int level) {
    AlgebraContext ctx(rank);
    return signature_index(FiniteWeight(coords), level, ctx);
}

py::dict orbit_sum_py(int rank, const std::vector<Int>& coords,
                      const std::optional<std::vector<Int>>& spec) {
    AlgebraContext ctx(rank);
    LaurentPoly p = orbit_sum(FiniteWeight(coords), make_spec(rank, spec));
    py::dict out;
    for (const auto& [e, c] : p.terms()) out[py::int_(e)] = c.str();
    return out;
}

}  // namespace

PYBIND11_MODULE(_pwlie, m) {
    m.doc() = "orbit classification and string functions for untwisted affine type A";

    m.def("permutation_weights", &pweights_py, py::arg("rank"), py::arg("labels"),
          py::arg("max_depth"),
          "per-depth dominant orbit representatives, as {depth: [coords, ...]}");
    m.def("maximal_classes", &maximal_classes_py, py::arg("rank"), py::arg("labels"),
          "dominant string heads with their depth offsets");
    m.def("string_functions", &string_functions_py, py::arg("rank"), py::arg("labels"),
          py::arg("max_depth"), py::arg("spec") = std::nullopt,
          "solved string-function coefficients per class");
    m.def("multiplicity", &multiplicity_py, py::arg("rank"), py::arg("labels"),
          py::arg("coords"), py::arg("depth"), py::arg("max_depth"),
          "weight multiplicity at the given finite coordinates and depth");
    m.def("signature_index", &signature_py, py::arg("rank"), py::arg("coords"),
          py::arg("level"), "extended signature of a strictly dominant weight");
    m.def("orbit_sum", &orbit_sum_py, py::arg("rank"), py::arg("coords"),
          py::arg("spec") = std::nullopt,
          "specialized orbit character, as {exponent: coefficient}");
    m.def("dominant_representative", [](const std::vector<Int>& coords) {
        auto [w, parity] = dominant_representative(FiniteWeight(coords));
        return py::make_tuple(w.coords(), parity);
    });
    m.def("partition_numbers", &string_by_counting, py::arg("max_depth"),
          "p(0..max_depth) by the pentagonal recurrence");
}
