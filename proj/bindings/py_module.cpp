// Python bindings over the JSON surface: structured data crosses the
// boundary as JSON strings, mirroring the CLI formats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fzip/json_io.hpp"

namespace py = pybind11;
using namespace fzip;

namespace {

TypeFunction type_from_dict(const std::map<int, unsigned>& support) {
    return TypeFunction(support);
}

std::string classify_str(const std::string& zip_json, bool with_trace) {
    auto j = Json::parse(zip_json);
    Json result;
    if (json_is_polarized(j)) {
        auto pz = polarized_from_json(j);
        auto rep = validate_polarized(pz);
        if (!rep.ok()) throw std::invalid_argument(rep.problems.front());
        auto res = classify_polarized(pz);
        result["u1"] = weyl_to_json(res.u1);
        result["u"] = weyl_to_json(res.u2);
        result["length"] = length(res.u1);
        result["codim"] = dim_par(res.group.J1) - length(res.u1);
        result["ordinary"] = dim_par(res.group.J1) == length(res.u1);
    } else {
        auto z = fzip_from_json(j);
        auto rep = validate(z);
        if (!rep.ok()) throw std::invalid_argument(rep.problems.front());
        auto res = classify(z);
        auto J = z.type.parabolic_type().subset;
        result["u"] = weyl_to_json(res.u);
        result["length"] = length(res.u);
        result["codim"] = codim(res.u, J);
        result["ordinary"] = is_ordinary(res.u, J);
        bool dieudonne = true;
        for (int i : z.type.indices())
            if (i != 0 && i != 1) dieudonne = false;
        if (dieudonne) result["a_number"] = a_number(z);
        if (with_trace) result["trace"] = trace_to_json(res.trace);
    }
    return result.dump();
}

std::string standard_str(const std::map<int, unsigned>& support, const std::vector<int>& window,
                         unsigned p) {
    auto tau = type_from_dict(support);
    WeylElement u(WeylKind::A, window);
    return fzip_to_json(standard_fzip(tau, u, p)).dump();
}

std::string validate_str(const std::string& zip_json) {
    auto j = Json::parse(zip_json);
    Json out;
    if (json_is_polarized(j)) {
        auto rep = validate_polarized(polarized_from_json(j));
        out = Json{{"valid", rep.ok()}, {"problems", rep.problems}};
    } else {
        auto rep = validate(fzip_from_json(j));
        out = Json{{"valid", rep.ok()}, {"problems", rep.problems}};
    }
    return out.dump();
}

std::string random_str(const std::map<int, unsigned>& support, unsigned p, unsigned k,
                       uint64_t seed) {
    auto f = FieldParams::make(p, k, 1);
    return fzip_to_json(random_fzip(type_from_dict(support), f, seed)).dump();
}

std::vector<std::vector<int>> coset_reps_py(const std::string& kind, unsigned rank,
                                            const std::vector<unsigned>& excluded) {
    WeylKind wk = kind == "A" ? WeylKind::A : WeylKind::BC;
    auto J = SimpleSubset::full(wk, rank);
    for (unsigned i : excluded) J.included.erase(i);
    std::vector<std::vector<int>> out;
    for (const auto& u : min_coset_reps(J)) out.push_back(u.window());
    return out;
}

std::vector<std::vector<int>> type_reps_py(const std::map<int, unsigned>& support) {
    auto J = type_from_dict(support).parabolic_type().subset;
    std::vector<std::vector<int>> out;
    for (const auto& u : min_coset_reps(J)) out.push_back(u.window());
    return out;
}

unsigned length_py(const std::string& kind, const std::vector<int>& window) {
    return length(WeylElement(kind == "A" ? WeylKind::A : WeylKind::BC, window));
}

std::string oracle_str(const std::map<int, unsigned>& support, unsigned p, unsigned k,
                       unsigned long long max_size) {
    auto tau = type_from_dict(support);
    auto f = FieldParams::make(p, k, 1);
    OracleLimits limits;
    limits.max_fzips = max_size;
    limits.max_group = max_size;
    auto rep = gl_orbits(enumerate_fzips(tau, f, limits), f, limits);
    return orbit_report_to_json(rep).dump();
}

std::string strata_str(const std::string& family_json) {
    auto j = Json::parse(family_json);
    std::vector<std::pair<std::string, FZip>> family;
    for (const auto& item : j)
        family.emplace_back(item["label"].get<std::string>(), fzip_from_json(item["zip"]));
    return strata_to_json(eo_partition(family)).dump();
}

}  // namespace

PYBIND11_MODULE(_fzip, m) {
    m.doc() = "exact classification of F-zips over finite fields";

    m.def("classify_json", &classify_str, py::arg("zip_json"), py::arg("trace") = false,
          "classify an F-zip (or polarized F-zip) given as JSON text");
    m.def("standard_json", &standard_str, py::arg("type"), py::arg("u"), py::arg("p") = 2,
          "standard F-zip for a type {i: multiplicity} and u in ^JW");
    m.def("validate_json", &validate_str, py::arg("zip_json"));
    m.def("random_json", &random_str, py::arg("type"), py::arg("p") = 2, py::arg("k") = 1,
          py::arg("seed") = 1);
    m.def("coset_reps", &coset_reps_py, py::arg("kind"), py::arg("rank"),
          py::arg("excluded") = std::vector<unsigned>{},
          "windows of ^JW for J = full generator set minus the excluded indices");
    m.def("type_reps", &type_reps_py, py::arg("type"),
          "windows of ^JW for the parabolic type of a GL type function");
    m.def("weyl_length", &length_py, py::arg("kind"), py::arg("window"));
    m.def("oracle_json", &oracle_str, py::arg("type"), py::arg("p") = 2, py::arg("k") = 1,
          py::arg("max_size") = 20000,
          "exhaustive orbit report for a small type over a small field");
    m.def("strata_json", &strata_str, py::arg("family_json"),
          "Ekedahl-Oort partition of a labeled family");
}
