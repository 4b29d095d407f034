#include "fzip/json_io.hpp"

namespace fzip {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

unsigned get_uint(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) bad(std::string(key) + " missing");
    return j[key].get<unsigned>();
}

}  // namespace

Json field_to_json(const FieldRef& f) {
    return Json{{"p", f->p()}, {"k", f->k()}, {"e", f->e()}, {"modulus", f->modulus()}};
}

FieldRef field_from_json(const Json& j) {
    auto f = FieldParams::make(get_uint(j, "p"), get_uint(j, "k"), get_uint(j, "e"));
    if (j.contains("modulus")) {
        auto mod = j["modulus"].get<std::vector<unsigned>>();
        if (mod != f->modulus()) bad("modulus differs from the canonical modulus");
    }
    return f;
}

Json element_to_json(const FieldParams& f, unsigned idx) { return Json(f.coeffs(idx)); }

unsigned element_from_json(const FieldParams& f, const Json& j) {
    if (!j.is_array()) bad("element must be a coefficient array");
    return f.from_coeffs(j.get<std::vector<unsigned>>());
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (unsigned i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (unsigned j = 0; j < m.cols(); ++j) row.push_back(element_to_json(*m.field(), m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, const FieldRef& f, unsigned rows, unsigned cols) {
    auto m = matrix_from_json(j, f);
    if (m.rows() != rows || m.cols() != cols) bad("matrix shape mismatch");
    return m;
}

Matrix matrix_from_json(const Json& j, const FieldRef& f) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    unsigned rows = static_cast<unsigned>(j.size());
    unsigned cols = rows == 0 ? 0 : static_cast<unsigned>(j[0].size());
    Matrix m(f, rows, cols);
    for (unsigned i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) bad("ragged matrix rows");
        for (unsigned c = 0; c < cols; ++c) m.set(i, c, element_from_json(*f, j[i][c]));
    }
    return m;
}

Json subspace_to_json(const Subspace& s) {
    return Json{{"n", s.ambient_dim()}, {"basis", matrix_to_json(s.basis())}};
}

Subspace subspace_from_json(const Json& j, const FieldRef& f) {
    unsigned n = get_uint(j, "n");
    if (!j.contains("basis")) bad("subspace basis missing");
    auto m = j["basis"].is_array() && j["basis"].empty() ? Matrix(f, 0, n)
                                                         : matrix_from_json(j["basis"], f);
    if (m.rows() > 0 && m.cols() != n) bad("subspace basis width mismatch");
    return Subspace::span(m.rows() ? m : Matrix(f, 0, n), n);
}

Json weyl_to_json(const WeylElement& w) {
    return Json{{"kind", w.kind() == WeylKind::A ? "A" : "BC"}, {"window", w.window()}};
}

WeylElement weyl_from_json(const Json& j) {
    if (!j.contains("kind") || !j.contains("window")) bad("weyl element needs kind and window");
    auto kind = j["kind"].get<std::string>();
    if (kind != "A" && kind != "BC") bad("weyl kind must be A or BC");
    return WeylElement(kind == "A" ? WeylKind::A : WeylKind::BC,
                       j["window"].get<std::vector<int>>());
}

Json subset_to_json(const SimpleSubset& s) {
    return Json(std::vector<unsigned>(s.included.begin(), s.included.end()));
}

Json fzip_to_json(const FZip& z) {
    Json type = Json::object();
    for (const auto& [i, v] : z.type.support()) type[std::to_string(i)] = v;
    Json c = Json::object(), d = Json::object(), phi = Json::object();
    for (const auto& [i, s] : z.C.members()) c[std::to_string(i)] = subspace_to_json(s);
    for (const auto& [i, s] : z.D.members()) d[std::to_string(i)] = subspace_to_json(s);
    for (const auto& [i, m] : z.phi) phi[std::to_string(i)] = matrix_to_json(m);
    return Json{{"field", field_to_json(z.field)}, {"n", z.n},     {"type", type},
                {"C", c},                          {"D", d},       {"phi", phi}};
}

FZip fzip_from_json(const Json& j) {
    FZip z;
    if (!j.contains("field")) bad("fzip needs a field");
    z.field = field_from_json(j["field"]);
    z.n = get_uint(j, "n");
    if (!j.contains("type") || !j["type"].is_object()) bad("fzip needs a type object");
    std::map<int, unsigned> supp;
    for (const auto& [key, v] : j["type"].items()) supp[std::stoi(key)] = v.get<unsigned>();
    z.type = TypeFunction(supp);
    if (z.type.height() != z.n) bad("type height differs from n");

    auto read_members = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_object()) bad(std::string(key) + " flag missing");
        std::map<int, Subspace> members;
        for (const auto& [k, v] : j[key].items())
            members.emplace(std::stoi(k), subspace_from_json(v, z.field));
        return members;
    };
    z.C = Flag(FlagDirection::descending, z.n, z.field, read_members("C"));
    z.D = Flag(FlagDirection::ascending, z.n, z.field, read_members("D"));
    if (!j.contains("phi") || !j["phi"].is_object()) bad("phi missing");
    for (const auto& [k, v] : j["phi"].items()) {
        int i = std::stoi(k);
        unsigned sz = z.type.at(i);
        z.phi.emplace(i, matrix_from_json(v, z.field, sz, sz));
    }
    return z;
}

bool json_is_polarized(const Json& j) { return j.contains("form"); }

Json polarized_to_json(const PolarizedFZip& z) {
    auto j = fzip_to_json(z.zip);
    j["form"] = Json{{"kind", z.form.kind == FormKind::symplectic ? "symplectic" : "symmetric"},
                     {"gram", matrix_to_json(z.form.gram)}};
    return j;
}

PolarizedFZip polarized_from_json(const Json& j) {
    PolarizedFZip z;
    z.zip = fzip_from_json(j);
    if (!j.contains("form") || !j["form"].is_object()) bad("polarized fzip needs a form");
    auto kind = j["form"]["kind"].get<std::string>();
    if (kind != "symplectic" && kind != "symmetric") bad("form kind unknown");
    z.form.kind = kind == "symplectic" ? FormKind::symplectic : FormKind::symmetric;
    z.form.gram = matrix_from_json(j["form"]["gram"], z.zip.field, z.zip.n, z.zip.n);
    return z;
}

Json trace_to_json(const ClassificationTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back(Json{{"J", subset_to_json(s.J)},
                             {"K", subset_to_json(s.K)},
                             {"u", weyl_to_json(s.u)}});
    return Json{{"u_infinity", weyl_to_json(t.u_infinity)},
                {"iterations", t.iterations},
                {"steps", steps},
                {"g", matrix_to_json(t.g)}};
}

Json orbit_report_to_json(const OrbitReport& r) {
    Json type = Json::object();
    for (const auto& [i, v] : r.type.support()) type[std::to_string(i)] = v;
    Json orbits = Json::array();
    for (const auto& o : r.orbits)
        orbits.push_back(Json{{"representative", fzip_to_json(o.representative)},
                              {"size", o.size},
                              {"invariant", weyl_to_json(o.invariant)}});
    return Json{{"type", type},
                {"field", field_to_json(r.field)},
                {"total_count", r.total_count},
                {"orbits", orbits},
                {"invariant_class_count", r.invariant_class_count},
                {"expected_class_count", r.expected_class_count},
                {"invariant_constant_on_orbits", r.invariant_constant_on_orbits},
                {"sizes_sum_to_total", r.sizes_sum_to_total},
                {"all_classes_realized", r.all_classes_realized}};
}

Json strata_to_json(const std::vector<EoStratum>& strata) {
    Json out = Json::array();
    for (const auto& s : strata)
        out.push_back(Json{{"u", weyl_to_json(s.u)},
                           {"codim", s.codim},
                           {"ordinary", s.ordinary},
                           {"labels", s.labels}});
    return out;
}

}  // namespace fzip
