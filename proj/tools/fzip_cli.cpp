// Command-line surface: classify, standard, enumerate, strata, oracle.
// Exit codes: 0 success, 1 I/O, 2 validation/domain, 3 size guard.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fzip/json_io.hpp"

namespace {

using namespace fzip;

constexpr int kExitIo = 1;
constexpr int kExitDomain = 2;
constexpr int kExitGuard = 3;

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "1,1" assigns multiplicities to indices 0,1,...; "0:1,1:19,2:1" is explicit.
TypeFunction parse_type(const std::string& spec) {
    std::map<int, unsigned> supp;
    std::stringstream ss(spec);
    std::string item;
    int auto_index = 0;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in type spec");
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            supp[auto_index++] += static_cast<unsigned>(std::stoul(item));
        } else {
            int idx = std::stoi(item.substr(0, colon));
            supp[idx] += static_cast<unsigned>(std::stoul(item.substr(colon + 1)));
        }
    }
    return TypeFunction(supp);
}

std::vector<int> parse_window(const std::string& spec) {
    std::vector<int> w;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(std::stoi(item));
    return w;
}

Json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        Json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open " + path);
    out << text << "\n";
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width(header.size());
    for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            os << row[c] << std::string(width[c] - row[c].size(), ' ');
            os << (c + 1 < row.size() ? "  " : "");
        }
        os << "\n";
    };
    emit(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    emit(rule);
    for (const auto& row : rows) emit(row);
    return os.str();
}

std::string window_str(const WeylElement& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.window().size(); ++i) os << (i ? "," : "") << w.window()[i];
    return os.str();
}

int cmd_classify(const std::string& input, const std::string& output, bool with_trace,
                 const std::string& format) {
    auto j = read_json_input(input);
    Json result;
    if (json_is_polarized(j)) {
        auto pz = polarized_from_json(j);
        auto rep = validate_polarized(pz);
        if (!rep.ok()) {
            Json err{{"valid", false}, {"problems", rep.problems}};
            write_output(output, err.dump(2));
            return kExitDomain;
        }
        auto res = classify_polarized(pz);
        auto gl = classify(pz.zip);
        result["u1"] = weyl_to_json(res.u1);
        result["u"] = weyl_to_json(res.u2);
        result["length"] = length(res.u1);
        result["codim"] = dim_par(res.group.J1) - length(res.u1);
        result["ordinary"] = dim_par(res.group.J1) == length(res.u1);
        if (with_trace) result["trace"] = trace_to_json(gl.trace);
    } else {
        auto z = fzip_from_json(j);
        auto rep = validate(z);
        if (!rep.ok()) {
            Json err{{"valid", false}, {"problems", rep.problems}};
            write_output(output, err.dump(2));
            return kExitDomain;
        }
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
    if (format == "table") {
        std::vector<std::string> header{"field", "value"};
        std::vector<std::vector<std::string>> rows;
        for (const auto& [key, val] : result.items())
            if (key != "trace") rows.push_back({key, val.dump()});
        write_output(output, render_table(header, rows));
    } else {
        write_output(output, result.dump(2));
    }
    return 0;
}

int cmd_standard(const std::string& type_spec, const std::string& u_spec, bool all,
                 unsigned p, const std::string& output, const std::string& out_dir) {
    auto tau = parse_type(type_spec);
    auto J = tau.parabolic_type().subset;
    if (all) {
        if (!out_dir.empty()) {
            // one file per representative: <dir>/u_<window with - separators>.json
            for (const auto& u : min_coset_reps(J)) {
                std::ostringstream name;
                name << out_dir << "/u";
                for (int v : u.window()) name << "_" << v;
                name << ".json";
                write_output(name.str(), fzip_to_json(standard_fzip(tau, u, p)).dump(2));
            }
            return 0;
        }
        Json files = Json::array();
        for (const auto& u : min_coset_reps(J))
            files.push_back(fzip_to_json(standard_fzip(tau, u, p)));
        write_output(output, files.dump(2));
        return 0;
    }
    WeylElement u(WeylKind::A, parse_window(u_spec));
    auto z = standard_fzip(tau, u, p);
    write_output(output, fzip_to_json(z).dump(2));
    return 0;
}

int cmd_enumerate(const std::string& type_spec, const std::string& kind, unsigned rank,
                  const std::string& exclude, unsigned siegel, const std::string& format,
                  const std::string& output) {
    SimpleSubset J;
    if (!type_spec.empty()) {
        J = parse_type(type_spec).parabolic_type().subset;
    } else if (siegel > 0) {
        TypeFunction tau({{0, siegel}, {1, siegel}});
        J = classical_data(tau, FormKind::symplectic).J1;
    } else if (!kind.empty()) {
        if (rank == 0) throw std::invalid_argument("enumerate needs --rank with --kind");
        WeylKind wk = kind == "A" ? WeylKind::A : WeylKind::BC;
        J = SimpleSubset::full(wk, rank);
        if (!exclude.empty())
            for (int i : parse_window(exclude)) J.included.erase(static_cast<unsigned>(i));
    } else {
        throw std::invalid_argument("enumerate needs --type, --siegel, or --kind/--rank");
    }

    auto reps = min_coset_reps(J);
    unsigned dp = dim_par(J);
    Json rows = Json::array();
    for (const auto& u : reps) {
        unsigned l = length(u);
        rows.push_back(Json{{"u", weyl_to_json(u)},
                            {"length", l},
                            {"codim", dp - l},
                            {"ordinary", l == dp},
                            {"bruhat_minimal", u.is_identity()},
                            {"bruhat_maximal", l == dp}});
    }
    if (format == "table") {
        std::vector<std::string> header{"u", "length", "codim", "ordinary", "bruhat"};
        std::vector<std::vector<std::string>> trows;
        for (const auto& u : reps) {
            unsigned l = length(u);
            std::string marker = u.is_identity() ? "min" : (l == dp ? "max" : "");
            trows.push_back({window_str(u), std::to_string(l), std::to_string(dp - l),
                             l == dp ? "yes" : "no", marker});
        }
        write_output(output, render_table(header, trows));
    } else {
        write_output(output, rows.dump(2));
    }
    return 0;
}

int cmd_strata(const std::string& input, unsigned long long max_size, const std::string& format,
               const std::string& output) {
    auto j = read_json_input(input);
    if (!j.is_array()) throw std::invalid_argument("strata input must be an array");
    if (j.size() > max_size) throw GuardError("family exceeds --max-size");
    std::vector<std::pair<std::string, FZip>> family;
    for (const auto& item : j) {
        if (!item.contains("label") || !item.contains("zip"))
            throw std::invalid_argument("family entries need label and zip");
        family.emplace_back(item["label"].get<std::string>(), fzip_from_json(item["zip"]));
    }
    auto strata = eo_partition(family);
    if (format == "table") {
        std::vector<std::string> header{"u", "codim", "ordinary", "points"};
        std::vector<std::vector<std::string>> rows;
        for (const auto& s : strata)
            rows.push_back({window_str(s.u), std::to_string(s.codim), s.ordinary ? "yes" : "no",
                            std::to_string(s.labels.size())});
        write_output(output, render_table(header, rows));
    } else {
        write_output(output, strata_to_json(strata).dump(2));
    }
    return 0;
}

int cmd_oracle(const std::string& type_spec, unsigned p, unsigned k,
               unsigned long long max_size, const std::string& format,
               const std::string& output) {
    auto tau = parse_type(type_spec);
    auto f = FieldParams::make(p, k, 1);
    OracleLimits limits;
    limits.max_fzips = max_size;
    limits.max_group = max_size;
    std::vector<FZip> zips;
    OrbitReport rep;
    try {
        zips = enumerate_fzips(tau, f, limits);
        rep = gl_orbits(zips, f, limits);
    } catch (const std::invalid_argument& e) {
        throw GuardError(e.what());
    }
    if (format == "table") {
        std::vector<std::string> header{"orbit", "size", "invariant"};
        std::vector<std::vector<std::string>> rows;
        for (size_t i = 0; i < rep.orbits.size(); ++i)
            rows.push_back({std::to_string(i), std::to_string(rep.orbits[i].size),
                            window_str(rep.orbits[i].invariant)});
        std::ostringstream os;
        os << render_table(header, rows);
        os << "total " << rep.total_count << ", invariant classes "
           << rep.invariant_class_count << "/" << rep.expected_class_count << ", consistent "
           << (rep.consistent() ? "yes" : "no");
        write_output(output, os.str());
    } else {
        write_output(output, orbit_report_to_json(rep).dump(2));
    }
    return rep.consistent() ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F-zip classification toolkit"};
    app.require_subcommand(1);

    std::string input, output, format = "json";
    std::string type_spec, u_spec, kind, exclude;
    bool with_trace = false, all = false;
    unsigned p = 2, k = 1, rank = 0, siegel = 0;
    unsigned long long max_size = 20000;

    auto* classify_cmd = app.add_subcommand("classify", "classify an F-zip JSON file");
    classify_cmd->add_option("--input,-i", input, "input path or - for stdin");
    classify_cmd->add_option("--output,-o", output, "output path, default stdout");
    classify_cmd->add_flag("--trace", with_trace, "include the full refinement trace");
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    std::string out_dir;
    auto* standard_cmd = app.add_subcommand("standard", "emit standard F-zips");
    standard_cmd->add_option("--type,-t", type_spec, "type, e.g. 1,1 or 0:1,1:19,2:1")
        ->required();
    standard_cmd->add_option("-u", u_spec, "window of u, e.g. 2,1");
    standard_cmd->add_flag("--all", all, "emit one F-zip per element of ^JW");
    standard_cmd->add_option("-p", p, "prime of the base field");
    standard_cmd->add_option("--output,-o", output);
    standard_cmd->add_option("--out-dir", out_dir, "with --all: one file per element");

    auto* enum_cmd = app.add_subcommand("enumerate", "tabulate ^JW with lengths and codims");
    enum_cmd->add_option("--type,-t", type_spec, "GL type");
    enum_cmd->add_option("--kind", kind)->check(CLI::IsMember({"A", "BC"}));
    enum_cmd->add_option("--rank", rank);
    enum_cmd->add_option("--exclude", exclude, "generator indices dropped from full I");
    enum_cmd->add_option("--siegel", siegel, "Siegel symplectic genus");
    enum_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
    enum_cmd->add_option("--output,-o", output);

    auto* strata_cmd = app.add_subcommand("strata", "Ekedahl-Oort partition of a family");
    strata_cmd->add_option("--input,-i", input);
    strata_cmd->add_option("--output,-o", output);
    strata_cmd->add_option("--max-size", max_size);
    strata_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive orbit comparison");
    oracle_cmd->add_option("--type,-t", type_spec)->required();
    oracle_cmd->add_option("-p", p, "characteristic");
    oracle_cmd->add_option("-k", k, "extension degree");
    oracle_cmd->add_option("--max-size", max_size, "size guard");
    oracle_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
    oracle_cmd->add_option("--output,-o", output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return cmd_classify(input, output, with_trace, format);
        if (standard_cmd->parsed()) {
            if (!all && u_spec.empty()) {
                std::cerr << "standard: need -u or --all\n";
                return kExitDomain;
            }
            return cmd_standard(type_spec, u_spec, all, p, output, out_dir);
        }
        if (enum_cmd->parsed())
            return cmd_enumerate(type_spec, kind, rank, exclude, siegel, format, output);
        if (strata_cmd->parsed()) return cmd_strata(input, max_size, format, output);
        if (oracle_cmd->parsed()) return cmd_oracle(type_spec, p, k, max_size, format, output);
    } catch (const GuardError& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
