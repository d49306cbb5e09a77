#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/bijections.hpp"
#include "qsym/composition.hpp"
#include "qsym/enumerate.hpp"
#include "qsym/expansions.hpp"
#include "qsym/filling.hpp"
#include "qsym/insertion.hpp"
#include "qsym/json_io.hpp"
#include "qsym/qsym_element.hpp"
#include "qsym/transition.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 computation/verification failure, 2 usage error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

qsym::Composition parse_composition_arg(const std::string& text, const std::string& flag) {
    try {
        return qsym::Composition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + " '" + text + "': " + e.what());
    }
}

// Rows are semicolon-separated lists of comma-separated entries,
// e.g. "2,1;2;4,3,2;4,2;5,2".
std::vector<std::vector<int>> parse_rows_arg(const std::string& text, const std::string& flag) {
    std::vector<std::vector<int>> rows;
    std::string::size_type start = 0;
    while (true) {
        const auto end = text.find(';', start);
        const std::string part = text.substr(
            start, end == std::string::npos ? std::string::npos : end - start);
        const qsym::Composition row = parse_composition_arg(part, flag);
        if (row.empty()) throw UsageError(flag + " '" + text + "': empty row");
        rows.push_back(row.parts());
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return rows;
}

qsym::Filling make_filling(const std::string& rows_text, qsym::FillingKind kind,
                           const std::string& flag) {
    qsym::Filling f(parse_rows_arg(rows_text, flag), kind);
    qsym::validate(f);  // std::invalid_argument -> exit 1
    return f;
}

qsym::Basis parse_basis(const std::string& name, const std::string& flag) {
    try {
        return qsym::basis_from_name(upper(name));
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + " '" + name + "': expected one of m, f, qs, rs");
    }
}

qsym::FillingKind parse_kind(const std::string& name, const std::string& flag) {
    try {
        return qsym::kind_from_name(upper(name));
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + " '" + name + "': expected one of rrs, rcs, rsct, csct");
    }
}

std::string label(const qsym::Composition& alpha) {
    return alpha.empty() ? "()" : alpha.str();
}

std::string cell_str(const qsym::Cell& c) {
    return "(row " + std::to_string(c.row) + ", col " + std::to_string(c.col) + ")";
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

// Wraps the optional enumeration cache file: loads on construction, saves on
// flush().  An empty path disables both.
class CacheFile {
public:
    explicit CacheFile(std::string path) : path_(std::move(path)) {
        if (!path_.empty()) cache_.load(path_);
    }
    qsym::EnumerationCache* get() { return &cache_; }
    void flush() {
        if (!path_.empty()) cache_.save(path_);
    }

private:
    std::string path_;
    qsym::EnumerationCache cache_;
};

// ---------------------------------------------------------------- expand --

int run_expand(const std::string& family_arg, const std::string& index_arg,
               const std::string& basis_arg, const std::string& format,
               const std::string& cache_path) {
    const std::string fam = upper(family_arg);
    std::string family;
    if (fam == "RS" || fam == "QS")
        family = fam;
    else if (fam == "SCHUR")
        family = "Schur";
    else
        throw UsageError("--family '" + family_arg + "': expected rs, qs, or schur");

    const qsym::Composition index = parse_composition_arg(index_arg, "--index");
    const qsym::Basis target = parse_basis(basis_arg, "--basis");
    if (target != qsym::Basis::M && target != qsym::Basis::F)
        throw UsageError("--basis '" + basis_arg + "': expansions target m or f");

    CacheFile cache(cache_path);
    const qsym::ExpansionReport report =
        qsym::expand_report(family, index, target, cache.get());
    cache.flush();

    if (format == "json") {
        std::cout << qsym::to_json(report) << '\n';
    } else {
        const std::string symbol = family == "Schur" ? "s" : family;
        std::cout << symbol << "(" << index.str() << ") = " << report.element.str() << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- matrix --

std::string matrix_pretty(const qsym::TransitionMatrix& m) {
    const std::size_t dim = m.row_order.size();
    std::vector<std::string> cells(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            cells[i * dim + j] = m.entries[i][j] == 0 ? "." : m.entries[i][j].str();

    std::size_t label_width = 0;
    std::vector<std::size_t> col_width(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        col_width[j] = label(m.col_order[j]).size();
        for (std::size_t i = 0; i < dim; ++i)
            col_width[j] = std::max(col_width[j], cells[i * dim + j].size());
    }
    for (const qsym::Composition& alpha : m.row_order)
        label_width = std::max(label_width, label(alpha).size());

    auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    std::string out = qsym::basis_name(m.from) + " -> " + qsym::basis_name(m.to) +
                      " at degree " + std::to_string(m.degree) + "\n";
    out += std::string(label_width, ' ');
    for (std::size_t j = 0; j < dim; ++j) out += "  " + pad(label(m.col_order[j]), col_width[j]);
    out += '\n';
    for (std::size_t i = 0; i < dim; ++i) {
        out += pad(label(m.row_order[i]), label_width);
        for (std::size_t j = 0; j < dim; ++j) out += "  " + pad(cells[i * dim + j], col_width[j]);
        out += '\n';
    }
    return out;
}

int run_matrix(const std::string& from_arg, const std::string& to_arg, int n,
               const std::string& format, const std::string& cache_path) {
    const qsym::Basis from = parse_basis(from_arg, "--from");
    const qsym::Basis to = parse_basis(to_arg, "--to");
    if (n < 0) throw UsageError("-n: the degree must be >= 0");

    CacheFile cache(cache_path);
    const qsym::TransitionMatrix m = qsym::make_transition_matrix(from, to, n, cache.get());
    cache.flush();

    if (format == "json")
        std::cout << qsym::to_json(m) << '\n';
    else if (format == "csv")
        std::cout << qsym::to_csv(m);
    else
        std::cout << matrix_pretty(m);
    return 0;
}

// -------------------------------------------------------------- tableaux --

int run_tableaux(const std::string& shape_arg, const std::string& kind_arg, int max_entry,
                 bool standard, bool count_only, const std::string& format,
                 const std::string& cache_path) {
    const qsym::Composition shape = parse_composition_arg(shape_arg, "--shape");
    const qsym::FillingKind kind = parse_kind(kind_arg, "--kind");
    if (!standard && max_entry <= 0)
        throw UsageError("--max-entry: a positive bound is required unless --standard");

    CacheFile cache(cache_path);
    const std::vector<qsym::Filling>& list =
        standard ? cache.get()->standard_fillings(shape, kind)
                 : cache.get()->fillings(shape, kind, max_entry);
    cache.flush();

    if (format == "json") {
        json out{{"shape", shape.parts()},
                 {"kind", qsym::kind_name(kind)},
                 {"standard", standard},
                 {"count", list.size()}};
        if (!standard) out["max_entry"] = max_entry;
        if (!count_only) {
            json fillings = json::array();
            for (const qsym::Filling& f : list) fillings.push_back(json::parse(qsym::to_json(f)));
            out["fillings"] = std::move(fillings);
        }
        std::cout << out.dump() << '\n';
    } else if (count_only) {
        std::cout << list.size() << '\n';
    } else {
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) std::cout << '\n';
            std::cout << qsym::pretty(list[i]);
        }
    }
    return 0;
}

// ---------------------------------------------------------------- insert --

std::string step_description(const qsym::InsertionStep& s) {
    switch (s.action) {
        case qsym::InsertionStep::Action::Bump:
            return std::to_string(s.carried) + " bumps " + std::to_string(s.bumped) + " at " +
                   cell_str(s.at);
        case qsym::InsertionStep::Action::FillZero:
            return std::to_string(s.carried) + " fills the empty slot at " + cell_str(s.at);
        case qsym::InsertionStep::Action::NewRow:
            return std::to_string(s.carried) + " starts a new row at " + cell_str(s.at);
    }
    throw std::logic_error("unknown insertion action");
}

void print_insertion_outcome(const qsym::InsertionResult& r) {
    std::cout << "result shape: " << label(r.result.shape()) << '\n';
    std::cout << "new cell: " << cell_str(r.new_cell) << '\n';
    std::cout << "path:";
    for (const qsym::Cell& c : r.path) std::cout << ' ' << cell_str(c);
    std::cout << '\n';
}

int run_insert(const std::string& rows_arg, const std::string& kind_arg, int x,
               const std::string& format) {
    const qsym::FillingKind kind = parse_kind(kind_arg, "--kind");
    if (kind != qsym::FillingKind::RSCT && kind != qsym::FillingKind::ReverseRowStrict)
        throw UsageError("--kind '" + kind_arg + "': insertion acts on rsct or rrs fillings");
    if (x < 1) throw UsageError("-x: the inserted value must be a positive integer");
    const qsym::Filling f = make_filling(rows_arg, kind, "--rows");

    if (kind == qsym::FillingKind::ReverseRowStrict) {
        const qsym::InsertionResult r = qsym::dual_row_insert(f, x);
        if (format == "json") {
            std::cout << qsym::to_json(r) << '\n';
        } else {
            std::cout << "insert " << x << " into RRS\n" << qsym::pretty(f) << '\n';
            std::cout << qsym::pretty(r.result) << '\n';
            print_insertion_outcome(r);
        }
        return 0;
    }

    const auto [result, steps] = qsym::rsct_insert_traced(f, x);
    if (format == "json") {
        std::cout << qsym::to_json(result, steps) << '\n';
        return 0;
    }
    std::cout << "insert " << x << " into RSCT\n" << qsym::pretty(f) << '\n';
    std::cout << "modified reading word: " << join_ints(qsym::reading_word(f, true)) << "\n\n";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const qsym::InsertionStep& s = steps[i];
        std::cout << "step " << i + 1 << ": " << step_description(s);
        if (!s.remaining.empty()) std::cout << "; scan continues on " << join_ints(s.remaining);
        std::cout << '\n' << qsym::pretty(s.diagram) << '\n';
    }
    print_insertion_outcome(result);
    return 0;
}

// ------------------------------------------------------------- bijection --

int run_bijection(const std::string& map_arg, const std::string& rows_arg,
                  const std::string& kind_arg, bool trace, const std::string& format) {
    qsym::FillingKind in_kind = qsym::FillingKind::RSCT;
    qsym::BijectionTrace (*apply)(const qsym::Filling&) = nullptr;
    if (map_arg == "rho-row") {
        in_kind = qsym::FillingKind::ReverseRowStrict;
        apply = qsym::rho_row_traced;
    } else if (map_arg == "rho-row-inv") {
        in_kind = qsym::FillingKind::RSCT;
        apply = qsym::rho_row_inv_traced;
    } else if (map_arg == "rho-col") {
        in_kind = qsym::FillingKind::ReverseColumnStrict;
        apply = qsym::rho_col_traced;
    } else if (map_arg == "rho-col-inv") {
        in_kind = qsym::FillingKind::CSCT;
        apply = qsym::rho_col_inv_traced;
    } else if (map_arg == "transpose") {
        in_kind = kind_arg.empty() ? qsym::FillingKind::ReverseRowStrict
                                   : parse_kind(kind_arg, "--kind");
        if (in_kind != qsym::FillingKind::ReverseRowStrict &&
            in_kind != qsym::FillingKind::ReverseColumnStrict)
            throw UsageError("--kind '" + kind_arg + "': transpose acts on rrs or rcs");
        apply = qsym::transpose_traced;
    } else if (map_arg == "phi") {
        in_kind = qsym::FillingKind::CSCT;
        apply = qsym::phi_traced;
    } else if (map_arg == "phi-inv") {
        in_kind = qsym::FillingKind::RSCT;
        apply = qsym::phi_inv_traced;
    } else {
        throw UsageError("--map '" + map_arg +
                         "': expected rho-row, rho-row-inv, rho-col, rho-col-inv, transpose, "
                         "phi, or phi-inv");
    }

    // The maps run their placement algorithms on any filling of the right
    // kind tag, so an input that misses a validity rule is worth a warning
    // but not a refusal.
    const qsym::Filling f(parse_rows_arg(rows_arg, "--rows"), in_kind);
    if (!qsym::is_valid(f))
        std::cerr << "warning: input is not a valid " << qsym::kind_name(in_kind)
                  << "; applying the map to the raw filling\n";
    const qsym::BijectionTrace result = apply(f);

    if (format == "json") {
        std::cout << qsym::to_json(result) << '\n';
        return 0;
    }
    std::cout << "input (" << qsym::kind_name(result.input.kind()) << ", shape "
              << label(result.input.shape()) << "):\n"
              << qsym::pretty(result.input) << '\n';
    if (trace) {
        std::cout << "placements:\n";
        for (const qsym::PlacementStep& s : result.steps)
            std::cout << "  entry " << s.entry << " -> (row " << s.row << ", col " << s.col
                      << ")\n";
        std::cout << '\n';
    }
    std::cout << "output (" << qsym::kind_name(result.output.kind()) << ", shape "
              << label(result.output.shape()) << "):\n"
              << qsym::pretty(result.output);
    return 0;
}

// ---------------------------------------------------------------- verify --

qsym::VerificationItem commutation_item(int degree, int bound) {
    long long checks = 0;
    std::string failure;
    for (const qsym::Partition& lambda : qsym::partitions_of(degree)) {
        for (const qsym::Filling& t : qsym::enumerate_fillings(
                 lambda.as_composition(), qsym::FillingKind::ReverseRowStrict, bound)) {
            for (int x = 1; x <= bound + 1; ++x) {
                ++checks;
                if (!qsym::check_commutation(t, x)) {
                    failure = "fails for x = " + std::to_string(x) + " into " +
                              qsym::to_json(t);
                    break;
                }
            }
            if (!failure.empty()) break;
        }
        if (!failure.empty()) break;
    }
    return {"insertion commutes with rho_row at degree " + std::to_string(degree) + " (" +
                std::to_string(checks) + " checks)",
            failure.empty(), failure};
}

int run_verify(const std::string& check, int n, const std::string& format,
               const std::string& cache_path) {
    if (n < 1) throw UsageError("-n: the bound must be >= 1");
    CacheFile cache(cache_path);
    qsym::VerificationReport report{check, {}};
    auto take = [&report](const qsym::VerificationReport& r) {
        report.items.insert(report.items.end(), r.items.begin(), r.items.end());
    };
    for (int d = 1; d <= n; ++d) {
        if (check == "omega" || check == "all") take(qsym::verify_omega_theorem(d, cache.get()));
        if (check == "schur" || check == "all")
            take(qsym::verify_schur_decompositions(d, cache.get()));
        if (check == "triangularity" || check == "all")
            take(qsym::verify_triangularity(d, cache.get()));
        if (check == "commutation" || check == "all")
            report.items.push_back(commutation_item(d, n));
    }
    cache.flush();

    if (format == "json") {
        std::cout << qsym::to_json(report) << '\n';
    } else {
        std::size_t failed = 0;
        for (const qsym::VerificationItem& item : report.items) {
            if (item.pass) {
                std::cout << "PASS " << item.subject << '\n';
            } else {
                ++failed;
                std::cout << "FAIL " << item.subject << ": " << item.detail << '\n';
            }
        }
        std::cout << "checks: " << report.items.size() - failed << " passed, " << failed
                  << " failed\n";
    }
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact arithmetic for quasisymmetric Schur calculus: basis expansions, "
        "transition matrices, composition tableaux, insertion, and bijections"};
    app.require_subcommand(1);

    std::string format = "pretty";
    std::string cache_path;

    auto* expand = app.add_subcommand("expand", "Expand RS/QS/Schur into the M or F basis");
    std::string ex_family, ex_index, ex_basis = "m";
    expand->add_option("--family", ex_family, "rs, qs, or schur")->required();
    expand->add_option("--index", ex_index, "indexing composition, e.g. 1,3")->required();
    expand->add_option("--basis", ex_basis, "target basis: m or f")->required();
    expand->add_option("--format", format, "pretty or json")
        ->check(CLI::IsMember({"pretty", "json"}));
    expand->add_option("--cache", cache_path, "enumeration cache file");

    auto* matrix = app.add_subcommand("matrix", "Emit an exact change-of-basis matrix");
    std::string mx_from, mx_to;
    int mx_n = 0;
    matrix->add_option("--from", mx_from, "m, f, qs, or rs")->required();
    matrix->add_option("--to", mx_to, "m, f, qs, or rs")->required();
    matrix->add_option("-n,--degree", mx_n, "degree")->required();
    matrix->add_option("--format", format, "pretty, json, or csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    matrix->add_option("--cache", cache_path, "enumeration cache file");

    auto* tableaux = app.add_subcommand("tableaux", "List or count fillings of a shape");
    std::string tb_shape, tb_kind;
    int tb_max_entry = 0;
    bool tb_standard = false, tb_count = false;
    tableaux->add_option("--shape", tb_shape, "shape composition, e.g. 2,1,2,1")->required();
    tableaux->add_option("--kind", tb_kind, "rrs, rcs, rsct, or csct")->required();
    tableaux->add_option("--max-entry", tb_max_entry, "largest allowed entry");
    tableaux->add_flag("--standard", tb_standard, "standard fillings only");
    tableaux->add_flag("--count", tb_count, "print only the count");
    tableaux->add_option("--format", format, "pretty or json")
        ->check(CLI::IsMember({"pretty", "json"}));
    tableaux->add_option("--cache", cache_path, "enumeration cache file");

    auto* insert = app.add_subcommand("insert", "Trace an insertion into a filling");
    std::string in_rows, in_kind = "rsct";
    int in_x = 0;
    insert->add_option("--rows", in_rows, "rows, e.g. 2,1;2;4,3,2;4,2;5,2")->required();
    insert->add_option("-x,--value", in_x, "value to insert")->required();
    insert->add_option("--kind", in_kind, "rsct (default) or rrs");
    insert->add_option("--format", format, "pretty or json")
        ->check(CLI::IsMember({"pretty", "json"}));

    auto* bijection = app.add_subcommand("bijection", "Apply a tableau bijection");
    std::string bj_map, bj_rows, bj_kind;
    bool bj_trace = false;
    bijection
        ->add_option("--map", bj_map,
                     "rho-row, rho-row-inv, rho-col, rho-col-inv, transpose, phi, or phi-inv")
        ->required();
    bijection->add_option("--rows", bj_rows, "input rows, e.g. 2,1;2;3,2;3")->required();
    bijection->add_option("--kind", bj_kind, "input kind for transpose: rrs or rcs");
    bijection->add_flag("--trace", bj_trace, "print each placement");
    bijection->add_option("--format", format, "pretty or json")
        ->check(CLI::IsMember({"pretty", "json"}));

    auto* verify = app.add_subcommand("verify", "Check the structural identities exhaustively");
    std::string vf_check;
    int vf_n = 5;
    verify
        ->add_option("check", vf_check, "omega, schur, triangularity, commutation, or all")
        ->required()
        ->check(CLI::IsMember({"omega", "schur", "triangularity", "commutation", "all"}));
    verify->add_option("-n,--bound", vf_n, "degree bound (default 5)");
    verify->add_option("--format", format, "pretty or json")
        ->check(CLI::IsMember({"pretty", "json"}));
    verify->add_option("--cache", cache_path, "enumeration cache file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) return run_expand(ex_family, ex_index, ex_basis, format, cache_path);
        if (matrix->parsed()) return run_matrix(mx_from, mx_to, mx_n, format, cache_path);
        if (tableaux->parsed())
            return run_tableaux(tb_shape, tb_kind, tb_max_entry, tb_standard, tb_count, format,
                                cache_path);
        if (insert->parsed()) return run_insert(in_rows, in_kind, in_x, format);
        if (bijection->parsed())
            return run_bijection(bj_map, bj_rows, bj_kind, bj_trace, format);
        if (verify->parsed()) return run_verify(vf_check, vf_n, format, cache_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
