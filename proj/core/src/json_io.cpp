#include "qsym/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <stdexcept>

namespace qsym {

namespace {

using nlohmann::json;

json coeff_to_json(const Int& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(c);
    }
    return c.str();
}

Int coeff_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("coefficient string is not a decimal integer: " +
                                        j.get<std::string>());
        }
    }
    throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

json composition_to_json(const Composition& alpha) {
    return json{{"parts", alpha.parts()}};
}

json filling_to_json(const Filling& f) {
    return json{{"kind", kind_name(f.kind())},
                {"shape", f.shape().parts()},
                {"rows", f.rows()}};
}

json element_to_json(const QSymElement& e) {
    json terms = json::array();
    for (const auto& [alpha, c] : e.terms()) {
        terms.push_back(json{{"parts", alpha.parts()}, {"coeff", coeff_to_json(c)}});
    }
    return json{{"basis", basis_name(e.basis())}, {"degree", e.degree()}, {"terms", terms}};
}

json labels_to_json(const std::vector<Composition>& order) {
    json out = json::array();
    for (const Composition& alpha : order) out.push_back(alpha.str());
    return out;
}

json matrix_to_json(const TransitionMatrix& m) {
    json entries = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const Int& c : row) r.push_back(coeff_to_json(c));
        entries.push_back(std::move(r));
    }
    return json{{"from", basis_name(m.from)},
                {"to", basis_name(m.to)},
                {"degree", m.degree},
                {"rows", labels_to_json(m.row_order)},
                {"cols", labels_to_json(m.col_order)},
                {"entries", entries}};
}

json cell_to_json(const Cell& c) { return json{{"row", c.row}, {"col", c.col}}; }

json insertion_result_to_json(const InsertionResult& r) {
    json path = json::array();
    for (const Cell& c : r.path) path.push_back(cell_to_json(c));
    return json{{"result", filling_to_json(r.result)},
                {"path", path},
                {"new_cell", cell_to_json(r.new_cell)}};
}

std::string step_action_name(InsertionStep::Action a) {
    switch (a) {
        case InsertionStep::Action::Bump: return "bump";
        case InsertionStep::Action::FillZero: return "fill-zero";
        case InsertionStep::Action::NewRow: return "new-row";
    }
    throw std::logic_error("unknown insertion action");
}

json step_to_json(const InsertionStep& s) {
    json out{{"action", step_action_name(s.action)},
             {"carried", s.carried},
             {"at", cell_to_json(s.at)},
             {"remaining", s.remaining},
             {"diagram", filling_to_json(s.diagram)}};
    if (s.action == InsertionStep::Action::Bump) out["bumped"] = s.bumped;
    return out;
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

std::vector<int> int_vector(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw std::invalid_argument(std::string(what) + " must hold integers");
        }
        out.push_back(v.get<int>());
    }
    return out;
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw std::invalid_argument(std::string("missing field: ") + name);
    return *it;
}

}  // namespace

std::string to_json(const Composition& alpha) { return composition_to_json(alpha).dump(); }

std::string to_json(const Filling& f) { return filling_to_json(f).dump(); }

std::string to_json(const QSymElement& e) { return element_to_json(e).dump(); }

std::string to_json(const TransitionMatrix& m) { return matrix_to_json(m).dump(); }

std::string to_json(const ExpansionReport& r) {
    return json{{"family", r.family},
                {"index", r.index.str()},
                {"target", basis_name(r.target)},
                {"element", element_to_json(r.element)},
                {"witness_count", coeff_to_json(r.witness_count)}}
        .dump();
}

std::string to_json(const InsertionResult& r) { return insertion_result_to_json(r).dump(); }

std::string to_json(const InsertionResult& r, const std::vector<InsertionStep>& steps) {
    json j = insertion_result_to_json(r);
    json s = json::array();
    for (const InsertionStep& step : steps) s.push_back(step_to_json(step));
    j["steps"] = std::move(s);
    return j.dump();
}

std::string to_json(const BijectionTrace& t) {
    json steps = json::array();
    for (const PlacementStep& s : t.steps) {
        steps.push_back(json{{"entry", s.entry}, {"row", s.row}, {"col", s.col}});
    }
    return json{{"input", filling_to_json(t.input)},
                {"output", filling_to_json(t.output)},
                {"steps", steps}}
        .dump();
}

std::string to_json(const VerificationReport& r) {
    json items = json::array();
    for (const VerificationItem& item : r.items) {
        items.push_back(json{{"subject", item.subject}, {"pass", item.pass},
                             {"detail", item.detail}});
    }
    return json{{"name", r.name}, {"pass", r.all_pass()}, {"items", items}}.dump();
}

Composition composition_from_json(const std::string& text) {
    const json j = parse_text(text);
    return Composition(int_vector(field(j, "parts"), "parts"));
}

Filling filling_from_json(const std::string& text) {
    const json j = parse_text(text);
    const json& rows_j = field(j, "rows");
    if (!rows_j.is_array()) throw std::invalid_argument("rows must be an array");
    std::vector<std::vector<int>> rows;
    rows.reserve(rows_j.size());
    for (const auto& r : rows_j) rows.push_back(int_vector(r, "row"));
    const FillingKind kind = kind_from_name(field(j, "kind").get<std::string>());
    if (j.contains("shape")) {
        return Filling(Composition(int_vector(field(j, "shape"), "shape")), std::move(rows),
                       kind);
    }
    return Filling(std::move(rows), kind);
}

QSymElement qsym_element_from_json(const std::string& text) {
    const json j = parse_text(text);
    const Basis basis = basis_from_name(field(j, "basis").get<std::string>());
    const json& degree_j = field(j, "degree");
    if (!degree_j.is_number_integer()) throw std::invalid_argument("degree must be an integer");
    QSymElement e(basis, degree_j.get<int>());
    for (const auto& term : field(j, "terms")) {
        e.add_term(Composition(int_vector(field(term, "parts"), "parts")),
                   coeff_from_json(field(term, "coeff")));
    }
    return e;
}

namespace {

std::string csv_quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_csv(const TransitionMatrix& m) {
    std::string out;
    for (const Composition& col : m.col_order) out += "," + csv_quoted(col.str());
    out += '\n';
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        out += csv_quoted(m.row_order[i].str());
        for (const Int& c : m.entries[i]) out += "," + c.str();
        out += '\n';
    }
    return out;
}

void EnumerationCache::save(const std::string& path) const {
    json entries = json::array();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        for (const auto& [key, fillings] : memo_) {
            const auto& [shape, kind, max_entry, standard] = key;
            json list = json::array();
            for (const Filling& f : fillings) list.push_back(f.rows());
            entries.push_back(json{{"shape", shape},
                                   {"kind", kind_name(kind)},
                                   {"max_entry", max_entry},
                                   {"standard", standard},
                                   {"fillings", std::move(list)}});
        }
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file: " + path);
    out << json{{"entries", std::move(entries)}}.dump() << '\n';
}

void EnumerationCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // nothing cached yet
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.contains("entries") || !j["entries"].is_array()) {
        throw std::runtime_error("malformed cache file: " + path);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& entry : j["entries"]) {
        Key key{int_vector(field(entry, "shape"), "shape"),
                kind_from_name(field(entry, "kind").get<std::string>()),
                field(entry, "max_entry").get<int>(), field(entry, "standard").get<bool>()};
        std::vector<Filling> fillings;
        const Composition shape(std::get<0>(key));
        for (const auto& rows_j : field(entry, "fillings")) {
            std::vector<std::vector<int>> rows;
            for (const auto& r : rows_j) rows.push_back(int_vector(r, "row"));
            fillings.emplace_back(shape, std::move(rows), std::get<1>(key));
        }
        memo_.insert_or_assign(std::move(key), std::move(fillings));
    }
}

}  // namespace qsym
