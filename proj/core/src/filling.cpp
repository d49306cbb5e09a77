#include "qsym/filling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qsym {

std::string kind_name(FillingKind kind) {
    switch (kind) {
        case FillingKind::ReverseRowStrict: return "RRS";
        case FillingKind::ReverseColumnStrict: return "RCS";
        case FillingKind::RSCT: return "RSCT";
        case FillingKind::CSCT: return "CSCT";
    }
    throw std::logic_error("kind_name: bad kind");
}

FillingKind kind_from_name(const std::string& name) {
    if (name == "RRS") return FillingKind::ReverseRowStrict;
    if (name == "RCS") return FillingKind::ReverseColumnStrict;
    if (name == "RSCT") return FillingKind::RSCT;
    if (name == "CSCT") return FillingKind::CSCT;
    throw std::invalid_argument("kind_from_name: unknown kind '" + name + "'");
}

namespace {

Composition shape_of_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Composition(std::move(parts));
}

}  // namespace

namespace {

void check_rows(const Composition& shape, const std::vector<std::vector<int>>& rows) {
    if (rows.size() != shape.parts().size())
        throw std::invalid_argument("Filling: row count does not match shape length");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != shape.parts()[i])
            throw std::invalid_argument("Filling: row " + std::to_string(i + 1) +
                                        " does not match its shape part");
        for (int e : rows[i])
            if (e < 1) throw std::invalid_argument("Filling: entries must be positive");
    }
}

}  // namespace

// Members initialize in declaration order (shape_ before rows_), so the
// shape is derived before the rows are moved from.
Filling::Filling(std::vector<std::vector<int>> rows, FillingKind kind)
    : shape_(shape_of_rows(rows)), rows_(std::move(rows)), kind_(kind) {
    check_rows(shape_, rows_);
}

Filling::Filling(Composition shape, std::vector<std::vector<int>> rows, FillingKind kind)
    : shape_(std::move(shape)), rows_(std::move(rows)), kind_(kind) {
    check_rows(shape_, rows_);
}

int Filling::max_part() const {
    int m = 0;
    for (int p : shape_.parts()) m = std::max(m, p);
    return m;
}

int Filling::entry(int i, int k) const {
    if (i < 1 || i > row_count() || k < 1) return 0;
    const auto& row = rows_[i - 1];
    if (k > static_cast<int>(row.size())) return 0;
    return row[k - 1];
}

namespace {

bool rows_strictly_decrease(const Filling& f) {
    for (const auto& row : f.rows())
        for (std::size_t k = 1; k < row.size(); ++k)
            if (!(row[k - 1] > row[k])) return false;
    return true;
}

bool rows_weakly_decrease(const Filling& f) {
    for (const auto& row : f.rows())
        for (std::size_t k = 1; k < row.size(); ++k)
            if (!(row[k - 1] >= row[k])) return false;
    return true;
}

bool shape_is_partition(const Filling& f) {
    const auto& parts = f.shape().parts();
    return std::is_sorted(parts.rbegin(), parts.rend());
}

}  // namespace

bool is_reverse_row_strict(const Filling& t) {
    if (!shape_is_partition(t)) return false;
    if (!rows_strictly_decrease(t)) return false;
    // Columns weakly decrease; for a partition shape every cell below the
    // top row has a cell directly above it.
    for (int i = 2; i <= t.row_count(); ++i)
        for (int k = 1; k <= static_cast<int>(t.rows()[i - 1].size()); ++k)
            if (!(t.entry(i - 1, k) >= t.entry(i, k))) return false;
    return true;
}

bool is_reverse_column_strict(const Filling& t) {
    if (!shape_is_partition(t)) return false;
    if (!rows_weakly_decrease(t)) return false;
    for (int i = 2; i <= t.row_count(); ++i)
        for (int k = 1; k <= static_cast<int>(t.rows()[i - 1].size()); ++k)
            if (!(t.entry(i - 1, k) > t.entry(i, k))) return false;
    return true;
}

namespace {

bool leftmost_column_weakly_increases(const Filling& f) {
    for (int i = 2; i <= f.row_count(); ++i)
        if (!(f.entry(i - 1, 1) <= f.entry(i, 1))) return false;
    return true;
}

bool leftmost_column_strictly_increases(const Filling& f) {
    for (int i = 2; i <= f.row_count(); ++i)
        if (!(f.entry(i - 1, 1) < f.entry(i, 1))) return false;
    return true;
}

}  // namespace

bool is_rsct(const Filling& f) {
    if (!rows_strictly_decrease(f)) return false;
    if (!leftmost_column_weakly_increases(f)) return false;
    const int l = f.row_count();
    const int m = f.max_part();
    // Row-strict triple rule on the zero supplement.  The premise
    // F^(j,k) > F^(i,k) can only hold with F^(j,k) > 0, so virtual cells
    // never trigger it on the left-hand side.
    for (int k = 2; k <= m; ++k)
        for (int j = 2; j <= l; ++j)
            for (int i = 1; i < j; ++i)
                if (f.entry(j, k) > f.entry(i, k) && !(f.entry(j, k) >= f.entry(i, k - 1)))
                    return false;
    return true;
}

bool is_csct(const Filling& f) {
    if (!rows_weakly_decrease(f)) return false;
    if (!leftmost_column_strictly_increases(f)) return false;
    const int l = f.row_count();
    const int m = f.max_part();
    for (int k = 2; k <= m; ++k)
        for (int j = 2; j <= l; ++j)
            for (int i = 1; i < j; ++i)
                if (f.entry(j, k) != 0 && f.entry(j, k) >= f.entry(i, k) &&
                    !(f.entry(j, k) > f.entry(i, k - 1)))
                    return false;
    return true;
}

bool is_valid(const Filling& f) {
    switch (f.kind()) {
        case FillingKind::ReverseRowStrict: return is_reverse_row_strict(f);
        case FillingKind::ReverseColumnStrict: return is_reverse_column_strict(f);
        case FillingKind::RSCT: return is_rsct(f);
        case FillingKind::CSCT: return is_csct(f);
    }
    throw std::logic_error("is_valid: bad kind");
}

void validate(const Filling& f) {
    if (!is_valid(f))
        throw std::invalid_argument("filling is not a valid " + kind_name(f.kind()));
}

WeakComposition weight(const Filling& f) {
    int max = 0;
    for (const auto& row : f.rows())
        for (int e : row) max = std::max(max, e);
    std::vector<int> w(max, 0);
    for (const auto& row : f.rows())
        for (int e : row) ++w[e - 1];
    return WeakComposition(std::move(w));
}

bool is_standard(const Filling& f) {
    const WeakComposition w = weight(f);
    if (w.degree() != f.cell_count()) return false;
    for (int p : w.parts())
        if (p != 1) return false;
    return true;
}

namespace {

struct CellRef {
    int row;  // 1-indexed
    int col;  // 1-indexed
};

// Renumbering order for equal entries, per kind (see header).
bool standardize_before(FillingKind kind, const CellRef& a, const CellRef& b) {
    switch (kind) {
        case FillingKind::ReverseRowStrict:
            return a.row > b.row;
        case FillingKind::ReverseColumnStrict:
        case FillingKind::CSCT:
            return a.col > b.col;
        case FillingKind::RSCT: {
            if (a.col != b.col) return a.col < b.col;
            if (a.col == 1) return a.row < b.row;
            return a.row > b.row;
        }
    }
    throw std::logic_error("standardize_before: bad kind");
}

}  // namespace

Filling standardize(const Filling& f) {
    std::map<int, std::vector<CellRef>> by_value;
    for (int i = 1; i <= f.row_count(); ++i)
        for (int k = 1; k <= static_cast<int>(f.rows()[i - 1].size()); ++k)
            by_value[f.entry(i, k)].push_back({i, k});
    std::vector<std::vector<int>> rows = f.rows();
    int next = 1;
    for (auto& [value, cells] : by_value) {
        std::sort(cells.begin(), cells.end(), [&](const CellRef& a, const CellRef& b) {
            return standardize_before(f.kind(), a, b);
        });
        for (const CellRef& c : cells) rows[c.row - 1][c.col - 1] = next++;
    }
    return Filling(f.shape(), std::move(rows), f.kind());
}

namespace {

// Position of each value in a standard filling, as (row, col).
std::vector<std::pair<int, int>> value_positions(const Filling& f) {
    std::vector<std::pair<int, int>> pos(f.cell_count() + 1, {0, 0});
    for (int i = 1; i <= f.row_count(); ++i)
        for (int k = 1; k <= static_cast<int>(f.rows()[i - 1].size()); ++k)
            pos[f.entry(i, k)] = {i, k};
    return pos;
}

}  // namespace

DescentSet descent_set(const Filling& f, DescentFlavor flavor) {
    if (!is_standard(f))
        throw std::invalid_argument("descent_set: filling is not standard");
    const auto pos = value_positions(f);
    DescentSet d;
    d.flavor = flavor;
    for (int i = 1; i + 1 <= f.cell_count(); ++i) {
        const int col_i = pos[i].second;
        const int col_next = pos[i + 1].second;
        const bool weakly_right = col_next >= col_i;
        if (flavor == DescentFlavor::Descent ? weakly_right : !weakly_right)
            d.values.insert(i);
    }
    return d;
}

Composition descent_composition(const DescentSet& d, int n) {
    return composition_from_subset(std::set<int>(d.values.begin(), d.values.end()), n);
}

std::vector<int> reading_word(const Filling& f, bool modified) {
    std::vector<int> word;
    const int m = f.max_part() + (modified ? 1 : 0);
    for (int k = m; k >= 1; --k) {
        for (int i = 1; i <= f.row_count(); ++i) {
            const int width = static_cast<int>(f.rows()[i - 1].size());
            if (k <= width)
                word.push_back(f.entry(i, k));
            else if (modified && k == width + 1)
                word.push_back(0);
        }
    }
    return word;
}

std::string pretty(const Filling& f) {
    if (f.row_count() == 0) return "(empty)\n";
    std::size_t width = 1;
    for (const auto& row : f.rows())
        for (int e : row) width = std::max(width, std::to_string(e).size());
    std::string out;
    for (const auto& row : f.rows()) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::string cell = std::to_string(row[k]);
            if (k) out += ' ';
            out += std::string(width - cell.size(), ' ') + cell;
        }
        out += '\n';
    }
    return out;
}

}  // namespace qsym
