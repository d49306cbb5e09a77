#include "qsym/insertion.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsym/bijections.hpp"

namespace qsym {

InsertionResult dual_row_insert(const Filling& t, int x) {
    if (t.kind() != FillingKind::ReverseRowStrict || !is_valid(t))
        throw std::invalid_argument("dual_row_insert: input is not a valid RRS");
    if (x < 1) throw std::invalid_argument("dual_row_insert: x must be positive");
    std::vector<std::vector<int>> rows = t.rows();
    std::vector<Cell> path;
    int cur = x;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        // Rows strictly decrease, so the leftmost entry <= cur is the
        // largest one.
        std::size_t p = 0;
        while (p < row.size() && row[p] > cur) ++p;
        if (p == row.size()) {
            row.push_back(cur);
            Cell c{static_cast<int>(r) + 1, static_cast<int>(row.size())};
            path.push_back(c);
            return {Filling(std::move(rows), FillingKind::ReverseRowStrict), path, c};
        }
        path.push_back({static_cast<int>(r) + 1, static_cast<int>(p) + 1});
        std::swap(cur, row[p]);
    }
    rows.push_back({cur});
    Cell c{static_cast<int>(rows.size()), 1};
    path.push_back(c);
    return {Filling(std::move(rows), FillingKind::ReverseRowStrict), path, c};
}

namespace {

// Cells of F~ in modified reading order: columns m+1 down to 1, top to
// bottom; (i, width_i + 1) is row i's appended zero cell.
std::vector<Cell> modified_reading_cells(const std::vector<std::vector<int>>& rows) {
    int m = 0;
    for (const auto& row : rows) m = std::max(m, static_cast<int>(row.size()));
    std::vector<Cell> cells;
    for (int k = m + 1; k >= 1; --k)
        for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
            const int width = static_cast<int>(rows[i - 1].size());
            if (k <= width + 1) cells.push_back({i, k});
        }
    return cells;
}

int cell_value(const std::vector<std::vector<int>>& rows, const Cell& c) {
    const auto& row = rows[c.row - 1];
    return c.col <= static_cast<int>(row.size()) ? row[c.col - 1] : 0;
}

std::vector<int> word_from(const std::vector<std::vector<int>>& rows,
                           const std::vector<Cell>& cells, std::size_t begin) {
    std::vector<int> word;
    for (std::size_t idx = begin; idx < cells.size(); ++idx)
        word.push_back(cell_value(rows, cells[idx]));
    return word;
}

InsertionResult rsct_insert_impl(const Filling& f, int x, std::vector<InsertionStep>* steps) {
    if (f.kind() != FillingKind::RSCT || !is_valid(f))
        throw std::invalid_argument("rsct_insert: input is not a valid RSCT");
    if (x < 1) throw std::invalid_argument("rsct_insert: x must be positive");
    std::vector<std::vector<int>> rows = f.rows();
    const std::vector<Cell> cells = modified_reading_cells(rows);
    std::vector<Cell> path;
    int cur = x;
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        const Cell c = cells[idx];
        if (c.col == 1) break;  // leftmost column: terminal placement below
        const int y = cell_value(rows, c);
        const int left = rows[c.row - 1][c.col - 2];
        if (!(y <= cur && left > cur)) continue;
        if (y == 0) {
            rows[c.row - 1].push_back(cur);
            path.push_back(c);
            InsertionResult res{Filling(std::move(rows), FillingKind::RSCT), path, c};
            if (steps)
                steps->push_back({InsertionStep::Action::FillZero, cur, 0, c,
                                  word_from(res.result.rows(), cells, idx + 1), res.result});
            return res;
        }
        rows[c.row - 1][c.col - 1] = cur;
        path.push_back(c);
        if (steps)
            steps->push_back({InsertionStep::Action::Bump, cur, y, c,
                              word_from(rows, cells, idx + 1),
                              Filling(rows, FillingKind::RSCT)});
        cur = y;
    }
    // Terminal rule: a new one-cell row directly below the last
    // leftmost-column entry <= cur (above everything when there is none).
    int insert_after = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r][0] <= cur) insert_after = static_cast<int>(r) + 1;
    rows.insert(rows.begin() + insert_after, {cur});
    Cell c{insert_after + 1, 1};
    path.push_back(c);
    InsertionResult res{Filling(std::move(rows), FillingKind::RSCT), path, c};
    if (steps)
        steps->push_back({InsertionStep::Action::NewRow, cur, 0, c, {}, res.result});
    return res;
}

}  // namespace

InsertionResult rsct_insert(const Filling& f, int x) { return rsct_insert_impl(f, x, nullptr); }

std::pair<InsertionResult, std::vector<InsertionStep>> rsct_insert_traced(const Filling& f,
                                                                          int x) {
    std::vector<InsertionStep> steps;
    InsertionResult res = rsct_insert_impl(f, x, &steps);
    return {std::move(res), std::move(steps)};
}

bool check_commutation(const Filling& t, int x) {
    return rho_row(dual_row_insert(t, x).result) == rsct_insert(rho_row(t), x).result;
}

BiwordMatrix::BiwordMatrix(const std::vector<std::vector<int>>& dense) {
    for (std::size_t i = 0; i < dense.size(); ++i)
        for (std::size_t j = 0; j < dense[i].size(); ++j)
            set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, dense[i][j]);
}

void BiwordMatrix::set(int i, int j, int value) {
    if (i < 1 || j < 1) throw std::invalid_argument("BiwordMatrix: indices are 1-based");
    if (value < 0) throw std::invalid_argument("BiwordMatrix: entries must be nonnegative");
    if (value == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = value;
}

int BiwordMatrix::get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

BiwordMatrix BiwordMatrix::transposed() const {
    BiwordMatrix t;
    for (const auto& [cell, value] : entries_) t.set(cell.second, cell.first, value);
    return t;
}

std::vector<std::pair<int, int>> BiwordMatrix::biword() const {
    // Pairs sorted with i increasing and j increasing within each run of
    // equal i.  Increasing j is what makes the pair correspondence
    // transpose-symmetric: a run of equal bottom letters always stacks
    // vertically under the insertion, so a run of equal top letters must
    // be ordered to stack vertically too.
    std::vector<std::pair<int, int>> word;
    for (const auto& [cell, value] : entries_)
        for (int c = 0; c < value; ++c) word.emplace_back(cell.first, cell.second);
    return word;
}

std::pair<Filling, Filling> rsk_pair(const BiwordMatrix& a) {
    const auto insert_all = [](const BiwordMatrix& mat) {
        Filling f(std::vector<std::vector<int>>{}, FillingKind::RSCT);
        for (const auto& [top, bottom] : mat.biword()) {
            (void)top;
            f = rsct_insert(f, bottom).result;
        }
        return f;
    };
    return {insert_all(a), insert_all(a.transposed())};
}

}  // namespace qsym
