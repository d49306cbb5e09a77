#include "qsym/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsym {

namespace {

// Only the kind tag is checked; the kind's validity predicate is the
// caller's contract.  The placement algorithms are total on any filling
// whose placements happen to succeed, which lets them reproduce published
// worked examples verbatim even when an input narrowly misses a triple
// rule; on kind-valid input the documented postconditions are guaranteed.
void require(const Filling& f, FillingKind kind, const char* who) {
    if (f.kind() != kind)
        throw std::invalid_argument(std::string(who) + ": input is tagged " +
                                    kind_name(f.kind()) + ", expected " + kind_name(kind));
}

void record(std::vector<PlacementStep>* steps, int entry, int row, int col) {
    if (steps) steps->push_back({entry, row, col});
}

// Entries of column k, top to bottom.
std::vector<int> column_entries(const Filling& f, int k) {
    std::vector<int> col;
    for (int i = 1; i <= f.row_count(); ++i)
        if (f.entry(i, k) != 0) col.push_back(f.entry(i, k));
    return col;
}

/*
 * Shared placement loop of rho_row / rho_col: the sorted first column seeds
 * one row per entry, and every later column is distributed largest first
 * into the highest row whose previous cell admits the entry (strictly
 * greater for the row-strict map, weakly greater for the column-strict
 * one).
 */
Filling rho_generic(const Filling& t, bool strict_left, FillingKind out_kind,
                    std::vector<PlacementStep>* steps) {
    std::vector<int> first = column_entries(t, 1);
    std::sort(first.begin(), first.end());
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < first.size(); ++i) {
        rows.push_back({first[i]});
        record(steps, first[i], static_cast<int>(i) + 1, 1);
    }
    const int m = t.max_part();
    for (int k = 2; k <= m; ++k) {
        std::vector<int> col = column_entries(t, k);
        std::sort(col.rbegin(), col.rend());
        for (int e : col) {
            bool placed = false;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (static_cast<int>(rows[i].size()) != k - 1) continue;
                const int left = rows[i].back();
                if (strict_left ? left > e : left >= e) {
                    rows[i].push_back(e);
                    record(steps, e, static_cast<int>(i) + 1, k);
                    placed = true;
                    break;
                }
            }
            if (!placed)
                throw std::logic_error("rho placement failed; input was not valid");
        }
    }
    return Filling(std::move(rows), out_kind);
}

// Sorts every column of f (descending; strictly so for valid input of the
// column-strict kind) into the top-justified diagram of lambda(shape).
Filling rho_inv_generic(const Filling& f, FillingKind out_kind,
                        std::vector<PlacementStep>* steps) {
    const Partition lambda = lambda_of(f.shape());
    std::vector<std::vector<int>> cols;
    for (int k = 1; k <= f.max_part(); ++k) {
        cols.push_back(column_entries(f, k));
        std::sort(cols.back().rbegin(), cols.back().rend());
    }
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= lambda.length(); ++i) {
        std::vector<int> row;
        for (int k = 1; k <= lambda.parts()[i - 1]; ++k) row.push_back(cols[k - 1][i - 1]);
        rows.push_back(std::move(row));
    }
    if (steps) {
        const int width = lambda.empty() ? 0 : lambda.parts().front();
        for (int k = 1; k <= width; ++k)
            for (int i = 1; i <= lambda.length(); ++i)
                if (k <= lambda.parts()[i - 1]) record(steps, rows[i - 1][k - 1], i, k);
    }
    return Filling(std::move(rows), out_kind);
}

Filling transpose_impl(const Filling& t, std::vector<PlacementStep>* steps) {
    if (t.kind() != FillingKind::ReverseRowStrict &&
        t.kind() != FillingKind::ReverseColumnStrict)
        throw std::invalid_argument("transpose: input must be RRS or RCS");
    if (lambda_of(t.shape()).as_composition() != t.shape())
        throw std::invalid_argument("transpose: shape must be a partition");
    const FillingKind out_kind = t.kind() == FillingKind::ReverseRowStrict
                                     ? FillingKind::ReverseColumnStrict
                                     : FillingKind::ReverseRowStrict;
    const Partition conj = conjugate(lambda_of(t.shape()));
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= conj.length(); ++i) {
        std::vector<int> row;
        for (int k = 1; k <= conj.parts()[i - 1]; ++k) {
            row.push_back(t.entry(k, i));
            record(steps, t.entry(k, i), i, k);
        }
        rows.push_back(std::move(row));
    }
    return Filling(std::move(rows), out_kind);
}

Filling phi_impl(const Filling& f, std::vector<PlacementStep>* steps) {
    require(f, FillingKind::CSCT, "phi");
    // cols[k-1]: entries of column k sorted descending, so cols[k-1][j-1] is
    // the j-th largest entry of column k.
    std::vector<std::vector<int>> cols;
    std::size_t depth = 0;
    for (int k = 1; k <= f.max_part(); ++k) {
        cols.push_back(column_entries(f, k));
        std::sort(cols.back().rbegin(), cols.back().rend());
        depth = std::max(depth, cols.back().size());
    }
    std::vector<int> first;
    for (const auto& col : cols)
        if (!col.empty()) first.push_back(col.front());
    std::sort(first.begin(), first.end());
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < first.size(); ++i) {
        rows.push_back({first[i]});
        record(steps, first[i], static_cast<int>(i) + 1, 1);
    }
    for (std::size_t j = 2; j <= depth; ++j) {
        // C_j, largest first; ties come from the earlier source column.
        std::vector<int> collection;
        for (const auto& col : cols)
            if (col.size() >= j) collection.push_back(col[j - 1]);
        std::stable_sort(collection.begin(), collection.end(), std::greater<int>());
        for (int e : collection) {
            bool placed = false;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() != j - 1) continue;
                if (rows[i].back() > e) {
                    rows[i].push_back(e);
                    record(steps, e, static_cast<int>(i) + 1, static_cast<int>(j));
                    placed = true;
                    break;
                }
            }
            if (!placed) throw std::logic_error("phi placement failed; input was not valid");
        }
    }
    return Filling(std::move(rows), FillingKind::RSCT);
}

}  // namespace

Filling rho_row(const Filling& t) {
    require(t, FillingKind::ReverseRowStrict, "rho_row");
    return rho_generic(t, true, FillingKind::RSCT, nullptr);
}

Filling rho_row_inv(const Filling& f) {
    require(f, FillingKind::RSCT, "rho_row_inv");
    return rho_inv_generic(f, FillingKind::ReverseRowStrict, nullptr);
}

Filling rho_col(const Filling& t) {
    require(t, FillingKind::ReverseColumnStrict, "rho_col");
    return rho_generic(t, false, FillingKind::CSCT, nullptr);
}

Filling rho_col_inv(const Filling& f) {
    require(f, FillingKind::CSCT, "rho_col_inv");
    return rho_inv_generic(f, FillingKind::ReverseColumnStrict, nullptr);
}

Filling transpose(const Filling& t) { return transpose_impl(t, nullptr); }

Filling phi(const Filling& f) { return phi_impl(f, nullptr); }

Filling phi_inv(const Filling& f) {
    require(f, FillingKind::RSCT, "phi_inv");
    return rho_col(transpose(rho_row_inv(f)));
}

BijectionTrace rho_row_traced(const Filling& t) {
    require(t, FillingKind::ReverseRowStrict, "rho_row");
    BijectionTrace trace{t, Filling(), {}};
    trace.output = rho_generic(t, true, FillingKind::RSCT, &trace.steps);
    return trace;
}

BijectionTrace rho_row_inv_traced(const Filling& f) {
    require(f, FillingKind::RSCT, "rho_row_inv");
    BijectionTrace trace{f, Filling(), {}};
    trace.output = rho_inv_generic(f, FillingKind::ReverseRowStrict, &trace.steps);
    return trace;
}

BijectionTrace rho_col_traced(const Filling& t) {
    require(t, FillingKind::ReverseColumnStrict, "rho_col");
    BijectionTrace trace{t, Filling(), {}};
    trace.output = rho_generic(t, false, FillingKind::CSCT, &trace.steps);
    return trace;
}

BijectionTrace rho_col_inv_traced(const Filling& f) {
    require(f, FillingKind::CSCT, "rho_col_inv");
    BijectionTrace trace{f, Filling(), {}};
    trace.output = rho_inv_generic(f, FillingKind::ReverseColumnStrict, &trace.steps);
    return trace;
}

BijectionTrace transpose_traced(const Filling& t) {
    BijectionTrace trace{t, Filling(), {}};
    trace.output = transpose_impl(t, &trace.steps);
    return trace;
}

BijectionTrace phi_traced(const Filling& f) {
    BijectionTrace trace{f, Filling(), {}};
    trace.output = phi_impl(f, &trace.steps);
    return trace;
}

// The composite's trace records the placements of its final stage, which
// writes every output cell once.
BijectionTrace phi_inv_traced(const Filling& f) {
    require(f, FillingKind::RSCT, "phi_inv");
    const Filling rcs = transpose(rho_row_inv(f));
    BijectionTrace trace{f, Filling(), {}};
    trace.output = rho_generic(rcs, false, FillingKind::CSCT, &trace.steps);
    return trace;
}

}  // namespace qsym
