#pragma once

#include <set>
#include <string>
#include <vector>

#include "qsym/composition.hpp"

namespace qsym {

/*
 * A filling assigns a positive integer to every cell of a composition
 * diagram (row i holds shape_i left-justified cells, rows listed top to
 * bottom in English notation).  Four kinds are distinguished:
 *
 *   ReverseRowStrict    partition shape; rows strictly decrease left to
 *                       right, columns weakly decrease top to bottom.
 *   ReverseColumnStrict partition shape; rows weakly decrease, columns
 *                       strictly decrease.
 *   RSCT                row-strict composition tableau: rows strictly
 *                       decrease, the leftmost column weakly increases top
 *                       to bottom, and the zero-supplemented filling F^
 *                       (the diagram padded with 0s to an l x m rectangle)
 *                       satisfies the row-strict triple rule
 *                         i < j, k >= 2:
 *                         F^(j,k) > F^(i,k)  =>  F^(j,k) >= F^(i,k-1).
 *   CSCT                column-strict composition tableau: rows weakly
 *                       decrease, the leftmost column strictly increases,
 *                       and F^ satisfies the column-strict triple rule
 *                         i < j, k >= 2:
 *                         F^(j,k) != 0 and F^(j,k) >= F^(i,k)
 *                           =>  F^(j,k) > F^(i,k-1).
 *
 * The zero supplement is virtual: entry(i, k) returns 0 outside the shape
 * and zeros are never stored.
 */
enum class FillingKind { ReverseRowStrict, ReverseColumnStrict, RSCT, CSCT };

std::string kind_name(FillingKind kind);          // "RRS", "RCS", "RSCT", "CSCT"
FillingKind kind_from_name(const std::string&);   // accepts the names above

class Filling {
public:
    Filling() : kind_(FillingKind::RSCT) {}
    Filling(std::vector<std::vector<int>> rows, FillingKind kind);
    // Validates that row i has exactly shape_i entries.
    Filling(Composition shape, std::vector<std::vector<int>> rows, FillingKind kind);

    const Composition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    FillingKind kind() const { return kind_; }

    int row_count() const { return static_cast<int>(rows_.size()); }
    int max_part() const;            // m: widest row, 0 for the empty filling
    int cell_count() const { return shape_.degree(); }

    // 1-indexed access with virtual zero supplement: 0 outside the shape.
    int entry(int i, int k) const;

    bool operator==(const Filling&) const = default;

private:
    Composition shape_;
    std::vector<std::vector<int>> rows_;
    FillingKind kind_;
};

// Validity predicates.  Each checks the full defining conditions of its
// kind and returns false (never throws) on any violation, including a
// non-partition shape for the two partition-shaped kinds.  The empty
// filling is valid for every kind.
bool is_reverse_row_strict(const Filling& t);
bool is_reverse_column_strict(const Filling& t);
bool is_rsct(const Filling& f);
bool is_csct(const Filling& f);

// Dispatches on f.kind().
bool is_valid(const Filling& f);

// Throws std::invalid_argument when !is_valid(f); used to guard user input.
void validate(const Filling& f);

// Weight: w_v = number of cells holding the value v, for v = 1..max entry.
WeakComposition weight(const Filling& f);

// A standard filling holds each of 1..n exactly once, n = cell count.
bool is_standard(const Filling& f);

/*
 * Standardization replaces the w_1 copies of 1 by 1..w_1, then the w_2
 * copies of 2 by w_1+1..w_1+w_2, and so on.  Equal entries are renumbered
 * in the kind's canonical order:
 *
 *   ReverseRowStrict    bottom to top (equal entries sit in distinct rows,
 *                       lower ones weakly left);
 *   ReverseColumnStrict right to left (equal entries sit in distinct
 *                       columns);
 *   RSCT                leftmost column top to bottom first, then the
 *                       remaining columns left to right, within a column
 *                       bottom to top;
 *   CSCT                right to left (equal entries sit in distinct
 *                       columns, as in the column-strict partition case).
 *
 * The result is a standard filling of the same shape and kind.
 */
Filling standardize(const Filling& f);

/*
 * Descent sets of a standard filling (throws std::invalid_argument when the
 * filling is not standard):
 *
 *   Descent          D(T)  = { i : i+1 lies in a column weakly right of i }
 *   TransposeDescent D'(T) = { i : i+1 lies in a column strictly left of i }
 *
 * The two conditions are complementary, so D and D' partition [n-1].
 */
enum class DescentFlavor { Descent, TransposeDescent };

struct DescentSet {
    std::set<int> values;
    DescentFlavor flavor;
};

DescentSet descent_set(const Filling& f, DescentFlavor flavor);

// beta(D): the composition of n whose partial sums are the descent values.
Composition descent_composition(const DescentSet& d, int n);

/*
 * Reading word: columns right to left, within each column top to bottom.
 * The modified word reads the zero-supplemented diagram F~ instead, which
 * appends a single 0 after the rightmost cell of every row; in particular
 * every leftmost-column cell is read last.
 */
std::vector<int> reading_word(const Filling& f, bool modified);

// Left-justified row layout with aligned columns, one row per line.
std::string pretty(const Filling& f);

}  // namespace qsym
