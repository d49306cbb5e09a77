#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qsym/filling.hpp"

namespace qsym {

struct Cell {
    int row;  // 1-indexed
    int col;
    bool operator==(const Cell&) const = default;
};

/*
 * Result of inserting one value.  `path` lists the cells affected in
 * execution order, each with the coordinates it had at the moment of the
 * action; `new_cell` is the added cell in the final diagram (post-shift
 * coordinates when a new row displaces lower rows).  The result always has
 * exactly one more cell than the input, and the displaced values, read
 * along the path and prefixed by the inserted value, weakly decrease.
 */
struct InsertionResult {
    Filling result;
    std::vector<Cell> path;
    Cell new_cell;
};

/*
 * Dual Schensted row insertion on reverse row-strict tableaux: walk the
 * rows top to bottom; in the current row replace the largest entry y <= x
 * by x and carry y into the next row; if no entry of the row is <= x,
 * append x at the end of the row and stop (a fresh bottom row when the rows
 * are exhausted).  The affected cells move weakly left down the path.
 */
InsertionResult dual_row_insert(const Filling& t, int x);

/*
 * Insertion on row-strict composition tableaux.  Scan the modified reading
 * word of F~ (columns right to left, top to bottom, one appended 0 per row)
 * for the first entry y <= x whose left neighbor in F~ strictly exceeds x:
 * an appended 0 is replaced by x (the row grows) and the procedure stops; a
 * real y is bumped and the scan continues past it carrying y.  When the
 * scan reaches the leftmost column - every leftmost-column cell is read
 * last - the carried value is placed in a new row directly below the last
 * leftmost-column entry less than or equal to it, shifting lower rows down.
 */
InsertionResult rsct_insert(const Filling& f, int x);

// rho_row(T <- x) == rho_row(T) <- x.
bool check_commutation(const Filling& t, int x);

// One scan action of rsct_insert, for step-by-step display.
struct InsertionStep {
    enum class Action { Bump, FillZero, NewRow };
    Action action;
    int carried;                 // value being inserted when the action fired
    int bumped = 0;              // displaced value (Bump only)
    Cell at;                     // acted-on cell (post-shift for NewRow)
    std::vector<int> remaining;  // scan word still ahead after the action
    Filling diagram;             // diagram after the action
};

std::pair<InsertionResult, std::vector<InsertionStep>> rsct_insert_traced(const Filling& f,
                                                                          int x);

/*
 * A finitely supported matrix of nonnegative integers indexed by positive
 * row/column numbers, together with its canonical biword: the pairs (i, j)
 * repeated a_ij times, sorted with the top entries i weakly increasing and
 * the bottom entries j weakly decreasing within each run of equal i.
 */
class BiwordMatrix {
public:
    BiwordMatrix() = default;
    explicit BiwordMatrix(const std::vector<std::vector<int>>& dense);

    void set(int i, int j, int value);  // value >= 0; zero erases
    int get(int i, int j) const;
    bool operator==(const BiwordMatrix&) const = default;

    BiwordMatrix transposed() const;
    std::vector<std::pair<int, int>> biword() const;

    const std::map<std::pair<int, int>, int>& entries() const { return entries_; }

private:
    std::map<std::pair<int, int>, int> entries_;
};

/*
 * Analogue of the RSK correspondence: F is built by inserting the bottom
 * word of the canonical biword of A into the empty RSCT, and G := F(A^T).
 * The two shapes rearrange the same partition, and the pair determines A.
 */
std::pair<Filling, Filling> rsk_pair(const BiwordMatrix& a);

}  // namespace qsym
