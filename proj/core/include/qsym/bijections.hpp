#pragma once

#include <vector>

#include "qsym/filling.hpp"

namespace qsym {

/*
 * Shape-rearranging bijections between partition-shaped reverse tableaux
 * and composition tableaux:
 *
 *   rho_row  ReverseRowStrict    -> RSCT   (same column multisets)
 *   rho_col  ReverseColumnStrict -> CSCT   (same column multisets)
 *   transpose ReverseRowStrict  <-> ReverseColumnStrict (conjugate shape)
 *   phi      CSCT -> RSCT  (underlying partitions conjugate to each other)
 *
 * rho_row sends the first column of T, sorted weakly increasing, to the
 * first column of the image; the entries of each later column k are then
 * placed largest first, each into the highest row whose column-k cell is
 * empty and whose column-(k-1) entry strictly exceeds it.  rho_col is the
 * column-strict analogue: the first column is sorted strictly increasing
 * and placements require the left neighbor to weakly exceed the entry.
 * The inverses simply sort each column (weakly decreasing for rho_row_inv,
 * strictly decreasing for rho_col_inv) into the top-justified partition
 * diagram.
 *
 * phi collects C_j, the j-th largest entry of every column that has one;
 * C_1 sorted weakly increasing forms the leftmost column, and for j >= 2
 * the entries of C_j are placed largest first (ties taken from the earlier
 * source column first) into the highest unoccupied cell of column j whose
 * left neighbor strictly exceeds the entry.  phi_inv is the composite
 * rho_col . transpose . rho_row_inv.
 *
 * Inputs are checked for the expected kind tag (and transpose for a
 * partition shape); the kind's validity predicate itself is the caller's
 * contract and is not re-verified, so the placement algorithms run on any
 * filling for which every step succeeds.  A placement with no admissible
 * position raises std::logic_error; on kind-valid input this cannot happen
 * and the stated postconditions hold.
 */
Filling rho_row(const Filling& t);
Filling rho_row_inv(const Filling& f);
Filling rho_col(const Filling& t);
Filling rho_col_inv(const Filling& f);
Filling transpose(const Filling& t);
Filling phi(const Filling& f);
Filling phi_inv(const Filling& f);

// One placement: `entry` written into (row, col) of the output (1-indexed).
struct PlacementStep {
    int entry;
    int row;
    int col;
    bool operator==(const PlacementStep&) const = default;
};

// Placement-by-placement record of a bijection.  Every output cell is
// written exactly once, so replaying the steps onto an empty diagram
// rebuilds `output`.
struct BijectionTrace {
    Filling input;
    Filling output;
    std::vector<PlacementStep> steps;
};

BijectionTrace rho_row_traced(const Filling& t);
BijectionTrace rho_row_inv_traced(const Filling& f);
BijectionTrace rho_col_traced(const Filling& t);
BijectionTrace rho_col_inv_traced(const Filling& f);
BijectionTrace transpose_traced(const Filling& t);
BijectionTrace phi_traced(const Filling& f);
BijectionTrace phi_inv_traced(const Filling& f);

}  // namespace qsym
