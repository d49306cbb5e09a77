#pragma once

#include <vector>

#include "qsym/composition.hpp"
#include "qsym/filling.hpp"

namespace qsym {

/*
 * All valid fillings of the given shape and kind with entries in
 * 1..max_entry, each exactly once, sorted row-major lexicographically on
 * their entry sequences (rows concatenated top to bottom).
 *
 * The search fills cells column by column, left to right and top to bottom
 * within a column.  In that order every defining constraint - row
 * monotonicity, leftmost-column monotonicity, and each triple-rule instance
 * (i,k),(j,k),(i,k-1) - involves only cells at or before the cell being
 * placed (virtual zero cells are known from the shape alone), so partial
 * fillings are pruned exactly and every leaf is valid by construction.
 *
 * Throws std::invalid_argument when the kind requires a partition shape and
 * the shape is not one, or when max_entry < 0.
 */
std::vector<Filling> enumerate_fillings(const Composition& shape, FillingKind kind,
                                        int max_entry);

// Standard fillings only: entries exactly 1..n, n = cell count, same order
// contract as enumerate_fillings.
std::vector<Filling> enumerate_standard_fillings(const Composition& shape, FillingKind kind);

}  // namespace qsym
