#pragma once

#include <functional>
#include <vector>

#include "qsym/qsym_element.hpp"

namespace qsym {

/*
 * Exact change-of-basis matrix: entries[i][j] is the coefficient of the
 * to-basis element indexed by col_order[j] in the expansion of the
 * from-basis element indexed by row_order[i], so that
 *
 *     from_i = sum_j entries[i][j] * to_j.
 */
struct TransitionMatrix {
    Basis from;
    Basis to;
    int degree = 0;
    std::vector<Composition> row_order;
    std::vector<Composition> col_order;
    std::vector<std::vector<Int>> entries;

    bool operator==(const TransitionMatrix&) const = default;
};

// Supplies the M-basis coordinates of a basis element.
using MCoordsFn = std::function<QSymElement(Basis, const Composition&)>;

/*
 * Solves for the change of basis through M coordinates with exact rational
 * elimination: writing C and D for the M-coordinate matrices of the from-
 * and to-bases, the result X satisfies X * D = C; the solution is verified
 * by re-multiplication and checked to be integral.  row_order and col_order
 * must each list every composition of n exactly once.  Throws
 * std::runtime_error when the to-family fails to be a basis (singular D —
 * impossible for M, F, QS, RS) and std::invalid_argument on bad orders.
 */
TransitionMatrix transition_matrix(Basis from, Basis to, int n,
                                   std::vector<Composition> row_order,
                                   std::vector<Composition> col_order,
                                   const MCoordsFn& m_coords);

}  // namespace qsym
