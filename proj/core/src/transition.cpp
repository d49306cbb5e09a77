#include "qsym/transition.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>

namespace qsym {

namespace {

using Rational = boost::multiprecision::cpp_rational;

void check_order(const std::vector<Composition>& order, int n, const char* which) {
    const std::vector<Composition> all = compositions_of(n);
    if (order.size() != all.size())
        throw std::invalid_argument(std::string("transition_matrix: ") + which +
                                    " must list every composition of n exactly once");
    std::map<std::vector<int>, int> seen;
    for (const Composition& c : order) {
        if (c.degree() != n)
            throw std::invalid_argument(std::string("transition_matrix: ") + which +
                                        " contains a composition of the wrong degree");
        if (++seen[c.parts()] > 1)
            throw std::invalid_argument(std::string("transition_matrix: ") + which +
                                        " repeats a composition");
    }
}

}  // namespace

TransitionMatrix transition_matrix(Basis from, Basis to, int n,
                                   std::vector<Composition> row_order,
                                   std::vector<Composition> col_order,
                                   const MCoordsFn& m_coords) {
    if (n < 0) throw std::invalid_argument("transition_matrix: n must be >= 0");
    check_order(row_order, n, "row_order");
    check_order(col_order, n, "col_order");

    // A fixed coordinate order for M-expansions.
    const std::vector<Composition> coords = compositions_of(n);
    std::map<std::vector<int>, std::size_t> coord_index;
    for (std::size_t i = 0; i < coords.size(); ++i) coord_index[coords[i].parts()] = i;
    const std::size_t dim = coords.size();

    const auto coords_row = [&](Basis basis, const Composition& alpha) {
        std::vector<Int> row(dim, 0);
        const QSymElement e = m_coords(basis, alpha);
        if (e.basis() != Basis::M || e.degree() != n)
            throw std::logic_error("transition_matrix: coordinate supplier misbehaved");
        for (const auto& [beta, c] : e.terms()) row[coord_index.at(beta.parts())] = c;
        return row;
    };

    std::vector<std::vector<Int>> c_rows, d_rows;
    for (const Composition& alpha : row_order) c_rows.push_back(coords_row(from, alpha));
    for (const Composition& beta : col_order) d_rows.push_back(coords_row(to, beta));

    /*
     * X * D = C with unknown X: solve the transposed system D^T X^T = C^T
     * by Gauss-Jordan elimination over exact rationals on the augmented
     * matrix [D^T | C^T].
     */
    std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(2 * dim));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            aug[r][c] = Rational(d_rows[c][r]);
            aug[r][dim + c] = Rational(c_rows[c][r]);
        }
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (pivot < dim && aug[pivot][col] == 0) ++pivot;
        if (pivot == dim)
            throw std::runtime_error("transition_matrix: the " + basis_name(to) +
                                     " family is singular at degree " + std::to_string(n) +
                                     "; it does not form a basis");
        std::swap(aug[col], aug[pivot]);
        const Rational inv = aug[col][col];
        for (auto& v : aug[col]) v /= inv;
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const Rational factor = aug[r][col];
            for (std::size_t c = col; c < 2 * dim; ++c) aug[r][c] -= factor * aug[col][c];
        }
    }

    TransitionMatrix result;
    result.from = from;
    result.to = to;
    result.degree = n;
    result.entries.assign(row_order.size(), std::vector<Int>(col_order.size(), 0));
    for (std::size_t i = 0; i < row_order.size(); ++i)
        for (std::size_t j = 0; j < col_order.size(); ++j) {
            const Rational& x = aug[j][dim + i];  // X^T[j][i]
            if (denominator(x) != 1)
                throw std::runtime_error(
                    "transition_matrix: non-integer coefficient; the bases are not "
                    "compatible over the integers");
            result.entries[i][j] = numerator(x);
        }

    // Exactness check: re-multiply X * D and compare with C.
    for (std::size_t i = 0; i < row_order.size(); ++i)
        for (std::size_t c = 0; c < dim; ++c) {
            Int sum = 0;
            for (std::size_t j = 0; j < col_order.size(); ++j)
                sum += result.entries[i][j] * d_rows[j][c];
            if (sum != c_rows[i][c])
                throw std::logic_error("transition_matrix: verification failed");
        }

    result.row_order = std::move(row_order);
    result.col_order = std::move(col_order);
    return result;
}

}  // namespace qsym
