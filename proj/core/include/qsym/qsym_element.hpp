#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "qsym/composition.hpp"

namespace qsym {

// Exact coefficient arithmetic: arbitrary precision, no silent wraparound.
using Int = boost::multiprecision::cpp_int;

enum class Basis { M, F, QS, RS };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

/*
 * A homogeneous quasisymmetric function of one degree, stored as a sparse
 * integer combination of basis elements indexed by compositions of that
 * degree.  M is the monomial basis, F the fundamental basis
 * (F_alpha = sum of M_beta over refinements beta of alpha); QS and RS are
 * formal tags for the quasisymmetric Schur and row-strict quasisymmetric
 * Schur bases, whose M-coordinates come from tableau enumeration elsewhere.
 * Terms iterate in revlex-descending composition order and zero
 * coefficients are never stored.
 */
class QSymElement {
public:
    using TermMap = std::map<Composition, Int, RevlexDescending>;

    QSymElement(Basis basis, int degree);
    static QSymElement unit(Basis basis, const Composition& alpha);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Composition& alpha) const;
    // Adds c * basis_alpha; throws std::invalid_argument on a degree
    // mismatch.
    void add_term(const Composition& alpha, const Int& c);

    QSymElement& operator+=(const QSymElement& other);
    QSymElement& operator-=(const QSymElement& other);
    QSymElement& operator*=(const Int& scalar);
    friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
    friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
    bool operator==(const QSymElement&) const = default;

    // "F(2,1,1) + F(1,2,1)", "M(3) - 2*M(2,1)", "0".
    std::string str() const;

private:
    Basis basis_;
    int degree_;
    TermMap terms_;
};

// F_alpha = sum of M_beta over refinements beta <= alpha.
QSymElement f_to_m(const QSymElement& f);

// Moebius inversion of the refinement sum:
// M_alpha = sum over beta <= alpha of (-1)^(l(beta) - l(alpha)) F_beta.
QSymElement m_to_f(const QSymElement& m);

// The involution omega on the fundamental basis:
// omega(F_alpha) = F_{reverse(complement(alpha))}.
QSymElement omega(const QSymElement& f);

// Index reversal M_beta -> M_{reverse(beta)}, the coordinate form of
// reversing a finite variable list.
QSymElement reverse_variables(const QSymElement& m);

}  // namespace qsym
