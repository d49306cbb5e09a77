#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "qsym/composition.hpp"
#include "qsym/enumerate.hpp"
#include "qsym/filling.hpp"
#include "qsym/qsym_element.hpp"
#include "qsym/transition.hpp"

namespace qsym {

/*
 * Memoizes enumeration results per (shape, kind, max_entry, standard).
 * Safe to share across threads; results are identical to calling the
 * enumerators directly.  load/save exchange the memo with a JSON file
 * (load ignores a missing file, save overwrites).
 */
class EnumerationCache {
public:
    const std::vector<Filling>& fillings(const Composition& shape, FillingKind kind,
                                         int max_entry);
    const std::vector<Filling>& standard_fillings(const Composition& shape, FillingKind kind);

    void load(const std::string& path);
    void save(const std::string& path) const;
    std::size_t size() const;

    static EnumerationCache& global();

private:
    using Key = std::tuple<std::vector<int>, FillingKind, int, bool>;
    const std::vector<Filling>& get(const Key& key);

    mutable std::mutex mutex_;
    std::map<Key, std::vector<Filling>> memo_;
};

/*
 * Monomial-basis expansions.  The coefficient of M_beta counts the
 * tableaux of the given shape whose weight is exactly (beta_1, ...,
 * beta_k, 0, 0, ...) — packed weights only; tableaux whose value set has
 * gaps repeat a quasisymmetric shift of a packed one and are not counted.
 *
 *   rs_in_m     row-strict composition tableaux of shape alpha
 *   qs_in_m     column-strict composition tableaux of shape alpha
 *   schur_in_m  reverse column-strict tableaux of shape lambda
 *
 * Fundamental-basis expansions count standard tableaux by descent
 * composition:
 *
 *   rs_in_f     standard RSCT, beta(D'(T)) with the strictly-left flavor
 *   qs_in_f     standard CSCT, beta(D(T)) with the weakly-right flavor
 *   schur_in_f  standard reverse column-strict tableaux, beta(D(T))
 *
 * All coefficients are nonnegative; passing a null cache uses the global
 * one.
 */
QSymElement rs_in_m(const Composition& alpha, EnumerationCache* cache = nullptr);
QSymElement qs_in_m(const Composition& alpha, EnumerationCache* cache = nullptr);
QSymElement rs_in_f(const Composition& alpha, EnumerationCache* cache = nullptr);
QSymElement qs_in_f(const Composition& alpha, EnumerationCache* cache = nullptr);
QSymElement schur_in_m(const Partition& lambda, EnumerationCache* cache = nullptr);
QSymElement schur_in_f(const Partition& lambda, EnumerationCache* cache = nullptr);

// M-coordinates of a basis element of any of the four bases.
QSymElement m_coordinates(Basis basis, const Composition& alpha,
                          EnumerationCache* cache = nullptr);

// transition_matrix wired to m_coordinates; the two-argument order defaults
// to revlex descending on both sides.
TransitionMatrix make_transition_matrix(Basis from, Basis to, int n,
                                        EnumerationCache* cache = nullptr);
TransitionMatrix make_transition_matrix(Basis from, Basis to, int n,
                                        std::vector<Composition> row_order,
                                        std::vector<Composition> col_order,
                                        EnumerationCache* cache = nullptr);

// The polynomial in x_1..x_k obtained from an M-basis element:
// M_beta(x_1..x_k) = sum over 1 <= i_1 < ... < i_l <= k of prod x_{i_j}^{beta_j}.
// Keys are exponent vectors of length k.
std::map<std::vector<int>, Int> specialize(const QSymElement& m_element, int k);

struct ExpansionReport {
    std::string family;  // "RS", "QS", or "Schur"
    Composition index;
    Basis target;        // M or F
    QSymElement element;
    Int witness_count;   // tableaux counted into coefficients
};

ExpansionReport expand_report(const std::string& family, const Composition& index,
                              Basis target, EnumerationCache* cache = nullptr);

struct VerificationItem {
    std::string subject;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string name;
    std::vector<VerificationItem> items;
    bool all_pass() const;
};

// s_lambda = sum of QS_alpha over alpha rearranging lambda
//          = sum of RS_alpha over alpha rearranging lambda', in M coordinates.
VerificationReport verify_schur_decompositions(int n, EnumerationCache* cache = nullptr);

// omega(QS_alpha) expanded through M equals RS_alpha with its M indices
// reversed, for every alpha of degree n.
VerificationReport verify_omega_theorem(int n, EnumerationCache* cache = nullptr);

// The RS -> F matrix with rows revlex-descending on alpha and columns
// revlex-descending on the complements beta~ is upper unitriangular.
VerificationReport verify_triangularity(int n, EnumerationCache* cache = nullptr);

}  // namespace qsym
