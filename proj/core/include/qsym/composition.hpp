#pragma once

#include <set>
#include <string>
#include <vector>

namespace qsym {

/*
 * A composition alpha = (alpha_1, ..., alpha_k) of n is a finite sequence of
 * positive integers summing to n.  Compositions of n correspond bijectively
 * to subsets of [n-1] = {1, ..., n-1}: the partial-sum map
 *
 *     S(alpha) = { alpha_1, alpha_1 + alpha_2, ..., alpha_1 + ... + alpha_{k-1} }
 *
 * has inverse beta({s_1 < ... < s_k}) = (s_1, s_2 - s_1, ..., n - s_k).
 * The empty composition (degree 0, no parts) is admitted everywhere and
 * serializes as the empty string.
 */
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    // Parses the canonical form "2,1,2,1"; the empty string parses to the
    // empty composition.  Throws std::invalid_argument on anything else.
    static Composition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    std::string str() const;  // canonical comma-separated form

    bool operator==(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

// A partition is a composition whose parts weakly decrease.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Composition as_composition() const { return Composition(parts_); }
    std::string str() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

// A weak composition allows zero parts; collapse() drops them.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }

    // True when the positive parts form a prefix with no internal zeros,
    // i.e. the parts are (b_1, ..., b_k, 0, ..., 0) with every b_i > 0.
    bool is_packed() const;

    Composition collapse() const;

    bool operator==(const WeakComposition&) const = default;

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

// All compositions of n >= 0, each exactly once, sorted revlex-descending
// (see revlex_compare below); for n = 4 the order is
// 4, 31, 13, 22, 211, 121, 112, 1111.  Throws std::invalid_argument if n < 0.
std::vector<Composition> compositions_of(int n);

// All partitions of n >= 0 in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

// S(alpha): the partial sums of alpha except the last (= degree), a subset
// of [n-1].
std::set<int> subset_of(const Composition& alpha);

// beta(P): the composition of n determined by the subset P of [n-1] via
// consecutive differences.  Elements equal to n are tolerated and contribute
// nothing (the trailing difference n - s_k collapses to an empty part);
// elements outside [1, n] throw std::invalid_argument.
Composition composition_from_subset(const std::set<int>& p, int n);

// The complement alpha~ = beta(S(alpha)^c), with the complement taken
// inside [n-1].
Composition complement(const Composition& alpha);

// alpha read backwards.
Composition reversed(const Composition& alpha);

// Refinement order: a <= b iff a is obtained by splitting parts of b into
// consecutive chunks, equivalently S(b) is a subset of S(a).  Returns false
// when degrees differ.
bool refinement_leq(const Composition& a, const Composition& b);

// lambda(alpha): the parts sorted weakly decreasing.
Partition lambda_of(const Composition& alpha);

// Conjugate partition: lambda'_i = #{ j : lambda_j >= i }.
Partition conjugate(const Partition& lambda);

// Dominance (partial) order on partitions of equal degree: mu <= lambda iff
// mu_1 + ... + mu_i <= lambda_1 + ... + lambda_i for all i.  Throws
// std::invalid_argument when the degrees differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/*
 * Reverse lexicographic total order on compositions of equal degree:
 * alpha >_r beta iff lambda(alpha) strictly dominates lambda(beta), with
 * lambda-ties broken lexicographically on the compositions themselves and
 * dominance-incomparable lambdas compared lexicographically as sorted
 * sequences.  Whenever two distinct partitions are dominance-comparable the
 * lexicographic comparison agrees with dominance (the first differing
 * partial sum forces the first differing part), so the whole order reduces
 * to: compare lambda(alpha) lexicographically, then alpha lexicographically.
 *
 * revlex_compare returns <0, 0, >0 for alpha <_r beta, equal, alpha >_r beta
 * and throws std::invalid_argument when the degrees differ.
 */
int revlex_compare(const Composition& alpha, const Composition& beta);
bool revlex_leq(const Composition& alpha, const Composition& beta);
bool revlex_geq(const Composition& alpha, const Composition& beta);

// Comparator placing compositions in revlex-descending order (the row and
// column order used for transition matrices).
struct RevlexDescending {
    bool operator()(const Composition& a, const Composition& b) const {
        return revlex_compare(a, b) > 0;
    }
};

}  // namespace qsym
