#include "qsym/expansions.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsym {

const std::vector<Filling>& EnumerationCache::get(const Key& key) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const auto& [shape_parts, kind, max_entry, standard] = key;
    const Composition shape(shape_parts);
    std::vector<Filling> result = standard ? enumerate_standard_fillings(shape, kind)
                                           : enumerate_fillings(shape, kind, max_entry);
    return memo_.emplace(key, std::move(result)).first->second;
}

const std::vector<Filling>& EnumerationCache::fillings(const Composition& shape,
                                                       FillingKind kind, int max_entry) {
    return get({shape.parts(), kind, max_entry, false});
}

const std::vector<Filling>& EnumerationCache::standard_fillings(const Composition& shape,
                                                                FillingKind kind) {
    return get({shape.parts(), kind, shape.degree(), true});
}

std::size_t EnumerationCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.size();
}

EnumerationCache& EnumerationCache::global() {
    static EnumerationCache instance;
    return instance;
}

namespace {

EnumerationCache* cache_or_global(EnumerationCache* cache) {
    return cache ? cache : &EnumerationCache::global();
}

// Tally of packed-weight tableaux by collapsed weight.
QSymElement monomial_expansion(const Composition& shape, FillingKind kind,
                               EnumerationCache* cache) {
    QSymElement out(Basis::M, shape.degree());
    for (const Filling& f : cache_or_global(cache)->fillings(shape, kind, shape.degree())) {
        const WeakComposition w = weight(f);
        if (w.is_packed()) out.add_term(w.collapse(), 1);
    }
    return out;
}

// Tally of standard tableaux by descent composition.
QSymElement fundamental_expansion(const Composition& shape, FillingKind kind,
                                  DescentFlavor flavor, EnumerationCache* cache) {
    QSymElement out(Basis::F, shape.degree());
    for (const Filling& f : cache_or_global(cache)->standard_fillings(shape, kind))
        out.add_term(descent_composition(descent_set(f, flavor), shape.degree()), 1);
    return out;
}

}  // namespace

QSymElement rs_in_m(const Composition& alpha, EnumerationCache* cache) {
    return monomial_expansion(alpha, FillingKind::RSCT, cache);
}

QSymElement qs_in_m(const Composition& alpha, EnumerationCache* cache) {
    return monomial_expansion(alpha, FillingKind::CSCT, cache);
}

QSymElement rs_in_f(const Composition& alpha, EnumerationCache* cache) {
    return fundamental_expansion(alpha, FillingKind::RSCT, DescentFlavor::TransposeDescent,
                                 cache);
}

QSymElement qs_in_f(const Composition& alpha, EnumerationCache* cache) {
    return fundamental_expansion(alpha, FillingKind::CSCT, DescentFlavor::Descent, cache);
}

QSymElement schur_in_m(const Partition& lambda, EnumerationCache* cache) {
    return monomial_expansion(lambda.as_composition(), FillingKind::ReverseColumnStrict,
                              cache);
}

QSymElement schur_in_f(const Partition& lambda, EnumerationCache* cache) {
    return fundamental_expansion(lambda.as_composition(), FillingKind::ReverseColumnStrict,
                                 DescentFlavor::Descent, cache);
}

QSymElement m_coordinates(Basis basis, const Composition& alpha, EnumerationCache* cache) {
    switch (basis) {
        case Basis::M: return QSymElement::unit(Basis::M, alpha);
        case Basis::F: return f_to_m(QSymElement::unit(Basis::F, alpha));
        case Basis::QS: return qs_in_m(alpha, cache);
        case Basis::RS: return rs_in_m(alpha, cache);
    }
    throw std::logic_error("m_coordinates: bad basis");
}

TransitionMatrix make_transition_matrix(Basis from, Basis to, int n, EnumerationCache* cache) {
    return make_transition_matrix(from, to, n, compositions_of(n), compositions_of(n), cache);
}

TransitionMatrix make_transition_matrix(Basis from, Basis to, int n,
                                        std::vector<Composition> row_order,
                                        std::vector<Composition> col_order,
                                        EnumerationCache* cache) {
    EnumerationCache* c = cache_or_global(cache);
    return transition_matrix(from, to, n, std::move(row_order), std::move(col_order),
                             [c](Basis b, const Composition& alpha) {
                                 return m_coordinates(b, alpha, c);
                             });
}

namespace {

void specialize_rec(const std::vector<int>& beta, int k, int next_var, std::size_t part,
                    std::vector<int>& exponents, const Int& coeff,
                    std::map<std::vector<int>, Int>& out) {
    if (part == beta.size()) {
        auto [it, inserted] = out.emplace(exponents, coeff);
        if (!inserted) it->second += coeff;
        return;
    }
    const int remaining = static_cast<int>(beta.size() - part);
    for (int v = next_var; v + remaining - 1 <= k; ++v) {
        exponents[v - 1] = beta[part];
        specialize_rec(beta, k, v + 1, part + 1, exponents, coeff, out);
        exponents[v - 1] = 0;
    }
}

}  // namespace

std::map<std::vector<int>, Int> specialize(const QSymElement& m_element, int k) {
    if (m_element.basis() != Basis::M)
        throw std::invalid_argument("specialize: expected an M-basis element");
    if (k < 0) throw std::invalid_argument("specialize: k must be >= 0");
    std::map<std::vector<int>, Int> out;
    std::vector<int> exponents(k, 0);
    for (const auto& [beta, c] : m_element.terms()) {
        if (beta.length() > k) continue;
        specialize_rec(beta.parts(), k, 1, 0, exponents, c, out);
    }
    return out;
}

ExpansionReport expand_report(const std::string& family, const Composition& index,
                              Basis target, EnumerationCache* cache) {
    if (target != Basis::M && target != Basis::F)
        throw std::invalid_argument("expand_report: target must be M or F");
    QSymElement element(target, index.degree());
    if (family == "RS") {
        element = target == Basis::M ? rs_in_m(index, cache) : rs_in_f(index, cache);
    } else if (family == "QS") {
        element = target == Basis::M ? qs_in_m(index, cache) : qs_in_f(index, cache);
    } else if (family == "Schur") {
        const Partition lambda(index.parts());
        element = target == Basis::M ? schur_in_m(lambda, cache) : schur_in_f(lambda, cache);
    } else {
        throw std::invalid_argument("expand_report: unknown family '" + family + "'");
    }
    Int witnesses = 0;
    for (const auto& [alpha, c] : element.terms()) witnesses += c;
    return {family, index, target, std::move(element), witnesses};
}

bool VerificationReport::all_pass() const {
    for (const auto& item : items)
        if (!item.pass) return false;
    return true;
}

namespace {

VerificationItem check(std::string subject, bool pass, std::string detail_on_failure) {
    return {std::move(subject), pass, pass ? "" : std::move(detail_on_failure)};
}

}  // namespace

VerificationReport verify_schur_decompositions(int n, EnumerationCache* cache) {
    if (n < 0) throw std::invalid_argument("verify_schur_decompositions: n must be >= 0");
    VerificationReport report{"schur", {}};
    const std::vector<Composition> comps = compositions_of(n);
    for (const Partition& lambda : partitions_of(n)) {
        const QSymElement schur = schur_in_m(lambda, cache);
        const Partition conj = conjugate(lambda);
        QSymElement qs_sum(Basis::M, n), rs_sum(Basis::M, n);
        for (const Composition& alpha : comps) {
            if (lambda_of(alpha) == lambda) qs_sum += qs_in_m(alpha, cache);
            if (lambda_of(alpha) == conj) rs_sum += rs_in_m(alpha, cache);
        }
        report.items.push_back(check(
            "s(" + lambda.str() + ") = sum of QS over rearrangements of " + lambda.str(),
            qs_sum == schur, "QS sum " + qs_sum.str() + " != " + schur.str()));
        report.items.push_back(check(
            "s(" + lambda.str() + ") = sum of RS over rearrangements of " + conj.str(),
            rs_sum == schur, "RS sum " + rs_sum.str() + " != " + schur.str()));
    }
    return report;
}

VerificationReport verify_omega_theorem(int n, EnumerationCache* cache) {
    if (n < 0) throw std::invalid_argument("verify_omega_theorem: n must be >= 0");
    VerificationReport report{"omega", {}};
    for (const Composition& alpha : compositions_of(n)) {
        const QSymElement lhs = f_to_m(omega(qs_in_f(alpha, cache)));
        const QSymElement rhs = reverse_variables(rs_in_m(alpha, cache));
        report.items.push_back(check(
            "omega(QS(" + alpha.str() + ")) = RS(" + alpha.str() + ") in reversed variables",
            lhs == rhs, lhs.str() + " != " + rhs.str()));
    }
    return report;
}

VerificationReport verify_triangularity(int n, EnumerationCache* cache) {
    if (n < 0) throw std::invalid_argument("verify_triangularity: n must be >= 0");
    VerificationReport report{"triangularity", {}};
    std::vector<Composition> rows = compositions_of(n);
    std::vector<Composition> cols = rows;
    std::sort(cols.begin(), cols.end(), [](const Composition& a, const Composition& b) {
        return revlex_compare(complement(a), complement(b)) > 0;
    });
    const TransitionMatrix matrix =
        make_transition_matrix(Basis::RS, Basis::F, n, rows, cols, cache);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool ok = matrix.entries[i][i] == 1;
        std::string bad;
        for (std::size_t j = 0; ok && j < i; ++j)
            if (matrix.entries[i][j] != 0) {
                ok = false;
                bad = " has a nonzero below-diagonal entry at column " + cols[j].str();
            }
        report.items.push_back(check("RS(" + rows[i].str() + ") row is unitriangular", ok,
                                     "row " + rows[i].str() +
                                         (bad.empty() ? " has diagonal != 1" : bad)));
    }
    return report;
}

}  // namespace qsym
