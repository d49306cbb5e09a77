#include "qsym/qsym_element.hpp"

#include <stdexcept>

namespace qsym {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::F: return "F";
        case Basis::QS: return "QS";
        case Basis::RS: return "RS";
    }
    throw std::logic_error("basis_name: bad basis");
}

Basis basis_from_name(const std::string& name) {
    if (name == "M") return Basis::M;
    if (name == "F") return Basis::F;
    if (name == "QS") return Basis::QS;
    if (name == "RS") return Basis::RS;
    throw std::invalid_argument("basis_from_name: unknown basis '" + name + "'");
}

QSymElement::QSymElement(Basis basis, int degree) : basis_(basis), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("QSymElement: degree must be >= 0");
}

QSymElement QSymElement::unit(Basis basis, const Composition& alpha) {
    QSymElement e(basis, alpha.degree());
    e.add_term(alpha, 1);
    return e;
}

Int QSymElement::coeff(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Int(0) : it->second;
}

void QSymElement::add_term(const Composition& alpha, const Int& c) {
    if (alpha.degree() != degree_)
        throw std::invalid_argument("QSymElement::add_term: composition of degree " +
                                    std::to_string(alpha.degree()) + " in element of degree " +
                                    std::to_string(degree_));
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QSymElement& QSymElement::operator+=(const QSymElement& other) {
    if (basis_ != other.basis_ || degree_ != other.degree_)
        throw std::invalid_argument("QSymElement: basis/degree mismatch in arithmetic");
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& other) {
    if (basis_ != other.basis_ || degree_ != other.degree_)
        throw std::invalid_argument("QSymElement: basis/degree mismatch in arithmetic");
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
    return *this;
}

QSymElement& QSymElement::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, c] : terms_) c *= scalar;
    return *this;
}

std::string QSymElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, c] : terms_) {
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        if (first)
            out += negative ? "- " : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1) out += mag.str() + "*";
        out += basis_name(basis_) + "(" + alpha.str() + ")";
        first = false;
    }
    return out;
}

namespace {

void require_basis(const QSymElement& e, Basis b, const char* who) {
    if (e.basis() != b)
        throw std::invalid_argument(std::string(who) + ": expected a " + basis_name(b) +
                                    "-basis element");
}

// All compositions refining alpha: supersets of S(alpha) inside [n-1].
std::vector<Composition> refinements_of(const Composition& alpha) {
    const int n = alpha.degree();
    const std::set<int> s = subset_of(alpha);
    std::vector<int> free;
    for (int i = 1; i < n; ++i)
        if (!s.count(i)) free.push_back(i);
    std::vector<Composition> out;
    for (unsigned long mask = 0; mask < (1ul << free.size()); ++mask) {
        std::set<int> t = s;
        for (std::size_t b = 0; b < free.size(); ++b)
            if (mask & (1ul << b)) t.insert(free[b]);
        out.push_back(composition_from_subset(t, n));
    }
    return out;
}

}  // namespace

QSymElement f_to_m(const QSymElement& f) {
    require_basis(f, Basis::F, "f_to_m");
    QSymElement m(Basis::M, f.degree());
    for (const auto& [alpha, c] : f.terms())
        for (const Composition& beta : refinements_of(alpha)) m.add_term(beta, c);
    return m;
}

QSymElement m_to_f(const QSymElement& m) {
    require_basis(m, Basis::M, "m_to_f");
    QSymElement f(Basis::F, m.degree());
    for (const auto& [alpha, c] : m.terms())
        for (const Composition& beta : refinements_of(alpha)) {
            const int sign_exp = beta.length() - alpha.length();
            f.add_term(beta, sign_exp % 2 == 0 ? c : -c);
        }
    return f;
}

QSymElement omega(const QSymElement& f) {
    require_basis(f, Basis::F, "omega");
    QSymElement out(Basis::F, f.degree());
    for (const auto& [alpha, c] : f.terms()) out.add_term(reversed(complement(alpha)), c);
    return out;
}

QSymElement reverse_variables(const QSymElement& m) {
    require_basis(m, Basis::M, "reverse_variables");
    QSymElement out(Basis::M, m.degree());
    for (const auto& [beta, c] : m.terms()) out.add_term(reversed(beta), c);
    return out;
}

}  // namespace qsym
