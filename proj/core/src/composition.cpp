#include "qsym/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsym {

namespace {

int checked_sum(const std::vector<int>& parts, bool allow_zero, const char* what) {
    int total = 0;
    for (int p : parts) {
        if (p < (allow_zero ? 0 : 1))
            throw std::invalid_argument(std::string(what) + ": parts must be " +
                                        (allow_zero ? "nonnegative" : "positive"));
        total += p;
    }
    return total;
}

std::string join_parts(const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

}  // namespace

Composition::Composition(std::vector<int> parts)
    : parts_(std::move(parts)), degree_(checked_sum(parts_, false, "Composition")) {}

Composition Composition::parse(const std::string& text) {
    if (text.empty()) return Composition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("Composition::parse: bad token '" + token + "' in '" +
                                        text + "'");
        int value = std::stoi(token);
        if (value < 1)
            throw std::invalid_argument("Composition::parse: parts must be positive in '" +
                                        text + "'");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

std::string Composition::str() const { return join_parts(parts_); }

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts)), degree_(checked_sum(parts_, false, "Partition")) {
    if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
        throw std::invalid_argument("Partition: parts must weakly decrease");
}

std::string Partition::str() const { return join_parts(parts_); }

WeakComposition::WeakComposition(std::vector<int> parts)
    : parts_(std::move(parts)), degree_(checked_sum(parts_, true, "WeakComposition")) {}

bool WeakComposition::is_packed() const {
    bool seen_zero = false;
    for (int p : parts_) {
        if (p == 0)
            seen_zero = true;
        else if (seen_zero)
            return false;
    }
    return true;
}

Composition WeakComposition::collapse() const {
    std::vector<int> kept;
    kept.reserve(parts_.size());
    for (int p : parts_)
        if (p > 0) kept.push_back(p);
    return Composition(std::move(kept));
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: n must be >= 0");
    std::vector<Composition> all;
    if (n == 0) {
        all.emplace_back();
        return all;
    }
    // Subsets of [n-1] under the partial-sum correspondence.
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
        std::vector<int> parts;
        int prev = 0;
        for (int s = 1; s < n; ++s) {
            if (mask & (1ul << (s - 1))) {
                parts.push_back(s - prev);
                prev = s;
            }
        }
        parts.push_back(n - prev);
        all.emplace_back(std::move(parts));
    }
    std::sort(all.begin(), all.end(),
              [](const Composition& a, const Composition& b) { return revlex_compare(a, b) > 0; });
    return all;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

std::set<int> subset_of(const Composition& alpha) {
    std::set<int> s;
    int sum = 0;
    for (std::size_t i = 0; i + 1 < alpha.parts().size(); ++i) {
        sum += alpha.parts()[i];
        s.insert(sum);
    }
    return s;
}

Composition composition_from_subset(const std::set<int>& p, int n) {
    if (n < 0) throw std::invalid_argument("composition_from_subset: n must be >= 0");
    std::vector<int> parts;
    int prev = 0;
    for (int s : p) {
        if (s < 1 || s > n)
            throw std::invalid_argument("composition_from_subset: element " + std::to_string(s) +
                                        " outside [1," + std::to_string(n) + "]");
        if (s == n) continue;  // contributes an empty trailing difference
        parts.push_back(s - prev);
        prev = s;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition complement(const Composition& alpha) {
    int n = alpha.degree();
    std::set<int> s = subset_of(alpha);
    std::set<int> comp;
    for (int i = 1; i < n; ++i)
        if (!s.count(i)) comp.insert(i);
    return composition_from_subset(comp, n);
}

Composition reversed(const Composition& alpha) {
    std::vector<int> parts(alpha.parts().rbegin(), alpha.parts().rend());
    return Composition(std::move(parts));
}

bool refinement_leq(const Composition& a, const Composition& b) {
    if (a.degree() != b.degree()) return false;
    std::set<int> sa = subset_of(a);
    std::set<int> sb = subset_of(b);
    return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
}

Partition lambda_of(const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    int max = lambda.empty() ? 0 : lambda.parts().front();
    for (int i = 1; i <= max; ++i) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= i) ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.degree() != lambda.degree())
        throw std::invalid_argument("dominance_leq: degrees differ (" +
                                    std::to_string(mu.degree()) + " vs " +
                                    std::to_string(lambda.degree()) + ")");
    int sum_mu = 0, sum_la = 0;
    std::size_t len = std::max(mu.parts().size(), lambda.parts().size());
    for (std::size_t i = 0; i < len; ++i) {
        sum_mu += i < mu.parts().size() ? mu.parts()[i] : 0;
        sum_la += i < lambda.parts().size() ? lambda.parts()[i] : 0;
        if (sum_mu > sum_la) return false;
    }
    return true;
}

int revlex_compare(const Composition& alpha, const Composition& beta) {
    if (alpha.degree() != beta.degree())
        throw std::invalid_argument("revlex_compare: degrees differ (" +
                                    std::to_string(alpha.degree()) + " vs " +
                                    std::to_string(beta.degree()) + ")");
    const std::vector<int> la = lambda_of(alpha).parts();
    const std::vector<int> lb = lambda_of(beta).parts();
    if (la != lb) return la < lb ? -1 : 1;
    if (alpha.parts() != beta.parts()) return alpha.parts() < beta.parts() ? -1 : 1;
    return 0;
}

bool revlex_leq(const Composition& alpha, const Composition& beta) {
    return revlex_compare(alpha, beta) <= 0;
}

bool revlex_geq(const Composition& alpha, const Composition& beta) {
    return revlex_compare(alpha, beta) >= 0;
}

}  // namespace qsym
