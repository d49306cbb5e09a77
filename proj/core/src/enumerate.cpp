#include "qsym/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace qsym {

namespace {

struct Enumerator {
    const Composition& shape;
    FillingKind kind;
    int max_entry;
    bool standard;

    std::vector<std::vector<int>> rows;            // unplaced cells hold 0
    std::vector<std::pair<int, int>> cell_order;   // (row, col), column-major
    std::uint64_t used = 0;                        // standard mode: values taken
    std::vector<Filling> out;

    explicit Enumerator(const Composition& shape_, FillingKind kind_, int max_entry_,
                        bool standard_)
        : shape(shape_), kind(kind_), max_entry(max_entry_), standard(standard_) {
        for (int p : shape.parts()) rows.emplace_back(p, 0);
        int m = 0;
        for (int p : shape.parts()) m = std::max(m, p);
        for (int k = 1; k <= m; ++k)
            for (int i = 1; i <= static_cast<int>(shape.parts().size()); ++i)
                if (shape.parts()[i - 1] >= k) cell_order.emplace_back(i, k);
    }

    int entry(int i, int k) const {
        if (i < 1 || i > static_cast<int>(rows.size()) || k < 1) return 0;
        if (k > static_cast<int>(rows[i - 1].size())) return 0;
        return rows[i - 1][k - 1];
    }

    bool admissible(int i, int k, int v) const {
        switch (kind) {
            case FillingKind::ReverseRowStrict:
                if (k >= 2 && !(entry(i, k - 1) > v)) return false;
                if (i >= 2 && !(entry(i - 1, k) >= v)) return false;
                return true;
            case FillingKind::ReverseColumnStrict:
                if (k >= 2 && !(entry(i, k - 1) >= v)) return false;
                if (i >= 2 && !(entry(i - 1, k) > v)) return false;
                return true;
            case FillingKind::RSCT:
                if (k == 1) return i < 2 || entry(i - 1, 1) <= v;
                if (!(entry(i, k - 1) > v)) return false;
                for (int a = 1; a < i; ++a)
                    if (v > entry(a, k) && !(v >= entry(a, k - 1))) return false;
                return true;
            case FillingKind::CSCT:
                if (k == 1) return i < 2 || entry(i - 1, 1) < v;
                if (!(entry(i, k - 1) >= v)) return false;
                for (int a = 1; a < i; ++a)
                    if (v >= entry(a, k) && !(v > entry(a, k - 1))) return false;
                return true;
        }
        return false;
    }

    void rec(std::size_t idx) {
        if (idx == cell_order.size()) {
            out.emplace_back(shape, rows, kind);
            return;
        }
        const auto [i, k] = cell_order[idx];
        for (int v = 1; v <= max_entry; ++v) {
            if (standard && (used & (1ull << v))) continue;
            if (!admissible(i, k, v)) continue;
            rows[i - 1][k - 1] = v;
            if (standard) used |= 1ull << v;
            rec(idx + 1);
            if (standard) used &= ~(1ull << v);
            rows[i - 1][k - 1] = 0;
        }
    }
};

std::vector<int> flattened(const Filling& f) {
    std::vector<int> seq;
    for (const auto& row : f.rows()) seq.insert(seq.end(), row.begin(), row.end());
    return seq;
}

std::vector<Filling> run(const Composition& shape, FillingKind kind, int max_entry,
                         bool standard) {
    if (max_entry < 0) throw std::invalid_argument("enumerate_fillings: max_entry < 0");
    if ((kind == FillingKind::ReverseRowStrict || kind == FillingKind::ReverseColumnStrict) &&
        !std::is_sorted(shape.parts().rbegin(), shape.parts().rend()))
        throw std::invalid_argument("enumerate_fillings: " + kind_name(kind) +
                                    " requires a partition shape");
    Enumerator e(shape, kind, max_entry, standard);
    e.rec(0);
    std::sort(e.out.begin(), e.out.end(), [](const Filling& a, const Filling& b) {
        return flattened(a) < flattened(b);
    });
    return e.out;
}

}  // namespace

std::vector<Filling> enumerate_fillings(const Composition& shape, FillingKind kind,
                                        int max_entry) {
    return run(shape, kind, max_entry, false);
}

std::vector<Filling> enumerate_standard_fillings(const Composition& shape, FillingKind kind) {
    if (shape.degree() > 63)
        throw std::invalid_argument("enumerate_standard_fillings: degree too large");
    return run(shape, kind, shape.degree(), true);
}

}  // namespace qsym
