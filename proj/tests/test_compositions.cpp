#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "qsym/composition.hpp"

using namespace qsym;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("construction and parsing") {
    CHECK(C({2, 1, 2, 1}).degree() == 6);
    CHECK(C({2, 1, 2, 1}).length() == 4);
    CHECK(Composition().empty());
    CHECK(Composition().degree() == 0);

    CHECK(Composition::parse("2,1,2,1") == C({2, 1, 2, 1}));
    CHECK(Composition::parse("") == Composition());
    CHECK(Composition::parse("14") == C({14}));
    CHECK(C({2, 1, 2, 1}).str() == "2,1,2,1");
    CHECK(Composition().str() == "");

    CHECK_THROWS_AS(Composition::parse("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1,2,"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("0,2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("-1"), std::invalid_argument);
    CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({-3}), std::invalid_argument);

    // Parse inverts str on every composition of degree <= 7.
    for (int n = 0; n <= 7; ++n)
        for (const Composition& a : compositions_of(n)) CHECK(Composition::parse(a.str()) == a);
}

TEST_CASE("partitions reject unsorted parts") {
    CHECK(P({4, 2, 1}).degree() == 7);
    CHECK_THROWS_AS(Partition({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(P({2, 2}).as_composition() == C({2, 2}));
}

TEST_CASE("compositions_of: golden order at n = 4") {
    const std::vector<Composition> want = {C({4}),       C({3, 1}),    C({1, 3}),
                                           C({2, 2}),    C({2, 1, 1}), C({1, 2, 1}),
                                           C({1, 1, 2}), C({1, 1, 1, 1})};
    CHECK(compositions_of(4) == want);
}

TEST_CASE("compositions_of: counts and uniqueness") {
    CHECK(compositions_of(0) == std::vector<Composition>{Composition()});
    for (int n = 1; n <= 9; ++n) {
        const auto all = compositions_of(n);
        CHECK(all.size() == (std::size_t{1} << (n - 1)));
        std::set<std::string> seen;
        for (const Composition& a : all) {
            CHECK(a.degree() == n);
            seen.insert(a.str());
        }
        CHECK(seen.size() == all.size());
        // Strictly descending in the revlex total order.
        for (std::size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(revlex_compare(all[i], all[i + 1]) > 0);
    }
    CHECK_THROWS_AS(compositions_of(-1), std::invalid_argument);
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
    const std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) {
        const auto all = partitions_of(n);
        CHECK(all.size() == counts[n]);
        for (std::size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(all[i].parts() > all[i + 1].parts());  // descending lex
    }
    CHECK(partitions_of(4) ==
          std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
}

TEST_CASE("subset correspondence") {
    CHECK(subset_of(C({1, 4, 2})) == std::set<int>{1, 5});
    CHECK(subset_of(C({7})) == std::set<int>{});
    CHECK(composition_from_subset({1, 5}, 7) == C({1, 4, 2}));
    CHECK(composition_from_subset({}, 5) == C({5}));
    CHECK(composition_from_subset({}, 0) == Composition());

    // Elements equal to n contribute an empty trailing difference.
    CHECK(composition_from_subset({2, 3, 4, 6, 7}, 7) == C({2, 1, 1, 2, 1}));
    CHECK(composition_from_subset({2, 3, 4, 6}, 7) == C({2, 1, 1, 2, 1}));
    CHECK_THROWS_AS(composition_from_subset({0, 2}, 5), std::invalid_argument);
    CHECK_THROWS_AS(composition_from_subset({6}, 5), std::invalid_argument);

    for (int n = 0; n <= 8; ++n)
        for (const Composition& a : compositions_of(n))
            CHECK(composition_from_subset(subset_of(a), n) == a);
}

TEST_CASE("complement and reversal") {
    CHECK(complement(C({1, 4, 2})) == C({2, 1, 1, 2, 1}));
    CHECK(complement(C({4})) == C({1, 1, 1, 1}));
    CHECK(complement(C({1, 1, 1, 1})) == C({4}));
    CHECK(complement(C({1, 3})) == C({2, 1, 1}));
    CHECK(complement(Composition()) == Composition());
    CHECK(reversed(C({1, 4, 2})) == C({2, 4, 1}));
    CHECK(reversed(Composition()) == Composition());

    for (int n = 0; n <= 8; ++n)
        for (const Composition& a : compositions_of(n)) {
            CHECK(complement(complement(a)) == a);
            CHECK(reversed(reversed(a)) == a);
            // Complement swaps the subset with its complement in [n-1].
            std::set<int> both = subset_of(a);
            for (int s : subset_of(complement(a))) CHECK(both.insert(s).second);
            CHECK(static_cast<int>(both.size()) == std::max(0, n - 1));
        }
}

TEST_CASE("refinement order") {
    CHECK(refinement_leq(C({1, 1, 2}), C({1, 3})));
    CHECK(!refinement_leq(C({1, 3}), C({1, 1, 2})));
    CHECK(refinement_leq(C({1, 3}), C({1, 3})));
    CHECK(refinement_leq(C({1, 1, 1, 1}), C({4})));
    CHECK(!refinement_leq(C({2, 2}), C({1, 3})));

    // Incomparable in both directions.
    CHECK(!refinement_leq(C({3, 1, 2, 1, 1}), C({3, 2, 3})));
    CHECK(!refinement_leq(C({3, 2, 3}), C({3, 1, 2, 1, 1})));

    // Degree mismatch is never a refinement.
    CHECK(!refinement_leq(C({2}), C({3})));

    // Agreement with the subset characterization: a <= b iff S(b) in S(a).
    for (int n = 0; n <= 7; ++n)
        for (const Composition& a : compositions_of(n))
            for (const Composition& b : compositions_of(n)) {
                const std::set<int> sa = subset_of(a), sb = subset_of(b);
                const bool subset = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
                CHECK(refinement_leq(a, b) == subset);
            }
}

TEST_CASE("lambda and conjugation") {
    CHECK(lambda_of(C({1, 4, 2})) == P({4, 2, 1}));
    CHECK(lambda_of(Composition()) == Partition());
    CHECK(conjugate(P({4, 2, 1})) == P({3, 2, 1, 1}));
    CHECK(conjugate(P({1, 1, 1})) == P({3}));
    CHECK(conjugate(Partition()) == Partition());
    for (int n = 0; n <= 10; ++n)
        for (const Partition& p : partitions_of(n)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(conjugate(p).degree() == n);
        }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(P({1, 1, 1, 1}), P({2, 1, 1})));
    CHECK(dominance_leq(P({2, 2}), P({3, 1})));
    CHECK(dominance_leq(P({3, 1}), P({4})));
    CHECK(!dominance_leq(P({3, 1}), P({2, 2})));
    // Incomparable pair at n = 6.
    CHECK(!dominance_leq(P({3, 1, 1, 1}), P({2, 2, 2})));
    CHECK(!dominance_leq(P({2, 2, 2}), P({3, 1, 1, 1})));
    CHECK(dominance_leq(P({2, 2}), P({2, 2})));
    CHECK_THROWS_AS(dominance_leq(P({2}), P({3})), std::invalid_argument);

    // Reflexive, antisymmetric, transitive at n = 6.
    const auto parts6 = partitions_of(6);
    for (const Partition& a : parts6) {
        CHECK(dominance_leq(a, a));
        for (const Partition& b : parts6) {
            if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
            for (const Partition& c : parts6)
                if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
        }
    }
}

TEST_CASE("revlex total order") {
    CHECK(revlex_compare(C({3, 1}), C({1, 3})) > 0);
    CHECK(revlex_compare(C({1, 3}), C({2, 2})) > 0);   // lambda (3,1) beats (2,2)
    CHECK(revlex_compare(C({2, 2}), C({2, 1, 1})) > 0);
    CHECK(revlex_compare(C({2, 2}), C({2, 2})) == 0);
    CHECK(revlex_leq(C({1, 3}), C({3, 1})));
    CHECK(revlex_geq(C({3, 1}), C({1, 3})));
    CHECK_THROWS_AS(revlex_compare(C({2}), C({3})), std::invalid_argument);

    // Trichotomy and consistency with dominance where comparable.
    for (int n = 1; n <= 6; ++n) {
        const auto all = compositions_of(n);
        for (const Composition& a : all)
            for (const Composition& b : all) {
                const int ab = revlex_compare(a, b), ba = revlex_compare(b, a);
                CHECK(((ab > 0 && ba < 0) || (ab < 0 && ba > 0) || (ab == 0 && a == b)));
                const Partition la = lambda_of(a), lb = lambda_of(b);
                if (la != lb && dominance_leq(lb, la)) CHECK(ab > 0);
            }
    }
}

TEST_CASE("weak compositions") {
    CHECK(WeakComposition({1, 3, 2, 0, 0}).is_packed());
    CHECK(WeakComposition({1, 3, 2}).is_packed());
    CHECK(WeakComposition(std::vector<int>{}).is_packed());
    CHECK(!WeakComposition({1, 3, 0, 2}).is_packed());
    CHECK(!WeakComposition({0, 1}).is_packed());
    CHECK(WeakComposition({1, 0, 3}).collapse() == C({1, 3}));
    CHECK(WeakComposition({0, 0}).collapse() == Composition());
    CHECK(WeakComposition({1, 0, 3}).degree() == 4);
    CHECK_THROWS_AS(WeakComposition({1, -1}), std::invalid_argument);
}
