#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsym/bijections.hpp"
#include "qsym/composition.hpp"
#include "qsym/enumerate.hpp"
#include "qsym/filling.hpp"
#include "qsym/insertion.hpp"

using namespace qsym;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

Filling F(std::vector<std::vector<int>> rows, FillingKind kind = FillingKind::RSCT) {
    return Filling(std::move(rows), kind);
}

Filling RRS(std::vector<std::vector<int>> rows) {
    return Filling(std::move(rows), FillingKind::ReverseRowStrict);
}

std::string key(const Filling& f) {
    std::string out = f.shape().str() + "|";
    for (const auto& row : f.rows())
        for (int e : row) out += std::to_string(e) + ",";
    return out;
}

std::vector<int> padded_weight(const Filling& f, std::size_t len) {
    std::vector<int> w = weight(f).parts();
    w.resize(std::max(w.size(), len), 0);
    return w;
}

}  // namespace

TEST_CASE("row insertion on reverse row-strict tableaux") {
    SUBCASE("bump chain") {
        const InsertionResult r = dual_row_insert(RRS({{3, 1}}), 2);
        CHECK(r.result == RRS({{3, 2}, {1}}));
        CHECK(r.new_cell == Cell{2, 1});
        CHECK(r.path == std::vector<Cell>{{1, 2}, {2, 1}});
    }
    SUBCASE("equal entry bumps itself") {
        const InsertionResult r = dual_row_insert(RRS({{2}}), 2);
        CHECK(r.result == RRS({{2}, {2}}));
        CHECK(r.new_cell == Cell{2, 1});
    }
    SUBCASE("append to first row") {
        const InsertionResult r = dual_row_insert(RRS({{3, 2}}), 1);
        CHECK(r.result == RRS({{3, 2, 1}}));
        CHECK(r.new_cell == Cell{1, 3});
    }
    SUBCASE("empty tableau") {
        const InsertionResult r = dual_row_insert(Filling({}, FillingKind::ReverseRowStrict), 5);
        CHECK(r.result == RRS({{5}}));
        CHECK(r.new_cell == Cell{1, 1});
    }
    SUBCASE("kind and validity are enforced") {
        CHECK_THROWS_AS(dual_row_insert(F({{2, 1}}), 1), std::invalid_argument);
        CHECK_THROWS_AS(dual_row_insert(RRS({{1, 1}}), 1), std::invalid_argument);
        CHECK_THROWS_AS(dual_row_insert(RRS({{2}}), 0), std::invalid_argument);
    }
}

TEST_CASE("row insertion properties") {
    for (const Partition& lambda : partitions_of(4))
        for (const Filling& t :
             enumerate_fillings(lambda.as_composition(), FillingKind::ReverseRowStrict, 4))
            for (int x = 1; x <= 5; ++x) {
                const InsertionResult r = dual_row_insert(t, x);
                CHECK(is_reverse_row_strict(r.result));
                CHECK(r.result.cell_count() == t.cell_count() + 1);
                CHECK(padded_weight(r.result, 6)[static_cast<std::size_t>(x) - 1] ==
                      padded_weight(t, 6)[static_cast<std::size_t>(x) - 1] + 1);
                // The path moves weakly left going down.
                for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
                    CHECK(r.path[i + 1].row == r.path[i].row + 1);
                    CHECK(r.path[i + 1].col <= r.path[i].col);
                }
            }
}

TEST_CASE("composition tableau insertion golden trace") {
    const Filling f = F({{2, 1}, {2}, {4, 3, 2}, {4, 2}, {5, 2}});
    REQUIRE(is_rsct(f));
    CHECK(reading_word(f, true) ==
          std::vector<int>{0, 0, 2, 0, 0, 1, 0, 3, 2, 2, 2, 2, 4, 4, 5});

    const auto [result, steps] = rsct_insert_traced(f, 3);
    CHECK(result.result == F({{2, 1}, {2}, {2}, {4, 3, 2}, {4, 3}, {5, 2}}));
    CHECK(result.result.shape() == C({2, 1, 1, 3, 2, 2}));
    CHECK(result.new_cell == Cell{3, 1});

    REQUIRE(steps.size() == 4);
    CHECK(steps[0].action == InsertionStep::Action::Bump);
    CHECK(steps[0].carried == 3);
    CHECK(steps[0].bumped == 3);
    CHECK(steps[0].at == Cell{3, 2});
    CHECK(steps[1].action == InsertionStep::Action::Bump);
    CHECK(steps[1].carried == 3);
    CHECK(steps[1].bumped == 2);
    CHECK(steps[1].at == Cell{4, 2});
    CHECK(steps[2].action == InsertionStep::Action::Bump);
    CHECK(steps[2].carried == 2);
    CHECK(steps[2].bumped == 2);
    CHECK(steps[2].at == Cell{5, 2});
    CHECK(steps[3].action == InsertionStep::Action::NewRow);
    CHECK(steps[3].carried == 2);
    CHECK(steps[3].at == Cell{3, 1});
    CHECK(rsct_insert(f, 3).result == result.result);

    // The inserted value followed by the bumped values weakly decreases.
    std::vector<int> chain = {3};
    for (const InsertionStep& s : steps)
        if (s.action == InsertionStep::Action::Bump) chain.push_back(s.bumped);
    CHECK(std::is_sorted(chain.rbegin(), chain.rend()));
}

TEST_CASE("composition tableau insertion unit cases") {
    SUBCASE("into the empty tableau") {
        const InsertionResult r = rsct_insert(Filling(), 5);
        CHECK(r.result == F({{5}}));
        CHECK(r.new_cell == Cell{1, 1});
    }
    SUBCASE("new row below an equal first-column entry") {
        const InsertionResult r = rsct_insert(F({{1}}), 1);
        CHECK(r.result == F({{1}, {1}}));
        CHECK(r.new_cell == Cell{2, 1});
    }
    SUBCASE("new first row when nothing is smaller") {
        const InsertionResult r = rsct_insert(F({{2, 1}}), 1);
        CHECK(r.result == F({{1}, {2, 1}}));
        CHECK(r.new_cell == Cell{1, 1});
    }
    SUBCASE("zero slot filled") {
        const InsertionResult r = rsct_insert(F({{2}}), 1);
        CHECK(r.result == F({{2, 1}}));
        CHECK(r.new_cell == Cell{1, 2});
    }
    SUBCASE("validity is enforced") {
        CHECK_THROWS_AS(rsct_insert(F({{1, 2}}), 1), std::invalid_argument);
        CHECK_THROWS_AS(rsct_insert(RRS({{2, 1}}), 1), std::invalid_argument);
        CHECK_THROWS_AS(rsct_insert(F({{1}}), 0), std::invalid_argument);
    }
}

TEST_CASE("composition tableau insertion properties") {
    for (int n = 0; n <= 5; ++n)
        for (const Composition& shape : compositions_of(n))
            for (const Filling& f : enumerate_fillings(shape, FillingKind::RSCT, 5))
                for (int x = 1; x <= 6; ++x) {
                    const InsertionResult r = rsct_insert(f, x);
                    CHECK(is_rsct(r.result));
                    CHECK(r.result.cell_count() == n + 1);
                    CHECK(padded_weight(r.result, 7)[static_cast<std::size_t>(x) - 1] ==
                          padded_weight(f, 7)[static_cast<std::size_t>(x) - 1] + 1);
                }
}

TEST_CASE("insertion commutes with the row map") {
    for (int n = 0; n <= 4; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (const Filling& t :
                 enumerate_fillings(lambda.as_composition(), FillingKind::ReverseRowStrict, 4))
                for (int x = 1; x <= 5; ++x) {
                    CHECK(check_commutation(t, x));
                    CHECK(rho_row(dual_row_insert(t, x).result) ==
                          rsct_insert(rho_row(t), x).result);
                }
}

TEST_CASE("biword matrices") {
    BiwordMatrix a(std::vector<std::vector<int>>{{0, 1}, {2, 0}});
    CHECK(a.get(1, 2) == 1);
    CHECK(a.get(2, 1) == 2);
    CHECK(a.get(1, 1) == 0);
    CHECK(a.get(9, 9) == 0);
    CHECK(a.biword() ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 1}});

    a.set(1, 2, 0);
    CHECK(a.biword() == std::vector<std::pair<int, int>>{{2, 1}, {2, 1}});
    CHECK_THROWS_AS(a.set(1, 1, -1), std::invalid_argument);

    BiwordMatrix b(std::vector<std::vector<int>>{{1, 2}, {0, 1}});
    CHECK(b.transposed() == BiwordMatrix(std::vector<std::vector<int>>{{1, 0}, {2, 1}}));
    // Bottom entries weakly increase within each run of equal tops.
    CHECK(b.biword() ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 2}, {2, 2}});
}

TEST_CASE("matrix correspondence golden pair") {
    const auto [f, g] = rsk_pair(BiwordMatrix(std::vector<std::vector<int>>{{1, 1}, {1, 0}}));
    CHECK(f == F({{1}, {2, 1}}));
    CHECK(g == F({{1}, {2, 1}}));
}

TEST_CASE("matrix correspondence properties over all small matrices") {
    // Every 3x3 matrix with entries at most 2 and total at most 4.
    std::map<std::string, std::vector<std::vector<int>>> seen;
    int count = 0;
    std::vector<int> flat(9, 0);
    while (true) {
        int sum = 0;
        for (int v : flat) sum += v;
        if (sum <= 4) {
            ++count;
            std::vector<std::vector<int>> dense = {{flat[0], flat[1], flat[2]},
                                                   {flat[3], flat[4], flat[5]},
                                                   {flat[6], flat[7], flat[8]}};
            const BiwordMatrix a(dense);
            const auto [f, g] = rsk_pair(a);
            CHECK(is_rsct(f));
            CHECK(is_rsct(g));
            CHECK(lambda_of(f.shape()) == lambda_of(g.shape()));
            // Weights are the column and row sums of the matrix.
            std::vector<int> colsum(3, 0), rowsum(3, 0);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    colsum[j] += dense[i][j];
                    rowsum[i] += dense[i][j];
                }
            CHECK(padded_weight(f, 3) == colsum);
            CHECK(padded_weight(g, 3) == rowsum);
            const auto [gt, ft] = rsk_pair(a.transposed());
            CHECK(gt == g);
            CHECK(ft == f);

            const auto [it, inserted] = seen.emplace(key(f) + "#" + key(g), dense);
            if (!inserted) CHECK(it->second == dense);  // injectivity
        }
        int i = 8;
        while (i >= 0 && flat[i] == 2) flat[i--] = 0;
        if (i < 0) break;
        ++flat[i];
    }
    CHECK(count == 625);
    CHECK(seen.size() == 625);
}
