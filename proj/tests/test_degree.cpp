#include <doctest.h>

#include <map>

#include "bpd/bpd.hpp"
#include "bpd/degree.hpp"
#include "bpd/poly.hpp"
#include "test_util.hpp"

using namespace bpd;

namespace {

const Permutation kFig2 = perm({1, 8, 2, 7, 3, 5, 6, 4});

// Longest antidiagonal path by trying every subset.  Exponential oracle.
int rho_a_exhaustive(const std::set<Cell>& cells) {
    const std::vector<Cell> list(cells.begin(), cells.end());
    const int m = static_cast<int>(list.size());
    int best = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<Cell> chosen;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) chosen.push_back(list[static_cast<size_t>(i)]);
        // set order is row-ascending; an antidiagonal path read that way has
        // strictly ascending rows and strictly descending columns
        bool anti = true;
        for (size_t i = 1; i < chosen.size(); ++i)
            if (chosen[i].row <= chosen[i - 1].row || chosen[i].col >= chosen[i - 1].col)
                anti = false;
        if (anti) best = std::max(best, static_cast<int>(chosen.size()));
    }
    return best;
}

std::map<int, int> diagonal_counts(const std::set<Cell>& cells) {
    std::map<int, int> out;
    for (const Cell& c : cells) ++out[c.col - c.row];
    return out;
}

}  // namespace

TEST_CASE("psw degree") {
    CHECK(psw_degree(Permutation::identity(4)) == 0);
    CHECK(psw_degree(kFig2) == 18);
    CHECK(psw_degree(perm({2, 1, 4, 3})) == 4);
}

TEST_CASE("psw equals the polynomial degree on S_4") {
    for_each_permutation(4, [](const Permutation& p) {
        CHECK(psw_degree(p) == degree(groth_oracle(p)));
    });
}

TEST_CASE("rothe labels") {
    CHECK(rothe_labels(perm({2, 1})) == std::map<Cell, int>{{{1, 1}, 0}});
    CHECK(rothe_labels(Permutation::identity(3)).empty());
    CHECK_THROWS_AS(rothe_labels(perm({2, 1, 4, 3})), std::invalid_argument);

    const auto labels = rothe_labels(kFig2);
    CHECK(labels.size() == 12);
    for (int c = 2; c <= 7; ++c) CHECK(labels.at({2, c}) == 1);
    for (int c = 3; c <= 6; ++c) CHECK(labels.at({4, c}) == 2);
    CHECK(labels.at({6, 4}) == 3);
    CHECK(labels.at({7, 4}) == 3);
}

TEST_CASE("lambda shape and fill") {
    const FilledShape shape = lambda_filled(kFig2);
    CHECK(shape.rows == std::vector<int>{6, 4, 1, 1});
    for (int c = 1; c <= 6; ++c) CHECK(shape.fill.at({1, c}) == 1);
    for (int c = 1; c <= 4; ++c) CHECK(shape.fill.at({2, c}) == 2);
    CHECK(shape.fill.at({3, 1}) == 3);
    CHECK(shape.fill.at({4, 1}) == 3);

    const FilledShape s21 = lambda_filled(perm({2, 1}));
    CHECK(s21.rows == std::vector<int>{1});
    CHECK(s21.fill.at({1, 1}) == 0);
    CHECK(tau(s21, 1).empty());

    const FilledShape s132 = lambda_filled(perm({1, 3, 2}));
    CHECK(s132.rows == std::vector<int>{1});
    CHECK(s132.fill.at({1, 1}) == 1);
}

TEST_CASE("diagonal multiset is preserved on vexillary S_5") {
    for_each_permutation(5, [](const Permutation& p) {
        if (!is_vexillary(p)) return;
        std::set<Cell> blanks;
        for (const Cell& c : Bpd::rothe(p).blanks()) blanks.insert(c);
        CHECK(diagonal_counts(lambda_filled(p).cells()) == diagonal_counts(blanks));
    });
}

TEST_CASE("tau slices") {
    const FilledShape shape = lambda_filled(kFig2);
    CHECK(tau(shape, 1).size() == 12);
    CHECK(tau(shape, 3) == std::set<Cell>{{3, 1}, {4, 1}});
    CHECK(tau(shape, 4).empty());
}

TEST_CASE("antidiagonal path length") {
    CHECK(rho_a({}) == 0);
    CHECK(rho_a({{1, 1}, {1, 2}, {1, 3}}) == 1);  // a single row
    const FilledShape shape = lambda_filled(kFig2);
    const int expected[] = {3, 2, 1};
    for (int k = 1; k <= 3; ++k) {
        const auto cells = tau(shape, k);
        CHECK(rho_a(cells) == expected[k - 1]);
        CHECK(rho_a(cells) == rho_a_exhaustive(cells));
    }
    // monotone under inclusion along the tau chain
    for (int k = 1; k < 3; ++k)
        CHECK(rho_a(tau(shape, k)) >= rho_a(tau(shape, k + 1)));
}

TEST_CASE("rrw degree") {
    CHECK(rrw_degree(Permutation::identity(3)) == 0);
    CHECK(rrw_degree(kFig2) == 18);
    CHECK_THROWS_AS(rrw_degree(perm({2, 1, 4, 3})), std::invalid_argument);
}

TEST_CASE("rrw equals psw on vexillary S_5") {
    for_each_permutation(5, [](const Permutation& p) {
        if (is_vexillary(p)) CHECK(rrw_degree(p) == psw_degree(p));
    });
}

TEST_CASE("corollary bridge") {
    for (const RankBy by : {RankBy::Position, RankBy::Value}) {
        const auto id_rows = corollary_bridge(Permutation::identity(4), by);
        for (const auto& [k, row] : id_rows) {
            CHECK(row.lhs == 0);
            CHECK(row.rhs == 0);
        }
        const auto rows = corollary_bridge(kFig2, by);
        CHECK(rows.at(1).rhs == 3);
        CHECK(rows.at(2).rhs == 2);
        CHECK(rows.at(3).rhs == 1);
        for (const auto& [k, row] : rows) CHECK(row.lhs == row.rhs);
    }
    CHECK_THROWS_AS(corollary_bridge(perm({2, 1, 4, 3}), RankBy::Value),
                    std::invalid_argument);
}

TEST_CASE("corollary bridge holds under both readings on vexillary S_5") {
    for_each_permutation(5, [](const Permutation& p) {
        if (!is_vexillary(p)) return;
        for (const RankBy by : {RankBy::Position, RankBy::Value})
            for (const auto& [k, row] : corollary_bridge(p, by))
                CHECK(row.lhs == row.rhs);
    });
}
