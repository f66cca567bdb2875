#include <doctest.h>

#include "bpd/degree.hpp"
#include "bpd/moves.hpp"
#include "bpd/support.hpp"
#include "test_util.hpp"

using namespace bpd;

TEST_CASE("maximal degree pipe dreams") {
    CHECK(max_degree_bpds(Permutation::identity(3)) ==
          std::set<Bpd>{Bpd::rothe(Permutation::identity(3))});
    const auto top = max_degree_bpds(perm({1, 3, 2}));
    REQUIRE(top.size() == 1);
    CHECK(top.begin()->up_elbows().size() == 1);
    CHECK_THROWS_AS(max_degree_bpds(perm({2, 1, 4, 3})), std::invalid_argument);
}

TEST_CASE("pipe-wise bound holds with equality at the top, vexillary S_4") {
    for_each_permutation(4, [](const Permutation& p) {
        if (!is_vexillary(p)) return;
        CHECK(check_up_elbow_bound(p).passed());
        const Code r = rajchgot_code(p);
        const Code c = lehmer_code(p);
        const Permutation inv = p.inverse();
        const auto top = max_degree_bpds(p);
        CHECK(!top.empty());
        for (const Bpd& b : top) {
            const auto ups = up_elbows_per_pipe(b);
            for (int i = 1; i <= 4; ++i) {
                const int pos = inv(i);
                CHECK(ups[static_cast<size_t>(i) - 1] ==
                      r[static_cast<size_t>(pos) - 1] - c[static_cast<size_t>(pos) - 1]);
            }
        }
    });
}

TEST_CASE("bump-resolved bound holds for every permutation in S_4") {
    for_each_permutation(4, [](const Permutation& p) {
        const CheckReport report = check_up_elbow_bound(p);
        CHECK(report.passed());
        CHECK(report.checked == static_cast<long long>(enumerate_pipes(p).size()));
    });
}

TEST_CASE("row-column dichotomy and top connectivity") {
    CHECK(check_same_row_col(Permutation::identity(3)).passed());
    CHECK(check_top_connectivity(Permutation::identity(3)).passed());
    for_each_permutation(4, [](const Permutation& p) {
        if (!is_vexillary(p)) return;
        CHECK(check_same_row_col(p).passed());
        CHECK(check_top_connectivity(p).passed());
    });
}

TEST_CASE("example permutation 1275463") {
    const Permutation p = perm({1, 2, 7, 5, 4, 6, 3});
    REQUIRE(is_vexillary(p));
    CHECK(check_same_row_col(p).passed());
    const CheckReport connectivity = check_top_connectivity(p);
    CHECK(connectivity.passed());
    CHECK(connectivity.checked > 1);  // a real graph, not a lone vertex
}

TEST_CASE("support structure on 132") {
    const Permutation p = perm({1, 3, 2});
    const auto supp = support(groth_bpd(p));
    CHECK(supp == std::set<Exponents>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    CHECK(check_up_by_one(p).passed());
    CHECK(check_down_by_one(p).passed());
    CHECK(check_interval_closure(p).passed());
    CHECK(check_divisibility_saturation(p).passed());
}

TEST_CASE("support checks sweep S_4") {
    for_each_permutation(4, [](const Permutation& p) {
        CHECK(check_up_by_one(p).passed());
        CHECK(check_down_by_one(p).passed());
        CHECK(check_interval_closure(p).passed());
        if (is_vexillary(p)) CHECK(check_divisibility_saturation(p).passed());
    });
}

TEST_CASE("leading exponent formula") {
    const Permutation p = perm({1, 3, 2});
    CHECK(leading_exponent_formula(p, 1) == Exponents{0, 1, 0});
    CHECK(leading_exponent_formula(p, 2) == Exponents{1, 1, 0});
    CHECK_THROWS_AS(leading_exponent_formula(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(leading_exponent_formula(p, 3), std::invalid_argument);
}

TEST_CASE("lex-last exponent") {
    const SparsePoly f = groth_bpd(perm({1, 3, 2}));
    CHECK(lex_last_exponent(f, 1) == Exponents{0, 1, 0});
    CHECK(lex_last_exponent(f, 2) == Exponents{1, 1, 0});
    CHECK_THROWS_AS(lex_last_exponent(f, 3), std::invalid_argument);
}

TEST_CASE("leading terms against the formula, vexillary S_4") {
    for_each_permutation(4, [](const Permutation& p) {
        if (!is_vexillary(p)) return;
        CHECK(check_leading_terms(p).passed());
        CHECK(leading_exponent_formula(p, length(p)) == lehmer_code(p));
        CHECK(leading_exponent_formula(p, psw_degree(p)) == rajchgot_code(p));
    });
}

TEST_CASE("conjectured leading terms hold on all of S_4") {
    for_each_permutation(4, [](const Permutation& p) {
        CHECK(check_leading_terms(p).passed());
    });
}

TEST_CASE("schubert lex-last exponent is the lehmer code on S_5") {
    for_each_permutation(5, [](const Permutation& p) {
        CHECK(lex_last_exponent(schubert_oracle(p), length(p)) == lehmer_code(p));
    });
}

TEST_CASE("second lowest degree leading term") {
    const CheckReport skipped = check_s_plus_one_leading(Permutation::longest(4));
    CHECK(skipped.skipped);
    CHECK(skipped.passed());

    const Permutation p = perm({1, 3, 2});
    const CheckReport report = check_s_plus_one_leading(p);
    CHECK(report.passed());
    CHECK_FALSE(report.skipped);
    CHECK(lex_last_exponent(groth_bpd(p), 2) == Exponents{1, 1, 0});

    for_each_permutation(4, [](const Permutation& q) {
        CHECK(check_s_plus_one_leading(q).passed());
    });
}
