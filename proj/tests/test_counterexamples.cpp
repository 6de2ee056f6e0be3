#include <doctest.h>

#include <set>

#include "cyclemod/counterexamples.hpp"
#include "oracles.hpp"

using namespace cyclemod;

TEST_CASE("cross-ladder shape") {
    for (int N = 1; N <= 4; ++N) {
        auto cl = build_cross_ladder(N);
        const int L = 3 * N;
        CHECK(cl.graph.n() == 2 * (L + 1));
        for (int i = 0; i <= L; ++i) {
            int want = (i == 0 || i == L) ? 2 : 3;
            CHECK(cl.graph.degree(cl.u[i]) == want);
            CHECK(cl.graph.degree(cl.v[i]) == want);
        }
        CHECK(is_2_connected(cl.graph));
    }
    auto cl = build_cross_ladder(1);
    CHECK(cycle_length_histogram(cl.graph) == oracle::cycle_histogram(cl.graph));
    CHECK_THROWS_AS(build_cross_ladder(0), PreconditionError);
}

TEST_CASE("building blocks match their property records") {
    for (auto c : {BlockCase::H1, BlockCase::H2, BlockCase::H3}) {
        auto b = building_block(c);
        CHECK(block_case_from_string(to_string(c)) == c);
        auto lens = oracle::path_lengths(b.graph, b.x, b.y);
        CHECK(std::vector<int>(lens.begin(), lens.end()) == b.xy_lengths);
        for (int l : lens) CHECK(l % 3 != 0);
        std::set<int> div3;
        for (auto [len, cnt] : oracle::cycle_histogram(b.graph))
            if (len % 3 == 0) div3.insert(len);
        CHECK(std::vector<int>(div3.begin(), div3.end()) == b.div3_cycle_lengths);
    }
    CHECK_THROWS_AS(block_case_from_string("H4"), PreconditionError);
}

TEST_CASE("join keeps the graph cubic and 2-connected") {
    auto b = building_block(BlockCase::H2);
    for (int N = 1; N <= 3; ++N) {
        auto j = tensor_join(b.graph, b.x, b.y, b.graph, b.x, b.y, N);
        CHECK(is_cubic(j.graph));
        CHECK(is_2_connected(j.graph));
        CHECK(j.graph.n() == 2 * b.graph.n() + 2 * (3 * N + 1));
    }
    CHECK_THROWS_AS(tensor_join(b.graph, 0, 0, b.graph, 0, 1, 1), PreconditionError);
    CHECK_THROWS_AS(tensor_join(b.graph, 0, 2, b.graph, 0, 1, 1), PreconditionError);
}

TEST_CASE("divisible-by-3 cycles of small joins are all classified") {
    for (auto c : {BlockCase::H1, BlockCase::H2, BlockCase::H3}) {
        auto b = building_block(c);
        auto j = tensor_join(b.graph, b.x, b.y, b.graph, b.x, b.y, 1);
        auto cls = classify_div3_cycles(j);
        CHECK(cls.unclassified == 0);
        CHECK(cls.inside_first == cls.inside_second);
        for (auto [p1, p2, len] : cls.through_shapes) {
            CHECK(p1 % 3 == 1);
            CHECK(p2 % 3 == 1);
            CHECK(len == 6 + 4 + p1 + p2);
        }
    }
}

TEST_CASE("choice of N' per residue class") {
    CHECK(choose_n_prime(9, 12, 1) == std::pair{1, BlockCase::H2});
    CHECK(choose_n_prime(3, 12, 1) == std::pair{11, BlockCase::H3});
    auto [n0, c0] = choose_n_prime(0, 12, 1);
    CHECK(c0 == BlockCase::H1);
    CHECK((6 * n0 + 12) % 12 != 0);
    auto [n6, c6] = choose_n_prime(6, 12, 1);
    CHECK(c6 == BlockCase::H1);
    CHECK((6 * n6 + 12) % 12 != 6);
    for (int N = 1; N <= 30; ++N) {
        auto [n, c] = choose_n_prime(9, 15, N);
        CHECK(n >= N);
        CHECK(n % 15 == 1);
        CHECK(c == BlockCase::H2);
    }
    CHECK_THROWS_AS(choose_n_prime(3, 9, 1), PreconditionError);
    CHECK_THROWS_AS(choose_n_prime(4, 12, 1), PreconditionError);
    CHECK_THROWS_AS(choose_n_prime(3, 13, 1), PreconditionError);
    CHECK_THROWS_AS(choose_n_prime(3, 12, 0), PreconditionError);
}

TEST_CASE("small certified counterexample") {
    auto r = build_counterexample(9, 12, 1);
    CHECK(r.certified);
    CHECK(r.enumeration_checked);
    CHECK(r.enumeration_agrees);
    CHECK(r.residue_counts[9] == 0);
    CHECK(is_cubic(r.graph));
    CHECK(is_2_connected(r.graph));
    auto h = cycle_length_histogram(r.graph);
    for (auto [len, cnt] : h) CHECK(len % 12 != 9);
    CHECK(std::find(r.residues.begin(), r.residues.end(), 9) == r.residues.end());
}

TEST_CASE("larger m uses the same residue class") {
    auto a = build_counterexample(21, 12, 2);
    CHECK(a.m == 9);
    CHECK(a.certified);
    CHECK(a.n_prime >= 2);
}
