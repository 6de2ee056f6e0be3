#include <doctest.h>

#include "cyclemod/cycle_oracle.hpp"
#include "cyclemod/generators.hpp"
#include "oracles.hpp"

using namespace cyclemod;

TEST_CASE("K4 has seven cycles") {
    auto cs = enumerate_cycles(complete_graph(4));
    CHECK(cs.cycles.size() == 7);
    CHECK(cs.histogram.at(3) == 4);
    CHECK(cs.histogram.at(4) == 3);
    for (const auto& c : cs.cycles) CHECK(is_cycle(complete_graph(4), c));
}

TEST_CASE("trees have no cycles") {
    Rng rng(1);
    CHECK(enumerate_cycles(random_tree(15, rng)).cycles.empty());
    CHECK(residue_spectrum(random_tree(15, rng), 3).residues.empty());
}

TEST_CASE("Petersen cycle lengths") {
    auto h = enumerate_cycles(petersen_graph()).histogram;
    std::vector<int> lens;
    for (auto [l, c] : h) lens.push_back(l);
    CHECK(lens == std::vector<int>{5, 6, 8, 9});
    CHECK(h == oracle::cycle_histogram(petersen_graph()));
}

TEST_CASE("enumeration matches edge-subset oracle") {
    Rng rng(21);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_gnp(8, 0.45, rng);
        if (g.edge_count() > 20) continue;
        CHECK(cycle_length_histogram(g) == oracle::cycle_histogram(g));
    }
}

TEST_CASE("enumeration cap raises overflow") {
    CHECK_THROWS_AS(enumerate_cycles(complete_graph(6), 10), OverflowError);
    CHECK_NOTHROW(enumerate_cycles(complete_graph(4), 7));
}

TEST_CASE("residue spectra") {
    auto k4 = residue_spectrum(complete_graph(4), 3);
    CHECK(k4.residues == std::vector<int>{0, 1});
    auto pet = residue_spectrum(petersen_graph(), 3);
    CHECK(pet.residues == std::vector<int>{0, 2});
    CHECK(residue_spectrum(cycle_graph(7), 1).residues == std::vector<int>{0});
    for (const auto& [r, c] : pet.witnesses) {
        CHECK(is_cycle(petersen_graph(), c));
        CHECK(static_cast<int>(c.size()) % 3 == r);
    }
}

TEST_CASE("has_cycle_mod") {
    auto w = has_cycle_mod(complete_graph(4), 1, 3);
    REQUIRE(w);
    CHECK(w->size() == 4);
    CHECK_FALSE(has_cycle_mod(complete_graph(4), 2, 3));
    auto tri = has_cycle_mod(cycle_graph(3), 0, 3);
    REQUIRE(tri);
    CHECK(tri->size() == 3);
    CHECK_THROWS(has_cycle_mod(complete_graph(4), 3, 3));
}

TEST_CASE("x-y path lengths") {
    CHECK(xy_path_lengths(complete_graph(4), 0, 1).lengths == std::vector<int>{1, 2, 3});
    CHECK(xy_path_lengths(path_graph(6), 0, 5).lengths == std::vector<int>{5});
    CHECK(xy_path_lengths(Graph(2), 0, 1).lengths.empty());
    Graph pm = petersen_graph();
    pm.remove_edge(0, 1);
    auto pl = xy_path_lengths(pm, 0, 1);
    for (int l : pl.lengths) {
        CHECK(l % 3 != 0);
        CHECK((l == 4 || l == 5 || l == 7 || l == 8));
    }
    Rng rng(8);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_gnp(8, 0.4, rng);
        if (g.edge_count() > 20) continue;
        auto got = xy_path_lengths(g, 0, 7);
        auto want = oracle::path_lengths(g, 0, 7);
        CHECK(std::set<int>(got.lengths.begin(), got.lengths.end()) == want);
        for (const auto& [l, p] : got.witnesses) {
            CHECK(is_path(g, p));
            CHECK(static_cast<int>(p.size()) - 1 == l);
        }
    }
}

TEST_CASE("frontier DP agrees with enumeration") {
    Rng rng(99);
    for (int t = 0; t < 80; ++t) {
        Graph g = (t % 2) ? random_gnp(10, 0.35, rng) : *random_cubic_3connected(12, rng);
        auto hist = cycle_length_histogram(g);
        for (int k : {1, 2, 3, 5, 12}) {
            std::vector<std::uint64_t> want(k, 0);
            for (auto [l, c] : hist) want[l % k] += c;
            auto rc = cycle_residue_counts(g, k);
            CHECK(rc.counts == want);
            for (const auto& [r, c] : rc.witnesses) {
                CHECK(is_cycle(g, c));
                CHECK(static_cast<int>(c.size()) % k == r);
            }
            CHECK(residue_spectrum_dp(g, k).residues == residue_spectrum(g, k).residues);
        }
    }
}

TEST_CASE("min degree three graphs contain a cycle of length divisible by three") {
    Rng rng(4);
    for (int t = 0; t < 30; ++t) {
        auto g = random_cubic_3connected(14, rng);
        REQUIRE(g);
        CHECK(residue_spectrum(*g, 3).contains(0));
    }
}
