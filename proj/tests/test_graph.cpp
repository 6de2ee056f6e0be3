#include <doctest.h>

#include "cyclemod/generators.hpp"
#include "cyclemod/graph.hpp"
#include "oracles.hpp"

using namespace cyclemod;

TEST_CASE("graph6 decodes single vertex and K4") {
    Graph one = parse_graph6("@");
    CHECK(one.n() == 1);
    CHECK(one.edge_count() == 0);
    Graph k4 = parse_graph6("C~");
    CHECK(k4.n() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4 == complete_graph(4));
}

TEST_CASE("graph6 round trip and independent decoder agree") {
    Rng rng(7);
    for (int n : {0, 1, 2, 5, 13, 40, 62, 63, 70, 100}) {
        for (double p : {0.1, 0.5, 0.9}) {
            Graph g = random_gnp(n, p, rng);
            std::string s = emit_graph6(g);
            CHECK(parse_graph6(s) == g);
            CHECK(emit_graph6(parse_graph6(s)) == s);
            if (n > 0) CHECK(oracle::decode_graph6(s) == g);
        }
    }
    CHECK(emit_graph6(petersen_graph()) == "IheA@GUAo");
    CHECK(parse_graph6("IheA@GUAo\n").edge_count() == 15);
}

TEST_CASE("graph6 errors carry byte offsets") {
    auto offset_of = [](const std::string& s) -> long {
        try {
            parse_graph6(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("C") == 1);      // truncated bits
    CHECK(offset_of("C~~") == 2);    // trailing byte
    CHECK(offset_of("C\x20") == 1);  // bad character
    CHECK(offset_of("B@") >= 0);     // nonzero padding: n=3 has 3 bits
    CHECK(offset_of("~") == 1);      // truncated long header
    CHECK_NOTHROW(parse_graph6("Bw"));
}

TEST_CASE("graph rejects loops, duplicates and asymmetry") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), Error);
    CHECK_THROWS_AS(Graph::from_adjacency({{1}, {}}), Error);
    CHECK_NOTHROW(Graph::from_adjacency({{1}, {0}}));
}

TEST_CASE("edge list json round trip") {
    Graph p = petersen_graph();
    CHECK(parse_edge_list_json(emit_edge_list_json(p)) == p);
    CHECK_THROWS_AS(parse_edge_list_json("{\"n\": 2}"), ParseError);
}

TEST_CASE("blocks of small graphs") {
    auto c5 = blocks(cycle_graph(5));
    CHECK(c5.blocks.size() == 1);
    CHECK(c5.cut_vertices.empty());

    Graph bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto bt = blocks(bowtie);
    CHECK(bt.blocks.size() == 2);
    CHECK(bt.cut_vertices == std::vector<int>{2});
    CHECK(bt.endblock[0]);
    CHECK(bt.endblock[1]);

    auto p3 = blocks(path_graph(3));
    CHECK(p3.blocks.size() == 2);
    CHECK(p3.cut_vertices == std::vector<int>{1});

    Graph iso(2);
    CHECK(blocks(iso).blocks.size() == 2);
}

TEST_CASE("block edges partition the edge set") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_gnp(12, 0.2, rng);
        auto bd = blocks(g);
        std::size_t total = 0;
        std::set<Edge> seen;
        for (const auto& be : bd.block_edges) {
            total += be.size();
            for (const auto& e : be) CHECK(seen.insert(e).second);
        }
        CHECK(total == g.edge_count());
        std::set<int> covered;
        for (const auto& b : bd.blocks) covered.insert(b.begin(), b.end());
        CHECK(static_cast<int>(covered.size()) == g.n());
        // every block with >= 3 vertices is 2-connected; cut vertices lie in >= 2 blocks
        for (const auto& b : bd.blocks)
            if (b.size() >= 3) CHECK(is_2_connected(induced_subgraph(g, b)));
        for (int c : bd.cut_vertices) {
            int cnt = 0;
            for (const auto& b : bd.blocks) cnt += std::binary_search(b.begin(), b.end(), c);
            CHECK(cnt >= 2);
        }
        for (std::size_t b = 0; b < bd.blocks.size(); ++b) CHECK(bd.endblock[b] == (bd.block_tree_degree(b) <= 1));
    }
}

TEST_CASE("vertex connectivity") {
    CHECK(connectivity(complete_graph(4)) == 3);
    CHECK(connectivity(cycle_graph(5)) == 2);
    CHECK(connectivity(petersen_graph()) == 3);
    CHECK(is_3_connected(petersen_graph()));
    CHECK_FALSE(is_3_connected(cycle_graph(5)));
    Rng rng(3);
    for (int t = 0; t < 150; ++t) {
        Graph g = random_gnp(9, 0.5, rng);
        int kappa = oracle::vertex_connectivity(g);
        CHECK(connectivity(g) == kappa);
        for (int k = 1; k <= 4; ++k) CHECK(is_k_connected(g, k) == (kappa >= k));
    }
}

TEST_CASE("two-edge cuts") {
    auto c4 = two_edge_cuts(cycle_graph(4));
    CHECK(c4.size() == 6);
    int nontrivial = 0;
    for (const auto& c : c4) nontrivial += c.non_trivial;
    CHECK(nontrivial == 2);
    CHECK(two_edge_cuts(complete_graph(4)).empty());

    Graph tt = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}});
    auto cuts = two_edge_cuts(tt);
    std::vector<EdgeCut> nontriv;
    for (const auto& c : cuts)
        if (c.non_trivial) nontriv.push_back(c);
    REQUIRE(nontriv.size() == 1);
    CHECK(nontriv[0].first == Edge{0, 3});
    CHECK(nontriv[0].second == Edge{1, 4});
    CHECK_THROWS(two_edge_cuts(Graph(2)));
}

TEST_CASE("3-connected cubic graphs have no 2-edge-cuts") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        auto g = random_cubic_3connected(12, rng);
        REQUIRE(g);
        CHECK(two_edge_cuts(*g).empty());
    }
}

TEST_CASE("distances and diameter") {
    Graph p = petersen_graph();
    CHECK(distance(p, 0, 1) == 1);
    CHECK(diameter(p) == 2);
    CHECK(distance(path_graph(7), 0, 6) == 6);
    CHECK_THROWS(distance(Graph(2), 0, 1));
    CHECK_THROWS(diameter(Graph(2)));
}
