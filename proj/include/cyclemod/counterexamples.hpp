#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "cyclemod/cycle_oracle.hpp"
#include "cyclemod/graph.hpp"

namespace cyclemod {

struct CrossLadder {
    int N = 0;
    Graph graph;
    std::vector<int> u;  // u[i] for 0 <= i <= 3N
    std::vector<int> v;
};

CrossLadder build_cross_ladder(int N);

enum class BlockCase { H1, H2, H3 };
std::string to_string(BlockCase c);
BlockCase block_case_from_string(const std::string& s);

struct BuildingBlock {
    BlockCase tag = BlockCase::H3;
    Graph graph;
    int x = 0;
    int y = 0;
    std::vector<int> div3_cycle_lengths;
    std::vector<int> xy_lengths;
};

// Frozen blocks; their property records are recomputed by the oracle and
// checked on every call.
BuildingBlock building_block(BlockCase c);

struct JoinedGraph {
    Graph graph;
    int N = 0;
    std::vector<int> side;  // 0: first copy, 1: second copy, 2: ladder
    int x1 = 0, y1 = 0, x2 = 0, y2 = 0;
    std::vector<int> u, v;
};

JoinedGraph tensor_join(const Graph& g1, int x1, int y1, const Graph& g2, int x2, int y2, int N);

struct Div3Classification {
    std::size_t inside_first = 0;
    std::size_t inside_second = 0;
    std::size_t through_ladder = 0;
    std::size_t unclassified = 0;
    std::vector<std::tuple<int, int, int>> through_shapes;  // distinct (p1, p2, length)
    std::vector<std::vector<int>> unclassified_examples;
};

Div3Classification classify_div3_cycles(const JoinedGraph& j, std::size_t cap = kDefaultCycleCap);

struct CounterexampleReport {
    int m = 0;
    int k = 0;
    int N = 0;
    int n_prime = 0;
    BlockCase block = BlockCase::H1;
    Graph graph;
    std::vector<std::uint64_t> residue_counts;
    std::vector<int> residues;
    bool certified = false;
    bool enumeration_checked = false;
    bool enumeration_agrees = false;
    std::string enumeration_note;
};

// Smallest N' >= N meeting the congruence of the case that m mod k falls in.
std::pair<int, BlockCase> choose_n_prime(int m, int k, int N);

CounterexampleReport build_counterexample(int m, int k, int N, std::size_t enumeration_cap = kDefaultCycleCap);

}  // namespace cyclemod
