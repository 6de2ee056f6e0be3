#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cyclemod/cycle_oracle.hpp"
#include "cyclemod/graph.hpp"

namespace cyclemod {

struct PathPair {
    std::vector<int> short_path;
    std::vector<int> long_path;
    int difference = 0;  // long length - short length, 1 or 2
};

struct ArcSplit {
    std::vector<int> cycle;
    int x = 0, y = 0;
    int arc1 = 0, arc2 = 0;  // the two x-y arc lengths
};

ArcSplit arc_split(const std::vector<int>& cycle, int x, int y);
int arc_difference(const std::vector<int>& cycle, int x, int y);

// Induced cycle through edge st avoiding r whose removal leaves g connected.
std::vector<int> nonseparating_induced_cycle(const Graph& g, int s, int t, int r,
                                             std::size_t cap = kDefaultCycleCap);
bool is_induced_cycle(const Graph& g, const std::vector<int>& c);
bool is_nonseparating(const Graph& g, const std::vector<int>& c);

// Shortest base first, then difference 1 before 2. Empty if no such pair exists.
std::optional<PathPair> find_pair_diff12(const Graph& g, int x, int y, std::size_t cap = kDefaultCycleCap);
bool validate_pair(const Graph& g, int x, int y, const PathPair& p);

// the two common neighbours when a, b are opposite vertices of a 4-cycle
std::optional<std::pair<int, int>> opposite_in_4cycle(const Graph& g, int a, int b);

struct CloseDisjointPaths {
    std::vector<int> q1;  // starts in {x1, x2}, ends in {y, z}
    std::vector<int> q2;
    int cross_edges = 0;  // edges of g with one end on each path
};

int count_cross_edges(const Graph& g, const std::vector<int>& a, const std::vector<int>& b);

using PairOrClose = std::variant<PathPair, CloseDisjointPaths>;

// Either two x1-x2 paths whose lengths differ by 1 or 2, or two disjoint
// {x1,x2}-{y,z} paths with at least k edges between them.
PairOrClose pair_or_kclose(const Graph& g, int x1, int x2, int y, int z, int k);

// Test families: the cross-ladder with x1, x2 = the first rung; and the same
// ladder behind a 4-cycle on which x1, x2 are opposite. Both have no pair.
struct PairFamily {
    Graph graph;
    int x1 = 0, x2 = 0, y = 0, z = 0;
};
PairFamily ladder_pair_family(int N);
PairFamily four_cycle_pair_family(int N);

}  // namespace cyclemod
