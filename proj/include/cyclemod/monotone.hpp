#pragma once

#include <vector>

#include "cyclemod/graph.hpp"

namespace cyclemod {

enum class Direction { Increasing, Decreasing };

struct MonotoneWitness {
    std::vector<int> indices;
    Direction direction = Direction::Increasing;
};

// Lexicographically least increasing subsequence of length r if one exists,
// otherwise the lexicographically least decreasing one of length s.
MonotoneWitness erdos_szekeres(const std::vector<long long>& seq, int r, int s);

bool validate_monotone(const std::vector<long long>& seq, const MonotoneWitness& w);

// Pairwise edge-disjoint paths pairing up the vertices of S (|S| even), taken
// inside a BFS spanning tree with minimum total length.
std::vector<std::vector<int>> path_system(const Graph& g, const std::vector<int>& S);

}  // namespace cyclemod
