#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cyclemod/graph.hpp"

namespace cyclemod {

using Rng = std::mt19937_64;

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
Graph prism_graph(int n);  // C_n x K_2
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);

// Random graph with the given degree sequence by the configuration model;
// rejected until simple. Returns nullopt after max_tries failures.
std::optional<Graph> random_degree_sequence(const std::vector<int>& degrees, Rng& rng, int max_tries = 1000);

// 2-connected graph with `deg2` vertices of degree 2 and the rest of degree 3.
std::optional<Graph> random_subcubic_2connected(int n, int deg2, Rng& rng, int max_tries = 5000);
// cubic and 3-connected; n even and >= 4
std::optional<Graph> random_cubic_3connected(int n, Rng& rng, int max_tries = 5000);
// uniform-ish random simple graph with edge probability p
Graph random_gnp(int n, double p, Rng& rng);
Graph random_tree(int n, Rng& rng);
// every vertex of a cubic graph replaced by a triangle; stays cubic and keeps 3-connectivity
Graph truncate_cubic(const Graph& g);

}  // namespace cyclemod
