#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cyclemod/graph.hpp"
#include "cyclemod/necklaces.hpp"

namespace cyclemod {

// A subcubic multigraph given as a Hamiltonian path plus the remaining edges M.
struct ChordInstance {
    int n = 0;
    std::vector<int> path;    // visits every vertex once
    std::vector<Edge> chords;  // M; may be parallel to path edges

    void validate() const;
    MultiGraph to_multigraph() const;  // path edges first, then chords
};

// A path in a ChordInstance. via[j] is the chord index used for the step
// vertices[j] -> vertices[j+1], or -1 for a path edge.
struct ChordPath {
    std::vector<int> vertices;
    std::vector<int> via;
    int chord_count = 0;
    bool guaranteed = false;  // the size bound held
    std::string method;       // "decreasing", "non-crossing", "classes", "search"
};

// ceil(8k(k-1)/3) + 1
long long chord_bound(int k);

bool validate_chord_path(const ChordInstance& inst, const ChordPath& p);

// Path using at least k chords. Throws PreconditionError below the bound unless
// best_effort is set, in which case the best path found is returned and its
// chord count may fall short of k.
ChordPath path_with_chords(const ChordInstance& inst, int k, bool best_effort = false,
                           std::size_t search_budget = 2'000'000);

// K groups of K nested chords along the path; no path uses more than 3K - 2 chords.
ChordInstance build_extremal_gk(int K);

// Exhaustive maximum number of chords on a single path (small instances).
int max_chords_on_path(const ChordInstance& inst);

struct SpecialPathResult {
    bool found = false;
    std::vector<int> path;  // in the input graph
    int special_count = 0;
    std::string method;  // "trivial", "cycle", "chords", "search"
    std::string note;
    std::vector<std::string> reductions;  // log of applied rewrite steps
};

// Reduction phase on (g, S). Every current edge remembers the vertex path it
// stands for in the input graph, so paths found later can be lifted back.
struct SpecialReducer {
    Graph g;                                     // removed vertices stay isolated
    std::map<Edge, std::vector<int>> origin;     // path from min end to max end
    std::set<Edge> special;

    SpecialReducer(const Graph& input, const std::vector<Edge>& S);
    // applies the first available rewrite in the order delete, suppress, contract
    bool step(std::string* what = nullptr);
    int run(std::vector<std::string>* log = nullptr);
    std::vector<int> alive() const;
    std::vector<int> lift(const std::vector<int>& path) const;
};

SpecialPathResult path_with_special_edges(const Graph& g, const std::vector<Edge>& S, int k,
                                          std::size_t cycle_budget = 200'000, std::size_t search_budget = 5'000'000);

// Exhaustive maximum number of special edges on a path (small instances).
int max_special_on_path(const Graph& g, const std::vector<Edge>& S);

// Cycle through at least k edges of a matching M whose edges join different legs of theta.
std::vector<int> cycle_through_matching(const ThetaGraph& theta, const std::vector<Edge>& M, int k);

}  // namespace cyclemod
