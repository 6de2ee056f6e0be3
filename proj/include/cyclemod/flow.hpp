#pragma once

#include <utility>
#include <vector>

namespace cyclemod {

// Unit-style max flow by BFS augmentation; networks here are small.
class MaxFlow {
public:
    struct Arc {
        int to;
        int cap;
        int rev;
    };

    explicit MaxFlow(int nodes) : g_(static_cast<std::size_t>(nodes)) {}

    int add_arc(int from, int to, int cap);
    // stops once `limit` units have been pushed
    int run(int s, int t, int limit = 1 << 30);
    const std::vector<Arc>& arcs(int v) const { return g_[v]; }
    int flow_on(int from, int idx) const;

private:
    std::vector<std::vector<Arc>> g_;
};

// Successive shortest paths; SPFA copes with the negative residual costs.
class MinCostFlow {
public:
    struct Arc {
        int to;
        int cap;
        long long cost;
        int rev;
    };

    explicit MinCostFlow(int nodes) : g_(static_cast<std::size_t>(nodes)) {}

    void add_arc(int from, int to, int cap, long long cost);
    // returns {flow, cost}
    std::pair<int, long long> run(int s, int t, int max_flow);
    const std::vector<Arc>& arcs(int v) const { return g_[v]; }

private:
    std::vector<std::vector<Arc>> g_;
};

}  // namespace cyclemod
