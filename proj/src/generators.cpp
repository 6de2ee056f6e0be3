#include "cyclemod/generators.hpp"

#include <algorithm>

namespace cyclemod {

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph prism_graph(int n) {
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(n + i, n + (i + 1) % n);
        g.add_edge(i, n + i);
    }
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

std::optional<Graph> random_degree_sequence(const std::vector<int>& degrees, Rng& rng, int max_tries) {
    std::vector<int> stubs;
    for (int v = 0; v < static_cast<int>(degrees.size()); ++v)
        for (int d = 0; d < degrees[v]; ++d) stubs.push_back(v);
    if (stubs.size() % 2) throw PreconditionError("degree sum must be even");
    for (int t = 0; t < max_tries; ++t) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph g(static_cast<int>(degrees.size()));
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b || g.has_edge(a, b))
                ok = false;
            else
                g.add_edge(a, b);
        }
        if (ok) return g;
    }
    return std::nullopt;
}

std::optional<Graph> random_subcubic_2connected(int n, int deg2, Rng& rng, int max_tries) {
    if (deg2 < 0 || deg2 > n || (3 * n - deg2) % 2) throw PreconditionError("infeasible degree sequence");
    std::vector<int> deg(n, 3);
    for (int i = 0; i < deg2; ++i) deg[i] = 2;
    for (int t = 0; t < max_tries; ++t) {
        auto g = random_degree_sequence(deg, rng, 50);
        if (g && is_2_connected(*g)) return g;
    }
    return std::nullopt;
}

std::optional<Graph> random_cubic_3connected(int n, Rng& rng, int max_tries) {
    if (n < 4 || n % 2) throw PreconditionError("cubic graphs need an even order >= 4");
    std::vector<int> deg(n, 3);
    for (int t = 0; t < max_tries; ++t) {
        auto g = random_degree_sequence(deg, rng, 50);
        if (g && is_3_connected(*g)) return g;
    }
    return std::nullopt;
}

Graph random_gnp(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

Graph random_tree(int n, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(v, pick(rng));
    }
    return g;
}

}  // namespace cyclemod

namespace cyclemod {

Graph truncate_cubic(const Graph& g) {
    if (!is_cubic(g)) throw PreconditionError("truncation needs a cubic graph");
    Graph t(3 * g.n());
    auto corner = [&](int v, int w) {
        const auto& nb = g.neighbors(v);
        return 3 * v + static_cast<int>(std::find(nb.begin(), nb.end(), w) - nb.begin());
    };
    for (int v = 0; v < g.n(); ++v) {
        t.add_edge(3 * v, 3 * v + 1);
        t.add_edge(3 * v + 1, 3 * v + 2);
        t.add_edge(3 * v, 3 * v + 2);
    }
    for (auto [a, b] : g.edges()) t.add_edge(corner(a, b), corner(b, a));
    return t;
}

}  // namespace cyclemod
