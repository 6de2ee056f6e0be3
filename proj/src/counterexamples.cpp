#include "cyclemod/counterexamples.hpp"

#include <algorithm>
#include <set>

namespace cyclemod {

CrossLadder build_cross_ladder(int N) {
    if (N < 1) throw PreconditionError("cross-ladder needs N >= 1");
    CrossLadder cl;
    cl.N = N;
    const int len = 3 * N;
    cl.graph = Graph(2 * (len + 1));
    for (int i = 0; i <= len; ++i) {
        cl.u.push_back(i);
        cl.v.push_back(len + 1 + i);
    }
    for (int i = 0; i < len; ++i) {
        cl.graph.add_edge(cl.u[i], cl.u[i + 1]);
        cl.graph.add_edge(cl.v[i], cl.v[i + 1]);
    }
    cl.graph.add_edge(cl.u[len], cl.v[len]);
    for (int i = 0; i < N; ++i) {
        cl.graph.add_edge(cl.u[3 * i], cl.v[3 * i]);
        cl.graph.add_edge(cl.u[3 * i + 1], cl.v[3 * i + 2]);
        cl.graph.add_edge(cl.u[3 * i + 2], cl.v[3 * i + 1]);
    }
    return cl;
}

std::string to_string(BlockCase c) {
    switch (c) {
        case BlockCase::H1: return "H1";
        case BlockCase::H2: return "H2";
        case BlockCase::H3: return "H3";
    }
    return "?";
}

BlockCase block_case_from_string(const std::string& s) {
    if (s == "H1") return BlockCase::H1;
    if (s == "H2") return BlockCase::H2;
    if (s == "H3") return BlockCase::H3;
    throw PreconditionError("unknown building block " + s);
}

namespace {

// Found once by a property-directed search over random graphs with two
// degree-2 vertices (0 and 1); see the README for the certified records.
const std::vector<Edge> kH1Edges{{0, 7}, {0, 8}, {1, 3}, {1, 9}, {2, 5}, {2, 7}, {2, 9},
                                 {3, 4}, {3, 6}, {4, 6}, {4, 8}, {5, 7}, {5, 9}, {6, 8}};
const std::vector<Edge> kH2Edges{{0, 1}, {0, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};

bool subset_of(const std::vector<int>& a, std::initializer_list<int> allowed) {
    for (int x : a)
        if (std::find(allowed.begin(), allowed.end(), x) == allowed.end()) return false;
    return true;
}

}  // namespace

BuildingBlock building_block(BlockCase c) {
    BuildingBlock b;
    b.tag = c;
    switch (c) {
        case BlockCase::H1: b.graph = Graph::from_edges(10, kH1Edges); break;
        case BlockCase::H2: b.graph = Graph::from_edges(6, kH2Edges); break;
        case BlockCase::H3: {
            Graph p(10);
            for (int i = 0; i < 5; ++i) {
                p.add_edge(i, (i + 1) % 5);
                p.add_edge(i, i + 5);
                p.add_edge(5 + i, 5 + (i + 2) % 5);
            }
            p.remove_edge(0, 1);
            b.graph = p;
            break;
        }
    }
    b.x = 0;
    b.y = 1;

    std::set<int> div3;
    for (auto [len, cnt] : cycle_length_histogram(b.graph))
        if (len % 3 == 0) div3.insert(len);
    b.div3_cycle_lengths.assign(div3.begin(), div3.end());
    b.xy_lengths = xy_path_lengths(b.graph, b.x, b.y).lengths;

    const std::string name = to_string(c);
    if (!is_2_connected(b.graph)) throw Error(name + " is not 2-connected");
    for (int v = 0; v < b.graph.n(); ++v) {
        int want = (v == b.x || v == b.y) ? 2 : 3;
        if (b.graph.degree(v) != want) throw Error(name + " has a wrong degree at vertex " + std::to_string(v));
    }
    for (int l : b.xy_lengths)
        if (l % 3 == 0) throw Error(name + " has an x-y path of length divisible by 3");
    bool ok = true;
    switch (c) {
        case BlockCase::H1:
            ok = subset_of(b.div3_cycle_lengths, {3, 9}) && subset_of(b.xy_lengths, {4, 5});
            break;
        case BlockCase::H2:
            ok = subset_of(b.div3_cycle_lengths, {3, 6}) && subset_of(b.xy_lengths, {1, 4, 5});
            break;
        case BlockCase::H3:
            ok = subset_of(b.xy_lengths, {4, 5, 7, 8});
            break;
    }
    if (!ok) throw Error(name + " fails its certified property record");
    return b;
}

JoinedGraph tensor_join(const Graph& g1, int x1, int y1, const Graph& g2, int x2, int y2, int N) {
    auto check = [](const Graph& g, int x, int y, const char* name) {
        if (x == y || x < 0 || y < 0 || x >= g.n() || y >= g.n())
            throw PreconditionError(std::string(name) + ": bad terminals");
        for (int v = 0; v < g.n(); ++v) {
            int want = (v == x || v == y) ? 2 : 3;
            if (g.degree(v) != want)
                throw PreconditionError(std::string(name) + ": vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(g.degree(v)) + ", expected " + std::to_string(want));
        }
        if (!is_2_connected(g)) throw PreconditionError(std::string(name) + " is not 2-connected");
    };
    check(g1, x1, y1, "first graph");
    check(g2, x2, y2, "second graph");
    CrossLadder cl = build_cross_ladder(N);
    const int n1 = g1.n(), n2 = g2.n();
    JoinedGraph j;
    j.N = N;
    j.graph = Graph(n1 + n2 + cl.graph.n());
    for (auto [a, b] : g1.edges()) j.graph.add_edge(a, b);
    for (auto [a, b] : g2.edges()) j.graph.add_edge(n1 + a, n1 + b);
    const int off = n1 + n2;
    for (auto [a, b] : cl.graph.edges()) j.graph.add_edge(off + a, off + b);
    j.side.assign(j.graph.n(), 2);
    for (int v = 0; v < n1; ++v) j.side[v] = 0;
    for (int v = 0; v < n2; ++v) j.side[n1 + v] = 1;
    for (int x : cl.u) j.u.push_back(off + x);
    for (int x : cl.v) j.v.push_back(off + x);
    j.x1 = x1;
    j.y1 = y1;
    j.x2 = n1 + x2;
    j.y2 = n1 + y2;
    const int L = 3 * N;
    j.graph.add_edge(j.x1, j.u[0]);
    j.graph.add_edge(j.y1, j.v[0]);
    j.graph.add_edge(j.x2, j.u[L]);
    j.graph.add_edge(j.y2, j.v[L]);
    return j;
}

Div3Classification classify_div3_cycles(const JoinedGraph& j, std::size_t cap) {
    Div3Classification out;
    std::set<std::tuple<int, int, int>> shapes;
    const int base = 6 * j.N + 4;
    for_each_cycle(
        j.graph,
        [&](const std::vector<int>& c) {
            const int len = static_cast<int>(c.size());
            if (len % 3) return true;
            int e1 = 0, e2 = 0;
            bool touches[3] = {false, false, false};
            for (int i = 0; i < len; ++i) {
                int a = c[i], b = c[(i + 1) % len];
                touches[j.side[a]] = true;
                if (j.side[a] == 0 && j.side[b] == 0) ++e1;
                if (j.side[a] == 1 && j.side[b] == 1) ++e2;
            }
            if (!touches[1] && !touches[2]) {
                ++out.inside_first;
            } else if (!touches[0] && !touches[2]) {
                ++out.inside_second;
            } else if (touches[0] && touches[1] && len == base + e1 + e2 && e1 % 3 == 1 && e2 % 3 == 1) {
                ++out.through_ladder;
                shapes.insert({e1, e2, len});
            } else {
                ++out.unclassified;
                if (out.unclassified_examples.size() < 5) out.unclassified_examples.push_back(c);
            }
            return true;
        },
        cap);
    out.through_shapes.assign(shapes.begin(), shapes.end());
    return out;
}

std::pair<int, BlockCase> choose_n_prime(int m, int k, int N) {
    if (k < 12) throw PreconditionError("k must be at least 12");
    if (k % 3 || m % 3) throw PreconditionError("m and k must both be divisible by 3");
    if (m < 0) throw PreconditionError("m must be non-negative");
    if (N < 1) throw PreconditionError("N must be at least 1");
    const int r = m % k;
    auto mod = [k](long long a) { return static_cast<int>(((a % k) + k) % k); };
    if (r == 9) {
        int n = N;
        while (mod(n) != 1) ++n;
        return {n, BlockCase::H2};
    }
    if (r == 3) {
        int n = N;
        while (mod(n) != k - 1) ++n;
        return {n, BlockCase::H3};
    }
    int n = N;
    while (mod(6LL * n + 12) == r) ++n;
    return {n, BlockCase::H1};
}

CounterexampleReport build_counterexample(int m, int k, int N, std::size_t enumeration_cap) {
    auto [np, tag] = choose_n_prime(m, k, N);
    CounterexampleReport rep;
    rep.m = m % k;
    rep.k = k;
    rep.N = N;
    rep.n_prime = np;
    rep.block = tag;
    BuildingBlock b = building_block(tag);
    JoinedGraph j = tensor_join(b.graph, b.x, b.y, b.graph, b.x, b.y, np);
    rep.graph = j.graph;
    if (!is_cubic(rep.graph) || !is_2_connected(rep.graph)) throw Error("join output is not a 2-connected cubic graph");

    auto rc = cycle_residue_counts(rep.graph, k);
    rep.residue_counts = rc.counts;
    for (int r = 0; r < k; ++r)
        if (rc.counts[r] > 0) rep.residues.push_back(r);
    rep.certified = rc.counts[rep.m] == 0;

    if (np <= 13) {
        try {
            std::vector<std::uint64_t> byres(k, 0);
            for (auto [len, cnt] : cycle_length_histogram(rep.graph, enumeration_cap)) byres[len % k] += cnt;
            rep.enumeration_checked = true;
            rep.enumeration_agrees = byres == rc.counts;
            rep.enumeration_note = rep.enumeration_agrees ? "enumeration agrees with the dynamic program"
                                                          : "enumeration disagrees with the dynamic program";
        } catch (const OverflowError&) {
            rep.enumeration_note = "enumeration skipped: more than " + std::to_string(enumeration_cap) + " cycles";
        }
    } else {
        rep.enumeration_note = "enumeration skipped: N' > 13";
    }
    if (rep.enumeration_checked && !rep.enumeration_agrees) rep.certified = false;
    return rep;
}

}  // namespace cyclemod
