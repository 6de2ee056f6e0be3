#include "cyclemod/path_pairs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <set>

#include "cyclemod/counterexamples.hpp"
#include "cyclemod/flow.hpp"

namespace cyclemod {

ArcSplit arc_split(const std::vector<int>& cycle, int x, int y) {
    auto ix = std::find(cycle.begin(), cycle.end(), x), iy = std::find(cycle.begin(), cycle.end(), y);
    if (ix == cycle.end() || iy == cycle.end()) throw PreconditionError("vertex is not on the cycle");
    if (x == y) throw PreconditionError("x and y must be distinct");
    ArcSplit a;
    a.cycle = cycle;
    a.x = x;
    a.y = y;
    const int L = static_cast<int>(cycle.size());
    a.arc1 = static_cast<int>(((iy - ix) % L + L) % L);
    a.arc2 = L - a.arc1;
    return a;
}

int arc_difference(const std::vector<int>& cycle, int x, int y) {
    auto a = arc_split(cycle, x, y);
    return std::abs(a.arc1 - a.arc2);
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& c) {
    if (!is_cycle(g, c)) return false;
    std::set<int> on(c.begin(), c.end());
    std::size_t inner = 0;
    for (int v : c)
        for (int w : g.neighbors(v)) inner += on.count(w);
    return inner == 2 * c.size();
}

bool is_nonseparating(const Graph& g, const std::vector<int>& c) {
    std::vector<bool> removed(g.n(), false);
    for (int v : c) removed[v] = true;
    auto lab = component_labels(g, removed);
    int comp = -1;
    for (int v = 0; v < g.n(); ++v) {
        if (removed[v]) continue;
        if (comp < 0) comp = lab[v];
        if (lab[v] != comp) return false;
    }
    return true;
}

std::vector<int> nonseparating_induced_cycle(const Graph& g, int s, int t, int r, std::size_t cap) {
    if (!g.has_edge(s, t)) throw PreconditionError("st is not an edge");
    if (r == s || r == t || r < 0 || r >= g.n()) throw PreconditionError("r must be a vertex other than s and t");
    Graph h = g;
    h.remove_edge(s, t);
    std::vector<char> on(g.n(), 0);
    std::vector<int> path{t};
    on[t] = 1;
    on[r] = 1;  // never enter r
    std::size_t visited = 0;
    std::vector<int> found;
    // t ... s paths in g - st avoiding r; each closes a cycle with st
    std::function<bool(int)> dfs = [&](int v) {
        if (++visited > cap) throw OverflowError("induced cycle search exceeded its budget");
        for (int w : h.neighbors(v)) {
            if (on[w]) continue;
            // w may only touch its predecessor among path vertices, and s may also touch t
            bool chord = false;
            for (int u : g.neighbors(w))
                if (u != v && u != r && on[u] && !(w == s && u == t)) chord = true;
            if (chord) continue;
            if (w == s) {
                path.push_back(s);
                if (is_induced_cycle(g, path) && is_nonseparating(g, path)) {
                    found = path;
                    return true;
                }
                path.pop_back();
                continue;
            }
            on[w] = 1;
            path.push_back(w);
            if (dfs(w)) return true;
            path.pop_back();
            on[w] = 0;
        }
        return false;
    };
    if (dfs(t)) return found;
    std::string why = "no non-separating induced cycle through the edge avoiding r";
    if (!is_3_connected(g)) why += " (the graph is not 3-connected)";
    throw Error(why);
}

bool validate_pair(const Graph& g, int x, int y, const PathPair& p) {
    auto ok = [&](const std::vector<int>& q) { return is_path(g, q) && q.front() == x && q.back() == y; };
    int d = static_cast<int>(p.long_path.size()) - static_cast<int>(p.short_path.size());
    return ok(p.short_path) && ok(p.long_path) && d == p.difference && (d == 1 || d == 2);
}

std::optional<PathPair> find_pair_diff12(const Graph& g, int x, int y, std::size_t cap) {
    if (x == y) throw PreconditionError("x and y must be distinct");
    auto pl = xy_path_lengths(g, x, y, cap);
    std::set<int> ls(pl.lengths.begin(), pl.lengths.end());
    for (int l : ls)
        for (int d : {1, 2})
            if (ls.count(l + d)) {
                PathPair p{pl.witnesses.at(l), pl.witnesses.at(l + d), d};
                if (!validate_pair(g, x, y, p)) throw Error("path pair witness failed validation");
                return p;
            }
    return std::nullopt;
}

std::optional<std::pair<int, int>> opposite_in_4cycle(const Graph& g, int a, int b) {
    if (a == b) return std::nullopt;
    std::vector<int> common;
    for (int c : g.neighbors(a))
        if (c != b && g.has_edge(c, b)) common.push_back(c);
    if (common.size() < 2) return std::nullopt;
    std::sort(common.begin(), common.end());
    return std::make_pair(common[0], common[1]);
}

int count_cross_edges(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    int c = 0;
    for (auto [u, v] : g.edges())
        if ((sa.count(u) && sb.count(v)) || (sa.count(v) && sb.count(u))) ++c;
    return c;
}

namespace {

// two vertex-disjoint paths from {a1, a2} to {b1, b2} inside `alive`
std::optional<std::pair<std::vector<int>, std::vector<int>>> disjoint_pair(const Graph& g, const std::vector<char>& alive,
                                                                          int a1, int a2, int b1, int b2) {
    const int n = g.n(), S = 2 * n, T = 2 * n + 1;
    MaxFlow f(2 * n + 2);
    struct Fwd {
        int from, idx, a, b;
    };
    std::vector<Fwd> fwd;
    std::vector<int> sink_arc(n, -1);
    for (int v = 0; v < n; ++v)
        if (alive[v]) f.add_arc(2 * v, 2 * v + 1, 1);
    f.add_arc(S, 2 * a1, 1);
    f.add_arc(S, 2 * a2, 1);
    sink_arc[b1] = f.add_arc(2 * b1 + 1, T, 1);
    sink_arc[b2] = f.add_arc(2 * b2 + 1, T, 1);
    for (int a = 0; a < n; ++a)
        if (alive[a])
            for (int b : g.neighbors(a))
                if (alive[b]) fwd.push_back({2 * a + 1, f.add_arc(2 * a + 1, 2 * b, 1), a, b});
    if (f.run(S, T, 2) < 2) return std::nullopt;
    std::multimap<int, int> next;
    for (const auto& a : fwd)
        if (f.flow_on(a.from, a.idx) > 0) next.emplace(a.a, a.b);
    auto trace = [&](int v) {
        std::vector<int> p{v};
        while (!(sink_arc[v] >= 0 && f.flow_on(2 * v + 1, sink_arc[v]) > 0)) {
            auto it = next.find(v);
            if (it == next.end()) return std::vector<int>{};
            v = it->second;
            next.erase(it);
            p.push_back(v);
        }
        return p;
    };
    auto p1 = trace(a1), p2 = trace(a2);
    if (p1.empty() || p2.empty()) return std::nullopt;
    return std::make_pair(p1, p2);
}

std::optional<PathPair> pair_in(const Graph& g, const std::vector<char>& alive, int x, int y) {
    std::vector<int> keep, idx(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (alive[v]) idx[v] = static_cast<int>(keep.size()), keep.push_back(v);
    Graph h = induced_subgraph(g, keep);
    auto p = find_pair_diff12(h, idx[x], idx[y]);
    if (!p) return std::nullopt;
    for (auto& v : p->short_path) v = keep[v];
    for (auto& v : p->long_path) v = keep[v];
    return p;
}

PairOrClose solve(const Graph& g, std::vector<char> alive, int x1, int x2, int y, int z, int k) {
    if (auto p = pair_in(g, alive, x1, x2)) return *p;
    if (k <= 0) {
        auto d = disjoint_pair(g, alive, x1, x2, y, z);
        if (!d) throw Error("no two disjoint {x1,x2}-{y,z} paths");
        return CloseDisjointPaths{d->first, d->second, count_cross_edges(g, d->first, d->second)};
    }
    auto nbrs = [&](int v) {
        std::vector<int> out;
        for (int w : g.neighbors(v))
            if (alive[w]) out.push_back(w);
        return out;
    };
    // the alive neighbour of v outside `skip`
    auto other = [&](int v, std::initializer_list<int> skip) {
        for (int w : nbrs(v))
            if (std::find(skip.begin(), skip.end(), w) == skip.end()) return w;
        throw Error("reduction step found no continuing neighbour");
    };
    std::vector<int> ext1, ext2;  // x1 ... x1', x2 ... x2'
    int step;
    if (g.has_edge(x1, x2)) {
        step = 1;
        auto walk = [&](int x, int partner, std::vector<int>& ext) {
            int w = other(x, {partner});
            ext = {x, w};
            if (w == z) ext.push_back(other(z, {x}));
        };
        walk(x1, x2, ext1);
        walk(x2, x1, ext2);
    } else {
        std::vector<int> common;
        for (int c : nbrs(x1))
            if (g.has_edge(c, x2)) common.push_back(c);
        if (common.size() < 2)
            throw Error("no path pair although x1, x2 are neither adjacent nor opposite in a 4-cycle");
        step = 2;
        int a = common[0], b = common[1];
        int u = other(a, {x1, x2}), v = other(b, {x1, x2});
        ext1 = {x1, a, u};
        ext2 = {x2, b, v};
        if (u == z) ext1.push_back(other(z, {a}));
        if (v == z) ext2.push_back(other(z, {b}));
    }
    auto prepend = [](const std::vector<int>& ext, std::vector<int> p) {
        std::vector<int> out(ext.begin(), ext.end() - 1);
        out.insert(out.end(), p.begin(), p.end());
        return out;
    };
    auto append_rev = [](std::vector<int> p, const std::vector<int>& ext) {
        for (auto it = ext.rbegin() + 1; it != ext.rend(); ++it) p.push_back(*it);
        return p;
    };
    auto finish = [&](std::vector<int> q1, std::vector<int> q2) {
        CloseDisjointPaths out{std::move(q1), std::move(q2), 0};
        out.cross_edges = count_cross_edges(g, out.q1, out.q2);
        return out;
    };
    if (k <= step) {
        // the first edges of the two paths already supply the k cross edges
        auto rest = alive;
        rest[x1] = rest[x2] = 0;
        auto d = disjoint_pair(g, rest, ext1[1], ext2[1], y, z);
        if (!d) throw Error("no two disjoint {x1,x2}-{y,z} paths");
        return finish(prepend({x1, ext1[1]}, d->first), prepend({x2, ext2[1]}, d->second));
    }
    for (int v : ext1) alive[v] = 0;
    for (int v : ext2) alive[v] = 0;
    const int n1 = ext1.back(), n2 = ext2.back();
    alive[n1] = alive[n2] = 1;
    if (n1 == n2 || !alive[y]) throw Error("reduction step left an invalid instance");
    auto lift = [&](const PathPair& p) {
        return PathPair{append_rev(prepend(ext1, p.short_path), ext2), append_rev(prepend(ext1, p.long_path), ext2),
                        p.difference};
    };
    if (!alive[z]) {
        // z was absorbed, so the reduced graph has three degree-2 vertices and must contain a pair
        auto p = pair_in(g, alive, n1, n2);
        if (!p) throw Error("reduced graph without z has no path pair");
        return lift(*p);
    }
    auto res = solve(g, alive, n1, n2, y, z, k - step);
    if (auto* p = std::get_if<PathPair>(&res)) return lift(*p);
    auto q = std::get<CloseDisjointPaths>(res);
    if (q.q1.front() != n1) std::swap(q.q1, q.q2);
    return finish(prepend(ext1, q.q1), prepend(ext2, q.q2));
}

}  // namespace

PairOrClose pair_or_kclose(const Graph& g, int x1, int x2, int y, int z, int k) {
    std::set<int> four{x1, x2, y, z};
    if (four.size() != 4) throw PreconditionError("x1, x2, y, z must be distinct");
    for (int v : four)
        if (v < 0 || v >= g.n() || g.degree(v) != 2)
            throw PreconditionError("vertex " + std::to_string(v) + " must have degree 2");
    for (int v = 0; v < g.n(); ++v)
        if (!four.count(v) && g.degree(v) != 3)
            throw PreconditionError("vertex " + std::to_string(v) + " must have degree 3");
    if (!is_2_connected(g)) throw PreconditionError("graph must be 2-connected");
    auto dy = bfs_distances(g, y);
    if (dy[x1] < k || dy[x2] < k) throw PreconditionError("need dist(x_i, y) >= k for i = 1, 2");
    std::vector<char> alive(g.n(), 1);
    auto res = solve(g, alive, x1, x2, y, z, k);
    if (auto* p = std::get_if<PathPair>(&res)) {
        if (!validate_pair(g, x1, x2, *p)) throw Error("path pair failed validation");
    } else {
        auto& q = std::get<CloseDisjointPaths>(res);
        std::set<int> a(q.q1.begin(), q.q1.end());
        bool disjoint = std::none_of(q.q2.begin(), q.q2.end(), [&](int v) { return a.count(v) > 0; });
        std::set<int> xs{x1, x2}, ys{y, z};
        bool ends = xs.count(q.q1.front()) && xs.count(q.q2.front()) && ys.count(q.q1.back()) && ys.count(q.q2.back());
        if (!is_path(g, q.q1) || !is_path(g, q.q2) || !disjoint || !ends || q.cross_edges < k)
            throw Error("disjoint path witness failed validation");
    }
    return res;
}

PairFamily ladder_pair_family(int N) {
    auto cl = build_cross_ladder(N);
    return {cl.graph, cl.u[0], cl.v[0], cl.u[3 * N], cl.v[3 * N]};
}

PairFamily four_cycle_pair_family(int N) {
    auto cl = build_cross_ladder(N);
    PairFamily f;
    f.graph = cl.graph;
    int x1 = f.graph.add_vertex(), a = f.graph.add_vertex(), x2 = f.graph.add_vertex(), b = f.graph.add_vertex();
    f.graph.add_edge(x1, a);
    f.graph.add_edge(a, x2);
    f.graph.add_edge(x2, b);
    f.graph.add_edge(b, x1);
    f.graph.add_edge(a, cl.u[0]);
    f.graph.add_edge(b, cl.v[0]);
    f.x1 = x1;
    f.x2 = x2;
    f.y = cl.u[3 * N];
    f.z = cl.v[3 * N];
    return f;
}

}  // namespace cyclemod
