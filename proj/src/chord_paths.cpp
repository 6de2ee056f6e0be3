#include "cyclemod/chord_paths.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "cyclemod/cycle_oracle.hpp"
#include "cyclemod/flow.hpp"
#include "cyclemod/monotone.hpp"

namespace cyclemod {

// ---- chord instances ----

void ChordInstance::validate() const {
    if (n < 1) throw PreconditionError("instance needs at least one vertex");
    if (static_cast<int>(path.size()) != n) throw PreconditionError("path must visit every vertex exactly once");
    std::vector<char> seen(n, 0);
    for (int v : path) {
        if (v < 0 || v >= n || seen[v]) throw PreconditionError("path must visit every vertex exactly once");
        seen[v] = 1;
    }
    to_multigraph().validate();
    MultiGraph mg = to_multigraph();
    for (int v = 0; v < n; ++v)
        if (mg.degree(v) > 3) throw PreconditionError("vertex " + std::to_string(v) + " has degree above 3");
}

MultiGraph ChordInstance::to_multigraph() const {
    MultiGraph mg;
    mg.n = n;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) mg.edges.emplace_back(path[i], path[i + 1]);
    mg.edges.insert(mg.edges.end(), chords.begin(), chords.end());
    return mg;
}

long long chord_bound(int k) {
    long long num = 8LL * k * (k - 1);
    return (num + 2) / 3 + 1;
}

bool validate_chord_path(const ChordInstance& inst, const ChordPath& p) {
    if (p.vertices.empty() || p.via.size() + 1 != p.vertices.size()) return false;
    std::vector<int> pos(inst.n, -1);
    for (int i = 0; i < inst.n; ++i) pos[inst.path[i]] = i;
    std::vector<char> seen(inst.n, 0), used(inst.chords.size(), 0);
    int chords = 0;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        int v = p.vertices[i];
        if (v < 0 || v >= inst.n || seen[v]) return false;
        seen[v] = 1;
        if (i == 0) continue;
        int a = p.vertices[i - 1], via = p.via[i - 1];
        if (via < 0) {
            if (std::abs(pos[a] - pos[v]) != 1) return false;
        } else {
            if (via >= static_cast<int>(inst.chords.size()) || used[via]) return false;
            if (make_edge(a, v) != make_edge(inst.chords[via].first, inst.chords[via].second)) return false;
            used[via] = 1;
            ++chords;
        }
    }
    return chords == p.chord_count;
}

namespace {

struct PathBuilder {
    const ChordInstance& inst;
    const std::vector<int>& pos;
    ChordPath out;

    void start(int position) { out.vertices = {inst.path[position]}; }
    int here() const { return pos[out.vertices.back()]; }
    void walk_to(int position) {
        int step = position >= here() ? 1 : -1;
        for (int q = here(); q != position;) {
            q += step;
            out.vertices.push_back(inst.path[q]);
            out.via.push_back(-1);
        }
    }
    void chord(int idx, int to_position) {
        out.vertices.push_back(inst.path[to_position]);
        out.via.push_back(idx);
        ++out.chord_count;
    }
};

struct Chord {
    int l, r, idx;
};

// exhaustive DFS over simple paths in a multigraph, edges weighted 0/1; stops at `target`
struct WeightedPathSearch {
    int n;
    std::vector<std::vector<std::pair<int, int>>> inc;  // (edge id, other end)
    std::vector<int> weight;
    std::size_t budget;
    int target;
    std::size_t expanded = 0;
    bool exhausted = false;
    int best = -1;
    std::vector<int> best_vertices, best_edges, cur_vertices, cur_edges;
    std::vector<char> on;

    WeightedPathSearch(int n_, std::size_t budget_, int target_)
        : n(n_), inc(static_cast<std::size_t>(n_)), budget(budget_), target(target_) {}

    void dfs(int v, int score) {
        if (score > best) {
            best = score;
            best_vertices = cur_vertices;
            best_edges = cur_edges;
        }
        if (best >= target) return;
        if (++expanded > budget) {
            exhausted = true;
            return;
        }
        for (auto [e, w] : inc[v]) {
            if (on[w]) continue;
            on[w] = 1;
            cur_vertices.push_back(w);
            cur_edges.push_back(e);
            dfs(w, score + weight[e]);
            cur_vertices.pop_back();
            cur_edges.pop_back();
            on[w] = 0;
            if (best >= target || exhausted) return;
        }
    }

    void run() {
        on.assign(n, 0);
        for (int s = 0; s < n && best < target && !exhausted; ++s) {
            on[s] = 1;
            cur_vertices = {s};
            cur_edges.clear();
            dfs(s, 0);
            on[s] = 0;
        }
    }
};

WeightedPathSearch chord_search(const ChordInstance& inst, int target, std::size_t budget) {
    WeightedPathSearch s(inst.n, budget, target);
    MultiGraph mg = inst.to_multigraph();
    const int path_edges_count = inst.n - 1;
    for (int e = 0; e < static_cast<int>(mg.edges.size()); ++e) {
        auto [a, b] = mg.edges[e];
        s.inc[a].push_back({e, b});
        s.inc[b].push_back({e, a});
        s.weight.push_back(e >= path_edges_count ? 1 : 0);
    }
    s.run();
    return s;
}

ChordPath search_result_to_path(const ChordInstance& inst, const WeightedPathSearch& s) {
    ChordPath p;
    p.vertices = s.best_vertices;
    const int path_edges_count = inst.n - 1;
    for (int e : s.best_edges) {
        p.via.push_back(e >= path_edges_count ? e - path_edges_count : -1);
        if (e >= path_edges_count) ++p.chord_count;
    }
    p.method = "search";
    return p;
}

// the construction from the monotone-subsequence argument; empty result if it does not apply
ChordPath proof_construction(const ChordInstance& inst, const std::vector<int>& pos, int k) {
    std::vector<Chord> cs;
    for (int i = 0; i < static_cast<int>(inst.chords.size()); ++i) {
        int a = pos[inst.chords[i].first], b = pos[inst.chords[i].second];
        cs.push_back({std::min(a, b), std::max(a, b), i});
    }
    // ties in l get decreasing r, so a tied pair never sits in an increasing run
    std::sort(cs.begin(), cs.end(), [](const Chord& x, const Chord& y) {
        return x.l != y.l ? x.l < y.l : (x.r != y.r ? x.r > y.r : x.idx < y.idx);
    });
    const long long cnt = static_cast<long long>(cs.size());
    std::vector<long long> keys;
    for (long long j = 0; j < cnt; ++j) keys.push_back(cs[j].r * (cnt + 1) + (cnt - j));

    const int inc_len = static_cast<int>((8LL * k + 2) / 3);
    MonotoneWitness w;
    try {
        w = erdos_szekeres(keys, inc_len, k);
    } catch (const PreconditionError&) {
        return {};
    }
    std::vector<Chord> run;
    for (int i : w.indices) run.push_back(cs[i]);
    PathBuilder b{inst, pos, {}};

    if (w.direction == Direction::Decreasing) {
        // nested chords: zig-zag between the left and right ends
        std::vector<Chord> use;
        for (const auto& c : run) {
            if (!use.empty() && use.back().l == c.l && use.back().r == c.r) continue;  // parallel pair
            use.push_back(c);
        }
        const bool from_right = use.size() >= 2 && use[0].l == use[1].l;
        bool at_left = !from_right;
        b.start(at_left ? use[0].l : use[0].r);
        for (std::size_t j = 0; j < use.size(); ++j) {
            const auto& c = use[j];
            b.walk_to(at_left ? c.l : c.r);
            b.chord(c.idx, at_left ? c.r : c.l);
            at_left = !at_left;
        }
        b.out.method = "decreasing";
        return b.out;
    }

    // increasing run: greedy non-crossing chain
    std::vector<int> chain{0};
    for (int j = 1; j < static_cast<int>(run.size()); ++j)
        if (run[j].l > run[chain.back()].r) chain.push_back(j);
    if (static_cast<int>(chain.size()) >= k) {
        b.start(run[chain[0]].l);
        for (int j : chain) {
            b.walk_to(run[j].l);
            b.chord(run[j].idx, run[j].r);
        }
        b.out.method = "non-crossing";
        return b.out;
    }
    // classes C(e'_i): chords of the run starting before the right end of e'_i
    std::vector<std::vector<Chord>> classes;
    for (std::size_t c = 0; c < chain.size(); ++c) {
        int hi = (c + 1 < chain.size()) ? chain[c + 1] : static_cast<int>(run.size());
        classes.emplace_back(run.begin() + chain[c], run.begin() + hi);
    }
    auto class_gain = [](std::size_t t) { return (t >= 4 && t % 2 == 0) ? static_cast<int>(t) - 1 : static_cast<int>(t); };
    int gain[2] = {0, 0};
    for (std::size_t c = 0; c < classes.size(); ++c) gain[c % 2] += class_gain(classes[c].size());
    const std::size_t parity = gain[0] >= gain[1] ? 0 : 1;
    bool started = false;
    for (std::size_t c = parity; c < classes.size(); c += 2) {
        const auto& f = classes[c];
        const std::size_t t = f.size();
        if (!started) {
            b.start(f[0].l);
            started = true;
        }
        b.walk_to(f[0].l);
        if (t == 1) {
            b.chord(f[0].idx, f[0].r);
        } else if (t == 2) {
            b.chord(f[0].idx, f[0].r);
            b.walk_to(f[1].l);
            b.chord(f[1].idx, f[1].r);
        } else {
            const std::size_t last = (t % 2 == 1) ? t : t - 1;  // chords used
            bool at_left = true;
            for (std::size_t j = 0; j < last; ++j) {
                b.walk_to(at_left ? f[j].l : f[j].r);
                b.chord(f[j].idx, at_left ? f[j].r : f[j].l);
                at_left = !at_left;
            }
            if (t % 2 == 0) b.walk_to(f[t - 1].r);
        }
    }
    b.out.method = "classes";
    return b.out;
}

}  // namespace

ChordPath path_with_chords(const ChordInstance& inst, int k, bool best_effort, std::size_t search_budget) {
    inst.validate();
    if (k < 1) throw PreconditionError("k must be positive");
    const bool guaranteed = static_cast<long long>(inst.chords.size()) >= chord_bound(k);
    if (!guaranteed && !best_effort)
        throw PreconditionError("need at least " + std::to_string(chord_bound(k)) + " chords, got " +
                                std::to_string(inst.chords.size()));
    std::vector<int> pos(inst.n);
    for (int i = 0; i < inst.n; ++i) pos[inst.path[i]] = i;

    ChordPath best = proof_construction(inst, pos, k);
    if (!best.vertices.empty() && !validate_chord_path(inst, best)) throw Error("chord path construction is invalid");
    if (best.chord_count < k) {
        auto s = chord_search(inst, k, search_budget);
        if (s.best > best.chord_count) best = search_result_to_path(inst, s);
    }
    best.guaranteed = guaranteed;
    if (best.chord_count < k && !best_effort) throw Error("no path with " + std::to_string(k) + " chords found");
    return best;
}

ChordInstance build_extremal_gk(int K) {
    if (K < 1) throw PreconditionError("K must be positive");
    ChordInstance inst;
    const int block = 2 * K + 1;
    inst.n = K * block;
    inst.path.resize(inst.n);
    std::iota(inst.path.begin(), inst.path.end(), 0);
    for (int b = 0; b < K; ++b) {
        int base = b * block;
        for (int j = 0; j < K; ++j) inst.chords.emplace_back(base + j, base + 2 * K - j);
    }
    return inst;
}

int max_chords_on_path(const ChordInstance& inst) {
    inst.validate();
    return chord_search(inst, static_cast<int>(inst.chords.size()) + 1, static_cast<std::size_t>(-1)).best;
}

// ---- special edges ----

namespace {

std::vector<int> oriented(const std::map<Edge, std::vector<int>>& origin, int a, int b) {
    const auto& p = origin.at(make_edge(a, b));
    if (a < b) return p;
    return {p.rbegin(), p.rend()};
}

Graph compact(const Graph& g, const std::vector<int>& alive, std::vector<int>& idx) {
    idx.assign(g.n(), -1);
    for (std::size_t i = 0; i < alive.size(); ++i) idx[alive[i]] = static_cast<int>(i);
    return induced_subgraph(g, alive);
}

bool two_connected_alive(const Graph& g, const std::vector<int>& alive) {
    if (alive.size() < 3) return false;
    std::vector<int> idx;
    return is_2_connected(compact(g, alive, idx));
}

}  // namespace

SpecialReducer::SpecialReducer(const Graph& input, const std::vector<Edge>& S) : g(input) {
    for (auto e : input.edges()) origin[e] = {e.first, e.second};
    for (auto [a, b] : S) {
        if (!input.has_edge(a, b)) throw PreconditionError("special edge " + std::to_string(a) + "-" + std::to_string(b) + " is not in the graph");
        special.insert(make_edge(a, b));
    }
}

std::vector<int> SpecialReducer::alive() const {
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) out.push_back(v);
    return out;
}

bool SpecialReducer::step(std::string* what) {
    auto note = [&](const std::string& s) {
        if (what) *what = s;
        return true;
    };
    auto name = [](Edge e) { return std::to_string(e.first) + "-" + std::to_string(e.second); };
    auto av = alive();
    if (av.size() <= 3) return false;

    // (1) non-special edge in no 2-edge-cut
    for (auto e : g.edges()) {
        if (special.count(e)) continue;
        g.remove_edge(e.first, e.second);
        if (two_connected_alive(g, alive())) {
            origin.erase(e);
            return note("delete " + name(e));
        }
        g.add_edge(e.first, e.second);
    }
    // (2) degree-2 vertex without special edges
    for (int v : av) {
        if (g.degree(v) != 2) continue;
        int a = g.neighbors(v)[0], b = g.neighbors(v)[1];
        Edge ea = make_edge(a, v), eb = make_edge(v, b);
        if (special.count(ea) || special.count(eb)) continue;
        if (g.has_edge(a, b)) {
            Graph h = g;
            h.remove_edge(a, v);
            h.remove_edge(v, b);
            std::vector<int> rest;
            for (int x : av)
                if (x != v) rest.push_back(x);
            if (!two_connected_alive(h, rest)) continue;
            g = h;
            origin.erase(ea);
            origin.erase(eb);
            return note("remove " + std::to_string(v));
        }
        std::vector<int> p = oriented(origin, a, v);
        auto tail = oriented(origin, v, b);
        p.insert(p.end(), tail.begin() + 1, tail.end());
        g.remove_edge(a, v);
        g.remove_edge(v, b);
        g.add_edge(a, b);
        origin.erase(ea);
        origin.erase(eb);
        origin[make_edge(a, b)] = (a < b) ? p : std::vector<int>(p.rbegin(), p.rend());
        return note("suppress " + std::to_string(v));
    }
    // (3) special-free side of a non-trivial 2-edge-cut
    std::vector<int> idx;
    Graph c = compact(g, av, idx);
    for (const auto& cut : two_edge_cuts(c)) {
        if (!cut.non_trivial) continue;
        for (const auto& side_local : cut.sides) {
            std::vector<char> in(g.n(), 0);
            for (int x : side_local) in[av[x]] = 1;
            bool has_special = false;
            for (auto e : special)
                if (in[e.first] && in[e.second]) has_special = true;
            if (has_special) continue;
            Edge e1{av[cut.first.first], av[cut.first.second]}, e2{av[cut.second.first], av[cut.second.second]};
            int x = in[e1.first] ? e1.first : e1.second, a = e1.first + e1.second - x;
            int y = in[e2.first] ? e2.first : e2.second, b = e2.first + e2.second - y;
            if (a == b) continue;
            std::vector<bool> allowed(g.n(), false);
            for (int z = 0; z < g.n(); ++z) allowed[z] = in[z];
            auto inner = shortest_path(g, x, y, allowed);
            if (inner.empty()) continue;
            bool sp = special.count(make_edge(a, x)) || special.count(make_edge(y, b));
            Graph h = g;
            std::vector<Edge> drop;
            for (auto e : g.edges())
                if (in[e.first] || in[e.second]) drop.push_back(e);
            for (auto e : drop) h.remove_edge(e.first, e.second);
            if (g.has_edge(a, b)) {
                if (sp) continue;
                std::vector<int> rest;
                for (int z : av)
                    if (!in[z]) rest.push_back(z);
                if (!two_connected_alive(h, rest)) continue;
                g = h;
                for (auto e : drop) origin.erase(e), special.erase(e);
                return note("remove side of cut " + name(make_edge(a, x)) + ", " + name(make_edge(y, b)));
            }
            std::vector<int> p = oriented(origin, a, x);
            for (std::size_t q = 1; q < inner.size(); ++q) {
                auto seg = oriented(origin, inner[q - 1], inner[q]);
                p.insert(p.end(), seg.begin() + 1, seg.end());
            }
            auto seg = oriented(origin, y, b);
            p.insert(p.end(), seg.begin() + 1, seg.end());
            std::vector<int> contracted;
            for (int z = 0; z < g.n(); ++z)
                if (in[z]) contracted.push_back(z);
            g = h;
            for (auto e : drop) origin.erase(e), special.erase(e);
            h.add_edge(a, b);
            g = h;
            origin[make_edge(a, b)] = (a < b) ? p : std::vector<int>(p.rbegin(), p.rend());
            if (sp) special.insert(make_edge(a, b));
            return note("contract " + std::to_string(contracted.size()) + " vertices behind cut " +
                        name(make_edge(a, x)) + ", " + name(make_edge(y, b)));
        }
    }
    return false;
}

int SpecialReducer::run(std::vector<std::string>* log) {
    int steps = 0;
    std::string what;
    while (step(&what)) {
        ++steps;
        if (log) log->push_back(what);
    }
    return steps;
}

std::vector<int> SpecialReducer::lift(const std::vector<int>& path) const {
    if (path.empty()) return {};
    std::vector<int> out{path.front()};
    for (std::size_t q = 1; q < path.size(); ++q) {
        auto seg = oriented(origin, path[q - 1], path[q]);
        out.insert(out.end(), seg.begin() + 1, seg.end());
    }
    return out;
}

namespace {

int count_special(const std::vector<int>& path, const std::set<Edge>& S) {
    int c = 0;
    for (std::size_t q = 1; q < path.size(); ++q) c += S.count(make_edge(path[q - 1], path[q])) ? 1 : 0;
    return c;
}

WeightedPathSearch special_search(const Graph& g, const std::set<Edge>& S, int target, std::size_t budget) {
    WeightedPathSearch s(g.n(), budget, target);
    auto es = g.edges();
    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
        s.inc[es[e].first].push_back({e, es[e].second});
        s.inc[es[e].second].push_back({e, es[e].first});
        s.weight.push_back(S.count(es[e]) ? 1 : 0);
    }
    s.run();
    return s;
}

// x ... s ... y inside the vertex set K, through edge s, or empty
std::vector<int> route_through_edge(const Graph& g, const std::vector<char>& inK, int x, int y, Edge s) {
    const int n = g.n();
    const int S = 2 * n, T = 2 * n + 1;
    MaxFlow f(2 * n + 2);
    struct Fwd {
        int from, idx, a, b;
    };
    std::vector<Fwd> fwd;
    std::vector<int> src_arc(n, -1), sink_arc(n, -1);
    for (int v = 0; v < n; ++v)
        if (inK[v]) f.add_arc(2 * v, 2 * v + 1, 1);
    f.add_arc(S, 2 * x, 1);
    f.add_arc(S, 2 * y, 1);
    sink_arc[s.first] = f.add_arc(2 * s.first + 1, T, 1);
    sink_arc[s.second] = f.add_arc(2 * s.second + 1, T, 1);
    for (int a = 0; a < n; ++a) {
        if (!inK[a]) continue;
        for (int b : g.neighbors(a))
            if (inK[b] && make_edge(a, b) != make_edge(s.first, s.second)) fwd.push_back({2 * a + 1, f.add_arc(2 * a + 1, 2 * b, 1), a, b});
    }
    if (f.run(S, T, 2) < 2) return {};
    std::multimap<int, int> next;
    for (const auto& a : fwd)
        if (f.flow_on(a.from, a.idx) > 0) next.emplace(a.a, a.b);
    auto trace = [&](int start) {
        std::vector<int> p{start};
        int v = start;
        while (true) {
            if (sink_arc[v] >= 0 && f.flow_on(2 * v + 1, sink_arc[v]) > 0) return p;
            auto it = next.find(v);
            if (it == next.end()) return std::vector<int>{};
            v = it->second;
            next.erase(it);
            p.push_back(v);
        }
    };
    auto px = trace(x), py = trace(y);
    if (px.empty() || py.empty() || px.back() == py.back()) return {};
    std::vector<int> out = px;
    out.insert(out.end(), py.rbegin(), py.rend());
    return out;
}

}  // namespace

int max_special_on_path(const Graph& g, const std::vector<Edge>& S) {
    std::set<Edge> ss;
    for (auto [a, b] : S) ss.insert(make_edge(a, b));
    return std::max(0, special_search(g, ss, static_cast<int>(ss.size()) + 1, static_cast<std::size_t>(-1)).best);
}

SpecialPathResult path_with_special_edges(const Graph& g, const std::vector<Edge>& S, int k, std::size_t cycle_budget,
                                          std::size_t search_budget) {
    if (k < 1) throw PreconditionError("k must be positive");
    if (g.max_degree() > 3) throw PreconditionError("graph must be subcubic");
    if (!is_2_connected(g)) throw PreconditionError("graph must be 2-connected");
    std::set<Edge> input_special;
    for (auto [a, b] : S) {
        if (!g.has_edge(a, b)) throw PreconditionError("special edge " + std::to_string(a) + "-" + std::to_string(b) + " is not in the graph");
        input_special.insert(make_edge(a, b));
    }
    SpecialPathResult res;
    auto finish = [&](const std::vector<int>& p, const std::string& method) {
        int c = count_special(p, input_special);
        if (!is_path(g, p)) throw Error("lifted path is not a path of the input graph");
        if (c >= k) {
            res.found = true;
            res.path = p;
            res.special_count = c;
            res.method = method;
            return true;
        }
        return false;
    };
    if (static_cast<int>(input_special.size()) < k) {
        res.note = "not found: fewer special edges than k";
        return res;
    }
    if (k == 1) {
        auto e = *input_special.begin();
        finish({e.first, e.second}, "trivial");
        return res;
    }

    SpecialReducer red(g, S);
    red.run(&res.reductions);
    auto av = red.alive();
    std::vector<int> idx;
    Graph r = compact(red.g, av, idx);
    std::set<Edge> rs;
    for (auto e : red.special) rs.insert(make_edge(idx[e.first], idx[e.second]));
    auto to_input = [&](const std::vector<int>& local) {
        std::vector<int> cur;
        for (int x : local) cur.push_back(av[x]);
        return red.lift(cur);
    };

    // long cycle: stop at one with k special edges on a path, else keep the most degree-3 vertices
    std::vector<int> best_cycle;
    int best_x = -1;
    std::vector<int> done;
    try {
        for_each_cycle(
            r,
            [&](const std::vector<int>& c) {
                int sp = 0, x = 0;
                for (std::size_t q = 0; q < c.size(); ++q) {
                    sp += rs.count(make_edge(c[q], c[(q + 1) % c.size()])) ? 1 : 0;
                    x += r.degree(c[q]) == 3 ? 1 : 0;
                }
                if (sp - (sp == static_cast<int>(c.size()) ? 1 : 0) >= k) {
                    done = c;
                    return false;
                }
                if (x > best_x) {
                    best_x = x;
                    best_cycle = c;
                }
                return true;
            },
            cycle_budget);
    } catch (const OverflowError&) {
        res.note = "cycle search budget reached; ";
    }
    if (!done.empty()) {
        // open the cycle at a non-special edge if there is one
        const int L = static_cast<int>(done.size());
        int cut = 0;
        for (int q = 0; q < L; ++q)
            if (!rs.count(make_edge(done[q], done[(q + 1) % L]))) {
                cut = q;
                break;
            }
        std::vector<int> p;
        for (int q = 1; q <= L; ++q) p.push_back(done[(cut + q) % L]);
        if (finish(to_input(p), "cycle")) return res;
    }

    if (!best_cycle.empty()) {
        const auto& C = best_cycle;
        const int L = static_cast<int>(C.size());
        std::vector<int> cpos(r.n(), -1);
        for (int q = 0; q < L; ++q) cpos[C[q]] = q;
        Graph h = r;
        for (auto e : cycle_edges(C)) h.remove_edge(e.first, e.second);
        auto lab = component_labels(h);
        std::map<int, std::vector<int>> comp, terms;
        for (int v = 0; v < r.n(); ++v) comp[lab[v]].push_back(v);
        for (int v : C)
            if (r.degree(v) == 3) terms[lab[v]].push_back(v);
        std::vector<std::vector<int>> system;
        for (auto& [l, t] : terms) {
            if (t.size() % 2) t.pop_back();
            if (t.empty()) continue;
            std::vector<int> map;
            Graph sub = induced_subgraph(h, comp[l], &map);
            std::vector<int> loc(r.n(), -1);
            for (std::size_t i = 0; i < map.size(); ++i) loc[map[i]] = static_cast<int>(i);
            std::vector<int> lt;
            for (int v : t) lt.push_back(loc[v]);
            for (auto& p : path_system(sub, lt)) {
                std::vector<int> gp;
                for (int x : p) gp.push_back(map[x]);
                system.push_back(gp);
            }
        }
        ChordInstance inst;
        inst.n = L;
        inst.path.resize(L);
        std::iota(inst.path.begin(), inst.path.end(), 0);
        for (const auto& p : system) inst.chords.emplace_back(cpos[p.front()], cpos[p.back()]);
        if (!inst.chords.empty()) {
            ChordPath cp = path_with_chords(inst, k, true, search_budget);
            std::vector<int> local{C[cp.vertices.front()]};
            for (std::size_t q = 0; q < cp.via.size(); ++q) {
                if (cp.via[q] < 0) {
                    local.push_back(C[cp.vertices[q + 1]]);
                    continue;
                }
                auto& sp = system[cp.via[q]];
                std::vector<int> seg = sp;
                if (seg.front() != C[cp.vertices[q]]) std::reverse(seg.begin(), seg.end());
                local.insert(local.end(), seg.begin() + 1, seg.end());
            }
            // make every used connecting path carry a special edge
            auto rebuilt = local;
            for (std::size_t q = 0; q < cp.via.size(); ++q) {
                if (cp.via[q] < 0) continue;
                std::vector<int> Q = system[cp.via[q]];
                if (count_special(Q, rs) > 0) continue;
                bool changed = false;
                for (int side = 0; side < 2 && !changed; ++side) {
                    std::vector<int> Qo = Q;
                    if (side) std::reverse(Qo.begin(), Qo.end());
                    for (std::size_t fi = 2; fi < Qo.size() && !changed; ++fi) {
                        Graph t = r;
                        t.remove_edge(Qo[0], Qo[1]);
                        t.remove_edge(Qo[fi - 1], Qo[fi]);
                        auto tl = component_labels(t);
                        if (tl[Qo[1]] == tl[C[0]]) continue;
                        std::vector<char> inK(r.n(), 0);
                        int ksize = 0;
                        for (int v = 0; v < r.n(); ++v)
                            if (tl[v] == tl[Qo[1]]) inK[v] = 1, ++ksize;
                        if (ksize < 2) continue;
                        std::optional<Edge> sp;
                        for (auto e : rs)
                            if (inK[e.first] && inK[e.second]) {
                                sp = e;
                                break;
                            }
                        if (!sp) continue;
                        auto inside = route_through_edge(r, inK, Qo[1], Qo[fi - 1], *sp);
                        if (inside.empty()) continue;
                        std::vector<int> Qn{Qo[0]};
                        Qn.insert(Qn.end(), inside.begin(), inside.end());
                        Qn.insert(Qn.end(), Qo.begin() + static_cast<long>(fi), Qo.end());
                        // splice Qn in place of Qo inside the assembled path
                        auto it = std::search(rebuilt.begin(), rebuilt.end(), Qo.begin(), Qo.end());
                        auto rq = Qo;
                        std::reverse(rq.begin(), rq.end());
                        if (it != rebuilt.end()) {
                            it = rebuilt.erase(it, it + static_cast<long>(Qo.size()));
                            rebuilt.insert(it, Qn.begin(), Qn.end());
                            changed = true;
                        } else {
                            auto it2 = std::search(rebuilt.begin(), rebuilt.end(), rq.begin(), rq.end());
                            if (it2 != rebuilt.end()) {
                                it2 = rebuilt.erase(it2, it2 + static_cast<long>(rq.size()));
                                rebuilt.insert(it2, Qn.rbegin(), Qn.rend());
                                changed = true;
                            }
                        }
                    }
                }
            }
            if (is_path(r, rebuilt) && finish(to_input(rebuilt), "chords")) return res;
            res.note += "chord construction gave " + std::to_string(count_special(rebuilt, rs)) + " special edges; ";
        }
    }

    auto s = special_search(g, input_special, k, search_budget);
    if (s.best >= k && finish(s.best_vertices, "search")) return res;
    res.note += s.exhausted ? "not found (bound not met; search budget exhausted)" : "not found (bound not met)";
    return res;
}

// ---- cycles through a matching in a theta-graph ----

std::vector<int> cycle_through_matching(const ThetaGraph& theta, const std::vector<Edge>& M, int k) {
    if (k < 1) throw PreconditionError("k must be positive");
    auto rep = validate_theta(theta, nullptr);
    if (!rep.ok()) throw PreconditionError("invalid theta-graph: " + rep.violations.front());
    std::map<int, std::pair<int, int>> where;  // vertex -> (leg, index)
    for (int j = 0; j < 3; ++j)
        for (int q = 1; q + 1 < static_cast<int>(theta.legs[j].size()); ++q) where[theta.legs[j][q]] = {j, q};
    std::set<int> touched;
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_pair;  // (legA, legB) -> (posA, posB)
    for (auto [a, b] : M) {
        if (!where.count(a) || !where.count(b))
            throw PreconditionError("matching edge " + std::to_string(a) + "-" + std::to_string(b) + " must join interior leg vertices");
        if (!touched.insert(a).second || !touched.insert(b).second) throw PreconditionError("M is not a matching");
        auto wa = where[a], wb = where[b];
        if (wa.first == wb.first) throw PreconditionError("matching edge joins a leg to itself");
        if (wa.first > wb.first) std::swap(wa, wb);
        by_pair[{wa.first, wb.first}].push_back({wa.second, wb.second});
    }
    std::pair<int, int> legs{-1, -1};
    std::size_t most = 0;
    for (auto& [key, v] : by_pair)
        if (v.size() > most) most = v.size(), legs = key;
    if (most == 0) throw PreconditionError("empty matching");
    auto& rungs = by_pair[legs];
    std::sort(rungs.begin(), rungs.end());
    std::vector<long long> seq;
    for (auto [pa, pb] : rungs) seq.push_back(pb);
    MonotoneWitness w;
    try {
        w = erdos_szekeres(seq, k, k);
    } catch (const PreconditionError&) {
        throw PreconditionError("no monotone run of " + std::to_string(k) + " matching edges between two legs");
    }
    const auto& A = theta.legs[legs.first];
    const auto& B = theta.legs[legs.second];
    const auto& Cl = theta.legs[3 - legs.first - legs.second];
    std::vector<std::pair<int, int>> use;
    for (int i : w.indices) use.push_back(rungs[i]);
    const bool inc = w.direction == Direction::Increasing;

    std::vector<int> cyc{A[use[0].first]};
    bool onA = true;
    int at = use[0].first;
    auto walk = [&](const std::vector<int>& leg, int from, int to) {
        int s = to >= from ? 1 : -1;
        for (int q = from; q != to;) {
            q += s;
            cyc.push_back(leg[q]);
        }
    };
    for (int j = 0; j < k; ++j) {
        auto [pa, pb] = use[j];
        if (onA) {
            walk(A, at, pa);
            cyc.push_back(B[pb]);
            at = pb;
        } else {
            walk(B, at, pb);
            cyc.push_back(A[pa]);
            at = pa;
        }
        onA = !onA;
    }
    const int endA = static_cast<int>(A.size()) - 1, endB = static_cast<int>(B.size()) - 1;
    if (!inc && !onA) {
        walk(B, at, 0);  // down to u, then up A to the start
        walk(A, 0, use[0].first - 1);
    } else {
        if (onA)
            walk(A, at, endA);
        else
            walk(B, at, endB);
        for (int q = static_cast<int>(Cl.size()) - 2; q >= 1; --q) cyc.push_back(Cl[q]);
        cyc.push_back(A[0]);
        walk(A, 0, use[0].first - 1);
    }
    // the start vertex was pushed once at the beginning; drop a duplicate if the walk re-added it
    if (cyc.size() > 1 && cyc.back() == cyc.front()) cyc.pop_back();

    std::set<Edge> es;
    for (const auto& leg : theta.legs)
        for (auto e : path_edges(leg)) es.insert(e);
    for (auto [a, b] : M) es.insert(make_edge(a, b));
    int nmax = 0;
    for (auto [a, b] : es) nmax = std::max(nmax, std::max(a, b) + 1);
    Graph host(nmax);
    for (auto [a, b] : es) host.add_edge(a, b);
    if (!is_cycle(host, cyc)) throw Error("constructed closed walk is not a cycle");
    std::set<Edge> ms;
    for (auto [a, b] : M) ms.insert(make_edge(a, b));
    int hits = 0;
    for (auto e : cycle_edges(cyc)) hits += ms.count(e) ? 1 : 0;
    if (hits < k) throw Error("constructed cycle misses matching edges");
    return cyc;
}

}  // namespace cyclemod
