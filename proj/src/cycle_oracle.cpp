#include "cyclemod/cycle_oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace cyclemod {

bool ResidueSpectrum::contains(int r) const { return std::binary_search(residues.begin(), residues.end(), r); }

namespace {

struct CycleWalker {
    const Graph& g;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::size_t cap;
    std::size_t found = 0;
    bool stop = false;
    int start = 0;
    std::vector<int> path;
    std::vector<char> on_path;
    std::vector<unsigned> mark;
    std::vector<int> queue;
    unsigned stamp = 0;

    // prune dead ends: y must still reach start through unused vertices above it
    bool can_return(int y) {
        if (++stamp == 0) {
            std::fill(mark.begin(), mark.end(), 0u);
            stamp = 1;
        }
        queue.clear();
        queue.push_back(y);
        mark[y] = stamp;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int x = queue[h];
            for (int z : g.neighbors(x)) {
                if (z == start) {
                    if (x != y || path.size() >= 2) return true;
                    continue;
                }
                if (z < start || on_path[z] || mark[z] == stamp) continue;
                mark[z] = stamp;
                queue.push_back(z);
            }
        }
        return false;
    }

    void extend(int x) {
        for (int y : g.neighbors(x)) {
            if (stop) return;
            if (y == start) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    if (++found > cap) throw OverflowError("cycle count exceeds cap of " + std::to_string(cap));
                    if (!visit(path)) stop = true;
                }
                continue;
            }
            if (y < start || on_path[y]) continue;
            if (!can_return(y)) continue;
            on_path[y] = 1;
            path.push_back(y);
            extend(y);
            path.pop_back();
            on_path[y] = 0;
        }
    }
};

}  // namespace

std::size_t for_each_cycle(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit,
                           std::size_t cap) {
    CycleWalker w{g, visit, cap, 0, false, 0, {}, {}, {}, {}, 0};
    w.on_path.assign(g.n(), 0);
    w.mark.assign(g.n(), 0);
    for (int s = 0; s < g.n() && !w.stop; ++s) {
        w.start = s;
        w.path = {s};
        w.on_path[s] = 1;
        w.extend(s);
        w.on_path[s] = 0;
    }
    return w.found;
}

CycleSet enumerate_cycles(const Graph& g, std::size_t max_count) {
    CycleSet cs;
    for_each_cycle(
        g,
        [&](const std::vector<int>& c) {
            cs.cycles.push_back(c);
            cs.histogram[static_cast<int>(c.size())]++;
            return true;
        },
        max_count);
    return cs;
}

std::map<int, std::size_t> cycle_length_histogram(const Graph& g, std::size_t cap) {
    std::map<int, std::size_t> h;
    for_each_cycle(
        g,
        [&](const std::vector<int>& c) {
            h[static_cast<int>(c.size())]++;
            return true;
        },
        cap);
    return h;
}

ResidueSpectrum residue_spectrum(const Graph& g, int k, std::size_t cap) {
    if (k < 1) throw PreconditionError("modulus must be positive");
    ResidueSpectrum rs;
    rs.k = k;
    for_each_cycle(
        g,
        [&](const std::vector<int>& c) {
            int r = static_cast<int>(c.size()) % k;
            if (!rs.witnesses.count(r)) rs.witnesses[r] = c;
            return static_cast<int>(rs.witnesses.size()) < k;
        },
        cap);
    for (const auto& [r, c] : rs.witnesses) rs.residues.push_back(r);
    return rs;
}

std::optional<std::vector<int>> has_cycle_mod(const Graph& g, int m, int k, std::size_t cap) {
    if (k < 1 || m < 0 || m >= k) throw PreconditionError("need 0 <= m < k");
    std::optional<std::vector<int>> out;
    for_each_cycle(
        g,
        [&](const std::vector<int>& c) {
            if (static_cast<int>(c.size()) % k == m) {
                out = c;
                return false;
            }
            return true;
        },
        cap);
    return out;
}

PathLengths xy_path_lengths(const Graph& g, int x, int y, std::size_t cap) {
    if (x == y) throw PreconditionError("x and y must differ");
    if (x < 0 || y < 0 || x >= g.n() || y >= g.n()) throw PreconditionError("vertex out of range");
    PathLengths pl;
    std::vector<int> path{x};
    std::vector<char> on(g.n(), 0);
    on[x] = 1;
    std::size_t count = 0;
    std::function<void(int)> rec = [&](int v) {
        for (int w : g.neighbors(v)) {
            if (on[w]) continue;
            path.push_back(w);
            if (w == y) {
                if (++count > cap) throw OverflowError("path count exceeds cap of " + std::to_string(cap));
                int len = static_cast<int>(path.size()) - 1;
                if (!pl.witnesses.count(len)) pl.witnesses[len] = path;
            } else {
                on[w] = 1;
                rec(w);
                on[w] = 0;
            }
            path.pop_back();
        }
    };
    rec(x);
    for (const auto& [len, p] : pl.witnesses) pl.lengths.push_back(len);
    return pl;
}

// ---- frontier dynamic program ----

namespace {

std::vector<int> bfs_order(const Graph& g, int root) {
    std::vector<int> order;
    std::vector<char> seen(g.n(), 0);
    auto run = [&](int s) {
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            order.push_back(x);
            for (int y : g.neighbors(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    q.push(y);
                }
        }
    };
    run(root);
    for (int v = 0; v < g.n(); ++v)
        if (!seen[v]) run(v);
    return order;
}

std::vector<Edge> ordered_edges(const Graph& g, const std::vector<int>& order) {
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
    auto es = g.edges();
    std::sort(es.begin(), es.end(), [&](const Edge& a, const Edge& b) {
        auto ka = std::make_pair(std::max(pos[a.first], pos[a.second]), std::min(pos[a.first], pos[a.second]));
        auto kb = std::make_pair(std::max(pos[b.first], pos[b.second]), std::min(pos[b.first], pos[b.second]));
        return ka < kb;
    });
    return es;
}

int frontier_width(const Graph& g, const std::vector<Edge>& es) {
    std::vector<int> first(g.n(), -1), last(g.n(), -1);
    for (int i = 0; i < static_cast<int>(es.size()); ++i)
        for (int v : {es[i].first, es[i].second}) {
            if (first[v] < 0) first[v] = i;
            last[v] = i;
        }
    int width = 0, cur = 0;
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        for (int v : {es[i].first, es[i].second})
            if (first[v] == i) ++cur;
        width = std::max(width, cur);
        for (int v : {es[i].first, es[i].second})
            if (last[v] == i) --cur;
    }
    return width;
}

void sat_add(std::uint64_t& a, std::uint64_t b) {
    a = (a > std::numeric_limits<std::uint64_t>::max() - b) ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::vector<int> order_cycle(std::vector<Edge> es) {
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : es) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> cyc;
    int start = adj.begin()->first, prev = -1, cur = start;
    do {
        cyc.push_back(cur);
        const auto& nb = adj[cur];
        int nxt = (nb[0] != prev) ? nb[0] : nb[1];
        prev = cur;
        cur = nxt;
    } while (cur != start);
    return cyc;
}

}  // namespace

ResidueCounts cycle_residue_counts(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("modulus must be positive");
    ResidueCounts out;
    out.k = k;
    out.counts.assign(k, 0);
    if (g.edge_count() == 0) return out;

    std::vector<Edge> es;
    int best = std::numeric_limits<int>::max();
    for (int r = 0; r < g.n(); ++r) {
        if (g.degree(r) == 0) continue;
        auto cand = ordered_edges(g, bfs_order(g, r));
        int w = frontier_width(g, cand);
        if (w < best) {
            best = w;
            es = std::move(cand);
        }
    }
    out.frontier_width = best;

    const int m = static_cast<int>(es.size());
    std::vector<int> first(g.n(), -1), last(g.n(), -1);
    for (int i = 0; i < m; ++i)
        for (int v : {es[i].first, es[i].second}) {
            if (first[v] < 0) first[v] = i;
            last[v] = i;
        }

    struct Node {
        int parent;
        bool took;
    };
    // state layout: mate code per frontier slot, then residue.
    // code == own slot: untouched; -1: interior; otherwise slot of the path partner.
    std::vector<std::vector<Node>> layers;
    layers.push_back({{-1, false}});
    std::vector<std::vector<int>> states{{0}};
    std::vector<std::uint64_t> counts{1};
    std::vector<int> frontier;
    std::map<int, std::pair<int, int>> completion;  // residue -> (edge index, state index before it)

    for (int i = 0; i < m; ++i) {
        auto [a, b] = es[i];
        for (int v : {a, b})
            if (first[v] == i) {
                int slot = static_cast<int>(frontier.size());
                frontier.push_back(v);
                for (auto& s : states) s.insert(s.end() - 1, slot);
            }
        int pa = static_cast<int>(std::find(frontier.begin(), frontier.end(), a) - frontier.begin());
        int pb = static_cast<int>(std::find(frontier.begin(), frontier.end(), b) - frontier.begin());
        std::vector<int> leaving;
        for (int v : {a, b})
            if (last[v] == i) leaving.push_back(static_cast<int>(std::find(frontier.begin(), frontier.end(), v) - frontier.begin()));
        std::sort(leaving.rbegin(), leaving.rend());

        std::map<std::vector<int>, int> index;
        std::vector<std::vector<int>> next_states;
        std::vector<std::uint64_t> next_counts;
        std::vector<Node> layer;

        auto emit = [&](std::vector<int> t, int parent, bool took, std::uint64_t c) {
            for (int p : leaving) {
                if (t[p] >= 0 && t[p] != p) return;  // dangling path end leaves the frontier
                t.erase(t.begin() + p);
                for (std::size_t q = 0; q + 1 < t.size(); ++q)
                    if (t[q] > p) --t[q];
            }
            auto it = index.find(t);
            if (it == index.end()) {
                index.emplace(t, static_cast<int>(next_states.size()));
                next_states.push_back(std::move(t));
                next_counts.push_back(c);
                layer.push_back({parent, took});
            } else {
                sat_add(next_counts[it->second], c);
            }
        };

        for (int j = 0; j < static_cast<int>(states.size()); ++j) {
            const auto& s = states[j];
            std::uint64_t c = counts[j];
            emit(s, j, false, c);
            int ma = s[pa], mb = s[pb];
            if (ma == -1 || mb == -1) continue;
            int res = (s.back() + 1) % k;
            if (ma == pb) {
                bool clean = true;
                for (int q = 0; q + 1 < static_cast<int>(s.size()); ++q)
                    if (q != pa && q != pb && s[q] >= 0 && s[q] != q) {
                        clean = false;
                        break;
                    }
                if (clean) {
                    sat_add(out.counts[res], c);
                    if (!completion.count(res)) completion[res] = {i, j};
                }
                continue;
            }
            std::vector<int> t = s;
            int far_a = (ma == pa) ? pa : ma;
            int far_b = (mb == pb) ? pb : mb;
            if (ma != pa) t[pa] = -1;
            if (mb != pb) t[pb] = -1;
            t[far_a] = far_b;
            t[far_b] = far_a;
            t.back() = res;
            emit(std::move(t), j, true, c);
        }
        for (int p : leaving) frontier.erase(frontier.begin() + p);
        states = std::move(next_states);
        counts = std::move(next_counts);
        layers.push_back(std::move(layer));
    }

    for (const auto& [res, ev] : completion) {
        std::vector<Edge> taken{es[ev.first]};
        int idx = ev.second;
        for (int layer = ev.first; layer > 0; --layer) {
            const Node& nd = layers[layer][idx];
            if (nd.took) taken.push_back(es[layer - 1]);
            idx = nd.parent;
        }
        out.witnesses[res] = order_cycle(taken);
    }
    return out;
}

ResidueSpectrum residue_spectrum_dp(const Graph& g, int k) {
    auto rc = cycle_residue_counts(g, k);
    ResidueSpectrum rs;
    rs.k = k;
    for (int r = 0; r < k; ++r)
        if (rc.counts[r] > 0) rs.residues.push_back(r);
    rs.witnesses = rc.witnesses;
    return rs;
}

std::optional<std::vector<int>> has_cycle_mod_dp(const Graph& g, int m, int k) {
    if (k < 1 || m < 0 || m >= k) throw PreconditionError("need 0 <= m < k");
    auto rc = cycle_residue_counts(g, k);
    if (rc.counts[m] == 0) return std::nullopt;
    return rc.witnesses.at(m);
}

}  // namespace cyclemod
