#include "cyclemod/theta_decomp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "cyclemod/flow.hpp"

namespace cyclemod {

namespace {

int ceil_3k_2(int k) { return (3 * k + 1) / 2; }

void append_range(std::vector<int>& out, const std::vector<int>& src, int from, int to) {
    for (int p = from; p <= to; ++p) out.push_back(src[p]);
}

}  // namespace

// ---- shortest theta ----

ThetaGraph shortest_theta(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v) throw PreconditionError("u and v must be distinct vertices");
    const int n = g.n();
    auto in = [](int x) { return 2 * x; };
    auto out = [](int x) { return 2 * x + 1; };
    MinCostFlow f(2 * n);
    for (int x = 0; x < n; ++x)
        if (x != u && x != v) f.add_arc(in(x), out(x), 1, 0);
    struct Arc {
        int a, b, idx;
    };
    std::vector<Arc> arcs;
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a)) {
            if (a == v || b == u) continue;
            f.add_arc(out(a), in(b), 1, 1);
            arcs.push_back({a, b, static_cast<int>(f.arcs(out(a)).size()) - 1});
        }
    auto [flow, cost] = f.run(out(u), in(v), 3);
    if (flow < 3) throw Error("no u,v-theta-graph exists");
    std::multimap<int, int> next;
    for (const auto& a : arcs)
        if (f.arcs(out(a.a))[a.idx].cap == 0) next.emplace(a.a, a.b);
    ThetaGraph t;
    t.u = u;
    t.v = v;
    for (int j = 0; j < 3; ++j) {
        std::vector<int> leg{u};
        int x = u;
        while (x != v) {
            auto it = next.find(x);
            if (it == next.end()) throw Error("flow decomposition failed");
            x = it->second;
            next.erase(it);
            leg.push_back(x);
        }
        t.legs[j] = std::move(leg);
    }
    std::sort(t.legs.begin(), t.legs.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    if (t.total_length() != cost) throw Error("theta length does not match the flow optimum");
    if (!validate_theta(t, &g).ok()) throw Error("shortest theta failed validation");
    return t;
}

int brute_shortest_theta_length(const Graph& g, int u, int v) {
    std::vector<std::vector<int>> paths;
    std::vector<int> p{u};
    std::vector<char> on(g.n(), 0);
    on[u] = 1;
    std::function<void(int)> rec = [&](int x) {
        if (x == v) {
            paths.push_back(p);
            return;
        }
        for (int w : g.neighbors(x))
            if (!on[w]) {
                on[w] = 1;
                p.push_back(w);
                rec(w);
                p.pop_back();
                on[w] = 0;
            }
    };
    rec(u);
    auto disjoint = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::set<int> s(a.begin() + 1, a.end() - 1);
        for (std::size_t q = 1; q + 1 < b.size(); ++q)
            if (s.count(b[q])) return false;
        // at most one of them may be the direct edge
        return !(a.size() == 2 && b.size() == 2);
    };
    int best = -1;
    for (std::size_t a = 0; a < paths.size(); ++a)
        for (std::size_t b = a + 1; b < paths.size(); ++b) {
            if (!disjoint(paths[a], paths[b])) continue;
            for (std::size_t c = b + 1; c < paths.size(); ++c)
                if (disjoint(paths[a], paths[c]) && disjoint(paths[b], paths[c])) {
                    int len = static_cast<int>(paths[a].size() + paths[b].size() + paths[c].size()) - 3;
                    if (best < 0 || len < best) best = len;
                }
        }
    return best;
}

std::string to_string(BlockKind k) {
    switch (k) {
        case BlockKind::Connecting: return "connecting";
        case BlockKind::Isolated: return "isolated";
        default: return "neither";
    }
}

// ---- decomposition ----

bool ThetaDecomposition::in_h(int x) const {
    return leg_of[x] < 0 && !std::binary_search(F.begin(), F.end(), x);
}

int ThetaDecomposition::h_degree(int x) const {
    int d = 0;
    for (int w : host.neighbors(x)) d += in_h(w);
    return d;
}

std::vector<int> theta_neighbors_plus(const ThetaDecomposition& d, const std::vector<int>& b) {
    std::set<int> plus(b.begin(), b.end()), out;
    for (int x : b)
        for (int w : d.host.neighbors(x))
            if (std::binary_search(d.F.begin(), d.F.end(), w)) plus.insert(w);
    for (int x : plus)
        for (int w : d.host.neighbors(x))
            if (d.on_theta(w)) out.insert(w);
    return {out.begin(), out.end()};
}

namespace {

bool within_leg(const ThetaDecomposition& d, const std::vector<int>& s, int leg) {
    return std::all_of(s.begin(), s.end(), [&](int x) { return d.leg_pos[x][leg] >= 0; });
}

std::pair<int, int> span_on_leg(const ThetaDecomposition& d, const std::vector<int>& s, int leg) {
    int lo = 1 << 30, hi = -1;
    for (int x : s) {
        lo = std::min(lo, d.leg_pos[x][leg]);
        hi = std::max(hi, d.leg_pos[x][leg]);
    }
    return {lo, hi};
}

void classify(const ThetaDecomposition& d, PieceInfo& p) {
    p.theta_neighbors = theta_neighbors_plus(d, p.vertices);
    p.kind = BlockKind::Neither;
    p.leg = -1;
    p.span.clear();
    p.span_lo = p.span_hi = -1;
    if (p.theta_neighbors.empty()) return;
    for (int i = 0; i < 3; ++i)
        if (within_leg(d, p.theta_neighbors, i)) {
            p.kind = BlockKind::Isolated;
            p.leg = i;
            std::tie(p.span_lo, p.span_hi) = span_on_leg(d, p.theta_neighbors, i);
            p.span.assign(d.theta.legs[i].begin() + p.span_lo, d.theta.legs[i].begin() + p.span_hi + 1);
            return;
        }
    p.kind = BlockKind::Connecting;
}

}  // namespace

ThetaDecomposition decompose(const Graph& g, int u, int v, bool require_3connected) {
    if (!is_cubic(g)) throw PreconditionError("graph must be cubic");
    if (require_3connected && !is_3_connected(g)) throw PreconditionError("graph must be 3-connected");
    ThetaDecomposition d;
    d.host = g;
    d.theta = shortest_theta(g, u, v);
    const int n = g.n();
    d.leg_of.assign(n, -1);
    d.leg_pos.assign(n, {-1, -1, -1});
    for (int i = 0; i < 3; ++i)
        for (std::size_t p = 0; p < d.theta.legs[i].size(); ++p) {
            int x = d.theta.legs[i][p];
            d.leg_pos[x][i] = static_cast<int>(p);
            d.leg_of[x] = (x == u || x == v) ? 3 : i;
        }
    for (int x = 0; x < n; ++x) {
        if (d.on_theta(x)) continue;
        std::vector<int> nt;
        for (int w : g.neighbors(x))
            if (d.on_theta(w)) nt.push_back(w);
        if (nt.size() < 2) continue;
        d.F.push_back(x);
        bool one_leg = false;
        for (int i = 0; i < 3; ++i) one_leg |= within_leg(d, nt, i);
        if (!one_leg) d.friendly.push_back(x);
    }
    for (int x = 0; x < n; ++x)
        if (d.on_theta(x) || std::binary_search(d.F.begin(), d.F.end(), x)) d.theta_plus.push_back(x);
        else d.h_vertices.push_back(x);

    std::vector<int> map;
    Graph h = induced_subgraph(g, d.h_vertices, &map);
    auto comps = components(h);
    std::vector<int> comp_of(h.n(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        ComponentInfo ci;
        for (int x : comps[c]) {
            comp_of[x] = static_cast<int>(c);
            ci.vertices.push_back(map[x]);
        }
        std::sort(ci.vertices.begin(), ci.vertices.end());
        classify(d, ci);
        d.components.push_back(std::move(ci));
    }
    auto bd = blocks(h);
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        if (!bd.endblock[b]) continue;
        EndblockInfo e;
        for (int x : bd.blocks[b]) e.vertices.push_back(map[x]);
        std::sort(e.vertices.begin(), e.vertices.end());
        e.two_connected = bd.blocks[b].size() >= 3;
        e.component = comp_of[bd.blocks[b].front()];
        classify(d, e);
        d.components[e.component].endblocks.push_back(static_cast<int>(d.endblocks.size()));
        d.endblocks.push_back(std::move(e));
    }
    for (auto& c : d.components)
        c.only_2connected_endblocks = !c.endblocks.empty() && std::all_of(c.endblocks.begin(), c.endblocks.end(), [&](int e) {
                                          return d.endblocks[e].two_connected;
                                      });

    // projection: nearest theta vertex in g, lowest index on ties
    for (int x : d.h_vertices) {
        bool touches = false;
        for (int w : g.neighbors(x)) touches |= !d.in_h(w);
        if (!touches) continue;
        int best = -1;
        for (int w : g.neighbors(x))
            if (d.on_theta(w) && (best < 0 || w < best)) best = w;
        if (best < 0)
            for (int w : g.neighbors(x))
                for (int t : g.neighbors(w))
                    if (d.on_theta(t) && (best < 0 || t < best)) best = t;
        if (best < 0) throw Error("projection found no theta vertex within distance 2");
        d.projection[x] = best;
    }
    return d;
}

// ---- crossing, order, chains ----

namespace {

int common_leg(const ThetaDecomposition& d, const PieceInfo& a, const PieceInfo& b) {
    if (a.kind != BlockKind::Isolated || b.kind != BlockKind::Isolated) return -1;
    for (int i = 0; i < 3; ++i)
        if (within_leg(d, a.theta_neighbors, i) && within_leg(d, b.theta_neighbors, i)) return i;
    return -1;
}

bool between(int x, int a, int b) { return std::min(a, b) <= x && x <= std::max(a, b); }

}  // namespace

bool crossing(const ThetaDecomposition& d, const PieceInfo& a, const PieceInfo& b) {
    int leg = common_leg(d, a, b);
    if (leg < 0) return false;
    std::vector<int> pa, pb;
    for (int x : a.theta_neighbors) pa.push_back(d.leg_pos[x][leg]);
    for (int x : b.theta_neighbors) pb.push_back(d.leg_pos[x][leg]);
    for (int x1 : pa)
        for (int y1 : pa)
            for (int x2 : pb)
                if (between(x2, x1, y1))
                    for (int y2 : pb)
                        if (between(y1, x2, y2)) return true;
    return false;
}

bool theta_less(const ThetaDecomposition& d, const PieceInfo& a, const PieceInfo& b) {
    int leg = common_leg(d, a, b);
    if (leg < 0) return false;
    std::vector<int> common;
    std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                          std::back_inserter(common));
    if (!common.empty()) return false;
    auto [alo, ahi] = span_on_leg(d, a.theta_neighbors, leg);
    auto [blo, bhi] = span_on_leg(d, b.theta_neighbors, leg);
    if (alo < blo || ahi > bhi) return false;
    for (int x : b.theta_neighbors)
        if (between(d.leg_pos[x][leg], alo, ahi)) return false;
    return true;
}

bool validate_chain(const ThetaDecomposition& d, const ThetaChain& c) {
    if (c.components.empty()) return false;
    bool special = true;
    for (std::size_t i = 0; i < c.components.size(); ++i) {
        int ci = c.components[i];
        if (ci < 0 || ci >= static_cast<int>(d.components.size())) return false;
        const auto& comp = d.components[ci];
        if (comp.kind != BlockKind::Isolated) return false;
        special = special && comp.only_2connected_endblocks;
        if (i + 1 < c.components.size()) {
            int cj = c.components[i + 1];
            if (cj < 0 || cj >= static_cast<int>(d.components.size())) return false;
            if (!theta_less(d, comp, d.components[cj])) return false;
        }
    }
    return special == c.special;
}

std::vector<ThetaChain> chains(const ThetaDecomposition& d, bool special_only) {
    std::vector<int> nodes;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        const auto& comp = d.components[c];
        if (comp.kind == BlockKind::Isolated && (!special_only || comp.only_2connected_endblocks))
            nodes.push_back(static_cast<int>(c));
    }
    const std::size_t m = nodes.size();
    std::vector<std::vector<char>> less(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) less[i][j] = theta_less(d, d.components[nodes[i]], d.components[nodes[j]]);
    // longest chain ending at each node
    std::vector<int> best(m, 0), pred(m, -1);
    std::function<int(std::size_t)> longest = [&](std::size_t j) {
        if (best[j]) return best[j];
        best[j] = 1;
        for (std::size_t i = 0; i < m; ++i)
            if (less[i][j] && longest(i) + 1 > best[j]) {
                best[j] = best[i] + 1;
                pred[j] = static_cast<int>(i);
            }
        return best[j];
    };
    std::vector<ThetaChain> out;
    for (std::size_t j = 0; j < m; ++j) {
        bool maximal = true;
        for (std::size_t i = 0; i < m; ++i) maximal = maximal && !less[j][i];
        if (!maximal) continue;
        longest(j);
        ThetaChain c;
        for (int x = static_cast<int>(j); x >= 0; x = pred[x]) c.components.push_back(nodes[x]);
        std::reverse(c.components.begin(), c.components.end());
        c.special = std::all_of(c.components.begin(), c.components.end(),
                                [&](int ci) { return d.components[ci].only_2connected_endblocks; });
        out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const ThetaChain& a, const ThetaChain& b) { return a.components.size() > b.components.size(); });
    return out;
}

// ---- easy special cases ----

EasyCaseCounts easy_case_counts(const ThetaDecomposition& d) {
    const Graph& g = d.host;
    EasyCaseCounts c;
    std::set<Edge> theta_e;
    for (const auto& leg : d.theta.legs)
        for (auto e : path_edges(leg)) theta_e.insert(e);
    for (auto [a, b] : g.edges())
        if (d.on_theta(a) && d.on_theta(b) && !theta_e.count(make_edge(a, b))) ++c.chordal_edges;
    c.friendly = static_cast<int>(d.friendly.size());
    auto off_degree = [&](int x) {
        int k = 0;
        for (int w : g.neighbors(x)) k += !d.on_theta(w);
        return k;
    };
    for (int x = 0; x < g.n(); ++x)
        if (!d.on_theta(x) && off_degree(x) == 0) ++c.isolated_vertices;
    for (auto [a, b] : g.edges())
        if (!d.on_theta(a) && !d.on_theta(b) && off_degree(a) == 1 && off_degree(b) == 1) ++c.isolated_edges;
    for (auto [a, b] : theta_e) {
        bool tri = false;
        for (int w : g.neighbors(a)) tri |= (w != b && g.has_edge(w, b));
        c.triangle_edges += tri;
    }
    return c;
}

namespace {

// cycle made of leg i forwards and leg j backwards
std::vector<int> leg_cycle(const ThetaDecomposition& d, int i, int j) {
    std::vector<int> c = d.theta.legs[i];
    const auto& back = d.theta.legs[j];
    for (int p = static_cast<int>(back.size()) - 2; p >= 1; --p) c.push_back(back[p]);
    return c;
}

std::vector<int> leg_interior(const ThetaDecomposition& d, int i) {
    const auto& l = d.theta.legs[i];
    if (l.size() <= 2) return {};
    return {l.begin() + 1, l.end() - 1};
}

// connectors along cycle c between consecutive disjoint segments [s, e] (sorted by s)
std::vector<std::vector<int>> cycle_connectors(const std::vector<int>& c, const std::vector<std::pair<int, int>>& segs) {
    const int L = static_cast<int>(c.size());
    std::vector<std::vector<int>> out;
    for (std::size_t j = 0; j < segs.size(); ++j) {
        int from = segs[j].second;
        int to = segs[(j + 1) % segs.size()].first;
        if (to <= from) to += L;
        std::vector<int> p;
        for (int q = from; q <= to; ++q) p.push_back(c[q % L]);
        out.push_back(std::move(p));
    }
    return out;
}

std::optional<KGoodCertificate> checked(KGoodCertificate cert, const Graph& g) {
    if (!validate(cert, g).ok()) return std::nullopt;
    return cert;
}

constexpr std::array<std::pair<int, int>, 3> kLegPairs{{{0, 1}, {0, 2}, {1, 2}}};

}  // namespace

std::optional<KGoodCertificate> search_leg_cycle_close(const ThetaDecomposition& d, int k) {
    for (int i = 0; i < 3; ++i) {
        auto path = leg_interior(d, i);
        if (path.empty()) continue;
        int j = (i + 1) % 3, l = (i + 2) % 3;
        auto cyc = leg_cycle(d, std::min(j, l), std::max(j, l));
        auto conn = detect_k_close(d.host, path, cyc, k);
        if (!conn) continue;
        if (auto c = checked({k, KClosePair{path, cyc, *conn}}, d.host)) return c;
    }
    return std::nullopt;
}

std::optional<KGoodCertificate> search_diamond_beads(const ThetaDecomposition& d, int k) {
    const Graph& g = d.host;
    // x off theta, not friendly, all three neighbours consecutive on one leg interior
    struct Gadget {
        int x, leg;
        std::array<int, 3> nb;
    };
    std::vector<Gadget> gadgets;
    for (int x = 0; x < g.n(); ++x) {
        if (d.on_theta(x)) continue;
        const auto& nb = g.neighbors(x);
        if (nb.size() != 3 || !std::all_of(nb.begin(), nb.end(), [&](int w) { return d.leg_of[w] >= 0 && d.leg_of[w] < 3; }))
            continue;
        int leg = d.leg_of[nb[0]];
        if (d.leg_of[nb[1]] != leg || d.leg_of[nb[2]] != leg) continue;
        std::array<int, 3> p{d.leg_pos[nb[0]][leg], d.leg_pos[nb[1]][leg], d.leg_pos[nb[2]][leg]};
        std::sort(p.begin(), p.end());
        if (p[1] != p[0] + 1 || p[2] != p[0] + 2) continue;
        const auto& l = d.theta.legs[leg];
        gadgets.push_back({x, leg, {l[p[0]], l[p[1]], l[p[2]]}});
    }
    for (auto [i, j] : kLegPairs) {
        auto cyc = leg_cycle(d, i, j);
        std::map<int, int> pos;
        for (std::size_t q = 0; q < cyc.size(); ++q) pos[cyc[q]] = static_cast<int>(q);
        std::vector<std::pair<std::pair<int, int>, ThetaBead>> beads;
        for (const auto& gd : gadgets) {
            if (gd.leg != i && gd.leg != j) continue;
            int a = gd.nb[0], b = gd.nb[1], c = gd.nb[2];
            if (pos[a] > pos[c]) std::swap(a, c);
            ThetaBead bead;
            bead.theta.u = gd.x;
            bead.theta.v = b;
            bead.theta.legs = {std::vector<int>{gd.x, a, b}, std::vector<int>{gd.x, c, b}, std::vector<int>{gd.x, b}};
            bead.w1 = a;
            bead.w2 = c;
            beads.push_back({{pos[a], pos[c]}, bead});
        }
        if (static_cast<int>(beads.size()) < k || beads.empty()) continue;
        std::sort(beads.begin(), beads.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        ThetaNecklace neck;
        neck.i = 1;
        std::vector<std::pair<int, int>> segs;
        for (auto& [s, b] : beads) {
            segs.push_back(s);
            neck.beads.push_back(b);
        }
        neck.connectors = cycle_connectors(cyc, segs);
        if (auto c = checked({k, neck}, g)) return c;
    }
    return std::nullopt;
}

std::optional<KGoodCertificate> search_triangle_wiggles(const ThetaDecomposition& d, int k) {
    const Graph& g = d.host;
    std::optional<KGoodCertificate> best;
    int best_count = -1;
    for (auto [i, j] : kLegPairs) {
        auto cyc = leg_cycle(d, i, j);
        const int L = static_cast<int>(cyc.size());
        std::vector<std::pair<int, int>> segs;
        WigglyNecklace neck;
        std::set<int> used_apex;
        for (int p = 0; p + 1 < L; ++p) {
            if (!segs.empty() && segs.back().second >= p) continue;
            int a = cyc[p], b = cyc[p + 1], apex = -1;
            for (int w : g.neighbors(a))
                if (!d.on_theta(w) && g.has_edge(w, b) && !used_apex.count(w) && (apex < 0 || w < apex)) apex = w;
            if (apex < 0) continue;
            used_apex.insert(apex);
            segs.push_back({p, p + 1});
            WigglyBlock blk;
            blk.vertices = {a, apex, b};
            std::sort(blk.vertices.begin(), blk.vertices.end());
            blk.edges = {make_edge(a, b), make_edge(a, apex), make_edge(apex, b)};
            blk.x = a;
            blk.y = b;
            blk.short_path = {a, b};
            blk.long_path = {a, apex, b};
            neck.blocks.push_back(std::move(blk));
        }
        int cnt = static_cast<int>(neck.blocks.size());
        if (cnt < k || cnt == 0 || cnt <= best_count) continue;
        neck.connectors = cycle_connectors(cyc, segs);
        if (auto c = checked({k, neck}, g)) {
            best = c;
            best_count = cnt;
        }
    }
    return best;
}

std::optional<KGoodCertificate> search_isolated_edge_path(const ThetaDecomposition& d, int k) {
    const Graph& g = d.host;
    auto off_nb = [&](int x) {
        std::vector<int> o;
        for (int w : g.neighbors(x))
            if (!d.on_theta(w)) o.push_back(w);
        return o;
    };
    // colour of x: the leg holding both theta neighbours, or -1
    auto colour = [&](int x) {
        std::vector<int> nt;
        for (int w : g.neighbors(x))
            if (d.on_theta(w)) nt.push_back(w);
        if (nt.size() != 2) return -1;
        for (int i = 0; i < 3; ++i)
            if (d.leg_of[nt[0]] == i && d.leg_of[nt[1]] == i) return i;
        return -1;
    };
    std::array<std::vector<std::pair<int, int>>, 3> by_colour;  // (y, partner)
    for (auto [a, b] : g.edges()) {
        if (d.on_theta(a) || d.on_theta(b) || off_nb(a).size() != 1 || off_nb(b).size() != 1) continue;
        int ca = colour(a), cb = colour(b);
        if (ca < 0 || cb < 0 || ca == cb) continue;
        by_colour[ca].push_back({a, b});
        by_colour[cb].push_back({b, a});
    }
    for (int i = 0; i < 3; ++i) {
        if (static_cast<int>(by_colour[i].size()) < k || by_colour[i].empty()) continue;
        const auto& leg = d.theta.legs[i];
        struct Win {
            int l, r, y, partner;
        };
        std::vector<Win> wins;
        for (auto [y, partner] : by_colour[i]) {
            std::vector<int> ps;
            for (int w : g.neighbors(y))
                if (d.on_theta(w)) ps.push_back(d.leg_pos[w][i]);
            std::sort(ps.begin(), ps.end());
            wins.push_back({ps[0], ps[1], y, partner});
        }
        std::sort(wins.begin(), wins.end(), [](const Win& a, const Win& b) { return a.l < b.l; });
        std::vector<int> path;
        std::vector<std::pair<int, int>> on_path;  // (y, partner)
        int pos = 1;
        const int last = static_cast<int>(leg.size()) - 2;
        for (std::size_t w = 0; w < wins.size(); ++w) {
            const auto& a = wins[w];
            if (a.l < pos || a.r > last) continue;
            append_range(path, leg, pos, a.l);
            if (w + 1 < wins.size() && a.r == a.l + 2 && wins[w + 1].l == a.l + 1 && wins[w + 1].r == a.l + 3 &&
                wins[w + 1].r <= last) {
                const auto& b = wins[w + 1];
                path.insert(path.end(), {a.y, leg[a.r], leg[b.l], b.y, leg[b.r]});
                on_path.push_back({a.y, a.partner});
                on_path.push_back({b.y, b.partner});
                pos = b.r + 1;
                ++w;
            } else {
                path.insert(path.end(), {a.y, leg[a.r]});
                on_path.push_back({a.y, a.partner});
                pos = a.r + 1;
            }
        }
        append_range(path, leg, pos, last);
        if (static_cast<int>(on_path.size()) < k || !is_path(g, path)) continue;
        int j = (i + 1) % 3, l = (i + 2) % 3;
        auto cyc = leg_cycle(d, std::min(j, l), std::max(j, l));
        std::set<int> on_cyc(cyc.begin(), cyc.end());
        KClosePair kp{path, cyc, {}};
        for (auto [y, partner] : on_path) {
            int end = -1;
            for (int w : g.neighbors(partner))
                if (on_cyc.count(w) && (end < 0 || w < end)) end = w;
            if (end >= 0) kp.connectors.push_back({y, partner, end});
        }
        if (static_cast<int>(kp.connectors.size()) < k) continue;
        kp.connectors.resize(static_cast<std::size_t>(k));
        if (auto c = checked({k, kp}, g)) return c;
    }
    return std::nullopt;
}

EasyCaseResult easy_case_detect(const ThetaDecomposition& d, int k) {
    if (k < 1) throw PreconditionError("k must be positive");
    EasyCaseResult r;
    r.counts = easy_case_counts(d);
    const auto& c = r.counts;
    struct Cond {
        const char* name;
        bool fired;
        std::function<std::optional<KGoodCertificate>()> build;
    };
    std::vector<Cond> conds{
        {"(a) chordal theta edges", c.chordal_edges >= ceil_3k_2(k), [&] { return search_leg_cycle_close(d, k); }},
        {"(b) theta-friendly vertices", c.friendly >= ceil_3k_2(k), [&] { return search_leg_cycle_close(d, k); }},
        {"(c) isolated vertices", c.isolated_vertices >= 3 * k, [&] { return search_diamond_beads(d, k); }},
        {"(d) isolated edges", c.isolated_edges >= 3 * k, [&] { return search_isolated_edge_path(d, k); }},
        {"(e) theta edges in triangles", c.triangle_edges >= ceil_3k_2(k), [&] { return search_triangle_wiggles(d, k); }},
    };
    for (auto& cd : conds)
        if (cd.fired) r.fired.push_back(cd.name);
    for (auto& cd : conds) {
        if (!cd.fired) continue;
        if (auto cert = cd.build()) {
            r.certificate = cert;
            r.condition = cd.name;
            break;
        }
    }
    return r;
}

// ---- census ----

Census census(const ThetaDecomposition& d) {
    Census c;
    for (int x : d.h_vertices) c.low_degree_vertices += d.h_degree(x) <= 1;
    for (const auto& e : d.endblocks) {
        if (!e.two_connected) {
            ++c.other_endblocks;
            continue;
        }
        if (e.kind == BlockKind::Connecting) ++c.connecting_endblocks;
        else if (e.kind == BlockKind::Isolated) ++c.isolated_endblocks;
        else ++c.neither_endblocks;
    }
    c.components = static_cast<int>(d.components.size());
    auto all = chains(d);
    auto special = chains(d, true);
    c.longest_chain = all.empty() ? 0 : static_cast<int>(all.front().components.size());
    c.longest_special_chain = special.empty() ? 0 : static_cast<int>(special.front().components.size());
    c.easy_cases = easy_case_counts(d);
    return c;
}

std::vector<std::string> case_report(const Census& c, int k) {
    std::vector<std::string> out;
    const long long K = k;
    auto add = [&](bool hit, const std::string& s) {
        if (hit) out.push_back(s);
    };
    add(c.easy_cases.chordal_edges >= ceil_3k_2(k), "easy case (a): chordal theta edges >= ceil(3k/2)");
    add(c.easy_cases.friendly >= ceil_3k_2(k), "easy case (b): theta-friendly vertices >= ceil(3k/2)");
    add(c.easy_cases.isolated_vertices >= 3 * k, "easy case (c): isolated vertices of G-theta >= 3k");
    add(c.easy_cases.isolated_edges >= 3 * k, "easy case (d): isolated edges of G-theta >= 3k");
    add(c.easy_cases.triangle_edges >= ceil_3k_2(k), "easy case (e): theta edges in triangles >= ceil(3k/2)");
    add(c.low_degree_vertices >= 8 * K, "leaves: H has >= 8k vertices of degree at most 1");
    add(c.connecting_endblocks >= 21 * K * K + ceil_3k_2(k), "connecting: >= 21k^2+ceil(3k/2) theta-connecting endblocks");
    add(c.isolated_endblocks >= 5700 * K * K * K * K * K * K, "isolated: >= 5700k^6 theta-isolated endblocks");
    add(c.longest_special_chain >= 5 * K, "chain: special theta-chain of length >= 5k");
    if (out.empty()) out.push_back("none: every count is below its threshold for this k");
    return out;
}

// ---- search harness ----

KGoodSearchResult kgood_search(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("k must be positive");
    if (!is_cubic(g)) throw PreconditionError("graph must be cubic");
    if (!is_3_connected(g)) throw PreconditionError("graph must be 3-connected");
    KGoodSearchResult r;
    int best = -1;
    for (int a = 0; a < g.n(); ++a) {
        auto dist = bfs_distances(g, a);
        for (int b = a + 1; b < g.n(); ++b)
            if (dist[b] > best) {
                best = dist[b];
                r.u = a;
                r.v = b;
            }
    }
    r.decomposition = decompose(g, r.u, r.v);
    r.census = census(r.decomposition);
    r.case_report = case_report(r.census, k);
    auto lem = easy_case_detect(r.decomposition, k);
    if (lem.certificate) {
        r.certificate = lem.certificate;
        r.source = "easy case " + lem.condition;
        return r;
    }
    const std::vector<std::pair<const char*, std::function<std::optional<KGoodCertificate>()>>> direct{
        {"leg and opposite cycle k-close", [&] { return search_leg_cycle_close(r.decomposition, k); }},
        {"triangle wiggles on two legs", [&] { return search_triangle_wiggles(r.decomposition, k); }},
        {"diamond beads on two legs", [&] { return search_diamond_beads(r.decomposition, k); }},
        {"isolated-edge path", [&] { return search_isolated_edge_path(r.decomposition, k); }},
    };
    for (const auto& [name, run] : direct)
        if (auto c = run()) {
            r.certificate = c;
            r.source = name;
            return r;
        }
    r.source = "unknown";
    return r;
}

// ---- bounds ----

namespace {

BigInt bitlen(const BigInt& x) { return x <= 0 ? BigInt(0) : BigInt(boost::multiprecision::msb(x) + 1); }

BigValue normalized(BigValue v) {
    if (v.mantissa <= 0) throw Error("bound values must be positive");
    auto tz = boost::multiprecision::lsb(v.mantissa);
    v.mantissa >>= tz;
    v.exponent += tz;
    return v;
}

int compare(const BigValue& x, const BigValue& y) {
    BigValue a = normalized(x), b = normalized(y);
    BigInt la = a.bit_length(), lb = b.bit_length();
    if (la != lb) return la < lb ? -1 : 1;
    // equal bit lengths keep the exponent gap below the mantissa size
    BigInt lo = std::min(a.exponent, b.exponent);
    BigInt ma = a.mantissa << static_cast<unsigned>(a.exponent - lo);
    BigInt mb = b.mantissa << static_cast<unsigned>(b.exponent - lo);
    return ma < mb ? -1 : (ma > mb ? 1 : 0);
}

BigInt ipow(BigInt b, unsigned e) {
    BigInt r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

BigInt BigValue::bit_length() const { return bitlen(mantissa) + exponent; }

std::string BigValue::to_string() const {
    BigValue v = normalized(*this);
    if (v.exponent <= 4096) {
        BigInt x = v.mantissa << static_cast<unsigned>(v.exponent);
        return x.str();
    }
    std::string e = v.exponent.str();
    return v.mantissa == 1 ? "2^" + e : v.mantissa.str() + "*2^" + e;
}

bool operator<(const BigValue& a, const BigValue& b) { return compare(a, b) < 0; }
bool operator>(const BigValue& a, const BigValue& b) { return compare(a, b) > 0; }

const BigValue& BoundsTable::at(const std::string& name) const {
    for (const auto& [n, v] : values)
        if (n == name) return v;
    throw Error("unknown bound " + name);
}

BoundsTable bounds(int k) {
    if (k < 1) throw PreconditionError("k must be at least 1");
    BoundsTable t;
    t.k = k;
    const BigInt K = k;
    auto plain = [](BigInt m) { return BigValue{std::move(m), 0}; };
    auto pow2 = [](BigInt e) { return BigValue{1, std::move(e)}; };
    t.values = {
        {"18k^2", plain(18 * K * K)},
        {"3k^4", plain(3 * ipow(K, 4))},
        {"2k", plain(2 * K)},
        {"162k^8", plain(162 * ipow(K, 8))},
        {"2^(4k^2)", pow2(4 * K * K)},
        {"8k", plain(8 * K)},
        {"21k^2+ceil(3k/2)", plain(21 * K * K + ceil_3k_2(k))},
        {"5700k^6", plain(5700 * ipow(K, 6))},
        {"5k", plain(5 * K)},
        {"10^9k^13*2^(9k^2)", BigValue{ipow(10, 9) * ipow(K, 13), 9 * K * K}},
        {"2^(10^6k^16)", pow2(ipow(10, 6) * ipow(K, 16))},
    };
    if (k >= 3 && k <= 9) {
        t.chain_checked = true;
        BigInt c = 162 * ipow(K, 8);
        BigInt rhs = ipow(10, 9) * ipow(c, 13);
        bool first = pow2(ipow(10, 6) * ipow(K, 16) / 2) > plain(rhs);
        bool second = pow2(ipow(10, 6) * ipow(K, 16)) > BigValue{rhs, 9 * c * c};
        t.chain_holds = first && second;
    }
    return t;
}

}  // namespace cyclemod
