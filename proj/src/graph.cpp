#include "cyclemod/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "cyclemod/flow.hpp"

namespace cyclemod {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw Error("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adj) {
    Graph g;
    g.adj_ = std::move(adj);
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.validate();
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::size_t Graph::edge_count() const {
    std::size_t s = 0;
    for (const auto& a : adj_) s += a.size();
    return s / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::add_vertex() {
    adj_.emplace_back();
    return n() - 1;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n() || v >= n()) throw Error("edge endpoint out of range");
    if (u == v) throw Error("self-loop " + std::to_string(u));
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v)
        throw Error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    a.insert(it, v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw Error("no edge " + std::to_string(u) + "-" + std::to_string(v));
    auto& a = adj_[u];
    a.erase(std::lower_bound(a.begin(), a.end(), v));
    auto& b = adj_[v];
    b.erase(std::lower_bound(b.begin(), b.end(), u));
}

void Graph::validate() const {
    for (int u = 0; u < n(); ++u) {
        const auto& a = adj_[u];
        for (std::size_t i = 0; i < a.size(); ++i) {
            int v = a[i];
            if (v < 0 || v >= n()) throw Error("neighbor index out of range at vertex " + std::to_string(u));
            if (v == u) throw Error("self-loop at vertex " + std::to_string(u));
            if (i > 0 && a[i - 1] >= v) throw Error("unsorted or duplicate adjacency at vertex " + std::to_string(u));
            if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u))
                throw Error("asymmetric adjacency " + std::to_string(u) + "-" + std::to_string(v));
        }
    }
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

void MultiGraph::validate() const {
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw Error("multigraph edge endpoint out of range");
        if (a == b) throw Error("multigraph loop at " + std::to_string(a));
    }
}

// ---- graph6 ----

namespace {

std::size_t decode_size(const std::string& s, std::size_t& pos) {
    auto byte_at = [&](std::size_t i) -> unsigned {
        if (i >= s.size()) throw ParseError("truncated header", i);
        unsigned c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 character", i);
        return c - 63;
    };
    unsigned first = byte_at(pos);
    if (first != 63) {
        pos += 1;
        return first;
    }
    int len = 3;
    std::size_t start = pos + 1;
    if (start < s.size() && static_cast<unsigned char>(s[start]) == 126) {
        len = 6;
        start += 1;
    }
    std::size_t n = 0;
    for (int i = 0; i < len; ++i) n = (n << 6) | byte_at(start + i);
    pos = start + len;
    return n;
}

void encode_size(std::size_t n, std::string& out) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
    }
}

constexpr std::size_t kMaxGraph6Vertices = 1u << 16;

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t pos = 0;
    const std::string header = ">>graph6<<";
    if (s.compare(0, header.size(), header) == 0) pos = header.size();
    if (pos >= s.size()) throw ParseError("empty graph6 record", pos);
    std::size_t hdr = pos;
    std::size_t n = decode_size(s, pos);
    if (n > kMaxGraph6Vertices) throw ParseError("vertex count " + std::to_string(n) + " exceeds supported range", hdr);
    std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::size_t nbytes = (bits + 5) / 6;
    if (s.size() < pos + nbytes) throw ParseError("truncated adjacency bit field", s.size());
    if (s.size() > pos + nbytes) throw ParseError("trailing bytes after adjacency bit field", pos + nbytes);
    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            std::size_t at = pos + k / 6;
            unsigned c = static_cast<unsigned char>(s[at]);
            if (c < 63 || c > 126) throw ParseError("invalid graph6 character", at);
            if (((c - 63) >> (5 - k % 6)) & 1) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    if (bits % 6 != 0) {
        std::size_t at = pos + nbytes - 1;
        unsigned c = static_cast<unsigned char>(s[at]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 character", at);
        unsigned pad_mask = (1u << (6 - bits % 6)) - 1;
        if ((c - 63) & pad_mask) throw ParseError("nonzero padding bits", at);
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    std::size_t n = static_cast<std::size_t>(g.n());
    encode_size(n, out);
    unsigned cur = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((cur << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw ParseError("edge list needs \"n\" and \"edges\"", 0);
    int n = j["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [u, v] pairs", 0);
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(n, edges);
}

std::string emit_edge_list_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_edge_list_json(text);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_graph6(line);
    }
    throw ParseError("no graph6 record in " + path, 0);
}

// ---- blocks ----

BlockDecomposition blocks(const Graph& g) {
    const int n = g.n();
    BlockDecomposition bd;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> estack;
    std::vector<bool> is_cut(n, false);
    int timer = 0;

    struct Frame {
        int v, parent;
        std::size_t next;
        int children;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            bd.blocks.push_back({root});
            bd.block_edges.emplace_back();
            continue;
        }
        std::vector<Frame> st;
        st.push_back({root, -1, 0, 0});
        disc[root] = low[root] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (disc[w] < 0) {
                    estack.push_back(make_edge(f.v, w));
                    f.children++;
                    disc[w] = low[w] = timer++;
                    st.push_back({w, f.v, 0, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    estack.push_back(make_edge(f.v, w));
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Frame done = f;
            st.pop_back();
            if (st.empty()) break;
            Frame& p = st.back();
            low[p.v] = std::min(low[p.v], low[done.v]);
            if (low[done.v] >= disc[p.v]) {
                if (p.parent >= 0 || p.children > 1) is_cut[p.v] = true;
                Edge stop = make_edge(p.v, done.v);
                std::vector<Edge> be;
                while (true) {
                    Edge e = estack.back();
                    estack.pop_back();
                    be.push_back(e);
                    if (e == stop) break;
                }
                std::vector<int> vs;
                for (auto [a, b] : be) {
                    vs.push_back(a);
                    vs.push_back(b);
                }
                std::sort(vs.begin(), vs.end());
                vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                std::sort(be.begin(), be.end());
                bd.blocks.push_back(std::move(vs));
                bd.block_edges.push_back(std::move(be));
            }
        }
        if (g.degree(root) > 0) {
            int rc = 0;
            for (const auto& b : bd.blocks)
                if (std::binary_search(b.begin(), b.end(), root)) ++rc;
            if (rc > 1) is_cut[root] = true;
        }
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) bd.cut_vertices.push_back(v);
    bd.block_cuts.resize(bd.blocks.size());
    bd.endblock.resize(bd.blocks.size());
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        for (int v : bd.blocks[b])
            if (is_cut[v]) bd.block_cuts[b].push_back(v);
        bd.endblock[b] = bd.block_cuts[b].size() <= 1;
    }
    return bd;
}

// ---- connectivity ----

std::vector<int> component_labels(const Graph& g, const std::vector<bool>& removed) {
    std::vector<int> lab(g.n(), -1);
    int c = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (lab[s] >= 0 || (!removed.empty() && removed[s])) continue;
        std::vector<int> st{s};
        lab[s] = c;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : g.neighbors(x))
                if (lab[y] < 0 && (removed.empty() || !removed[y])) {
                    lab[y] = c;
                    st.push_back(y);
                }
        }
        ++c;
    }
    return lab;
}

std::vector<std::vector<int>> components(const Graph& g) {
    auto lab = component_labels(g);
    int c = 0;
    for (int l : lab) c = std::max(c, l + 1);
    std::vector<std::vector<int>> out(c);
    for (int v = 0; v < g.n(); ++v) out[lab[v]].push_back(v);
    return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

int local_connectivity(const Graph& g, int s, int t, int cap) {
    const int n = g.n();
    MaxFlow f(2 * n);
    for (int v = 0; v < n; ++v) f.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
    for (auto [a, b] : g.edges()) {
        f.add_arc(2 * a + 1, 2 * b, 1);
        f.add_arc(2 * b + 1, 2 * a, 1);
    }
    return f.run(2 * s + 1, 2 * t, cap);
}

int connectivity(const Graph& g) {
    const int n = g.n();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, local_connectivity(g, s, t, best));
    return best;
}

bool is_k_connected(const Graph& g, int k) {
    const int n = g.n();
    if (k <= 0) return true;
    if (n <= k) return false;
    if (!is_connected(g)) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < k) return false;
    if (k == 1) return true;
    if (k == 2) {
        auto bd = blocks(g);
        return bd.cut_vertices.empty();
    }
    // Even's scheme: any minimum cut misses one of the first k vertices
    for (int s = 0; s < k; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t) && local_connectivity(g, s, t, k) < k) return false;
    return true;
}

std::vector<EdgeCut> two_edge_cuts(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("two_edge_cuts requires a connected graph");
    auto es = g.edges();
    std::vector<EdgeCut> out;
    Graph h = g;
    for (std::size_t i = 0; i < es.size(); ++i) {
        h.remove_edge(es[i].first, es[i].second);
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            h.remove_edge(es[j].first, es[j].second);
            auto comps = components(h);
            if (comps.size() > 1) {
                EdgeCut c;
                c.first = es[i];
                c.second = es[j];
                c.sides = comps;
                c.non_trivial = comps.size() == 2 && comps[0].size() >= 2 && comps[1].size() >= 2;
                out.push_back(std::move(c));
            }
            h.add_edge(es[j].first, es[j].second);
        }
        h.add_edge(es[i].first, es[i].second);
    }
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> d(g.n(), -1);
    std::queue<int> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x))
            if (d[y] < 0) {
                d[y] = d[x] + 1;
                q.push(y);
            }
    }
    return d;
}

int distance(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw Error("vertex out of range");
    int d = bfs_distances(g, u)[v];
    if (d < 0) throw Error("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not connected");
    return d;
}

int diameter(const Graph& g) {
    if (!is_connected(g)) throw Error("diameter of a disconnected graph");
    int best = 0;
    for (int s = 0; s < g.n(); ++s)
        for (int d : bfs_distances(g, s)) best = std::max(best, d);
    return best;
}

std::vector<int> shortest_path(const Graph& g, int u, int v, const std::vector<bool>& allowed) {
    std::vector<int> prev(g.n(), -2);
    std::queue<int> q;
    prev[u] = -1;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == v) break;
        for (int y : g.neighbors(x))
            if (prev[y] == -2 && (allowed.empty() || allowed[y] || y == v)) {
                prev[y] = x;
                q.push(y);
            }
    }
    if (prev[v] == -2) return {};
    std::vector<int> p;
    for (int x = v; x != -1; x = prev[x]) p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep, std::vector<int>* map) {
    std::vector<int> idx(g.n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (int y : g.neighbors(keep[i]))
            if (idx[y] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), idx[y]);
    if (map) *map = keep;
    return h;
}

bool is_path(const Graph& g, const std::vector<int>& p) {
    if (p.empty()) return false;
    std::vector<bool> seen(g.n(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= g.n() || seen[p[i]]) return false;
        seen[p[i]] = true;
        if (i > 0 && !g.has_edge(p[i - 1], p[i])) return false;
    }
    return true;
}

bool is_cycle(const Graph& g, const std::vector<int>& c) {
    return c.size() >= 3 && is_path(g, c) && g.has_edge(c.back(), c.front());
}

std::vector<Edge> path_edges(const std::vector<int>& p) {
    std::vector<Edge> out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(make_edge(p[i - 1], p[i]));
    return out;
}

std::vector<Edge> cycle_edges(const std::vector<int>& c) {
    auto out = path_edges(c);
    if (c.size() >= 3) out.push_back(make_edge(c.back(), c.front()));
    return out;
}

bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

}  // namespace cyclemod
