#include "cyclemod/necklaces.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "cyclemod/flow.hpp"
#include "cyclemod/monotone.hpp"

namespace cyclemod {

namespace {

std::string vstr(int v) { return std::to_string(v); }

long long mod_k(long long a, int k) { return ((a % k) + k) % k; }

// inverse of a modulo k; throws if gcd(a, k) != 1
int mod_inverse(long long a, int k) {
    long long old_r = mod_k(a, k), r = k, old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    if (old_r != 1) throw PreconditionError(std::to_string(a) + " is not invertible modulo " + std::to_string(k));
    return static_cast<int>(mod_k(old_s, k));
}

void check_path(const std::vector<int>& p, const Graph& host, const std::string& what, ValidationReport& rep) {
    if (p.empty()) {
        rep.violations.push_back(what + " is empty");
        return;
    }
    std::set<int> seen;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= host.n()) {
            rep.violations.push_back(what + " uses vertex " + vstr(p[i]) + " outside the host");
            return;
        }
        if (!seen.insert(p[i]).second) rep.violations.push_back(what + " repeats vertex " + vstr(p[i]));
        if (i > 0 && !host.has_edge(p[i - 1], p[i]))
            rep.violations.push_back(what + " uses missing edge " + vstr(p[i - 1]) + "-" + vstr(p[i]));
    }
}

void add_path_edges(std::set<Edge>& es, const std::vector<int>& p) {
    for (auto e : path_edges(p)) es.insert(e);
}

void check_subcubic(const std::set<Edge>& es, ValidationReport& rep) {
    std::map<int, int> deg;
    for (auto [a, b] : es) {
        deg[a]++;
        deg[b]++;
    }
    for (auto [v, d] : deg)
        if (d > 3) rep.violations.push_back("vertex " + vstr(v) + " has degree " + std::to_string(d) + " in the witness");
}

Graph graph_from_edge_set(const std::set<Edge>& es) {
    int n = 0;
    for (auto [a, b] : es) n = std::max(n, std::max(a, b) + 1);
    Graph g(n);
    for (auto [a, b] : es) g.add_edge(a, b);
    return g;
}

std::set<Edge> theta_edges(const ThetaGraph& t) {
    std::set<Edge> es;
    for (const auto& leg : t.legs) add_path_edges(es, leg);
    return es;
}

}  // namespace

std::vector<int> ThetaGraph::vertices() const {
    std::set<int> vs;
    for (const auto& leg : legs) vs.insert(leg.begin(), leg.end());
    return {vs.begin(), vs.end()};
}

ValidationReport validate_theta(const ThetaGraph& t, const Graph* host) {
    ValidationReport rep;
    if (t.u == t.v) rep.violations.push_back("branch vertices coincide");
    int short_legs = 0;
    std::map<int, int> interior_owner;
    for (int j = 0; j < 3; ++j) {
        const auto& leg = t.legs[j];
        const std::string name = "leg " + std::to_string(j + 1);
        if (leg.size() < 2) {
            rep.violations.push_back(name + " has no edge");
            continue;
        }
        if (leg.front() != t.u || leg.back() != t.v) rep.violations.push_back(name + " does not run from u to v");
        if (host) check_path(leg, *host, name, rep);
        if (leg.size() == 2) ++short_legs;
        for (std::size_t p = 1; p + 1 < leg.size(); ++p) {
            int x = leg[p];
            if (x == t.u || x == t.v) rep.violations.push_back(name + " passes through a branch vertex");
            auto [it, fresh] = interior_owner.emplace(x, j);
            if (!fresh && it->second != j)
                rep.violations.push_back("legs " + std::to_string(it->second + 1) + " and " + std::to_string(j + 1) +
                                         " share vertex " + vstr(x));
        }
    }
    if (short_legs > 1) rep.violations.push_back("two legs are the same edge");
    return rep;
}

LegSplit leg_split(const ThetaBead& bead, int i) {
    const auto& l1 = bead.theta.legs[0];
    const auto& l2 = bead.theta.legs[1];
    auto p1 = std::find(l1.begin(), l1.end(), bead.w1);
    auto p2 = std::find(l2.begin(), l2.end(), bead.w2);
    if (p1 == l1.end() || p2 == l2.end()) throw PreconditionError("attachment vertex not on its leg");
    LegSplit s;
    s.a = static_cast<int>(p1 - l1.begin());
    s.b = static_cast<int>(p2 - l2.begin());
    s.c = static_cast<int>(l1.size()) - 1 - s.a + i;
    s.d = static_cast<int>(l2.size()) - 1 - s.b + i;
    return s;
}

int WigglyNecklace::wiggle_count() const {
    int c = 0;
    for (const auto& b : blocks) c += !b.long_path.empty();
    return c;
}

std::string certificate_kind(const KGoodCertificate& c) {
    if (std::holds_alternative<ThetaNecklace>(c.witness)) return "theta_necklace";
    if (std::holds_alternative<WigglyNecklace>(c.witness)) return "wiggly_necklace";
    return "k_close_pair";
}

ValidationReport validate(const ThetaNecklace& n, const Graph& host) {
    ValidationReport rep;
    const int t = static_cast<int>(n.beads.size());
    if (t == 0) rep.violations.push_back("necklace has no theta-graphs");
    if (n.i < 1) rep.violations.push_back("third-leg length i must be positive");
    if (static_cast<int>(n.connectors.size()) != t)
        rep.violations.push_back("expected " + std::to_string(t) + " connectors, got " + std::to_string(n.connectors.size()));
    std::map<int, int> owner;
    std::set<Edge> es;
    for (int j = 0; j < t; ++j) {
        const auto& b = n.beads[j];
        auto sub = validate_theta(b.theta, &host);
        for (auto& v : sub.violations) rep.violations.push_back("theta " + std::to_string(j) + ": " + v);
        if (b.theta.leg_length(2) != n.i)
            rep.violations.push_back("theta " + std::to_string(j) + ": third leg has length " +
                                     std::to_string(b.theta.leg_length(2)) + ", expected " + std::to_string(n.i));
        const auto& l1 = b.theta.legs[0];
        const auto& l2 = b.theta.legs[1];
        if (std::find(l1.begin(), l1.end(), b.w1) == l1.end())
            rep.violations.push_back("theta " + std::to_string(j) + ": w1 not on the first leg");
        if (std::find(l2.begin(), l2.end(), b.w2) == l2.end())
            rep.violations.push_back("theta " + std::to_string(j) + ": w2 not on the second leg");
        if (b.w1 == b.w2) rep.violations.push_back("theta " + std::to_string(j) + ": w1 equals w2");
        for (int x : b.theta.vertices()) {
            auto [it, fresh] = owner.emplace(x, j);
            if (!fresh)
                rep.violations.push_back("theta-graphs " + std::to_string(it->second) + " and " + std::to_string(j) +
                                         " share vertex " + vstr(x));
        }
        auto te = theta_edges(b.theta);
        es.insert(te.begin(), te.end());
    }
    std::map<int, int> conn_owner;
    for (int j = 0; j < static_cast<int>(n.connectors.size()) && j < t; ++j) {
        const auto& p = n.connectors[j];
        const std::string name = "connector " + std::to_string(j);
        check_path(p, host, name, rep);
        if (p.size() < 2) {
            rep.violations.push_back(name + " has no edge");
            continue;
        }
        if (p.front() != n.beads[j].w2) rep.violations.push_back(name + " does not start at w2 of theta " + std::to_string(j));
        if (p.back() != n.beads[(j + 1) % t].w1)
            rep.violations.push_back(name + " does not end at w1 of theta " + std::to_string((j + 1) % t));
        for (std::size_t q = 1; q + 1 < p.size(); ++q) {
            if (owner.count(p[q]))
                rep.violations.push_back(name + " interior vertex " + vstr(p[q]) + " lies on theta " +
                                         std::to_string(owner[p[q]]));
            auto [it, fresh] = conn_owner.emplace(p[q], j);
            if (!fresh)
                rep.violations.push_back("connectors " + std::to_string(it->second) + " and " + std::to_string(j) +
                                         " share vertex " + vstr(p[q]));
        }
        add_path_edges(es, p);
    }
    check_subcubic(es, rep);
    return rep;
}

ValidationReport validate(const WigglyNecklace& n, const Graph& host) {
    ValidationReport rep;
    const int l = static_cast<int>(n.blocks.size());
    if (l == 0) rep.violations.push_back("necklace has no blocks");
    if (static_cast<int>(n.connectors.size()) != l)
        rep.violations.push_back("expected " + std::to_string(l) + " connectors, got " + std::to_string(n.connectors.size()));
    std::map<int, int> owner;
    for (int j = 0; j < l; ++j) {
        const auto& b = n.blocks[j];
        const std::string name = "block " + std::to_string(j);
        std::set<int> vs(b.vertices.begin(), b.vertices.end());
        std::set<Edge> bes;
        for (auto [a, c] : b.edges) {
            Edge e = make_edge(a, c);
            if (!host.has_edge(a, c)) rep.violations.push_back(name + " uses missing edge " + vstr(a) + "-" + vstr(c));
            if (!vs.count(a) || !vs.count(c)) rep.violations.push_back(name + " edge leaves its vertex set");
            bes.insert(e);
        }
        std::vector<int> vlist(vs.begin(), vs.end());
        std::map<int, int> idx;
        for (std::size_t q = 0; q < vlist.size(); ++q) idx[vlist[q]] = static_cast<int>(q);
        Graph bg(static_cast<int>(vlist.size()));
        for (auto [a, c] : bes)
            if (idx.count(a) && idx.count(c)) bg.add_edge(idx[a], idx[c]);
        if (!is_2_connected(bg)) rep.violations.push_back(name + " is not 2-connected");
        if (!vs.count(b.x) || !vs.count(b.y)) rep.violations.push_back(name + " attachments are not in the block");
        if (b.x == b.y) rep.violations.push_back(name + " attachments coincide");
        auto check_inner = [&](const std::vector<int>& p, const std::string& what) {
            check_path(p, host, name + " " + what, rep);
            if (p.size() < 2 || p.front() != b.x || p.back() != b.y) {
                rep.violations.push_back(name + " " + what + " does not run from x to y");
                return;
            }
            for (auto e : path_edges(p))
                if (!bes.count(e)) rep.violations.push_back(name + " " + what + " leaves the block");
        };
        check_inner(b.short_path, "short path");
        if (!b.long_path.empty()) {
            check_inner(b.long_path, "long path");
            long long diff = static_cast<long long>(b.long_path.size()) - static_cast<long long>(b.short_path.size());
            if (diff != 1 && diff != 2)
                rep.violations.push_back(name + " path lengths differ by " + std::to_string(diff) + ", not 1 or 2");
        }
        for (int x : vs) {
            auto [it, fresh] = owner.emplace(x, j);
            if (!fresh)
                rep.violations.push_back("blocks " + std::to_string(it->second) + " and " + std::to_string(j) +
                                         " share vertex " + vstr(x));
        }
    }
    std::map<int, int> conn_owner;
    for (int j = 0; j < static_cast<int>(n.connectors.size()) && j < l; ++j) {
        const auto& p = n.connectors[j];
        const std::string name = "connector " + std::to_string(j);
        check_path(p, host, name, rep);
        if (p.size() < 2) {
            rep.violations.push_back(name + " has no edge");
            continue;
        }
        if (p.front() != n.blocks[j].y) rep.violations.push_back(name + " does not start at y of block " + std::to_string(j));
        if (p.back() != n.blocks[(j + 1) % l].x)
            rep.violations.push_back(name + " does not end at x of block " + std::to_string((j + 1) % l));
        for (std::size_t q = 1; q + 1 < p.size(); ++q) {
            if (owner.count(p[q]))
                rep.violations.push_back(name + " interior vertex " + vstr(p[q]) + " lies in block " +
                                         std::to_string(owner[p[q]]));
            auto [it, fresh] = conn_owner.emplace(p[q], j);
            if (!fresh)
                rep.violations.push_back("connectors " + std::to_string(it->second) + " and " + std::to_string(j) +
                                         " share vertex " + vstr(p[q]));
        }
    }
    return rep;
}

ValidationReport validate(const KClosePair& p, const Graph& host) {
    ValidationReport rep;
    check_path(p.path, host, "path", rep);
    check_path(p.cycle, host, "cycle", rep);
    if (p.cycle.size() < 3 || !host.has_edge(p.cycle.back(), p.cycle.front()))
        rep.violations.push_back("cycle is not closed");
    std::set<int> on_path(p.path.begin(), p.path.end()), on_cycle(p.cycle.begin(), p.cycle.end());
    for (int x : on_path)
        if (on_cycle.count(x)) rep.violations.push_back("path and cycle share vertex " + vstr(x));
    std::set<int> used;
    for (std::size_t j = 0; j < p.connectors.size(); ++j) {
        const auto& c = p.connectors[j];
        const std::string name = "connector " + std::to_string(j);
        if (c.size() < 2 || c.size() > 3) {
            rep.violations.push_back(name + " must have length 1 or 2");
            continue;
        }
        check_path(c, host, name, rep);
        if (!on_path.count(c.front())) rep.violations.push_back(name + " does not start on the path");
        if (!on_cycle.count(c.back())) rep.violations.push_back(name + " does not end on the cycle");
        if (c.size() == 3 && (on_path.count(c[1]) || on_cycle.count(c[1])))
            rep.violations.push_back(name + " middle vertex lies on the path or cycle");
        for (int x : c)
            if (!used.insert(x).second) rep.violations.push_back("connectors share vertex " + vstr(x));
    }
    return rep;
}

ValidationReport validate(const KGoodCertificate& cert, const Graph& host) {
    ValidationReport rep = std::visit([&](const auto& w) { return validate(w, host); }, cert.witness);
    if (auto* t = std::get_if<ThetaNecklace>(&cert.witness)) {
        if (t->i != 1 && t->i != 2) rep.violations.push_back("theta necklace must have i in {1, 2}");
        if (static_cast<int>(t->beads.size()) < cert.k)
            rep.violations.push_back("only " + std::to_string(t->beads.size()) + " theta-graphs, need " + std::to_string(cert.k));
    } else if (auto* w = std::get_if<WigglyNecklace>(&cert.witness)) {
        if (w->wiggle_count() < cert.k)
            rep.violations.push_back("only " + std::to_string(w->wiggle_count()) + " wiggles, need " + std::to_string(cert.k));
    } else if (auto* c = std::get_if<KClosePair>(&cert.witness)) {
        if (static_cast<int>(c->connectors.size()) < cert.k)
            rep.violations.push_back("only " + std::to_string(c->connectors.size()) + " connectors, need " +
                                     std::to_string(cert.k));
    }
    return rep;
}

Graph union_graph(const ThetaNecklace& n) {
    std::set<Edge> es;
    for (const auto& b : n.beads) {
        auto te = theta_edges(b.theta);
        es.insert(te.begin(), te.end());
    }
    for (const auto& c : n.connectors) add_path_edges(es, c);
    return graph_from_edge_set(es);
}

Graph union_graph(const WigglyNecklace& n) {
    std::set<Edge> es;
    for (const auto& b : n.blocks)
        for (auto [a, c] : b.edges) es.insert(make_edge(a, c));
    for (const auto& c : n.connectors) add_path_edges(es, c);
    return graph_from_edge_set(es);
}

// ---- k-close detection ----

std::vector<std::vector<int>> max_close_connectors(const Graph& g, const std::vector<int>& h1, const std::vector<int>& h2) {
    const int n = g.n();
    std::vector<int> role(n, 0);  // 0 outside, 1 in H1, 2 in H2
    for (int x : h1) {
        if (x < 0 || x >= n) throw PreconditionError("H1 vertex out of range");
        role[x] = 1;
    }
    for (int x : h2) {
        if (x < 0 || x >= n) throw PreconditionError("H2 vertex out of range");
        if (role[x] == 1) throw PreconditionError("H1 and H2 share vertex " + vstr(x));
        role[x] = 2;
    }
    const int S = 2 * n, T = 2 * n + 1;
    MaxFlow f(2 * n + 2);
    for (int x = 0; x < n; ++x) {
        f.add_arc(2 * x, 2 * x + 1, 1);
        if (role[x] == 1) f.add_arc(S, 2 * x, 1);
        if (role[x] == 2) f.add_arc(2 * x + 1, T, 1);
    }
    struct Fwd {
        int from, idx, x, y;
    };
    std::vector<Fwd> fwd;
    for (int x = 0; x < n; ++x)
        for (int y : g.neighbors(x)) {
            bool ok = (role[x] == 1 && role[y] == 2) || (role[x] == 1 && role[y] == 0) || (role[x] == 0 && role[y] == 2);
            if (ok) fwd.push_back({2 * x + 1, f.add_arc(2 * x + 1, 2 * y, 1), x, y});
        }
    f.run(S, T);
    std::map<int, int> next;
    for (const auto& a : fwd)
        if (f.flow_on(a.from, a.idx) > 0) next[a.x] = a.y;
    std::vector<std::vector<int>> out;
    for (int a : h1) {
        auto it = next.find(a);
        if (it == next.end()) continue;
        int y = it->second;
        if (role[y] == 2)
            out.push_back({a, y});
        else
            out.push_back({a, y, next.at(y)});
    }
    return out;
}

std::optional<std::vector<std::vector<int>>> detect_k_close(const Graph& g, const std::vector<int>& h1,
                                                            const std::vector<int>& h2, int k) {
    auto all = max_close_connectors(g, h1, h2);
    if (static_cast<int>(all.size()) < k) return std::nullopt;
    all.resize(std::max(k, 0));
    return all;
}

// ---- theta necklace realization ----

namespace {

void check_theta_preconditions(const ThetaNecklace& neck, int k) {
    if (k < 1) throw PreconditionError("k must be positive");
    Graph host = union_graph(neck);
    auto rep = validate(neck, host);
    if (!rep.ok()) throw PreconditionError("invalid theta necklace: " + rep.violations.front());
}

// path inside a bead from w1 to w2; kind 0: via u (a+b), 1: a+d, 2: c+b, 3: via v (c+d-2i)
std::vector<int> bead_route(const ThetaBead& b, int kind) {
    const auto& l1 = b.theta.legs[0];
    const auto& l2 = b.theta.legs[1];
    const auto& l3 = b.theta.legs[2];
    int p1 = static_cast<int>(std::find(l1.begin(), l1.end(), b.w1) - l1.begin());
    int p2 = static_cast<int>(std::find(l2.begin(), l2.end(), b.w2) - l2.begin());
    std::vector<int> r;
    auto l1_to_u = [&] { for (int q = p1; q >= 0; --q) r.push_back(l1[q]); };
    auto l1_to_v = [&] { for (int q = p1; q < static_cast<int>(l1.size()); ++q) r.push_back(l1[q]); };
    auto u_to_w2 = [&] { for (int q = 1; q <= p2; ++q) r.push_back(l2[q]); };
    auto v_to_w2 = [&] { for (int q = static_cast<int>(l2.size()) - 2; q >= p2; --q) r.push_back(l2[q]); };
    auto u_to_v = [&] { for (std::size_t q = 1; q + 1 < l3.size(); ++q) r.push_back(l3[q]); r.push_back(l3.back()); };
    auto v_to_u = [&] { for (int q = static_cast<int>(l3.size()) - 2; q >= 0; --q) r.push_back(l3[q]); };
    switch (kind) {
        case 0: l1_to_u(); u_to_w2(); break;
        case 1: l1_to_u(); u_to_v(); v_to_w2(); break;
        case 2: l1_to_v(); v_to_u(); u_to_w2(); break;
        default: l1_to_v(); v_to_w2(); break;
    }
    return r;
}

std::vector<int> theta_cycle(const ThetaNecklace& neck, const std::vector<int>& kinds) {
    std::vector<int> cyc;
    for (std::size_t j = 0; j < neck.beads.size(); ++j) {
        auto r = bead_route(neck.beads[j], kinds[j]);
        cyc.insert(cyc.end(), r.begin(), r.end());
        const auto& c = neck.connectors[j];
        for (std::size_t q = 1; q + 1 < c.size(); ++q) cyc.push_back(c[q]);
    }
    return cyc;
}

struct Bucket {
    std::vector<int> members;
    std::array<long long, 3> triple{};
};

Bucket choose_bucket(const ThetaNecklace& neck, int k) {
    std::map<std::array<long long, 3>, std::vector<int>> buckets;
    for (int j = 0; j < static_cast<int>(neck.beads.size()); ++j) {
        auto s = leg_split(neck.beads[j], neck.i);
        std::array<long long, 3> key{mod_k(s.d - s.b, k), mod_k(s.c - s.a, k),
                                     mod_k(static_cast<long long>(s.c) + s.d - 2LL * neck.i - s.a - s.b, k)};
        buckets[key].push_back(j);
    }
    Bucket best;
    for (auto& [key, members] : buckets)  // map order makes the first maximum the lexicographically least
        if (members.size() > best.members.size()) {
            best.members = members;
            best.triple = key;
        }
    return best;
}

std::vector<int> apply_lambdas(const ThetaNecklace& neck, const Bucket& bucket, const std::array<int, 3>& lam) {
    std::vector<int> kinds(neck.beads.size(), 0);
    std::size_t pos = 0;
    for (int t = 0; t < 3; ++t)
        for (int c = 0; c < lam[t]; ++c) kinds[bucket.members.at(pos++)] = t + 1;
    return kinds;
}

}  // namespace

RealizedCycle realize_residue_theta(const ThetaNecklace& neck, int m, int k) {
    check_theta_preconditions(neck, k);
    const int i = neck.i;
    if (std::gcd(k, 2 * i) != 1) throw PreconditionError("gcd(k, 2i) must be 1");
    const long long need = 3LL * k * k * k * k;
    if (static_cast<long long>(neck.beads.size()) < need)
        throw PreconditionError("theta necklace has " + std::to_string(neck.beads.size()) + " theta-graphs, need 3k^4 = " +
                                std::to_string(need));
    RealizedCycle out;
    std::vector<int> base_kinds(neck.beads.size(), 0);
    auto base = theta_cycle(neck, base_kinds);
    out.base_length = static_cast<long long>(base.size());
    Bucket bucket = choose_bucket(neck, k);
    out.bucket_size = static_cast<int>(bucket.members.size());
    if (out.bucket_size < 3 * k) throw Error("pigeonhole bucket smaller than 3k");

    const int target = static_cast<int>(mod_k(m, k));
    const int lam = static_cast<int>(mod_k((target - out.base_length) * mod_inverse(2 * i, k), k));
    out.lambda_scheme = {lam, lam, static_cast<int>(mod_k(-lam, k))};

    // smallest modification count reaching the residue; the (l, l, -l) scheme is always a candidate
    std::array<int, 3> chosen = out.lambda_scheme;
    int best_sum = chosen[0] + chosen[1] + chosen[2];
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c) {
                if (a + b + c >= best_sum && !(a + b + c == best_sum && std::array<int, 3>{a, b, c} < chosen)) continue;
                if (a + b + c > out.bucket_size) continue;
                long long len = out.base_length + a * bucket.triple[0] + b * bucket.triple[1] + c * bucket.triple[2];
                if (mod_k(len, k) != target) continue;
                chosen = {a, b, c};
                best_sum = a + b + c;
            }
    out.lambdas = chosen;
    out.cycle = theta_cycle(neck, apply_lambdas(neck, bucket, chosen));
    Graph host = union_graph(neck);
    if (!is_cycle(host, out.cycle)) throw Error("constructed closed walk is not a cycle");
    if (mod_k(static_cast<long long>(out.cycle.size()), k) != target) throw Error("constructed cycle misses the residue");
    return out;
}

std::vector<int> theta_lambda_residues(const ThetaNecklace& neck, int k) {
    check_theta_preconditions(neck, k);
    Bucket bucket = choose_bucket(neck, k);
    if (static_cast<int>(bucket.members.size()) < 3 * k) throw PreconditionError("pigeonhole bucket smaller than 3k");
    Graph host = union_graph(neck);
    std::set<int> res;
    for (int lam = 0; lam < k; ++lam) {
        auto cyc = theta_cycle(neck, apply_lambdas(neck, bucket, {lam, lam, static_cast<int>(mod_k(-lam, k))}));
        if (!is_cycle(host, cyc)) throw Error("constructed closed walk is not a cycle");
        res.insert(static_cast<int>(mod_k(static_cast<long long>(cyc.size()), k)));
    }
    return {res.begin(), res.end()};
}

// ---- wiggly realization ----

RealizedCycle realize_residue_wiggly(const WigglyNecklace& neck, int m, int k) {
    if (k < 1 || k % 2 == 0) throw PreconditionError("k must be odd");
    Graph host = union_graph(neck);
    auto rep = validate(neck, host);
    if (!rep.ok()) throw PreconditionError("invalid wiggly necklace: " + rep.violations.front());
    if (neck.wiggle_count() < 2 * k)
        throw PreconditionError("necklace has " + std::to_string(neck.wiggle_count()) + " wiggles, need 2k = " +
                                std::to_string(2 * k));
    std::vector<int> ones, twos;
    for (int j = 0; j < static_cast<int>(neck.blocks.size()); ++j) {
        const auto& b = neck.blocks[j];
        if (b.long_path.empty()) continue;
        (b.long_path.size() - b.short_path.size() == 1 ? ones : twos).push_back(j);
    }
    RealizedCycle out;
    const std::vector<int>& group = (static_cast<int>(ones.size()) >= k) ? ones : twos;
    out.step = (&group == &ones) ? 1 : 2;
    auto build = [&](const std::set<int>& swapped) {
        std::vector<int> cyc;
        for (int j = 0; j < static_cast<int>(neck.blocks.size()); ++j) {
            const auto& b = neck.blocks[j];
            const auto& p = swapped.count(j) ? b.long_path : b.short_path;
            cyc.insert(cyc.end(), p.begin(), p.end());
            const auto& c = neck.connectors[j];
            for (std::size_t q = 1; q + 1 < c.size(); ++q) cyc.push_back(c[q]);
        }
        return cyc;
    };
    auto base = build({});
    out.base_length = static_cast<long long>(base.size());
    out.bucket_size = static_cast<int>(group.size());
    int target = static_cast<int>(mod_k(m, k));
    out.swapped = static_cast<int>(mod_k((target - out.base_length) * mod_inverse(out.step, k), k));
    std::set<int> sw(group.begin(), group.begin() + out.swapped);
    out.cycle = build(sw);
    if (!is_cycle(host, out.cycle)) throw Error("constructed closed walk is not a cycle");
    if (mod_k(static_cast<long long>(out.cycle.size()), k) != target) throw Error("constructed cycle misses the residue");
    return out;
}

// ---- k-close pair to theta necklace ----

ThetaNecklace kclose_to_necklace(const Graph& host, const KClosePair& pair, int k) {
    if (k < 1) throw PreconditionError("k must be positive");
    auto rep = validate(pair, host);
    if (!rep.ok()) throw PreconditionError("invalid k-close pair: " + rep.violations.front());
    const long long need = 18LL * k * k;
    if (static_cast<long long>(pair.connectors.size()) < need)
        throw PreconditionError("only " + std::to_string(pair.connectors.size()) + " connectors, need 18k^2 = " +
                                std::to_string(need));
    std::vector<const std::vector<int>*> direct, two;
    for (const auto& c : pair.connectors) (c.size() == 2 ? direct : two).push_back(&c);
    const int i = (static_cast<long long>(direct.size()) >= 9LL * k * k) ? 1 : 2;
    auto chosen = (i == 1) ? direct : two;

    std::map<int, int> pos_p, pos_c;
    for (int q = 0; q < static_cast<int>(pair.path.size()); ++q) pos_p[pair.path[q]] = q;
    const int m = static_cast<int>(pair.cycle.size());
    for (int q = 0; q < m; ++q) pos_c[pair.cycle[q]] = q;
    std::sort(chosen.begin(), chosen.end(), [&](auto* a, auto* b) { return pos_p[a->front()] < pos_p[b->front()]; });
    std::vector<long long> seq;
    for (auto* c : chosen) seq.push_back(pos_c[c->back()]);
    auto w = erdos_szekeres(seq, 3 * k, 3 * k);
    const int dir = (w.direction == Direction::Increasing) ? 1 : -1;

    auto path_segment = [&](int from, int to) {  // along P, inclusive
        std::vector<int> r;
        int a = pos_p[from], b = pos_p[to], s = (b >= a) ? 1 : -1;
        for (int q = a;; q += s) {
            r.push_back(pair.path[q]);
            if (q == b) break;
        }
        return r;
    };
    auto cycle_segment = [&](int from, int to) {  // along C minus the closing edge, inclusive
        std::vector<int> r;
        int a = pos_c[from], b = pos_c[to], s = (b >= a) ? 1 : -1;
        for (int q = a;; q += s) {
            r.push_back(pair.cycle[q]);
            if (q == b) break;
        }
        return r;
    };
    auto leg_through = [&](const std::vector<int>& mid, const std::vector<int>& side) {
        std::vector<int> leg = path_segment(mid.front(), side.front());
        for (std::size_t q = 1; q < side.size(); ++q) leg.push_back(side[q]);
        auto tail = cycle_segment(side.back(), mid.back());
        leg.insert(leg.end(), tail.begin() + 1, tail.end());
        return leg;
    };

    ThetaNecklace out;
    out.i = i;
    for (int t = 0; t < k; ++t) {
        const auto& ea = *chosen[w.indices[3 * t]];
        const auto& em = *chosen[w.indices[3 * t + 1]];
        const auto& eb = *chosen[w.indices[3 * t + 2]];
        ThetaBead bead;
        bead.theta.u = em.front();
        bead.theta.v = em.back();
        bead.theta.legs[0] = leg_through(em, ea);
        bead.theta.legs[1] = leg_through(em, eb);
        bead.theta.legs[2] = em;
        bead.w1 = ea.back();
        bead.w2 = eb.back();
        out.beads.push_back(std::move(bead));
    }
    for (int t = 0; t < k; ++t) {
        int from = out.beads[t].w2, to = out.beads[(t + 1) % k].w1;
        std::vector<int> conn{from};
        for (int q = pos_c[from]; pair.cycle[q] != to;) {
            q = ((q + dir) % m + m) % m;
            conn.push_back(pair.cycle[q]);
        }
        out.connectors.push_back(std::move(conn));
    }
    auto vr = validate(out, host);
    if (!vr.ok()) throw Error("necklace construction failed validation: " + vr.violations.front());
    return out;
}

RealizedCycle kgood_realize(const Graph& g, const KGoodCertificate& cert, int m, int k) {
    if (k < 1 || k % 2 == 0) throw PreconditionError("k must be odd");
    auto rep = validate(cert, g);
    if (!rep.ok()) throw PreconditionError("invalid certificate: " + rep.violations.front());
    const long long k4 = 1LL * k * k * k * k;
    if (auto* w = std::get_if<WigglyNecklace>(&cert.witness)) {
        if (w->wiggle_count() < 2 * k)
            throw PreconditionError("wiggly certificate below the 2k threshold (" + std::to_string(w->wiggle_count()) +
                                    " < " + std::to_string(2 * k) + ")");
        return realize_residue_wiggly(*w, m, k);
    }
    if (auto* t = std::get_if<ThetaNecklace>(&cert.witness)) {
        if (static_cast<long long>(t->beads.size()) < 3 * k4)
            throw PreconditionError("theta certificate below the 3k^4 threshold (" + std::to_string(t->beads.size()) +
                                    " < " + std::to_string(3 * k4) + ")");
        return realize_residue_theta(*t, m, k);
    }
    const auto& pair = std::get<KClosePair>(cert.witness);
    const long long c = static_cast<long long>(pair.connectors.size());
    const long long need = 162 * k4 * k4;
    if (c < need)
        throw PreconditionError("k-close certificate below the 162k^8 threshold (" + std::to_string(c) + " < " +
                                std::to_string(need) + ")");
    long long K = static_cast<long long>(std::sqrt(static_cast<double>(c) / 18.0));
    while (18 * (K + 1) * (K + 1) <= c) ++K;
    while (K > 0 && 18 * K * K > c) --K;
    ThetaNecklace neck = kclose_to_necklace(g, pair, static_cast<int>(K));
    return realize_residue_theta(neck, m, k);
}

// ---- random builders ----

std::pair<ThetaNecklace, Graph> random_theta_necklace(int t, int i, std::uint64_t seed, NecklaceBounds bounds) {
    if (t < 1 || i < 1) throw PreconditionError("need t >= 1 and i >= 1");
    Rng rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, std::max(lo, hi))(rng); };
    int next = 0;
    ThetaNecklace neck;
    neck.i = i;
    for (int j = 0; j < t; ++j) {
        ThetaBead b;
        b.theta.u = next++;
        b.theta.v = next++;
        for (int leg = 0; leg < 3; ++leg) {
            int len = (leg == 2) ? i : pick(std::max(2, bounds.min_leg), std::max(2, bounds.max_leg));
            std::vector<int> p{b.theta.u};
            for (int q = 1; q < len; ++q) p.push_back(next++);
            p.push_back(b.theta.v);
            b.theta.legs[leg] = p;
        }
        b.w1 = b.theta.legs[0][pick(1, b.theta.leg_length(0) - 1)];
        b.w2 = b.theta.legs[1][pick(1, b.theta.leg_length(1) - 1)];
        neck.beads.push_back(std::move(b));
    }
    for (int j = 0; j < t; ++j) {
        int len = pick(std::max(1, bounds.min_connector), std::max(1, bounds.max_connector));
        std::vector<int> p{neck.beads[j].w2};
        for (int q = 1; q < len; ++q) p.push_back(next++);
        p.push_back(neck.beads[(j + 1) % t].w1);
        neck.connectors.push_back(std::move(p));
    }
    Graph host = union_graph(neck);
    return {std::move(neck), std::move(host)};
}

std::pair<WigglyNecklace, Graph> random_wiggly_necklace(int blocks, int wiggles, std::uint64_t seed, NecklaceBounds bounds) {
    if (blocks < 1 || wiggles < 0 || wiggles > blocks) throw PreconditionError("need 0 <= wiggles <= blocks, blocks >= 1");
    Rng rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, std::max(lo, hi))(rng); };
    std::vector<char> is_wiggle(blocks, 0);
    std::fill(is_wiggle.begin(), is_wiggle.begin() + wiggles, 1);
    std::shuffle(is_wiggle.begin(), is_wiggle.end(), rng);
    int next = 0;
    WigglyNecklace neck;
    for (int j = 0; j < blocks; ++j) {
        WigglyBlock b;
        int type = is_wiggle[j] ? pick(0, 2) : 3;
        if (type == 2) {
            // K4 minus an edge; x, y are the two degree-2 vertices: paths of length 2 and 3
            int x = next++, a = next++, c = next++, y = next++;
            b.vertices = {x, a, c, y};
            b.edges = {{x, a}, {x, c}, {a, c}, {a, y}, {c, y}};
            b.x = x;
            b.y = y;
            b.short_path = {x, a, y};
            b.long_path = {x, a, c, y};
        } else {
            // a cycle with x, y splitting it into arcs of lengths d and n - d
            int d, n;
            if (type == 3) {
                d = pick(1, 3);
                n = 2 * d + ((d == 1) ? 1 : 0);  // arcs of equal length, or 1 and 2 for a triangle left unused
            } else {
                d = pick(1, 3);
                n = 2 * d + (type == 0 ? 1 : 2);
            }
            std::vector<int> cyc;
            for (int q = 0; q < n; ++q) cyc.push_back(next++);
            b.vertices = cyc;
            for (int q = 0; q < n; ++q) b.edges.emplace_back(cyc[q], cyc[(q + 1) % n]);
            b.x = cyc[0];
            b.y = cyc[d];
            b.short_path.assign(cyc.begin(), cyc.begin() + d + 1);
            if (type != 3) {
                b.long_path = {cyc[0]};
                for (int q = n - 1; q >= d; --q) b.long_path.push_back(cyc[q]);
            }
        }
        neck.blocks.push_back(std::move(b));
    }
    for (int j = 0; j < blocks; ++j) {
        int len = pick(std::max(1, bounds.min_connector), std::max(1, bounds.max_connector));
        std::vector<int> p{neck.blocks[j].y};
        for (int q = 1; q < len; ++q) p.push_back(next++);
        p.push_back(neck.blocks[(j + 1) % blocks].x);
        neck.connectors.push_back(std::move(p));
    }
    Graph host = union_graph(neck);
    return {std::move(neck), std::move(host)};
}

std::pair<KClosePair, Graph> random_kclose_instance(int connectors, double two_share, std::uint64_t seed) {
    if (connectors < 1) throw PreconditionError("need at least one connector");
    Rng rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int lp = connectors + static_cast<int>(rng() % (connectors + 1));
    const int lc = std::max(3, connectors + 1 + static_cast<int>(rng() % (connectors + 1)));
    KClosePair pair;
    int next = 0;
    for (int q = 0; q < lp; ++q) pair.path.push_back(next++);
    for (int q = 0; q < lc; ++q) pair.cycle.push_back(next++);
    std::vector<int> ps(pair.path), cs(pair.cycle);
    std::shuffle(ps.begin(), ps.end(), rng);
    std::shuffle(cs.begin(), cs.end(), rng);
    std::vector<Edge> extra;
    for (int j = 0; j < connectors; ++j) {
        if (coin(rng) < two_share) {
            int mid = next++;
            pair.connectors.push_back({ps[j], mid, cs[j]});
        } else {
            pair.connectors.push_back({ps[j], cs[j]});
        }
    }
    Graph host(next);
    for (auto e : path_edges(pair.path)) host.add_edge(e.first, e.second);
    for (auto e : cycle_edges(pair.cycle)) host.add_edge(e.first, e.second);
    for (const auto& c : pair.connectors)
        for (auto e : path_edges(c)) host.add_edge(e.first, e.second);
    return {std::move(pair), std::move(host)};
}

}  // namespace cyclemod
