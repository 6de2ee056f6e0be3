#include "cyclemod/serialize.hpp"

namespace cyclemod {

namespace {

std::vector<int> ints(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"", 0);
    return j.at(key).get<std::vector<int>>();
}

int integer(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"", 0);
    return j.at(key).get<int>();
}

json edge_list(const std::vector<Edge>& es) {
    json a = json::array();
    for (auto [x, y] : es) a.push_back({x, y});
    return a;
}

std::vector<Edge> edges_from(const json& j) {
    std::vector<Edge> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair", 0);
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

json lemma_counts(const EasyCaseCounts& c) {
    return {{"chordal_edges", c.chordal_edges},
            {"friendly", c.friendly},
            {"isolated_vertices", c.isolated_vertices},
            {"isolated_edges", c.isolated_edges},
            {"triangle_edges", c.triangle_edges}};
}

}  // namespace

json to_json(const Graph& g) { return {{"n", g.n()}, {"edges", edge_list(g.edges())}}; }

Graph graph_from_json(const json& j) {
    try {
        return Graph::from_edges(integer(j, "n"), edges_from(j.at("edges")));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what(), 0);
    }
}

json to_json(const ThetaGraph& t) {
    return {{"u", t.u}, {"v", t.v}, {"legs", {t.legs[0], t.legs[1], t.legs[2]}}};
}

ThetaGraph theta_from_json(const json& j) {
    ThetaGraph t;
    t.u = integer(j, "u");
    t.v = integer(j, "v");
    const auto& legs = j.at("legs");
    if (legs.size() != 3) throw ParseError("a theta graph has exactly three legs", 0);
    for (int i = 0; i < 3; ++i) t.legs[i] = legs[i].get<std::vector<int>>();
    return t;
}

json to_json(const KGoodCertificate& c) {
    json j{{"kind", certificate_kind(c)}, {"k", c.k}};
    if (auto* t = std::get_if<ThetaNecklace>(&c.witness)) {
        j["i"] = t->i;
        json beads = json::array();
        for (const auto& b : t->beads) {
            json bj = to_json(b.theta);
            bj["w1"] = b.w1;
            bj["w2"] = b.w2;
            beads.push_back(bj);
        }
        j["beads"] = beads;
        j["connectors"] = t->connectors;
    } else if (auto* w = std::get_if<WigglyNecklace>(&c.witness)) {
        json blocks = json::array();
        for (const auto& b : w->blocks)
            blocks.push_back({{"vertices", b.vertices},
                              {"edges", edge_list(b.edges)},
                              {"x", b.x},
                              {"y", b.y},
                              {"short_path", b.short_path},
                              {"long_path", b.long_path}});
        j["blocks"] = blocks;
        j["connectors"] = w->connectors;
    } else {
        const auto& p = std::get<KClosePair>(c.witness);
        j["path"] = p.path;
        j["cycle"] = p.cycle;
        j["connectors"] = p.connectors;
    }
    return j;
}

KGoodCertificate certificate_from_json(const json& j) {
    try {
        KGoodCertificate c;
        c.k = j.value("k", 1);
        std::string kind = j.at("kind").get<std::string>();
        auto connectors = j.value("connectors", std::vector<std::vector<int>>{});
        if (kind == "theta_necklace") {
            ThetaNecklace t;
            t.i = integer(j, "i");
            for (const auto& bj : j.at("beads")) {
                ThetaBead b;
                b.theta = theta_from_json(bj);
                b.w1 = integer(bj, "w1");
                b.w2 = integer(bj, "w2");
                t.beads.push_back(std::move(b));
            }
            t.connectors = connectors;
            c.witness = std::move(t);
        } else if (kind == "wiggly_necklace") {
            WigglyNecklace w;
            for (const auto& bj : j.at("blocks")) {
                WigglyBlock b;
                b.vertices = ints(bj, "vertices");
                b.edges = edges_from(bj.at("edges"));
                b.x = integer(bj, "x");
                b.y = integer(bj, "y");
                b.short_path = ints(bj, "short_path");
                b.long_path = bj.value("long_path", std::vector<int>{});
                w.blocks.push_back(std::move(b));
            }
            w.connectors = connectors;
            c.witness = std::move(w);
        } else if (kind == "k_close_pair") {
            KClosePair p;
            p.path = ints(j, "path");
            p.cycle = ints(j, "cycle");
            p.connectors = connectors;
            c.witness = std::move(p);
        } else {
            throw ParseError("unknown witness kind \"" + kind + "\"", 0);
        }
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad witness JSON: ") + e.what(), 0);
    }
}

Graph witness_host(const json& j, const KGoodCertificate& c) {
    if (j.contains("host")) return graph_from_json(j.at("host"));
    if (auto* t = std::get_if<ThetaNecklace>(&c.witness)) return union_graph(*t);
    if (auto* w = std::get_if<WigglyNecklace>(&c.witness)) return union_graph(*w);
    throw PreconditionError("a k-close witness needs an explicit \"host\" graph");
}

json to_json(const ValidationReport& r) { return {{"valid", r.ok()}, {"violations", r.violations}}; }

json to_json(const RealizedCycle& r) {
    return {{"cycle", r.cycle},
            {"length", r.cycle.size()},
            {"base_length", r.base_length},
            {"bucket_size", r.bucket_size},
            {"lambdas", r.lambdas},
            {"lambda_scheme", r.lambda_scheme},
            {"step", r.step},
            {"swapped", r.swapped}};
}

json to_json(const ResidueSpectrum& s) {
    json w = json::object();
    for (const auto& [r, c] : s.witnesses) w[std::to_string(r)] = c;
    return {{"k", s.k}, {"residues", s.residues}, {"witnesses", w}};
}

json to_json(const PathPair& p) {
    return {{"short_path", p.short_path}, {"long_path", p.long_path}, {"difference", p.difference}};
}

json to_json(const CloseDisjointPaths& q) {
    return {{"q1", q.q1}, {"q2", q.q2}, {"cross_edges", q.cross_edges}};
}

json to_json(const PieceInfo& p) {
    return {{"vertices", p.vertices},
            {"theta_neighbors", p.theta_neighbors},
            {"kind", to_string(p.kind)},
            {"leg", p.leg},
            {"span", p.span}};
}

json to_json(const Census& c) {
    return {{"low_degree_vertices", c.low_degree_vertices},
            {"connecting_endblocks", c.connecting_endblocks},
            {"isolated_endblocks", c.isolated_endblocks},
            {"neither_endblocks", c.neither_endblocks},
            {"other_endblocks", c.other_endblocks},
            {"components", c.components},
            {"longest_chain", c.longest_chain},
            {"longest_special_chain", c.longest_special_chain},
            {"easy_cases", lemma_counts(c.easy_cases)}};
}

json to_json(const ThetaDecomposition& d) {
    json comps = json::array();
    for (const auto& c : d.components) {
        json cj = to_json(static_cast<const PieceInfo&>(c));
        cj["endblocks"] = c.endblocks;
        cj["only_2connected_endblocks"] = c.only_2connected_endblocks;
        comps.push_back(cj);
    }
    json ends = json::array();
    for (const auto& b : d.endblocks) {
        json bj = to_json(static_cast<const PieceInfo&>(b));
        bj["component"] = b.component;
        bj["two_connected"] = b.two_connected;
        ends.push_back(bj);
    }
    json proj = json::array();
    for (auto [x, t] : d.projection) proj.push_back({x, t});
    return {{"theta", to_json(d.theta)},
            {"F", d.F},
            {"friendly", d.friendly},
            {"h_vertices", d.h_vertices},
            {"components", comps},
            {"endblocks", ends},
            {"projection", proj}};
}

json to_json(const CounterexampleReport& r) {
    return {{"m", r.m},
            {"k", r.k},
            {"N", r.N},
            {"n_prime", r.n_prime},
            {"block", to_string(r.block)},
            {"vertices", r.graph.n()},
            {"edges", r.graph.edge_count()},
            {"graph6", emit_graph6(r.graph)},
            {"residue_counts", r.residue_counts},
            {"residues", r.residues},
            {"certified", r.certified},
            {"enumeration_checked", r.enumeration_checked},
            {"enumeration_agrees", r.enumeration_agrees},
            {"enumeration_note", r.enumeration_note}};
}

json to_json(const BigValue& v) {
    if (v.bit_length() <= 63) {
        BigInt x = v.mantissa << static_cast<unsigned>(v.exponent);
        return x.convert_to<long long>();
    }
    return v.to_string();
}

}  // namespace cyclemod
