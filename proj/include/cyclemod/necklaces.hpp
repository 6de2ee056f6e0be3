#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclemod/generators.hpp"
#include "cyclemod/graph.hpp"

namespace cyclemod {

struct ThetaGraph {
    int u = 0;
    int v = 0;
    std::array<std::vector<int>, 3> legs;  // each runs from u to v

    int leg_length(int j) const { return static_cast<int>(legs[j].size()) - 1; }
    int total_length() const { return leg_length(0) + leg_length(1) + leg_length(2); }
    std::vector<int> vertices() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// host may be null, in which case only the internal structure is checked
ValidationReport validate_theta(const ThetaGraph& t, const Graph* host);

// legs[0] = L1 carries w1, legs[1] = L2 carries w2, legs[2] = L3 has length i
struct ThetaBead {
    ThetaGraph theta;
    int w1 = 0;
    int w2 = 0;
};

struct ThetaNecklace {
    int i = 1;
    std::vector<ThetaBead> beads;
    std::vector<std::vector<int>> connectors;  // connectors[j] runs from beads[j].w2 to beads[j+1].w1 (cyclically)
};

// (a, b, c, d) as used in the residue argument: |w1 L1 u| = a, |u L2 w2| = b,
// |w1 L1 v| = c - i, |v L2 w2| = d - i
struct LegSplit {
    int a = 0, b = 0, c = 0, d = 0;
};
LegSplit leg_split(const ThetaBead& bead, int i);

struct WigglyBlock {
    std::vector<int> vertices;
    std::vector<Edge> edges;
    int x = 0;
    int y = 0;
    std::vector<int> short_path;  // x ... y
    std::vector<int> long_path;   // empty unless the block is a wiggle
};

struct WigglyNecklace {
    std::vector<WigglyBlock> blocks;
    std::vector<std::vector<int>> connectors;  // connectors[j] runs from blocks[j].y to blocks[j+1].x (cyclically)

    int wiggle_count() const;
};

struct KClosePair {
    std::vector<int> path;
    std::vector<int> cycle;
    std::vector<std::vector<int>> connectors;  // path vertex ... cycle vertex, length 1 or 2
};

struct KGoodCertificate {
    int k = 1;
    std::variant<ThetaNecklace, WigglyNecklace, KClosePair> witness;
};

std::string certificate_kind(const KGoodCertificate& c);

ValidationReport validate(const ThetaNecklace& n, const Graph& host);
ValidationReport validate(const WigglyNecklace& n, const Graph& host);
ValidationReport validate(const KClosePair& p, const Graph& host);
// also checks that the witness reaches level cert.k
ValidationReport validate(const KGoodCertificate& cert, const Graph& host);

// the subgraph formed by the witness itself, on vertex ids up to the largest used
Graph union_graph(const ThetaNecklace& n);
Graph union_graph(const WigglyNecklace& n);

// Maximum family of pairwise disjoint H1-H2 paths of length <= 2.
std::vector<std::vector<int>> max_close_connectors(const Graph& g, const std::vector<int>& h1, const std::vector<int>& h2);
std::optional<std::vector<std::vector<int>>> detect_k_close(const Graph& g, const std::vector<int>& h1,
                                                            const std::vector<int>& h2, int k);

struct RealizedCycle {
    std::vector<int> cycle;
    long long base_length = 0;
    int bucket_size = 0;
    std::array<int, 3> lambdas{0, 0, 0};      // modifications actually applied
    std::array<int, 3> lambda_scheme{0, 0, 0};  // the (l, l, -l) solution
    int step = 0;                               // wiggly: the common step x
    int swapped = 0;                            // wiggly: number of swapped blocks
};

RealizedCycle realize_residue_theta(const ThetaNecklace& neck, int m, int k);
// residues |C| + 2 i l (mod k) over all l, for the parity remark on even k
std::vector<int> theta_lambda_residues(const ThetaNecklace& neck, int k);

RealizedCycle realize_residue_wiggly(const WigglyNecklace& neck, int m, int k);

ThetaNecklace kclose_to_necklace(const Graph& host, const KClosePair& pair, int k);

RealizedCycle kgood_realize(const Graph& g, const KGoodCertificate& cert, int m, int k);

// ---- random builders used by tests and demos ----

struct NecklaceBounds {
    int min_leg = 1;
    int max_leg = 4;
    int min_connector = 1;
    int max_connector = 3;
};

// returns the necklace together with its union graph as host
std::pair<ThetaNecklace, Graph> random_theta_necklace(int t, int i, std::uint64_t seed, NecklaceBounds bounds = {});
std::pair<WigglyNecklace, Graph> random_wiggly_necklace(int blocks, int wiggles, std::uint64_t seed,
                                                        NecklaceBounds bounds = {});
// a path and a cycle joined by `connectors` disjoint connectors; length-2 share given by two_share in [0,1]
std::pair<KClosePair, Graph> random_kclose_instance(int connectors, double two_share, std::uint64_t seed);

}  // namespace cyclemod
