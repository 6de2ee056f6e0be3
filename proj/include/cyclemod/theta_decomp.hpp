#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclemod/graph.hpp"
#include "cyclemod/necklaces.hpp"

namespace cyclemod {

// Three internally disjoint u-v paths of minimum total length (min-cost flow).
ThetaGraph shortest_theta(const Graph& g, int u, int v);
// exhaustive minimum over leg triples (small graphs)
int brute_shortest_theta_length(const Graph& g, int u, int v);

enum class BlockKind { Connecting, Isolated, Neither };
std::string to_string(BlockKind k);

struct PieceInfo {
    std::vector<int> vertices;         // sorted
    std::vector<int> theta_neighbors;  // N_Theta(B+), sorted
    BlockKind kind = BlockKind::Neither;
    int leg = -1;            // carrying leg when isolated
    std::vector<int> span;   // vertices of the shortest leg subpath containing theta_neighbors, in leg order
    int span_lo = -1;        // positions on the leg
    int span_hi = -1;
};

struct EndblockInfo : PieceInfo {
    int component = -1;
    bool two_connected = false;
};

struct ComponentInfo : PieceInfo {
    std::vector<int> endblocks;  // indices into ThetaDecomposition::endblocks
    bool only_2connected_endblocks = false;
};

struct ThetaDecomposition {
    Graph host;
    ThetaGraph theta;
    std::vector<int> leg_of;                   // -1 off theta, 0..2 leg interior, 3 branch vertex
    std::vector<std::array<int, 3>> leg_pos;   // position on each leg, -1 if absent
    std::vector<int> F;                        // vertices off theta with >= 2 theta neighbours
    std::vector<int> friendly;
    std::vector<int> theta_plus;               // theta plus F
    std::vector<int> h_vertices;               // G - theta_plus
    std::vector<ComponentInfo> components;
    std::vector<EndblockInfo> endblocks;
    std::map<int, int> projection;             // N_H(theta_plus) -> theta vertex

    bool on_theta(int x) const { return leg_of[x] >= 0; }
    bool in_h(int x) const;
    int h_degree(int x) const;
};

// require_3connected=false lets hand-built 2-connected hosts through.
ThetaDecomposition decompose(const Graph& g, int u, int v, bool require_3connected = true);

// N_Theta(B+) for an arbitrary vertex set B inside H
std::vector<int> theta_neighbors_plus(const ThetaDecomposition& d, const std::vector<int>& b);
bool crossing(const ThetaDecomposition& d, const PieceInfo& a, const PieceInfo& b);
// a <_Theta b
bool theta_less(const ThetaDecomposition& d, const PieceInfo& a, const PieceInfo& b);

struct ThetaChain {
    std::vector<int> components;  // indices into ThetaDecomposition::components
    bool special = false;
};
bool validate_chain(const ThetaDecomposition& d, const ThetaChain& c);
// a longest chain ending at each maximal isolated component
std::vector<ThetaChain> chains(const ThetaDecomposition& d, bool special_only = false);

struct EasyCaseCounts {
    int chordal_edges = 0;     // (a)
    int friendly = 0;          // (b)
    int isolated_vertices = 0; // (c)
    int isolated_edges = 0;    // (d)
    int triangle_edges = 0;    // (e)
};
EasyCaseCounts easy_case_counts(const ThetaDecomposition& d);

struct EasyCaseResult {
    EasyCaseCounts counts;
    std::vector<std::string> fired;  // conditions meeting their threshold
    std::optional<KGoodCertificate> certificate;
    std::string condition;           // the condition whose construction produced the certificate
};
EasyCaseResult easy_case_detect(const ThetaDecomposition& d, int k);

struct Census {
    int low_degree_vertices = 0;  // degree <= 1 in H
    int connecting_endblocks = 0; // 2-connected ones
    int isolated_endblocks = 0;
    int neither_endblocks = 0;
    int other_endblocks = 0;      // not 2-connected
    int components = 0;
    int longest_chain = 0;
    int longest_special_chain = 0;
    EasyCaseCounts easy_cases;
};
Census census(const ThetaDecomposition& d);
// which large-graph hypotheses the counts meet for this k
std::vector<std::string> case_report(const Census& c, int k);

struct KGoodSearchResult {
    std::optional<KGoodCertificate> certificate;
    std::string source;  // detector that produced the certificate, or "unknown"
    int u = 0, v = 0;
    ThetaDecomposition decomposition;
    Census census;
    std::vector<std::string> case_report;
};
KGoodSearchResult kgood_search(const Graph& g, int k);

// Directly searched witnesses around a decomposition; each returns a validated certificate or nothing.
std::optional<KGoodCertificate> search_leg_cycle_close(const ThetaDecomposition& d, int k);
std::optional<KGoodCertificate> search_triangle_wiggles(const ThetaDecomposition& d, int k);
std::optional<KGoodCertificate> search_diamond_beads(const ThetaDecomposition& d, int k);
std::optional<KGoodCertificate> search_isolated_edge_path(const ThetaDecomposition& d, int k);

// ---- bounds ----

using BigInt = boost::multiprecision::cpp_int;

// mantissa * 2^exponent, so 2^(10^6 k^16) stays representable
struct BigValue {
    BigInt mantissa = 1;
    BigInt exponent = 0;

    BigInt bit_length() const;  // of the represented integer
    std::string to_string() const;  // decimal when small enough, otherwise "m*2^e"
};
bool operator<(const BigValue& a, const BigValue& b);
bool operator>(const BigValue& a, const BigValue& b);

struct BoundsTable {
    int k = 1;
    std::vector<std::pair<std::string, BigValue>> values;  // in a fixed order
    bool chain_checked = false;  // only for 3 <= k <= 9
    bool chain_holds = false;

    const BigValue& at(const std::string& name) const;
};
BoundsTable bounds(int k);

}  // namespace cyclemod
