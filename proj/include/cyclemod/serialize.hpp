#pragma once

#include <string>

#include <json.hpp>

#include "cyclemod/counterexamples.hpp"
#include "cyclemod/cycle_oracle.hpp"
#include "cyclemod/graph.hpp"
#include "cyclemod/necklaces.hpp"
#include "cyclemod/path_pairs.hpp"
#include "cyclemod/theta_decomp.hpp"

namespace cyclemod {

using json = nlohmann::ordered_json;

// Witness schema (all vertex ids are host ids):
//   {"kind": "theta_necklace", "k": int, "i": 1|2,
//    "beads": [{"u": int, "v": int, "legs": [[...], [...], [...]], "w1": int, "w2": int}, ...],
//    "connectors": [[...], ...],
//    "host": {"n": int, "edges": [[a, b], ...]}}              host optional
//   {"kind": "wiggly_necklace", "k": int,
//    "blocks": [{"vertices": [...], "edges": [[a, b], ...], "x": int, "y": int,
//                "short_path": [...], "long_path": [...]}, ...],
//    "connectors": [[...], ...], "host": {...}}                host optional
//   {"kind": "k_close_pair", "k": int, "path": [...], "cycle": [...],
//    "connectors": [[...], ...], "host": {...}}                host required
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json to_json(const ThetaGraph& t);
ThetaGraph theta_from_json(const json& j);
json to_json(const KGoodCertificate& c);
KGoodCertificate certificate_from_json(const json& j);
// the host stored with a witness, or the union of the witness itself when absent
Graph witness_host(const json& j, const KGoodCertificate& c);

json to_json(const ValidationReport& r);
json to_json(const RealizedCycle& r);
json to_json(const ResidueSpectrum& s);
json to_json(const PathPair& p);
json to_json(const CloseDisjointPaths& q);
json to_json(const PieceInfo& p);
json to_json(const Census& c);
json to_json(const ThetaDecomposition& d);
json to_json(const CounterexampleReport& r);
// integer when it fits in 64 bits, otherwise its string form
json to_json(const BigValue& v);

}  // namespace cyclemod
