#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cyclemod/chord_paths.hpp"
#include "cyclemod/counterexamples.hpp"
#include "cyclemod/cycle_oracle.hpp"
#include "cyclemod/necklaces.hpp"
#include "cyclemod/path_pairs.hpp"
#include "cyclemod/serialize.hpp"
#include "cyclemod/theta_decomp.hpp"

using namespace cyclemod;

namespace {

// exit codes: 0 ok, 1 domain error, 2 usage error, 3 not found
int exit_code(const std::string& status) {
    if (status == "ok") return 0;
    if (status == "not-found") return 3;
    return 1;
}

int severity(const std::string& status) {
    if (status == "ok") return 0;
    if (status == "not-found") return 1;
    return 2;
}

json error_payload(const std::string& type, const std::string& message) {
    return {{"status", "error"}, {"error", {{"type", type}, {"message", message}}}};
}

json with_status(const std::string& status, json body) {
    json out{{"status", status}};
    for (auto& [key, val] : body.items()) out[key] = val;
    return out;
}

// runs f and turns library exceptions into structured error payloads
json guarded(const std::function<json()>& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        return error_payload("parse", e.what());
    } catch (const PreconditionError& e) {
        return error_payload("precondition", e.what());
    } catch (const OverflowError& e) {
        return error_payload("overflow", e.what());
    } catch (const Error& e) {
        return error_payload("domain", e.what());
    } catch (const json::exception& e) {
        return error_payload("parse", e.what());
    }
}

struct Globals {
    int jobs = 1;
    bool pretty = false;
    std::size_t max_cycles = kDefaultCycleCap;
};

// one payload per file, computed on up to `jobs` threads, reported in input order
json over_files(const std::vector<std::string>& files, int jobs, const std::function<json(const std::string&)>& f) {
    std::vector<json> results(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++)
            results[i] = guarded([&] { return f(files[i]); });
    };
    int threads = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (files.size() == 1) return results[0];
    std::string worst = "ok";
    json arr = json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::string s = results[i].at("status");
        if (severity(s) > severity(worst)) worst = s;
        json entry{{"file", files[i]}};
        for (auto& [key, val] : results[i].items()) entry[key] = val;
        arr.push_back(entry);
    }
    return {{"status", worst}, {"results", arr}};
}

std::vector<Edge> parse_edge_spec(const std::vector<std::string>& items) {
    std::vector<Edge> out;
    for (const auto& item : items) {
        auto sep = item.find_first_of("-:");
        if (sep == std::string::npos) throw ParseError("edge \"" + item + "\" is not of the form a-b", 0);
        try {
            out.push_back(make_edge(std::stoi(item.substr(0, sep)), std::stoi(item.substr(sep + 1))));
        } catch (const std::logic_error&) {
            throw ParseError("edge \"" + item + "\" is not of the form a-b", 0);
        }
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

void print_summary(const json& j) {
    for (const auto& [key, val] : j.items())
        if (!val.is_structured()) std::cerr << key << ": " << val.dump() << '\n';
    if (j.contains("results"))
        for (const auto& r : j["results"]) std::cerr << r.value("file", "?") << ": " << r.value("status", "?") << '\n';
    if (j.contains("error")) std::cerr << "error: " << j["error"].value("message", "") << '\n';
}

json cmd_spectrum(const std::string& file, int k, int m, bool witnesses, std::size_t cap) {
    Graph g = read_graph_file(file);
    if (m >= 0) {
        if (m >= k) throw PreconditionError("need 0 <= m < k");
        auto c = has_cycle_mod(g, m, k, cap);
        json body{{"k", k}, {"m", m}, {"found", c.has_value()}};
        if (c) body["witness"] = *c;
        return with_status(c ? "ok" : "not-found", body);
    }
    auto s = residue_spectrum(g, k, cap);
    json body{{"k", k}, {"residues", s.residues}};
    if (witnesses) body["witnesses"] = to_json(s)["witnesses"];
    return with_status("ok", body);
}

json cmd_chords(const std::string& file, int k, const std::vector<int>& path, bool best_effort) {
    Graph g = read_graph_file(file);
    ChordInstance inst;
    inst.n = g.n();
    inst.path = path;
    std::set<Edge> on_path;
    for (auto e : path_edges(path)) on_path.insert(make_edge(e.first, e.second));
    for (auto e : g.edges())
        if (!on_path.count(e)) inst.chords.push_back(e);
    for (auto e : on_path)
        if (!g.has_edge(e.first, e.second)) throw PreconditionError("--path uses a non-edge");
    auto p = path_with_chords(inst, k, best_effort);
    json body{{"k", k},
              {"chords", inst.chords.size()},
              {"bound", chord_bound(k)},
              {"vertices", p.vertices},
              {"via", p.via},
              {"chord_count", p.chord_count},
              {"guaranteed", p.guaranteed},
              {"method", p.method},
              {"valid", validate_chord_path(inst, p)}};
    return with_status(p.chord_count >= k ? "ok" : "not-found", body);
}

json cmd_special(const std::string& file, int k, const std::vector<Edge>& S) {
    Graph g = read_graph_file(file);
    auto r = path_with_special_edges(g, S, k);
    json body{{"k", k},
              {"found", r.found},
              {"path", r.path},
              {"special_count", r.special_count},
              {"method", r.method},
              {"note", r.note},
              {"reductions", r.reductions}};
    return with_status(r.found ? "ok" : "not-found", body);
}

json cmd_necklace(const std::string& action, const std::string& file, int m, int k) {
    json w = read_json_file(file);
    KGoodCertificate cert = certificate_from_json(w);
    cert.k = k;
    Graph host = witness_host(w, cert);
    if (action == "validate") {
        auto rep = validate(cert, host);
        json body{{"kind", certificate_kind(cert)}, {"k", k}};
        body.update(to_json(rep));
        return with_status(rep.ok() ? "ok" : "error", body);
    }
    if (m < 0 || m >= k) throw PreconditionError("need 0 <= m < k");
    auto r = kgood_realize(host, cert, m, k);
    json body{{"kind", certificate_kind(cert)}, {"m", m}, {"k", k}};
    body.update(to_json(r));
    bool ok = is_cycle(host, r.cycle) && static_cast<int>(r.cycle.size()) % k == m;
    body["verified"] = ok;
    return with_status(ok ? "ok" : "error", body);
}

json cmd_pathpair(const std::string& file, int x1, int x2, int y, int z, int k) {
    Graph g = read_graph_file(file);
    if (y < 0) {
        auto p = find_pair_diff12(g, x1, x2);
        json body{{"x1", x1}, {"x2", x2}, {"found", p.has_value()}};
        if (p) body["pair"] = to_json(*p);
        return with_status(p ? "ok" : "not-found", body);
    }
    auto r = pair_or_kclose(g, x1, x2, y, z, k);
    json body{{"x1", x1}, {"x2", x2}, {"y", y}, {"z", z}, {"k", k}};
    if (auto* p = std::get_if<PathPair>(&r)) {
        body["outcome"] = "pair";
        body["pair"] = to_json(*p);
    } else {
        body["outcome"] = "k-close";
        body["paths"] = to_json(std::get<CloseDisjointPaths>(r));
    }
    return with_status("ok", body);
}

std::pair<int, int> farthest_pair(const Graph& g) {
    int best = -1, bu = 0, bv = 1;
    for (int a = 0; a < g.n(); ++a) {
        auto d = bfs_distances(g, a);
        for (int b = a + 1; b < g.n(); ++b)
            if (d[b] > best) best = d[b], bu = a, bv = b;
    }
    return {bu, bv};
}

json cmd_theta(const std::string& file, int u, int v, bool allow_2connected) {
    Graph g = read_graph_file(file);
    if (u < 0 || v < 0) std::tie(u, v) = farthest_pair(g);
    auto d = decompose(g, u, v, !allow_2connected);
    auto c = census(d);
    json ch = json::array();
    for (const auto& chain : chains(d)) ch.push_back({{"components", chain.components}, {"special", chain.special}});
    json body{{"u", u}, {"v", v}, {"theta_length", d.theta.total_length()}};
    body.update(to_json(d));
    body["chains"] = ch;
    body["census"] = to_json(c);
    return with_status("ok", body);
}

json cmd_kgood(const std::string& file, int k) {
    Graph g = read_graph_file(file);
    auto r = kgood_search(g, k);
    json body{{"k", k}, {"u", r.u}, {"v", r.v}, {"source", r.source}};
    body["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
    body["census"] = to_json(r.census);
    body["case_report"] = r.case_report;
    return with_status(r.certificate ? "ok" : "not-found", body);
}

json cmd_counterexample(int m, int k, int n, const std::string& out, const std::string& report, std::size_t cap) {
    auto r = build_counterexample(m, k, n, cap);
    json body = to_json(r);
    if (!out.empty()) write_text(out, emit_graph6(r.graph) + "\n");
    if (!report.empty()) write_text(report, with_status(r.certified ? "ok" : "error", body).dump(2) + "\n");
    return with_status(r.certified ? "ok" : "error", body);
}

std::string bounds_key(const std::string& name) {
    static const std::vector<std::pair<std::string, std::string>> keys = {
        {"18k^2", "18k2"},
        {"3k^4", "3k4"},
        {"2k", "2k"},
        {"162k^8", "162k8"},
        {"2^(4k^2)", "2^4k2"},
        {"8k", "8k"},
        {"21k^2+ceil(3k/2)", "21k2+ceil(3k/2)"},
        {"5700k^6", "5700k6"},
        {"5k", "5k"},
        {"10^9k^13*2^(9k^2)", "10^9k13*2^9k2"},
        {"2^(10^6k^16)", "2^10^6k16"},
    };
    for (const auto& [n, key] : keys)
        if (n == name) return key;
    return name;
}

json cmd_bounds(int k) {
    auto t = bounds(k);
    json body{{"k", k}};
    for (const auto& [name, val] : t.values) body[bounds_key(name)] = to_json(val);
    body["chain_checked"] = t.chain_checked;
    body["chain_holds"] = t.chain_holds;
    return with_status(t.chain_checked && !t.chain_holds ? "error" : "ok", body);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle lengths modulo k in cubic graphs"};
    app.require_subcommand(1);
    app.allow_extras(false);
    app.fallthrough();
    Globals gl;
    app.add_option("--jobs", gl.jobs, "threads used across input files")->check(CLI::PositiveNumber);
    app.add_flag("--pretty", gl.pretty, "indented JSON and a summary on stderr");
    app.add_option("--max-cycles", gl.max_cycles, "cycle enumeration cap");

    json result;
    std::function<json()> action;

    int k = 0, m = -1, n = 1;
    std::vector<std::string> files;
    std::string single;

    auto* spectrum = app.add_subcommand("spectrum", "residues of cycle lengths mod k");
    bool witnesses = false;
    spectrum->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    spectrum->add_option("--m", m)->check(CLI::NonNegativeNumber);
    spectrum->add_flag("--witnesses", witnesses);
    spectrum->add_option("files", files)->required()->check(CLI::ExistingFile);
    spectrum->callback([&] {
        action = [&] {
            return over_files(files, gl.jobs, [&](const std::string& f) {
                return cmd_spectrum(f, k, m, witnesses, gl.max_cycles);
            });
        };
    });

    auto* chords = app.add_subcommand("chords", "path through a Hamiltonian path using many chords");
    std::vector<int> path;
    bool best_effort = false;
    chords->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    chords->add_option("--path", path, "Hamiltonian path, comma separated")->required()->delimiter(',');
    chords->add_flag("--best-effort", best_effort);
    chords->add_option("file", single)->required()->check(CLI::ExistingFile);
    chords->callback([&] { action = [&] { return guarded([&] { return cmd_chords(single, k, path, best_effort); }); }; });

    auto* special = app.add_subcommand("special", "path through many special edges");
    std::vector<std::string> special_edges;
    special->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    special->add_option("--special", special_edges, "edges a-b, comma separated")->required()->delimiter(',');
    special->add_option("file", single)->required()->check(CLI::ExistingFile);
    special->callback([&] {
        action = [&] { return guarded([&] { return cmd_special(single, k, parse_edge_spec(special_edges)); }); };
    });

    auto* necklace = app.add_subcommand("necklace", "validate or realize a necklace witness");
    necklace->require_subcommand(1);
    for (const char* act : {"validate", "realize"}) {
        auto* sub = necklace->add_subcommand(act);
        sub->add_option("--k", k)->required()->check(CLI::PositiveNumber);
        auto* mo = sub->add_option("--m", m)->check(CLI::NonNegativeNumber);
        if (std::string(act) == "realize") mo->required();
        sub->add_option("witness", single)->required()->check(CLI::ExistingFile);
        std::string a = act;
        sub->callback([&, a] { action = [&, a] { return guarded([&] { return cmd_necklace(a, single, m, k); }); }; });
    }

    auto* pathpair = app.add_subcommand("pathpair", "x1-x2 paths with length difference 1 or 2");
    int x1 = -1, x2 = -1, y = -1, z = -1;
    pathpair->add_option("--x1", x1)->required()->check(CLI::NonNegativeNumber);
    pathpair->add_option("--x2", x2)->required()->check(CLI::NonNegativeNumber);
    auto* yo = pathpair->add_option("--y", y)->check(CLI::NonNegativeNumber);
    auto* zo = pathpair->add_option("--z", z)->check(CLI::NonNegativeNumber);
    auto* ko = pathpair->add_option("--k", k)->check(CLI::NonNegativeNumber);
    yo->needs(zo)->needs(ko);
    zo->needs(yo);
    ko->needs(yo);
    pathpair->add_option("file", single)->required()->check(CLI::ExistingFile);
    pathpair->callback([&] { action = [&] { return guarded([&] { return cmd_pathpair(single, x1, x2, y, z, k); }); }; });

    auto* theta = app.add_subcommand("theta", "shortest theta graph and decomposition of the rest");
    int u = -1, v = -1;
    bool allow2 = false;
    auto* uo = theta->add_option("--u", u)->check(CLI::NonNegativeNumber);
    auto* vo = theta->add_option("--v", v)->check(CLI::NonNegativeNumber);
    uo->needs(vo);
    vo->needs(uo);
    theta->add_flag("--allow-2connected", allow2);
    theta->add_option("files", files)->required()->check(CLI::ExistingFile);
    theta->callback([&] {
        action = [&] {
            return over_files(files, gl.jobs, [&](const std::string& f) { return cmd_theta(f, u, v, allow2); });
        };
    });

    auto* kgood = app.add_subcommand("kgood", "search for a k-good certificate");
    kgood->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    kgood->add_option("files", files)->required()->check(CLI::ExistingFile);
    kgood->callback([&] {
        action = [&] { return over_files(files, gl.jobs, [&](const std::string& f) { return cmd_kgood(f, k); }); };
    });

    auto* cex = app.add_subcommand("counterexample", "cubic 2-connected graph without cycles of length m mod k");
    std::string out_file, report_file;
    cex->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
    cex->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    cex->add_option("--min-n", n)->required()->check(CLI::PositiveNumber);
    cex->add_option("--out", out_file);
    cex->add_option("--report", report_file);
    cex->callback([&] {
        action = [&] {
            return guarded([&] { return cmd_counterexample(m, k, n, out_file, report_file, gl.max_cycles); });
        };
    });

    auto* bnd = app.add_subcommand("bounds", "the large-graph thresholds for k");
    bnd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    bnd->callback([&] { action = [&] { return guarded([&] { return cmd_bounds(k); }); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, std::cerr, std::cerr);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, std::cerr, std::cerr);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        std::cout << error_payload("usage", e.what()).dump() << '\n';
        return 2;
    }

    result = action();
    std::cout << (gl.pretty ? result.dump(2) : result.dump()) << '\n';
    if (gl.pretty) print_summary(result);
    return exit_code(result.at("status"));
}
