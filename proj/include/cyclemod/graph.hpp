#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclemod {

// Base class for every error the library raises on bad input or failed hypotheses.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

    static Graph from_edges(int n, const std::vector<Edge>& edges);
    static Graph from_adjacency(std::vector<std::vector<int>> adj);

    int n() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;
    std::size_t edge_count() const;
    std::vector<Edge> edges() const;
    int max_degree() const;

    int add_vertex();
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // throws Error if the adjacency violates simplicity or symmetry
    void validate() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<int>> adj_;
};

// multigraph as an edge list; parallel edges allowed, loops rejected
struct MultiGraph {
    int n = 0;
    std::vector<Edge> edges;

    int degree(int v) const;
    void validate() const;
};

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;        // sorted vertex sets
    std::vector<std::vector<Edge>> block_edges;  // edges of each block
    std::vector<int> cut_vertices;               // sorted
    std::vector<std::vector<int>> block_cuts;    // cut vertices contained in each block
    std::vector<bool> endblock;

    int block_tree_degree(int b) const { return static_cast<int>(block_cuts[b].size()); }
};

struct EdgeCut {
    Edge first;
    Edge second;
    std::vector<std::vector<int>> sides;  // components after removing both edges
    bool non_trivial = false;
};

Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);
Graph parse_edge_list_json(const std::string& text);
std::string emit_edge_list_json(const Graph& g);
// reads graph6 or a JSON edge list depending on content
Graph read_graph_file(const std::string& path);

BlockDecomposition blocks(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
std::vector<int> component_labels(const Graph& g, const std::vector<bool>& removed = {});

int local_connectivity(const Graph& g, int s, int t, int cap);
int connectivity(const Graph& g);
bool is_k_connected(const Graph& g, int k);
inline bool is_2_connected(const Graph& g) { return is_k_connected(g, 2); }
inline bool is_3_connected(const Graph& g) { return is_k_connected(g, 3); }

std::vector<EdgeCut> two_edge_cuts(const Graph& g);

std::vector<int> bfs_distances(const Graph& g, int s);
int distance(const Graph& g, int u, int v);
int diameter(const Graph& g);
std::vector<int> shortest_path(const Graph& g, int u, int v, const std::vector<bool>& allowed = {});

// subgraph induced on `keep`; map[i] is the original id of new vertex i
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep, std::vector<int>* map = nullptr);

bool is_path(const Graph& g, const std::vector<int>& p);
bool is_cycle(const Graph& g, const std::vector<int>& c);
std::vector<Edge> path_edges(const std::vector<int>& p);
std::vector<Edge> cycle_edges(const std::vector<int>& c);

bool is_cubic(const Graph& g);

}  // namespace cyclemod
