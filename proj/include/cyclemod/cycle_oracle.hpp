#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "cyclemod/graph.hpp"

namespace cyclemod {

constexpr std::size_t kDefaultCycleCap = 10'000'000;

struct CycleSet {
    std::vector<std::vector<int>> cycles;
    std::map<int, std::size_t> histogram;  // length -> count
};

struct ResidueSpectrum {
    int k = 1;
    std::vector<int> residues;
    std::map<int, std::vector<int>> witnesses;

    bool contains(int r) const;
};

struct PathLengths {
    std::vector<int> lengths;
    std::map<int, std::vector<int>> witnesses;
};

// Calls visit on every simple cycle once, starting at its smallest vertex with
// path[1] < path.back(). Return false from visit to stop early. Throws
// OverflowError when more than cap cycles would be visited.
std::size_t for_each_cycle(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit,
                           std::size_t cap = kDefaultCycleCap);

CycleSet enumerate_cycles(const Graph& g, std::size_t max_count = kDefaultCycleCap);
std::map<int, std::size_t> cycle_length_histogram(const Graph& g, std::size_t cap = kDefaultCycleCap);

ResidueSpectrum residue_spectrum(const Graph& g, int k, std::size_t cap = kDefaultCycleCap);
std::optional<std::vector<int>> has_cycle_mod(const Graph& g, int m, int k, std::size_t cap = kDefaultCycleCap);

PathLengths xy_path_lengths(const Graph& g, int x, int y, std::size_t cap = kDefaultCycleCap);

// Exact counts of cycles by length mod k, computed by a frontier dynamic
// program over an edge ordering. Counts saturate at UINT64_MAX.
struct ResidueCounts {
    int k = 1;
    std::vector<std::uint64_t> counts;
    std::map<int, std::vector<int>> witnesses;
    int frontier_width = 0;
};

ResidueCounts cycle_residue_counts(const Graph& g, int k);
ResidueSpectrum residue_spectrum_dp(const Graph& g, int k);
std::optional<std::vector<int>> has_cycle_mod_dp(const Graph& g, int m, int k);

}  // namespace cyclemod
