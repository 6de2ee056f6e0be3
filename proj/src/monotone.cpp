#include "cyclemod/monotone.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace cyclemod {

namespace {

// best[i] = length of the longest strictly increasing run starting at i
std::vector<int> longest_from(const std::vector<long long>& seq, bool increasing) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> best(n);
    // tails[l] = best (largest when increasing) head value of a run of length l+1, scanning right to left
    std::vector<long long> tails;
    for (int i = n - 1; i >= 0; --i) {
        long long x = increasing ? -seq[i] : seq[i];
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        best[i] = static_cast<int>(it - tails.begin()) + 1;
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return best;
}

std::vector<int> greedy_witness(const std::vector<long long>& seq, const std::vector<int>& best, int len,
                                bool increasing) {
    std::vector<int> out;
    int need = len;
    int i = 0;
    const int n = static_cast<int>(seq.size());
    while (need > 0 && i < n) {
        bool fits = out.empty() || (increasing ? seq[i] > seq[out.back()] : seq[i] < seq[out.back()]);
        if (fits && best[i] >= need) {
            out.push_back(i);
            --need;
        }
        ++i;
    }
    return out;
}

}  // namespace

MonotoneWitness erdos_szekeres(const std::vector<long long>& seq, int r, int s) {
    if (r < 1 || s < 1) throw PreconditionError("r and s must be positive");
    std::set<long long> distinct(seq.begin(), seq.end());
    if (distinct.size() != seq.size()) throw PreconditionError("sequence values must be pairwise distinct");
    auto inc = longest_from(seq, true);
    if (*std::max_element(inc.begin(), inc.end()) >= r)
        return {greedy_witness(seq, inc, r, true), Direction::Increasing};
    auto dec = longest_from(seq, false);
    if (*std::max_element(dec.begin(), dec.end()) >= s)
        return {greedy_witness(seq, dec, s, false), Direction::Decreasing};
    // short sequences are still served when a witness happens to exist
    long long need = static_cast<long long>(r - 1) * (s - 1) + 1;
    throw PreconditionError("no monotone witness: sequence of length " + std::to_string(seq.size()) +
                            " is shorter than (r-1)(s-1)+1 = " + std::to_string(need));
}

bool validate_monotone(const std::vector<long long>& seq, const MonotoneWitness& w) {
    for (std::size_t i = 0; i < w.indices.size(); ++i) {
        if (w.indices[i] < 0 || w.indices[i] >= static_cast<int>(seq.size())) return false;
        if (i == 0) continue;
        if (w.indices[i] <= w.indices[i - 1]) return false;
        long long a = seq[w.indices[i - 1]], b = seq[w.indices[i]];
        if (w.direction == Direction::Increasing ? !(a < b) : !(a > b)) return false;
    }
    return true;
}

std::vector<std::vector<int>> path_system(const Graph& g, const std::vector<int>& S) {
    if (S.size() % 2) throw PreconditionError("path system needs an even number of terminals");
    if (S.empty()) return {};
    if (!is_connected(g)) throw PreconditionError("path system needs a connected graph");
    const int n = g.n();
    std::vector<char> term(n, 0);
    for (int s : S) {
        if (s < 0 || s >= n) throw PreconditionError("terminal out of range");
        if (term[s]) throw PreconditionError("duplicate terminal");
        term[s] = 1;
    }
    int root = S.front();
    std::vector<int> parent(n, -1), order;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        order.push_back(x);
        for (int y : g.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                parent[y] = x;
                q.push(y);
            }
    }
    // incoming[v]: partial paths (terminal ... v) handed up from the children of v
    std::vector<std::vector<std::vector<int>>> incoming(n);
    std::vector<std::vector<int>> paths;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::vector<int>> items;
        if (term[v]) items.push_back({v});
        for (auto& it2 : incoming[v]) items.push_back(std::move(it2));
        std::size_t i = 0;
        for (; i + 1 < items.size(); i += 2) {
            std::vector<int> p = items[i];
            for (auto r = items[i + 1].rbegin() + 1; r != items[i + 1].rend(); ++r) p.push_back(*r);
            paths.push_back(std::move(p));
        }
        if (i < items.size()) {
            std::vector<int> up = std::move(items[i]);
            if (parent[v] < 0) throw Error("unpaired terminal left at the root");
            up.push_back(parent[v]);
            incoming[parent[v]].push_back(std::move(up));
        }
    }
    return paths;
}

}  // namespace cyclemod
