#include "cyclemod/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace cyclemod {

int MaxFlow::add_arc(int from, int to, int cap) {
    g_[from].push_back({to, cap, static_cast<int>(g_[to].size())});
    g_[to].push_back({from, 0, static_cast<int>(g_[from].size()) - 1});
    return static_cast<int>(g_[from].size()) - 1;
}

int MaxFlow::flow_on(int from, int idx) const {
    const Arc& a = g_[from][idx];
    return g_[a.to][a.rev].cap;
}

int MaxFlow::run(int s, int t, int limit) {
    int total = 0;
    const int n = static_cast<int>(g_.size());
    while (total < limit) {
        std::vector<int> prev_node(n, -1), prev_arc(n, -1);
        std::queue<int> q;
        q.push(s);
        prev_node[s] = s;
        while (!q.empty() && prev_node[t] < 0) {
            int x = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(g_[x].size()); ++i) {
                const Arc& a = g_[x][i];
                if (a.cap > 0 && prev_node[a.to] < 0) {
                    prev_node[a.to] = x;
                    prev_arc[a.to] = i;
                    q.push(a.to);
                }
            }
        }
        if (prev_node[t] < 0) break;
        int push = limit - total;
        for (int v = t; v != s; v = prev_node[v]) push = std::min(push, g_[prev_node[v]][prev_arc[v]].cap);
        for (int v = t; v != s; v = prev_node[v]) {
            Arc& a = g_[prev_node[v]][prev_arc[v]];
            a.cap -= push;
            g_[v][a.rev].cap += push;
        }
        total += push;
    }
    return total;
}

void MinCostFlow::add_arc(int from, int to, int cap, long long cost) {
    g_[from].push_back({to, cap, cost, static_cast<int>(g_[to].size())});
    g_[to].push_back({from, 0, -cost, static_cast<int>(g_[from].size()) - 1});
}

std::pair<int, long long> MinCostFlow::run(int s, int t, int max_flow) {
    const long long inf = std::numeric_limits<long long>::max() / 4;
    const int n = static_cast<int>(g_.size());
    int flow = 0;
    long long cost = 0;
    while (flow < max_flow) {
        std::vector<long long> dist(n, inf);
        std::vector<int> prev_node(n, -1), prev_arc(n, -1);
        std::vector<bool> inq(n, false);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            inq[x] = false;
            for (int i = 0; i < static_cast<int>(g_[x].size()); ++i) {
                const Arc& a = g_[x][i];
                if (a.cap > 0 && dist[x] + a.cost < dist[a.to]) {
                    dist[a.to] = dist[x] + a.cost;
                    prev_node[a.to] = x;
                    prev_arc[a.to] = i;
                    if (!inq[a.to]) {
                        inq[a.to] = true;
                        q.push(a.to);
                    }
                }
            }
        }
        if (dist[t] >= inf) break;
        int push = max_flow - flow;
        for (int v = t; v != s; v = prev_node[v]) push = std::min(push, g_[prev_node[v]][prev_arc[v]].cap);
        for (int v = t; v != s; v = prev_node[v]) {
            Arc& a = g_[prev_node[v]][prev_arc[v]];
            a.cap -= push;
            g_[v][a.rev].cap += push;
        }
        flow += push;
        cost += push * dist[t];
    }
    return {flow, cost};
}

}  // namespace cyclemod
