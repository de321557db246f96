#pragma once

#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "mbg/common.hpp"

namespace mbg {

// Bipartite graph on sides A (size_a) and B (size_b), adjacency from A.
struct BipartiteGraph {
    int size_a = 0;
    int size_b = 0;
    std::vector<std::vector<int>> adj;  // adj[a] = neighbours in B

    BipartiteGraph(int a, int b) : size_a(a), size_b(b), adj(static_cast<std::size_t>(a)) {}

    void add_edge(int a, int b) { adj[static_cast<std::size_t>(a)].push_back(b); }
};

struct MatchingResult {
    int size = 0;
    std::vector<int> match_a;  // B-partner of each A vertex, -1 if unmatched
    std::vector<int> match_b;
};

// Hopcroft-Karp maximum matching.
inline MatchingResult max_matching(const BipartiteGraph& g) {
    const int INF = std::numeric_limits<int>::max();
    MatchingResult res;
    res.match_a.assign(static_cast<std::size_t>(g.size_a), -1);
    res.match_b.assign(static_cast<std::size_t>(g.size_b), -1);
    std::vector<int> dist(static_cast<std::size_t>(g.size_a));

    auto bfs = [&]() {
        std::queue<int> q;
        bool reachable_free = false;
        for (int a = 0; a < g.size_a; ++a) {
            if (res.match_a[static_cast<std::size_t>(a)] < 0) {
                dist[static_cast<std::size_t>(a)] = 0;
                q.push(a);
            } else {
                dist[static_cast<std::size_t>(a)] = INF;
            }
        }
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b : g.adj[static_cast<std::size_t>(a)]) {
                int a2 = res.match_b[static_cast<std::size_t>(b)];
                if (a2 < 0) {
                    reachable_free = true;
                } else if (dist[static_cast<std::size_t>(a2)] == INF) {
                    dist[static_cast<std::size_t>(a2)] = dist[static_cast<std::size_t>(a)] + 1;
                    q.push(a2);
                }
            }
        }
        return reachable_free;
    };

    std::vector<char> visited;
    auto dfs = [&](auto&& self, int a) -> bool {
        visited[static_cast<std::size_t>(a)] = 1;
        for (int b : g.adj[static_cast<std::size_t>(a)]) {
            int a2 = res.match_b[static_cast<std::size_t>(b)];
            if (a2 < 0 || (!visited[static_cast<std::size_t>(a2)] &&
                           dist[static_cast<std::size_t>(a2)] == dist[static_cast<std::size_t>(a)] + 1 &&
                           self(self, a2))) {
                res.match_a[static_cast<std::size_t>(a)] = b;
                res.match_b[static_cast<std::size_t>(b)] = a;
                return true;
            }
        }
        return false;
    };

    while (bfs()) {
        visited.assign(static_cast<std::size_t>(g.size_a), 0);
        for (int a = 0; a < g.size_a; ++a)
            if (res.match_a[static_cast<std::size_t>(a)] < 0 && dfs(dfs, a)) ++res.size;
    }
    return res;
}

// A set S of A-vertices with |N(S)| < |S|, or nullopt when A saturates.
// Witness via Koenig: unmatched A-vertices plus everything A-side reachable
// by alternating paths.
inline std::optional<std::vector<int>> hall_violator(const BipartiteGraph& g) {
    MatchingResult m = max_matching(g);
    if (m.size == g.size_a) return std::nullopt;
    std::vector<char> in_s(static_cast<std::size_t>(g.size_a), 0);
    std::vector<char> in_t(static_cast<std::size_t>(g.size_b), 0);
    std::queue<int> q;
    for (int a = 0; a < g.size_a; ++a)
        if (m.match_a[static_cast<std::size_t>(a)] < 0) {
            in_s[static_cast<std::size_t>(a)] = 1;
            q.push(a);
        }
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b : g.adj[static_cast<std::size_t>(a)]) {
            if (in_t[static_cast<std::size_t>(b)]) continue;
            in_t[static_cast<std::size_t>(b)] = 1;
            int a2 = m.match_b[static_cast<std::size_t>(b)];
            if (a2 >= 0 && !in_s[static_cast<std::size_t>(a2)]) {
                in_s[static_cast<std::size_t>(a2)] = 1;
                q.push(a2);
            }
        }
    }
    std::vector<int> s;
    for (int a = 0; a < g.size_a; ++a)
        if (in_s[static_cast<std::size_t>(a)]) s.push_back(a);
    // |N(S)| = |T| here, and every T-vertex is matched into S.
    return s;
}

}  // namespace mbg
