#pragma once

// Oracles for the tests. Deliberately naive: Floyd-Warshall distances and
// pairwise checks, sharing no code with the library beyond Graph storage.

#include <climits>
#include <random>
#include <utility>
#include <vector>

#include "packfold/graph.hpp"

namespace testing_support {

using packfold::Graph;

inline std::vector<std::vector<int>> floyd(const Graph& g) {
    const int n = g.vertex_count();
    const int inf = INT_MAX / 4;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

// Same color c means distance > s_c, checked over all pairs.
inline bool packing_ok(const Graph& g, const std::vector<int>& s, const std::vector<int>& colors) {
    auto d = floyd(g);
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (colors[u] < 1 || colors[u] > static_cast<int>(s.size())) return false;
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (colors[u] == colors[v] && d[u][v] <= s[colors[u] - 1]) return false;
    }
    return true;
}

// Erdos-Renyi graph, as an edge list for building Graph or other structures.
inline std::vector<std::pair<int, int>> random_edges(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return e;
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

}  // namespace testing_support
