// oracle.hpp — independent reference helpers used only by tests. Distances go
// through Floyd-Warshall and graph generation through labeled edge-subset
// enumeration, so nothing here shares a code path with the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ecix/graph.hpp"

namespace oracle {

inline constexpr int kFar = 1 << 20;

// All-pairs distances by Floyd-Warshall; kFar for unreachable pairs.
inline std::vector<std::vector<int>> fw_distances(const ecix::Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, kFar));
    for (int v = 0; v < n; ++v) dist[v][v] = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) dist[u][v] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
    return dist;
}

inline bool fw_connected(const ecix::Graph& g) {
    const auto dist = fw_distances(g);
    for (int v = 0; v < g.order(); ++v)
        if (dist[0][v] >= kFar) return false;
    return true;
}

// ECI from Floyd-Warshall distances.
inline std::uint64_t fw_eci(const ecix::Graph& g) {
    const auto dist = fw_distances(g);
    std::uint64_t total = 0;
    for (int v = 0; v < g.order(); ++v) {
        int ecc = 0;
        for (int u = 0; u < g.order(); ++u) ecc = std::max(ecc, dist[v][u]);
        total += static_cast<std::uint64_t>(g.degree(v)) * static_cast<std::uint64_t>(ecc);
    }
    return total;
}

// Visit every labeled graph on n vertices (all 2^C(n,2) edge subsets).
template <class F>
void for_each_labeled_graph(int n, F&& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::uint64_t limit = 1ull << pairs.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) edges.push_back(pairs[b]);
        fn(ecix::Graph::from_edges(n, edges));
    }
}

inline ecix::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return ecix::Graph::from_edges(n, edges);
}

inline ecix::Graph permuted(std::mt19937& rng, const ecix::Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) edges.emplace_back(perm[i], perm[j]);
    return ecix::Graph::from_edges(n, edges);
}

}  // namespace oracle
