#include "ecix/graph.hpp"

#include <queue>
#include <string>

namespace ecix {

Graph::Graph(int n) : n_(n), stride_((n + 63) / 64) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    if (n > kMaxOrder)
        throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds supported maximum " +
                                    std::to_string(kMaxOrder));
    bits_.assign(static_cast<std::size_t>(n_) * stride_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") is not allowed in a simple graph");
        if (g.adjacent(u, v)) continue;
        g.bits_[static_cast<std::size_t>(u) * g.stride_ + (v >> 6)] |= 1ull << (v & 63);
        g.bits_[static_cast<std::size_t>(v) * g.stride_ + (u >> 6)] |= 1ull << (u & 63);
        ++g.m_;
    }
    return g;
}

Graph Graph::from_bitrows(int n, const std::vector<std::uint64_t>& rows) {
    if (n < 1 || n > 64) throw std::invalid_argument("from_bitrows requires 1 <= n <= 64");
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("from_bitrows: row count != n");
    const std::uint64_t valid = n == 64 ? ~0ull : (1ull << n) - 1;
    Graph g(n);
    std::int64_t deg_sum = 0;
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~valid) throw std::invalid_argument("from_bitrows: bits beyond n-1 set");
        if (rows[v] >> v & 1) throw std::invalid_argument("from_bitrows: diagonal bit set");
        g.bits_[v] = rows[v];
        deg_sum += std::popcount(rows[v]);
    }
    for (int v = 0; v < n; ++v) {
        std::uint64_t row = rows[v];
        while (row) {
            const int u = std::countr_zero(row);
            row &= row - 1;
            if (!(rows[u] >> v & 1)) throw std::invalid_argument("from_bitrows: asymmetric adjacency");
        }
    }
    g.m_ = deg_sum / 2;
    return g;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.order();
    if (source < 0 || source >= n)
        throw std::invalid_argument("bfs source " + std::to_string(source) + " out of range 0.." +
                                    std::to_string(n - 1));
    std::vector<int> dist(n, kUnreachable);
    dist[source] = 0;
    std::queue<int> queue;
    queue.push(source);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        g.for_each_neighbor(v, [&](int u) {
            if (dist[u] == kUnreachable) {
                dist[u] = dist[v] + 1;
                queue.push(u);
            }
        });
    }
    return dist;
}

bool is_connected(const Graph& g) {
    const auto dist = bfs_distances(g, 0);
    for (int d : dist)
        if (d == kUnreachable) return false;
    return true;
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> out(g.order());
    for (int v = 0; v < g.order(); ++v) out[v] = g.degree(v);
    return out;
}

std::vector<int> eccentricities(const Graph& g) {
    const int n = g.order();
    if (!is_connected(g)) throw disconnected_error("eccentricity is undefined on a disconnected graph");
    std::vector<int> ecc(n, 0);
    for (int v = 0; v < n; ++v) {
        int far = 0;
        for (int d : bfs_distances(g, v)) far = std::max(far, d);
        ecc[v] = far;
    }
    return ecc;
}

std::uint64_t eci(const Graph& g) {
    const auto ecc = eccentricities(g);
    std::uint64_t total = 0;
    for (int v = 0; v < g.order(); ++v)
        total += static_cast<std::uint64_t>(g.degree(v)) * static_cast<std::uint64_t>(ecc[v]);
    return total;
}

EciReport eci_report(const Graph& g) {
    const auto ecc = eccentricities(g);
    EciReport report;
    report.rows.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) {
        const int d = g.degree(v);
        const std::uint64_t product = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(ecc[v]);
        report.rows.push_back({v, d, ecc[v], product});
        report.total += product;
    }
    return report;
}

int diameter(const Graph& g) {
    int best = 0;
    for (int e : eccentricities(g)) best = std::max(best, e);
    return best;
}

int pending_count(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) ++count;
    return count;
}

int dominating_count(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) ++count;
    return count;
}

}  // namespace ecix
