// graph.hpp — immutable simple undirected graph with bitset adjacency rows.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ecix {

// Marker for vertices in another component in bfs_distances output.
inline constexpr int kUnreachable = -1;

// Order cap; keeps every deg(v)*ecc(v) sum well inside 64 bits.
inline constexpr int kMaxOrder = 1'000'000;

// Thrown by eccentricity-dependent operations on disconnected input.
struct disconnected_error : std::domain_error {
    using std::domain_error::domain_error;
};

class Graph {
  public:
    // Vertices are 0..n-1. Duplicate pairs collapse to one edge; self-loops
    // and out-of-range endpoints are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Assemble from per-vertex adjacency masks (order <= 64). Rows must be
    // symmetric with a zero diagonal.
    static Graph from_bitrows(int n, const std::vector<std::uint64_t>& rows);

    int order() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const {
        const std::size_t base = static_cast<std::size_t>(v) * stride_;
        int d = 0;
        for (int w = 0; w < stride_; ++w) d += std::popcount(bits_[base + w]);
        return d;
    }

    // Adjacency mask of v; only meaningful while order() <= 64.
    std::uint64_t row64(int v) const { return bits_[static_cast<std::size_t>(v) * stride_]; }

    template <class F>
    void for_each_neighbor(int v, F&& f) const {
        const std::size_t base = static_cast<std::size_t>(v) * stride_;
        for (int w = 0; w < stride_; ++w) {
            std::uint64_t word = bits_[base + w];
            while (word) {
                f((w << 6) | std::countr_zero(word));
                word &= word - 1;
            }
        }
    }

    bool operator==(const Graph&) const = default;

  private:
    explicit Graph(int n);

    int n_ = 0;
    int stride_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Per-vertex decomposition of the eccentric connectivity index.
struct EciReport {
    struct Row {
        int vertex;
        int degree;
        int eccentricity;
        std::uint64_t product;
    };
    std::vector<Row> rows;
    std::uint64_t total = 0;
};

// Shortest-path distances (edge counts) from source; kUnreachable marks
// vertices in another component.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);

std::vector<int> degrees(const Graph& g);

// The following require connected input and throw disconnected_error otherwise.
std::vector<int> eccentricities(const Graph& g);
std::uint64_t eci(const Graph& g);
EciReport eci_report(const Graph& g);
int diameter(const Graph& g);

int pending_count(const Graph& g);     // vertices of degree 1
int dominating_count(const Graph& g);  // vertices of degree n-1

}  // namespace ecix
