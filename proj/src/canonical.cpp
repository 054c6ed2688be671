#include "ecix/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "ecix/graph6.hpp"

namespace ecix {

namespace {

struct SmallGraph {
    int n = 0;
    std::array<std::uint64_t, 64> adj{};
};

SmallGraph to_small(const Graph& g) {
    if (g.order() > 64) throw std::invalid_argument("canonical labeling supports order <= 64 only");
    SmallGraph s;
    s.n = g.order();
    for (int v = 0; v < s.n; ++v) s.adj[v] = g.row64(v);
    return s;
}

// Swapping u and v (fixing everything else) is an automorphism iff their
// neighborhoods agree outside {u,v}.
bool swappable(const SmallGraph& g, int u, int v) {
    return (g.adj[u] & ~(1ull << v)) == (g.adj[v] & ~(1ull << u));
}

using Cells = std::vector<std::vector<int>>;

std::uint64_t cell_mask(const std::vector<int>& cell) {
    std::uint64_t mask = 0;
    for (int v : cell) mask |= 1ull << v;
    return mask;
}

// Split cells by neighbor counts against every cell until stable. Sub-cells
// replace their parent in ascending count order, so the resulting ordered
// partition depends only on the isomorphism type.
void refine(const SmallGraph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            const std::uint64_t splitter = cell_mask(cells[s]);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                auto& cell = cells[c];
                if (cell.size() < 2) continue;
                const int first = std::popcount(g.adj[cell[0]] & splitter);
                bool uniform = true;
                for (std::size_t t = 1; t < cell.size(); ++t)
                    if (std::popcount(g.adj[cell[t]] & splitter) != first) {
                        uniform = false;
                        break;
                    }
                if (uniform) continue;
                std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) {
                    return std::popcount(g.adj[a] & splitter) < std::popcount(g.adj[b] & splitter);
                });
                Cells pieces;
                std::size_t start = 0;
                for (std::size_t t = 1; t <= cell.size(); ++t) {
                    if (t == cell.size() || std::popcount(g.adj[cell[t]] & splitter) !=
                                                std::popcount(g.adj[cell[start]] & splitter)) {
                        pieces.emplace_back(cell.begin() + start, cell.begin() + t);
                        start = t;
                    }
                }
                cells.erase(cells.begin() + c);
                cells.insert(cells.begin() + c, pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

using Code = std::vector<std::uint64_t>;

// Upper-triangle bits in row-major order, packed big-endian.
Code row_major_code(const SmallGraph& g, const std::vector<int>& perm) {
    const int n = g.n;
    Code code((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t row = g.adj[perm[i]];
        for (int j = i + 1; j < n; ++j, ++idx)
            if (row >> perm[j] & 1) code[idx >> 6] |= 0x8000000000000000ull >> (idx & 63);
    }
    return code;
}

struct CanonSearch {
    const SmallGraph& g;
    Code best;
    std::vector<int> best_perm;
    bool has_best = false;

    explicit CanonSearch(const SmallGraph& graph) : g(graph) {}

    void run() {
        Cells cells(1);
        cells[0].resize(g.n);
        for (int v = 0; v < g.n; ++v) cells[0][v] = v;
        refine(g, cells);
        descend(cells);
    }

    void descend(const Cells& cells) {
        int target = -1;
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                target = static_cast<int>(c);
                break;
            }
        if (target < 0) {
            std::vector<int> perm(g.n);
            for (int i = 0; i < g.n; ++i) perm[i] = cells[i][0];
            Code code = row_major_code(g, perm);
            if (!has_best || code < best) {
                best = std::move(code);
                best_perm = std::move(perm);
                has_best = true;
            }
            return;
        }
        // One branch per pairwise-interchangeable class of the target cell;
        // branches related by a swap automorphism yield identical codes.
        std::vector<int> tried;
        for (int v : cells[static_cast<std::size_t>(target)]) {
            bool duplicate = false;
            for (int u : tried)
                if (swappable(g, u, v)) {
                    duplicate = true;
                    break;
                }
            if (duplicate) continue;
            tried.push_back(v);
            Cells child = cells;
            auto& cell = child[static_cast<std::size_t>(target)];
            cell.erase(std::find(cell.begin(), cell.end(), v));
            child.insert(child.begin() + target, {v});
            refine(g, child);
            descend(child);
        }
    }
};

}  // namespace

Graph canonical_form(const Graph& g) {
    const SmallGraph s = to_small(g);
    CanonSearch search(s);
    search.run();
    const auto& perm = search.best_perm;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(s.n), 0);
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (i != j && (s.adj[perm[i]] >> perm[j] & 1)) rows[i] |= 1ull << j;
    return Graph::from_bitrows(s.n, rows);
}

CanonicalKey canonical_key(const Graph& g) { return CanonicalKey{encode_graph6(canonical_form(g))}; }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

namespace detail {

namespace {

struct ColSearch {
    const std::uint64_t* adj;
    int n;
    std::array<std::uint64_t, 64> target{};
    std::array<int, 64> placed{};
    std::uint64_t used = 0;
    bool found_smaller = false;

    bool swappable(int u, int v) const {
        return (adj[u] & ~(1ull << v)) == (adj[v] & ~(1ull << u));
    }

    std::uint64_t column_of(int v, int pos) const {
        std::uint64_t value = 0;
        for (int t = 0; t < pos; ++t) value = value << 1 | (adj[v] >> placed[t] & 1);
        return value;
    }

    void dfs(int pos) {
        if (found_smaller || pos == n) return;
        int equal[64];
        int count = 0;
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            const std::uint64_t column = column_of(v, pos);
            if (column < target[pos]) {
                found_smaller = true;
                return;
            }
            if (column == target[pos]) equal[count++] = v;
        }
        int tried[64];
        int tried_count = 0;
        for (int idx = 0; idx < count && !found_smaller; ++idx) {
            const int v = equal[idx];
            bool duplicate = false;
            for (int t = 0; t < tried_count; ++t)
                if (swappable(tried[t], v)) {
                    duplicate = true;
                    break;
                }
            if (duplicate) continue;
            tried[tried_count++] = v;
            placed[pos] = v;
            used |= 1ull << v;
            dfs(pos + 1);
            used &= ~(1ull << v);
        }
    }
};

}  // namespace

bool min_colcode_labeled(const std::uint64_t* rows, int n) {
    ColSearch search;
    search.adj = rows;
    search.n = n;
    for (int j = 0; j < n; ++j) {
        std::uint64_t value = 0;
        for (int t = 0; t < j; ++t) value = value << 1 | (rows[j] >> t & 1);
        search.target[j] = value;
    }
    search.dfs(0);
    return !search.found_smaller;
}

}  // namespace detail

}  // namespace ecix
