#include "ecix/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "ecix/canonical.hpp"
#include "ecix/graph6.hpp"

namespace ecix {

namespace {

// Number of graphs of each order (isomorphism classes, connected or not),
// used for cost estimates in budget refusals.
constexpr std::array<const char*, 13> kAllGraphCounts = {
    "0", "1", "2", "4", "11", "34", "156", "1044", "12346", "274668", "12005168", "1018997864",
    "165091172592"};

bool load_env_budget(int& out) {
    const char* raw = std::getenv("ECIX_BUDGET");
    if (raw == nullptr || *raw == '\0') return false;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || value < 1 || value > 64) return false;
    out = static_cast<int>(value);
    return true;
}

struct OrderlyWalker {
    int target = 0;
    std::array<std::uint64_t, 64> rows{};
    std::function<void(const std::uint64_t*, int)> visit;

    void grow(int k) {
        if (k == target) {
            visit(rows.data(), k);
            return;
        }
        const std::uint64_t limit = 1ull << k;
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            rows[k] = mask;
            std::uint64_t bits = mask;
            while (bits) {
                rows[std::countr_zero(bits)] |= 1ull << k;
                bits &= bits - 1;
            }
            if (detail::min_colcode_labeled(rows.data(), k + 1)) grow(k + 1);
            bits = mask;
            while (bits) {
                rows[std::countr_zero(bits)] &= ~(1ull << k);
                bits &= bits - 1;
            }
        }
        rows[k] = 0;
    }
};

bool rows_connected(const std::uint64_t* rows, int n) {
    const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    std::uint64_t reached = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t bits = frontier;
        while (bits) {
            next |= rows[std::countr_zero(bits)];
            bits &= bits - 1;
        }
        frontier = next & ~reached;
        reached |= frontier;
    }
    return reached == all;
}

bool rows_match(const ClassFilter& filter, const std::uint64_t* rows, int n) {
    if (filter.edges) {
        std::int64_t deg_sum = 0;
        for (int v = 0; v < n; ++v) deg_sum += std::popcount(rows[v]);
        if (deg_sum / 2 != *filter.edges) return false;
    }
    if (filter.pending) {
        int pending = 0;
        for (int v = 0; v < n; ++v)
            if (std::popcount(rows[v]) == 1) ++pending;
        if (pending != *filter.pending) return false;
    }
    if (filter.dominating != DominatingFilter::Any) {
        int dominating = 0;
        for (int v = 0; v < n; ++v)
            if (std::popcount(rows[v]) == n - 1) ++dominating;
        switch (filter.dominating) {
            case DominatingFilter::Exactly0:
                if (dominating != 0) return false;
                break;
            case DominatingFilter::Exactly1:
                if (dominating != 1) return false;
                break;
            case DominatingFilter::AtLeast2:
                if (dominating < 2) return false;
                break;
            case DominatingFilter::Any:
                break;
        }
    }
    return true;
}

}  // namespace

void ClassFilter::validate() const {
    if (n < 1) throw std::invalid_argument("class filter requires n >= 1");
    if (pending && (*pending < 0 || *pending > n - 1))
        throw std::invalid_argument("pending count must lie in 0..n-1");
    if (edges) {
        const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
        if (*edges < n - 1 || *edges > max_edges)
            throw std::invalid_argument("edge count must lie in n-1..n(n-1)/2 for a connected class");
    }
}

bool ClassFilter::matches(const Graph& g) const {
    if (g.order() != n) return false;
    if (edges && g.edge_count() != *edges) return false;
    if (pending && pending_count(g) != *pending) return false;
    switch (dominating) {
        case DominatingFilter::Any: return true;
        case DominatingFilter::Exactly0: return dominating_count(g) == 0;
        case DominatingFilter::Exactly1: return dominating_count(g) == 1;
        case DominatingFilter::AtLeast2: return dominating_count(g) >= 2;
    }
    return true;
}

int enumeration_budget() {
    int value = 9;
    load_env_budget(value);
    return value;
}

namespace detail {

std::size_t walk_subtree_count(const ClassFilter& filter, const EnumOptions& options) {
    filter.validate();
    if (std::max(1, options.jobs) == 1 || filter.n <= 3) return 1;
    const int root_level = std::max(1, std::min(7, filter.n - 1));
    std::size_t count = 0;
    OrderlyWalker seeder;
    seeder.target = root_level;
    seeder.visit = [&](const std::uint64_t*, int) { ++count; };
    seeder.grow(1);
    return count;
}

void walk_connected(const ClassFilter& filter, const EnumOptions& options,
                    const std::function<void(std::size_t, const Graph&)>& consume) {
    filter.validate();
    const int budget = options.budget.value_or(enumeration_budget());
    if (filter.n > budget) {
        const std::string cost = filter.n < static_cast<int>(kAllGraphCounts.size())
                                     ? std::string(kAllGraphCounts[static_cast<std::size_t>(filter.n)])
                                     : std::string("more than 10^11");
        throw budget_error("order " + std::to_string(filter.n) + " exceeds the enumeration budget " +
                           std::to_string(budget) + " (set ECIX_BUDGET to raise); the walk would visit about " +
                           cost + " isomorphism classes");
    }
    const int n = filter.n;

    const auto emit = [&](std::size_t subtree, const std::uint64_t* rows) {
        if (!rows_connected(rows, n) || !rows_match(filter, rows, n)) return;
        consume(subtree, Graph::from_bitrows(n, std::vector<std::uint64_t>(rows, rows + n)));
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || n <= 3) {
        OrderlyWalker walker;
        walker.target = n;
        walker.visit = [&](const std::uint64_t* rows, int) { emit(0, rows); };
        walker.grow(1);
        return;
    }

    // Parallel mode: materialize the canonical graphs at a shallow level as
    // independent subtree roots, then expand them on a thread pool. Each
    // subtree index is handled by exactly one thread.
    const int root_level = std::max(1, std::min(7, n - 1));
    std::vector<std::vector<std::uint64_t>> roots;
    {
        OrderlyWalker seeder;
        seeder.target = root_level;
        seeder.visit = [&](const std::uint64_t* rows, int k) { roots.emplace_back(rows, rows + k); };
        seeder.grow(1);
    }

    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        OrderlyWalker walker;
        walker.target = n;
        for (std::size_t index = next.fetch_add(1); index < roots.size(); index = next.fetch_add(1)) {
            walker.rows.fill(0);
            std::copy(roots[index].begin(), roots[index].end(), walker.rows.begin());
            walker.visit = [&, index](const std::uint64_t* rows, int) { emit(index, rows); };
            walker.grow(root_level);
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min<int>(jobs, static_cast<int>(roots.size()));
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
}

// Runs the walk with per-subtree buffers sized up front, then replays them in
// subtree order, so consumers see one deterministic sequence.
void walk_buffered(const ClassFilter& filter, const EnumOptions& options,
                   const std::function<Graph(const Graph&)>& transform,
                   const std::function<void(const Graph&)>& fn) {
    const std::size_t subtrees = walk_subtree_count(filter, options);
    if (subtrees == 1) {
        walk_connected(filter, options, [&](std::size_t, const Graph& g) { fn(transform(g)); });
        return;
    }
    std::vector<std::vector<Graph>> buffers(subtrees);
    walk_connected(filter, options,
                   [&](std::size_t subtree, const Graph& g) { buffers[subtree].push_back(transform(g)); });
    for (const auto& buffer : buffers)
        for (const auto& g : buffer) fn(g);
}

}  // namespace detail

void for_each_connected(const ClassFilter& filter, const std::function<void(const Graph&)>& fn,
                        const EnumOptions& options) {
    detail::walk_buffered(filter, options, [](const Graph& g) { return canonical_form(g); }, fn);
}

std::vector<Graph> enumerate_connected(const ClassFilter& filter, const EnumOptions& options) {
    std::vector<Graph> out;
    for_each_connected(filter, [&](const Graph& g) { out.push_back(g); }, options);
    // emitted graphs are already canonical, so their graph6 is the key
    std::vector<std::pair<CanonicalKey, std::size_t>> order;
    order.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        order.emplace_back(CanonicalKey{encode_graph6(out[i])}, i);
    std::sort(order.begin(), order.end());
    std::vector<Graph> sorted;
    sorted.reserve(out.size());
    for (const auto& [key, index] : order) sorted.push_back(std::move(out[index]));
    return sorted;
}

std::uint64_t count_connected(const ClassFilter& filter, const EnumOptions& options) {
    std::atomic<std::uint64_t> total{0};
    detail::walk_connected(filter, options,
                           [&](std::size_t, const Graph&) { total.fetch_add(1, std::memory_order_relaxed); });
    return total.load();
}

}  // namespace ecix
