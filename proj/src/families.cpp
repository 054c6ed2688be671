#include "ecix/families.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ecix {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

using EdgeList = std::vector<std::pair<int, int>>;

void add_clique(EdgeList& edges, int from, int to) {
    for (int i = from; i < to; ++i)
        for (int j = i + 1; j < to; ++j) edges.emplace_back(i, j);
}

}  // namespace

FamilySpec FamilySpec::complete(int n) {
    require(n >= 1, "K_n requires n >= 1");
    return {Family::Complete, n};
}

FamilySpec FamilySpec::path(int n) {
    require(n >= 1, "P_n requires n >= 1");
    return {Family::Path, n};
}

FamilySpec FamilySpec::cycle(int n) {
    require(n >= 3, "C_n requires n >= 3");
    return {Family::Cycle, n};
}

FamilySpec FamilySpec::wheel(int n) {
    // W_4 = K_4 is degenerate but permitted.
    require(n >= 4, "W_n requires n >= 4");
    return {Family::Wheel, n};
}

FamilySpec FamilySpec::matching_reduced(int n) {
    require(n >= 4, "M_n requires n >= 4 to stay connected");
    return {Family::MatchingReduced, n};
}

FamilySpec FamilySpec::complete_split(int n, int x) {
    require(n >= 2, "S_{n,x} requires n >= 2");
    require(x >= 1 && x <= n - 1, "S_{n,x} requires 1 <= x <= n-1");
    FamilySpec spec{Family::CompleteSplit, n};
    spec.x = x;
    return spec;
}

FamilySpec FamilySpec::pendant_star(int n, int p) {
    require(n >= 4, "H_{n,p} requires n >= 4");
    require(p >= 0 && p <= n - 3, "H_{n,p} requires 0 <= p <= n-3");
    FamilySpec spec{Family::PendantStar, n};
    spec.p = p;
    return spec;
}

FamilySpec FamilySpec::clique_path(int n, int diameter) {
    require(diameter >= 2 && diameter <= n - 2, "G(n,D) requires 2 <= D <= n-2");
    FamilySpec spec{Family::CliquePath, n};
    spec.diameter = diameter;
    return spec;
}

FamilySpec FamilySpec::clique_path_partial(int n, int diameter, int k) {
    // D = n-1 leaves an empty clique and produces P_n (needed for m = n-1).
    require(diameter >= 2 && diameter <= n - 1, "g(n,D,k) requires 2 <= D <= n-1");
    require(k >= 0 && k <= n - diameter - 1, "g(n,D,k) requires 0 <= k <= n-D-1");
    FamilySpec spec{Family::CliquePathPartial, n};
    spec.diameter = diameter;
    spec.k = k;
    return spec;
}

FamilySpec FamilySpec::conjecture_exception(int n, int i) {
    require(n >= 5, "exception family requires n >= 5");
    // The conjecture states 1 <= i <= n-3, but the clique K_{n-4} only has
    // n-4 members; i = n-3 names more clique vertices than exist.
    require(i >= 1 && i <= n - 4, "exception family requires 1 <= i <= n-4 clique vertices");
    FamilySpec spec{Family::ConjectureException, n};
    spec.i = i;
    return spec;
}

Graph construct(const FamilySpec& spec) {
    const int n = spec.n;
    EdgeList edges;
    switch (spec.family) {
        case Family::Complete:
            add_clique(edges, 0, n);
            break;
        case Family::Path:
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            break;
        case Family::Cycle:
            for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
            break;
        case Family::Wheel:
            // hub 0, rim cycle 1..n-1
            for (int v = 1; v < n; ++v) {
                edges.emplace_back(0, v);
                edges.emplace_back(v, v == n - 1 ? 1 : v + 1);
            }
            break;
        case Family::MatchingReduced: {
            Graph full = construct(FamilySpec::complete(n));
            EdgeList kept;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const bool matched = (j == i + 1 && i % 2 == 0);
                    const bool extra = (n % 2 == 1 && i == 0 && j == n - 1);
                    if (!matched && !extra) kept.emplace_back(i, j);
                }
            return Graph::from_edges(n, kept);
        }
        case Family::CompleteSplit:
            add_clique(edges, 0, spec.x);
            for (int i = 0; i < spec.x; ++i)
                for (int j = spec.x; j < n; ++j) edges.emplace_back(i, j);
            break;
        case Family::PendantStar: {
            // 0 dominates; 1..p are pendants; the rest pair up, with one
            // 3-vertex path when n-p is even.
            for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
            int next = spec.p + 1;
            if ((n - spec.p) % 2 == 0) {
                edges.emplace_back(next, next + 1);
                edges.emplace_back(next + 1, next + 2);
                next += 3;
            }
            for (; next + 1 < n; next += 2) edges.emplace_back(next, next + 1);
            break;
        }
        case Family::CliquePath:
        case Family::CliquePathPartial: {
            const int D = spec.diameter;
            const int joined = spec.family == Family::CliquePath ? n - D - 1 : spec.k;
            for (int v = 0; v + 1 <= D; ++v) edges.emplace_back(v, v + 1);
            add_clique(edges, D + 1, n);
            for (int v = D + 1; v < n; ++v) {
                edges.emplace_back(v, 0);
                edges.emplace_back(v, 1);
            }
            for (int v = D + 1; v < D + 1 + joined; ++v) edges.emplace_back(v, 2);
            break;
        }
        case Family::ConjectureException: {
            for (int v = 0; v < 3; ++v) edges.emplace_back(v, v + 1);
            add_clique(edges, 4, n);
            for (int v = 4; v < 4 + spec.i; ++v) {
                edges.emplace_back(v, 0);
                edges.emplace_back(v, 1);
                edges.emplace_back(v, 2);
            }
            for (int v = 4 + spec.i; v < n; ++v) {
                edges.emplace_back(v, 1);
                edges.emplace_back(v, 2);
                edges.emplace_back(v, 3);
            }
            break;
        }
    }
    return Graph::from_edges(n, edges);
}

std::optional<std::uint64_t> closed_eci(const FamilySpec& spec) {
    const std::uint64_t n = static_cast<std::uint64_t>(spec.n);
    switch (spec.family) {
        case Family::Complete:
            return n * (n - 1);
        case Family::Cycle:
            return 2 * n * (n / 2);
        case Family::CompleteSplit: {
            // At x = n-1 the graph is K_n and the stable vertex is dominating,
            // which breaks the derivation below.
            if (spec.x > spec.n - 2) return std::nullopt;
            const std::int64_t x = spec.x;
            return static_cast<std::uint64_t>(-2 * x * x + x * (3 * spec.n - 1));
        }
        case Family::PendantStar: {
            // H_{4,0} = S_{4,2}: its degree-3 vertex dominates (product 3,
            // not 6), so the parity formula overshoots there.
            if (spec.n == 4 && spec.p == 0) return 14;
            const std::uint64_t p = static_cast<std::uint64_t>(spec.p);
            if ((spec.n - spec.p) % 2 == 1) return 5 * n - 2 * p - 5;
            return 5 * n - 2 * p - 3;
        }
        default:
            return std::nullopt;
    }
}

std::string family_name(const FamilySpec& spec) {
    const std::string n = std::to_string(spec.n);
    switch (spec.family) {
        case Family::Complete: return "K_" + n;
        case Family::Path: return "P_" + n;
        case Family::Cycle: return "C_" + n;
        case Family::Wheel: return "W_" + n;
        case Family::MatchingReduced: return "M_" + n;
        case Family::CompleteSplit: return "S(" + n + "," + std::to_string(spec.x) + ")";
        case Family::PendantStar: return "H(" + n + "," + std::to_string(spec.p) + ")";
        case Family::CliquePath: return "G(" + n + "," + std::to_string(spec.diameter) + ")";
        case Family::CliquePathPartial:
            return "g(" + n + "," + std::to_string(spec.diameter) + "," + std::to_string(spec.k) + ")";
        case Family::ConjectureException: return "exception(" + n + "," + std::to_string(spec.i) + ")";
    }
    return "?";
}

}  // namespace ecix
