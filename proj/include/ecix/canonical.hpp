// canonical.hpp — canonical labeling and isomorphism keys for small graphs.
#pragma once

#include <compare>
#include <string>

#include "ecix/graph.hpp"

namespace ecix {

// Labeling-independent identifier: the graph6 string of the canonical
// representative. Equal keys iff isomorphic; totally ordered.
struct CanonicalKey {
    std::string g6;
    auto operator<=>(const CanonicalKey&) const = default;
};

// Canonical representative: relabeling that minimizes the row-major read of
// the adjacency bit-matrix, found by iterative neighborhood refinement plus
// backtracking over the surviving permutations. Supports order <= 64.
Graph canonical_form(const Graph& g);

CanonicalKey canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

namespace detail {
// True iff this labeled graph is the lexicographically least labeling of its
// isomorphism class under the column-major upper-triangle code. That code is
// prefix-closed under deleting the highest vertex, which is what the orderly
// generator's accept test relies on.
bool min_colcode_labeled(const std::uint64_t* rows, int n);
}  // namespace detail

}  // namespace ecix
