// enumerate.hpp — isomorphism-free generation of connected graphs.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ecix/graph.hpp"

namespace ecix {

enum class DominatingFilter { Any, Exactly0, Exactly1, AtLeast2 };

// A graph class: fixed order plus optional pending-vertex count, edge count
// and dominating-vertex constraint. Filters are applied at emission.
struct ClassFilter {
    int n = 0;
    std::optional<int> pending;
    std::optional<std::int64_t> edges;
    DominatingFilter dominating = DominatingFilter::Any;

    void validate() const;  // throws std::invalid_argument
    bool matches(const Graph& g) const;
};

// Raised when the requested order exceeds the enumeration budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Order cap for enumeration: ECIX_BUDGET when set, else 9.
int enumeration_budget();

struct EnumOptions {
    int jobs = 1;
    std::optional<int> budget;  // overrides enumeration_budget()
};

// Visit each isomorphism class of connected graphs matching the filter
// exactly once, in canonical labeling, in a deterministic order (independent
// of the job count).
void for_each_connected(const ClassFilter& filter, const std::function<void(const Graph&)>& fn,
                        const EnumOptions& options = {});

// The same stream collected and sorted by canonical key.
std::vector<Graph> enumerate_connected(const ClassFilter& filter, const EnumOptions& options = {});

std::uint64_t count_connected(const ClassFilter& filter, const EnumOptions& options = {});

namespace detail {
// Core walk: every connected, filter-matching graph in the generator's own
// labeling. `consume` may run concurrently for distinct subtree indices; for
// a fixed index calls arrive from one thread, in deterministic order.
// Subtree indices are below walk_subtree_count(filter, options).
void walk_connected(const ClassFilter& filter, const EnumOptions& options,
                    const std::function<void(std::size_t subtree, const Graph&)>& consume);

std::size_t walk_subtree_count(const ClassFilter& filter, const EnumOptions& options);
}  // namespace detail

}  // namespace ecix
