// extremal.hpp — exhaustive ECI optimization over graph classes and the
// per-statement verifiers.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecix/enumerate.hpp"
#include "ecix/graph.hpp"

namespace ecix {

enum class Direction { Min, Max };

struct empty_class_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExtremalResult {
    ClassFilter filter;
    Direction direction = Direction::Min;
    std::uint64_t value = 0;
    std::vector<Graph> optima;  // canonical forms, sorted by canonical key
    std::uint64_t class_size = 0;
};

// Exact optimum and the complete optima set over the filtered class.
// Throws empty_class_error when no graph matches.
ExtremalResult search_extremal(const ClassFilter& filter, Direction direction,
                               const EnumOptions& options = {});

// Zhou-Du lower bound for fixed order and size: k from the floor-sqrt
// formula via exact integer square root, bound = 4m - k(n-1).
// Requires n-1 <= m < n(n-1)/2.
struct Zd10Params {
    int k = 0;
    std::int64_t bound = 0;
};
Zd10Params zd10_params(int n, std::int64_t m);

// Conjectured maximizer parameters for fixed order and size: D from the
// floor-sqrt formula, k = m - C(n-D+1,2) - D + 1. Requires
// n-1 <= m <= C(n-1,2). The derived pair is checked against the g(n,D,k)
// constructor range and edge count; a mismatch raises std::runtime_error.
struct ConjectureParams {
    int diameter = 0;
    int k = 0;
};
ConjectureParams conjecture_params(int n, std::int64_t m);

enum class Verdict { Pass, Fail, ConjectureHolds, ConjectureRefuted };

struct Counterexample {
    std::string g6;
    std::int64_t expected = 0;
    std::int64_t observed = 0;
    std::string detail;
};

struct VerificationOutcome {
    std::string statement;
    int n_min = 0;
    int n_max = 0;
    Verdict verdict = Verdict::Pass;
    std::vector<Counterexample> counterexamples;
    std::uint64_t graphs_examined = 0;
    std::uint64_t cells_checked = 0;
    double seconds = 0.0;
};

// Statement ids: min-order, pendant-extreme, dom-one, dom-many, dom-none,
// min-pending, zd10-min, table1-max, conjecture-max.
const std::vector<std::string>& statement_ids();

VerificationOutcome verify(const std::string& statement, int n_min, int n_max,
                           const EnumOptions& options = {});

std::string verdict_name(Verdict v);

}  // namespace ecix
