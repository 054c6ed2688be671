#include "ecix/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "ecix/canonical.hpp"
#include "ecix/families.hpp"

namespace ecix {

namespace {

constexpr std::size_t kCounterexampleCap = 1000;

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

// Largest s with s*s <= x, in integer arithmetic only.
std::int64_t isqrt64(std::int64_t x) {
    if (x < 0) throw std::invalid_argument("isqrt of negative value");
    std::uint64_t rest = static_cast<std::uint64_t>(x);
    std::uint64_t result = 0;
    std::uint64_t bit = 1ull << 62;
    while (bit > rest) bit >>= 2;
    while (bit != 0) {
        if (rest >= result + bit) {
            rest -= result + bit;
            result = (result >> 1) + bit;
        } else {
            result >>= 1;
        }
        bit >>= 2;
    }
    return static_cast<std::int64_t>(result);
}

// floor((a - sqrt(b)) / 2) with exact integer arithmetic; requires sqrt(b) <= a.
std::int64_t floor_half_diff(std::int64_t a, std::int64_t b) {
    const std::int64_t s = isqrt64(b);
    if (s * s == b) return (a - s) / 2;
    const std::int64_t t = a - s;  // a - sqrt(b) lies in (t-1, t)
    return (t % 2 != 0) ? (t - 1) / 2 : t / 2 - 1;
}

// Invariants of one enumerated graph (connected, order <= 64).
struct Profile {
    std::int64_t m = 0;
    int pending = 0;
    int dominating = 0;
    int ecc2 = 0;  // vertices with eccentricity exactly 2
    std::uint64_t eci = 0;
};

Profile profile_of(const Graph& g) {
    const int n = g.order();
    const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    Profile pr;
    std::int64_t deg_sum = 0;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        deg_sum += d;
        if (d == 1) ++pr.pending;
        if (d == n - 1) ++pr.dominating;
        std::uint64_t reached = 1ull << v;
        std::uint64_t frontier = reached;
        int ecc = 0;
        while (reached != all) {
            std::uint64_t next = 0;
            std::uint64_t bits = frontier;
            while (bits) {
                next |= g.row64(std::countr_zero(bits));
                bits &= bits - 1;
            }
            frontier = next & ~reached;
            if (frontier == 0) throw disconnected_error("profile requires a connected graph");
            reached |= frontier;
            ++ecc;
        }
        if (ecc == 2) ++pr.ecc2;
        pr.eci += static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(ecc);
    }
    pr.m = deg_sum / 2;
    return pr;
}

// Streaming optimum over one cell; optionally keeps all attaining graphs.
struct CellBest {
    bool any = false;
    std::uint64_t value = 0;
    std::uint64_t count = 0;
    std::vector<Graph> attain;

    void feed(const Graph& g, std::uint64_t v, Direction dir, bool collect) {
        ++count;
        const bool better = !any || (dir == Direction::Min ? v < value : v > value);
        if (better) {
            any = true;
            value = v;
            attain.clear();
            if (collect) attain.push_back(g);
        } else if (v == value && collect) {
            attain.push_back(g);
        }
    }

    void merge(CellBest&& other, Direction dir) {
        count += other.count;
        if (!other.any) return;
        const bool better = !any || (dir == Direction::Min ? other.value < value : other.value > value);
        if (better) {
            any = true;
            value = other.value;
            attain = std::move(other.attain);
        } else if (other.value == value) {
            for (auto& g : other.attain) attain.push_back(std::move(g));
        }
    }
};

struct SweepState {
    std::map<std::int64_t, CellBest> cells;
    std::vector<Counterexample> ces;
    std::uint64_t examined = 0;
};

void add_ce(std::vector<Counterexample>& ces, Counterexample ce) {
    if (ces.size() < 2 * kCounterexampleCap) ces.push_back(std::move(ce));
}

// One enumeration pass over all connected graphs of order n, merged across
// subtrees in deterministic order.
SweepState run_sweep(int n, Direction dir, const EnumOptions& options,
                     const std::function<void(SweepState&, const Graph&, const Profile&)>& feed) {
    ClassFilter filter;
    filter.n = n;
    const std::size_t subtrees = detail::walk_subtree_count(filter, options);
    std::vector<SweepState> states(subtrees);
    detail::walk_connected(filter, options, [&](std::size_t subtree, const Graph& g) {
        SweepState& state = states[subtree];
        ++state.examined;
        feed(state, g, profile_of(g));
    });
    SweepState total = std::move(states[0]);
    for (std::size_t s = 1; s < states.size(); ++s) {
        total.examined += states[s].examined;
        for (auto& [cell, best] : states[s].cells) total.cells[cell].merge(std::move(best), dir);
        for (auto& ce : states[s].ces) add_ce(total.ces, std::move(ce));
    }
    return total;
}

std::string g6_of(const Graph& g) { return canonical_key(g).g6; }

// Checks one cell's optimum value and complete optima set against the stated
// family members; appends a counterexample per discrepancy.
void expect_optima(std::vector<Counterexample>& ces, const std::string& cell_name, const CellBest& cell,
                   std::uint64_t expected_value, const std::vector<FamilySpec>& expected) {
    std::map<std::string, std::string> want;  // canonical g6 -> family name
    for (const auto& spec : expected) {
        const Graph g = construct(spec);
        const std::uint64_t value = eci(g);
        if (value != expected_value) {
            add_ce(ces, {g6_of(g), static_cast<std::int64_t>(expected_value), static_cast<std::int64_t>(value),
                         cell_name + ": stated optimum " + family_name(spec) + " does not have the stated value"});
        }
        want.emplace(g6_of(g), family_name(spec));
    }
    if (!cell.any) {
        add_ce(ces, {want.empty() ? std::string() : want.begin()->first,
                     static_cast<std::int64_t>(expected_value), -1, cell_name + ": class is empty"});
        return;
    }
    if (cell.value != expected_value) {
        for (const auto& g : cell.attain)
            add_ce(ces, {g6_of(g), static_cast<std::int64_t>(expected_value),
                         static_cast<std::int64_t>(cell.value), cell_name + ": optimum value differs"});
        if (cell.attain.empty())
            add_ce(ces, {"", static_cast<std::int64_t>(expected_value), static_cast<std::int64_t>(cell.value),
                         cell_name + ": optimum value differs"});
        return;
    }
    std::set<std::string> got;
    for (const auto& g : cell.attain) got.insert(g6_of(g));
    for (const auto& key : got)
        if (!want.count(key))
            add_ce(ces, {key, static_cast<std::int64_t>(expected_value),
                         static_cast<std::int64_t>(cell.value), cell_name + ": unexpected optimum"});
    for (const auto& [key, name] : want)
        if (!got.count(key))
            add_ce(ces, {key, static_cast<std::int64_t>(expected_value), static_cast<std::int64_t>(cell.value),
                         cell_name + ": stated optimum " + name + " missing from optima set"});
}

std::string cell_tag(int n, const std::string& rest) {
    return "n=" + std::to_string(n) + (rest.empty() ? "" : ", " + rest);
}

std::uint64_t closed_pendant(int n, int p) { return *closed_eci(FamilySpec::pendant_star(n, p)); }

// ---- statement bodies ------------------------------------------------

void run_min_order(int n, const EnumOptions& options, VerificationOutcome& out) {
    SweepState state = run_sweep(n, Direction::Min, options,
                                 [](SweepState& s, const Graph& g, const Profile& pr) {
                                     s.cells[0].feed(g, pr.eci, Direction::Min, true);
                                 });
    out.graphs_examined += state.examined;
    for (auto& ce : state.ces) add_ce(out.counterexamples, std::move(ce));
    expect_optima(out.counterexamples, cell_tag(n, ""), state.cells[0],
                  3ull * static_cast<std::uint64_t>(n - 1), {FamilySpec::complete_split(n, 1)});
    ++out.cells_checked;
}

void run_pendant_extreme(int n, const EnumOptions& options, VerificationOutcome& out) {
    const CanonicalKey star = canonical_key(construct(FamilySpec::complete_split(n, 1)));
    const std::uint64_t flat = 5ull * static_cast<std::uint64_t>(n) - 6;
    SweepState state = run_sweep(
        n, Direction::Min, options, [&](SweepState& s, const Graph& g, const Profile& pr) {
            if (pr.pending == n - 1) {
                s.cells[n - 1].feed(g, pr.eci, Direction::Min, false);
                if (canonical_key(g) != star)
                    add_ce(s.ces, {g6_of(g), static_cast<std::int64_t>(3 * (n - 1)),
                                   static_cast<std::int64_t>(pr.eci),
                                   cell_tag(n, "p=n-1") + ": graph with n-1 pending vertices is not the star"});
            } else if (pr.pending == n - 2) {
                s.cells[n - 2].feed(g, pr.eci, Direction::Min, false);
                if (pr.eci != flat)
                    add_ce(s.ces, {g6_of(g), static_cast<std::int64_t>(flat), static_cast<std::int64_t>(pr.eci),
                                   cell_tag(n, "p=n-2") + ": ECI differs from 5n-6"});
            }
        });
    out.graphs_examined += state.examined;
    for (auto& ce : state.ces) add_ce(out.counterexamples, std::move(ce));
    if (state.cells[n - 1].count != 1)
        add_ce(out.counterexamples,
               {star.g6, 1, static_cast<std::int64_t>(state.cells[n - 1].count),
                cell_tag(n, "p=n-1") + ": expected exactly one graph (the star) in the class"});
    if (state.cells[n - 2].count == 0)
        add_ce(out.counterexamples, {"", static_cast<std::int64_t>(flat), -1,
                                     cell_tag(n, "p=n-2") + ": class is empty"});
    out.cells_checked += 2;
}

void run_dom_one(int n, const EnumOptions& options, VerificationOutcome& out) {
    std::vector<std::uint64_t> bound(static_cast<std::size_t>(n - 2));
    std::vector<CanonicalKey> key(static_cast<std::size_t>(n - 2));
    for (int p = 0; p <= n - 3; ++p) {
        bound[static_cast<std::size_t>(p)] = closed_pendant(n, p);
        key[static_cast<std::size_t>(p)] = canonical_key(construct(FamilySpec::pendant_star(n, p)));
    }
    SweepState state = run_sweep(
        n, Direction::Min, options, [&](SweepState& s, const Graph& g, const Profile& pr) {
            if (pr.dominating != 1 || pr.pending > n - 3) return;
            if (n == 4 && pr.pending == 0) {
                // H_{4,0} has two dominating vertices; this cell must be empty.
                s.cells[0].feed(g, pr.eci, Direction::Min, true);
                return;
            }
            const int p = pr.pending;
            const std::uint64_t b = bound[static_cast<std::size_t>(p)];
            s.cells[p].feed(g, pr.eci, Direction::Min, true);
            if (pr.eci < b)
                add_ce(s.ces, {g6_of(g), static_cast<std::int64_t>(b), static_cast<std::int64_t>(pr.eci),
                               cell_tag(n, "p=" + std::to_string(p)) + ": below the H(n,p) lower bound"});
            else if (pr.eci == b && canonical_key(g) != key[static_cast<std::size_t>(p)])
                add_ce(s.ces, {g6_of(g), static_cast<std::int64_t>(b), static_cast<std::int64_t>(pr.eci),
                               cell_tag(n, "p=" + std::to_string(p)) +
                                   ": attains the H(n,p) lower bound but is not H(n,p)"});
        });
    out.graphs_examined += state.examined;
    for (auto& ce : state.ces) add_ce(out.counterexamples, std::move(ce));
    for (int p = 0; p <= n - 3; ++p) {
        const std::string tag = cell_tag(n, "p=" + std::to_string(p) + ", one dominating vertex");
        if (n == 4 && p == 0) {
            if (state.cells[0].any)
                for (const auto& g : state.cells[0].attain)
                    add_ce(out.counterexamples,
                           {g6_of(g), -1, static_cast<std::int64_t>(state.cells[0].value),
                            tag + ": class should be empty (H(4,0) has two dominating vertices)"});
        } else {
            expect_optima(out.counterexamples, tag, state.cells[p],
                          bound[static_cast<std::size_t>(p)], {FamilySpec::pendant_star(n, p)});
        }
        ++out.cells_checked;
    }
}

void run_dom_many(int n, const EnumOptions& options, VerificationOutcome& out) {
    SweepState state = run_sweep(n, Direction::Min, options,
                                 [](SweepState& s, const Graph& g, const Profile& pr) {
                                     if (pr.dominating >= 2) s.cells[0].feed(g, pr.eci, Direction::Min, true);
                                 });
    out.graphs_examined += state.examined;
    std::uint64_t expected_value;
    std::vector<FamilySpec> expected;
    if (n == 4) {
        expected_value = 12;
        expected = {FamilySpec::complete(4)};
    } else if (n == 5) {
        expected_value = 20;
        expected = {FamilySpec::complete_split(5, 2), FamilySpec::complete(5)};
    } else {
        expected_value = 6ull * static_cast<std::uint64_t>(n) - 10;
        expected = {FamilySpec::complete_split(n, 2)};
    }
    expect_optima(out.counterexamples, cell_tag(n, ">=2 dominating vertices"), state.cells[0],
                  expected_value, expected);
    ++out.cells_checked;
}

void run_dom_none(int n, const EnumOptions& options, VerificationOutcome& out) {
    std::vector<std::uint64_t> bound(static_cast<std::size_t>(n - 2));
    for (int p = 0; p <= n - 3; ++p) bound[static_cast<std::size_t>(p)] = closed_pendant(n, p);
    const CanonicalKey c5 = canonical_key(construct(FamilySpec::cycle(5)));
    SweepState state = run_sweep(
        n, Direction::Min, options, [&](SweepState& s, const Graph& g, const Profile& pr) {
            if (pr.dominating != 0 || pr.pending > n - 3) return;
            const int p = pr.pending;
            const std::uint64_t b = bound[static_cast<std::size_t>(p)];
            const std::string tag = cell_tag(n, "p=" + std::to_string(p) + ", no dominating vertex");
            if (n == 5 && p == 0) {
                s.cells[0].feed(g, pr.eci, Direction::Min, true);
                if (pr.eci < b)
                    add_ce(s.ces, {g6_of(g), static_cast<std::int64_t>(b), static_cast<std::int64_t>(pr.eci),
                                   tag + ": below ECI of H(5,0)"});
                else if (pr.eci == b && canonical_key(g) != c5)
                    add_ce(s.ces, {g6_of(g), static_cast<std::int64_t>(b), static_cast<std::int64_t>(pr.eci),
                                   tag + ": ties H(5,0) but is not C_5"});
            } else if (pr.eci <= b) {
                add_ce(s.ces, {g6_of(g), static_cast<std::int64_t>(b), static_cast<std::int64_t>(pr.eci),
                               tag + ": strict bound violated, every such graph needs ECI > " + std::to_string(b)});
            }
        });
    out.graphs_examined += state.examined;
    for (auto& ce : state.ces) add_ce(out.counterexamples, std::move(ce));
    if (n == 5) {
        expect_optima(out.counterexamples, cell_tag(n, "p=0, no dominating vertex"), state.cells[0],
                      closed_pendant(5, 0), {FamilySpec::cycle(5)});
    }
    out.cells_checked += static_cast<std::uint64_t>(n - 2);
}

void run_min_pending(int n, const EnumOptions& options, VerificationOutcome& out) {
    SweepState state = run_sweep(n, Direction::Min, options,
                                 [&](SweepState& s, const Graph& g, const Profile& pr) {
                                     if (pr.pending <= n - 3)
                                         s.cells[pr.pending].feed(g, pr.eci, Direction::Min, true);
                                 });
    out.graphs_examined += state.examined;
    for (int p = 0; p <= n - 3; ++p) {
        const std::string tag = cell_tag(n, "p=" + std::to_string(p));
        std::uint64_t expected_value;
        std::vector<FamilySpec> expected;
        if (p >= 1) {
            expected_value = closed_pendant(n, p);
            expected = {FamilySpec::pendant_star(n, p)};
        } else if (n == 4) {
            expected_value = 12;
            expected = {FamilySpec::complete(4)};
        } else if (n == 5) {
            expected_value = 20;
            expected = {FamilySpec::pendant_star(5, 0), FamilySpec::complete_split(5, 2),
                        FamilySpec::complete(5), FamilySpec::cycle(5)};
        } else if (n == 6) {
            expected_value = 26;
            expected = {FamilySpec::complete_split(6, 2)};
        } else {
            expected_value = closed_pendant(n, 0);
            expected = {FamilySpec::pendant_star(n, 0)};
        }
        expect_optima(out.counterexamples, tag, state.cells[p], expected_value, expected);
        ++out.cells_checked;
    }
}

void run_zd10_min(int n, const EnumOptions& options, VerificationOutcome& out) {
    const std::int64_t top = choose2(n) - 1;
    std::map<std::int64_t, Zd10Params> params;
    for (std::int64_t m = n - 1; m <= top; ++m) params[m] = zd10_params(n, m);
    SweepState state = run_sweep(
        n, Direction::Min, options, [&](SweepState& s, const Graph& g, const Profile& pr) {
            if (pr.m > top) return;  // K_n sits outside the Zhou-Du range
            const auto& zd = params.at(pr.m);
            s.cells[pr.m].feed(g, pr.eci, Direction::Min, false);
            const std::string tag = cell_tag(n, "m=" + std::to_string(pr.m));
            if (static_cast<std::int64_t>(pr.eci) < zd.bound) {
                add_ce(s.ces, {g6_of(g), zd.bound, static_cast<std::int64_t>(pr.eci),
                               tag + ": below the Zhou-Du bound"});
                return;
            }
            const bool equality = static_cast<std::int64_t>(pr.eci) == zd.bound;
            const bool shape = pr.dominating == zd.k && pr.ecc2 == n - zd.k;
            if (equality && !shape)
                add_ce(s.ces, {g6_of(g), zd.bound, static_cast<std::int64_t>(pr.eci),
                               tag + ": attains the bound without k dominating and n-k eccentricity-2 vertices"});
            else if (!equality && shape)
                add_ce(s.ces, {g6_of(g), zd.bound, static_cast<std::int64_t>(pr.eci),
                               tag + ": has k dominating and n-k eccentricity-2 vertices but misses the bound"});
        });
    out.graphs_examined += state.examined;
    for (auto& ce : state.ces) add_ce(out.counterexamples, std::move(ce));
    for (std::int64_t m = n - 1; m <= top; ++m) {
        const auto& cell = state.cells[m];
        const std::string tag = cell_tag(n, "m=" + std::to_string(m));
        if (!cell.any)
            add_ce(out.counterexamples, {"", params.at(m).bound, -1, tag + ": class is empty"});
        else if (static_cast<std::int64_t>(cell.value) != params.at(m).bound)
            add_ce(out.counterexamples, {"", params.at(m).bound, static_cast<std::int64_t>(cell.value),
                                         tag + ": exhaustive minimum differs from the bound"});
        ++out.cells_checked;
    }
}

void run_table1_max(int n, const EnumOptions& options, VerificationOutcome& out) {
    SweepState state = run_sweep(n, Direction::Max, options,
                                 [](SweepState& s, const Graph& g, const Profile& pr) {
                                     s.cells[0].feed(g, pr.eci, Direction::Max, true);
                                 });
    out.graphs_examined += state.examined;
    std::vector<FamilySpec> expected;
    switch (n) {
        case 1: expected = {FamilySpec::complete(1)}; break;
        case 2: expected = {FamilySpec::complete(2)}; break;
        case 3: expected = {FamilySpec::complete(3), FamilySpec::path(3)}; break;
        case 4: expected = {FamilySpec::matching_reduced(4)}; break;
        case 5: expected = {FamilySpec::matching_reduced(5), FamilySpec::wheel(5)}; break;
        case 6: expected = {FamilySpec::matching_reduced(6)}; break;
        case 7: expected = {FamilySpec::matching_reduced(7)}; break;
        case 8: expected = {FamilySpec::matching_reduced(8), FamilySpec::clique_path(8, 4)}; break;
        default: expected = {FamilySpec::clique_path(n, (n + 3) / 3 + 1)}; break;
    }
    const std::uint64_t expected_value = eci(construct(expected.front()));
    expect_optima(out.counterexamples, cell_tag(n, ""), state.cells[0], expected_value, expected);
    ++out.cells_checked;
}

void run_conjecture_max(int n, const EnumOptions& options, VerificationOutcome& out) {
    const std::int64_t top = choose2(n - 1);
    std::map<std::int64_t, ConjectureParams> params;
    std::map<std::int64_t, std::uint64_t> expected_value;
    for (std::int64_t m = n - 1; m <= top; ++m) {
        params[m] = conjecture_params(n, m);
        expected_value[m] =
            eci(construct(FamilySpec::clique_path_partial(n, params[m].diameter, params[m].k)));
    }
    SweepState state = run_sweep(n, Direction::Max, options,
                                 [&](SweepState& s, const Graph& g, const Profile& pr) {
                                     if (pr.m <= top) s.cells[pr.m].feed(g, pr.eci, Direction::Max, true);
                                 });
    out.graphs_examined += state.examined;
    for (std::int64_t m = n - 1; m <= top; ++m) {
        const auto& [D, k] = params.at(m);
        std::vector<FamilySpec> expected = {FamilySpec::clique_path_partial(n, D, k)};
        if (D == 3 && k == n - 4) {
            // The stated range is 1 <= i <= n-3, but only i <= n-4 members
            // exist; i = n-3 contributes no graph.
            for (int i = 1; i <= n - 4; ++i) expected.push_back(FamilySpec::conjecture_exception(n, i));
        }
        expect_optima(out.counterexamples,
                      cell_tag(n, "m=" + std::to_string(m) + " (D=" + std::to_string(D) +
                                      ", k=" + std::to_string(k) + ")"),
                      state.cells[m], expected_value.at(m), expected);
        ++out.cells_checked;
    }
}

struct StatementDef {
    const char* id;
    int n_lo;
    int n_hi;
    bool conjecture;
    void (*run)(int, const EnumOptions&, VerificationOutcome&);
};

constexpr StatementDef kStatements[] = {
    {"min-order", 4, 8, false, run_min_order},
    {"pendant-extreme", 4, 8, false, run_pendant_extreme},
    {"dom-one", 4, 8, false, run_dom_one},
    {"dom-many", 4, 8, false, run_dom_many},
    {"dom-none", 4, 8, false, run_dom_none},
    {"min-pending", 4, 8, false, run_min_pending},
    {"zd10-min", 4, 8, false, run_zd10_min},
    {"table1-max", 1, 9, false, run_table1_max},
    {"conjecture-max", 4, 9, true, run_conjecture_max},
};

}  // namespace

ExtremalResult search_extremal(const ClassFilter& filter, Direction direction,
                               const EnumOptions& options) {
    const std::size_t subtrees = detail::walk_subtree_count(filter, options);
    std::vector<CellBest> states(subtrees);
    detail::walk_connected(filter, options, [&](std::size_t subtree, const Graph& g) {
        states[subtree].feed(g, profile_of(g).eci, direction, true);
    });
    CellBest total = std::move(states[0]);
    for (std::size_t s = 1; s < states.size(); ++s) total.merge(std::move(states[s]), direction);
    if (!total.any) throw empty_class_error("no connected graph matches the class filter");

    ExtremalResult result;
    result.filter = filter;
    result.direction = direction;
    result.value = total.value;
    result.class_size = total.count;
    std::vector<std::pair<CanonicalKey, Graph>> optima;
    optima.reserve(total.attain.size());
    for (const auto& g : total.attain) {
        Graph canon = canonical_form(g);
        optima.emplace_back(canonical_key(canon), std::move(canon));
    }
    std::sort(optima.begin(), optima.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, g] : optima) result.optima.push_back(std::move(g));
    return result;
}

Zd10Params zd10_params(int n, std::int64_t m) {
    if (n < 2) throw std::invalid_argument("Zhou-Du bound requires n >= 2");
    if (m < n - 1 || m >= choose2(n))
        throw std::invalid_argument("Zhou-Du bound requires n-1 <= m < n(n-1)/2");
    const std::int64_t a = 2 * static_cast<std::int64_t>(n) - 1;
    const std::int64_t k = floor_half_diff(a, a * a - 8 * m);
    return {static_cast<int>(k), 4 * m - k * (n - 1)};
}

ConjectureParams conjecture_params(int n, std::int64_t m) {
    if (n < 2) throw std::invalid_argument("conjecture parameters require n >= 2");
    if (m < n - 1 || m > choose2(n - 1))
        throw std::invalid_argument("conjecture parameters require n-1 <= m <= (n-1)(n-2)/2");
    const std::int64_t a = 2 * static_cast<std::int64_t>(n) + 1;
    const std::int64_t D = floor_half_diff(a, 17 + 8 * (m - n));
    const std::int64_t k = m - choose2(n - D + 1) - D + 1;
    if (D < 2 || D > n - 1 || k < 0 || k > n - D - 1)
        throw std::runtime_error("conjecture formulas produced (D=" + std::to_string(D) +
                                 ", k=" + std::to_string(k) + ") outside the g(n,D,k) range for n=" +
                                 std::to_string(n) + ", m=" + std::to_string(m));
    const ConjectureParams out{static_cast<int>(D), static_cast<int>(k)};
    if (n <= 1000) {
        const Graph g = construct(FamilySpec::clique_path_partial(n, out.diameter, out.k));
        if (g.edge_count() != m)
            throw std::runtime_error("g(n,D,k) edge count " + std::to_string(g.edge_count()) +
                                     " does not match m=" + std::to_string(m));
    }
    return out;
}

const std::vector<std::string>& statement_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& def : kStatements) out.emplace_back(def.id);
        return out;
    }();
    return ids;
}

VerificationOutcome verify(const std::string& statement, int n_min, int n_max,
                           const EnumOptions& options) {
    const StatementDef* def = nullptr;
    for (const auto& candidate : kStatements)
        if (statement == candidate.id) {
            def = &candidate;
            break;
        }
    if (def == nullptr) {
        std::string known;
        for (const auto& candidate : kStatements) {
            if (!known.empty()) known += ", ";
            known += candidate.id;
        }
        throw std::invalid_argument("unknown statement id '" + statement + "'; known ids: " + known);
    }
    if (n_min > n_max) throw std::invalid_argument("n-min must not exceed n-max");
    if (n_min < def->n_lo)
        throw std::invalid_argument(statement + " is stated for n >= " + std::to_string(def->n_lo));
    if (n_max > def->n_hi)
        throw std::invalid_argument(statement + " verification is capped at n <= " + std::to_string(def->n_hi));

    VerificationOutcome out;
    out.statement = statement;
    out.n_min = n_min;
    out.n_max = n_max;
    const auto start = std::chrono::steady_clock::now();
    for (int n = n_min; n <= n_max; ++n) def->run(n, options, out);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.seconds = std::round(elapsed * 1000.0) / 1000.0;  // keep reports free of e-notation
    if (out.counterexamples.size() > kCounterexampleCap) {
        const std::size_t dropped = out.counterexamples.size() - kCounterexampleCap;
        out.counterexamples.resize(kCounterexampleCap);
        out.counterexamples.push_back(
            {"", 0, 0, std::to_string(dropped) + " further counterexamples suppressed"});
    }
    if (out.counterexamples.empty())
        out.verdict = def->conjecture ? Verdict::ConjectureHolds : Verdict::Pass;
    else
        out.verdict = def->conjecture ? Verdict::ConjectureRefuted : Verdict::Fail;
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::ConjectureHolds: return "conjecture-holds";
        case Verdict::ConjectureRefuted: return "conjecture-refuted";
    }
    return "?";
}

}  // namespace ecix
