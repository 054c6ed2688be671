#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "ecix/canonical.hpp"
#include "ecix/extremal.hpp"
#include "ecix/families.hpp"
#include "ecix/graph6.hpp"
#include "oracle.hpp"

using ecix::canonical_key;
using ecix::ClassFilter;
using ecix::conjecture_params;
using ecix::Direction;
using ecix::FamilySpec;
using ecix::search_extremal;
using ecix::Verdict;
using ecix::zd10_params;

namespace {

ClassFilter order_only(int n) {
    ClassFilter f;
    f.n = n;
    return f;
}

std::set<std::string> optima_keys(const ecix::ExtremalResult& r) {
    std::set<std::string> keys;
    for (const auto& g : r.optima) keys.insert(ecix::encode_graph6(g));
    return keys;
}

std::string key_of(const FamilySpec& spec) { return canonical_key(ecix::construct(spec)).g6; }

}  // namespace

TEST_CASE("minimum ECI optima sets for p = 0") {
    ClassFilter f = order_only(5);
    f.pending = 0;
    const auto n5 = search_extremal(f, Direction::Min);
    CHECK(n5.value == 20);
    CHECK(optima_keys(n5) == std::set<std::string>{key_of(FamilySpec::pendant_star(5, 0)),
                                                   key_of(FamilySpec::complete_split(5, 2)),
                                                   key_of(FamilySpec::complete(5)),
                                                   key_of(FamilySpec::cycle(5))});

    f = order_only(6);
    f.pending = 0;
    const auto n6 = search_extremal(f, Direction::Min);
    CHECK(n6.value == 26);
    CHECK(optima_keys(n6) == std::set<std::string>{key_of(FamilySpec::complete_split(6, 2))});

    f = order_only(7);
    f.pending = 0;
    const auto n7 = search_extremal(f, Direction::Min);
    CHECK(n7.value == 30);
    CHECK(optima_keys(n7) == std::set<std::string>{key_of(FamilySpec::pendant_star(7, 0))});
}

TEST_CASE("table 1 maximum at n = 8") {
    const auto n8 = search_extremal(order_only(8), Direction::Max);
    CHECK(n8.value == 96);
    CHECK(n8.class_size == 11117);
    CHECK(optima_keys(n8) == std::set<std::string>{key_of(FamilySpec::matching_reduced(8)),
                                                   key_of(FamilySpec::clique_path(8, 4))});
}

TEST_CASE("search agrees with the labeled brute-force oracle, n <= 6") {
    for (int n = 4; n <= 6; ++n) {
        std::map<std::string, std::uint64_t> classes;  // canonical g6 -> eci
        oracle::for_each_labeled_graph(n, [&](const ecix::Graph& g) {
            if (!oracle::fw_connected(g)) return;
            classes.emplace(canonical_key(g).g6, oracle::fw_eci(g));
        });
        std::uint64_t lo = ~0ull, hi = 0;
        std::set<std::string> lo_set, hi_set;
        for (const auto& [key, value] : classes) {
            if (value < lo) lo = value, lo_set.clear();
            if (value == lo) lo_set.insert(key);
            if (value > hi) hi = value, hi_set.clear();
            if (value == hi) hi_set.insert(key);
        }
        const auto best_min = search_extremal(order_only(n), Direction::Min);
        const auto best_max = search_extremal(order_only(n), Direction::Max);
        CHECK(best_min.value == lo);
        CHECK(optima_keys(best_min) == lo_set);
        CHECK(best_max.value == hi);
        CHECK(optima_keys(best_max) == hi_set);
        CHECK(best_min.class_size == classes.size());
    }
}

TEST_CASE("value-only brute-force cross-check at n = 7") {
    std::uint64_t lo = ~0ull, hi = 0;
    oracle::for_each_labeled_graph(7, [&](const ecix::Graph& g) {
        if (!ecix::is_connected(g)) return;
        const std::uint64_t value = ecix::eci(g);
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    });
    CHECK(search_extremal(order_only(7), Direction::Min).value == lo);
    CHECK(search_extremal(order_only(7), Direction::Max).value == hi);
}

TEST_CASE("class decomposition over pending counts") {
    for (const auto direction : {Direction::Min, Direction::Max}) {
        const auto whole = search_extremal(order_only(6), direction);
        std::uint64_t best = direction == Direction::Min ? ~0ull : 0;
        for (int p = 0; p <= 5; ++p) {
            ClassFilter f = order_only(6);
            f.pending = p;
            try {
                const auto cell = search_extremal(f, direction);
                best = direction == Direction::Min ? std::min(best, cell.value)
                                                   : std::max(best, cell.value);
            } catch (const ecix::empty_class_error&) {
            }
        }
        CHECK(best == whole.value);
    }
}

TEST_CASE("empty classes raise a dedicated error") {
    ClassFilter f = order_only(4);
    f.pending = 2;
    f.edges = 4;
    CHECK_THROWS_AS(search_extremal(f, Direction::Min), ecix::empty_class_error);
    f.pending = 3;
    f.edges = 4;
    CHECK_THROWS_AS(search_extremal(f, Direction::Max), ecix::empty_class_error);
}

TEST_CASE("dominating filter classes") {
    ClassFilter f = order_only(4);
    f.dominating = ecix::DominatingFilter::AtLeast2;
    const auto r = search_extremal(f, Direction::Min);
    CHECK(r.value == 12);
    CHECK(r.class_size == 2);  // K_4 and the diamond
    CHECK(optima_keys(r) == std::set<std::string>{key_of(FamilySpec::complete(4))});
}

TEST_CASE("zd10 parameters") {
    CHECK(zd10_params(5, 4).k == 1);
    CHECK(zd10_params(5, 4).bound == 12);
    CHECK(zd10_params(5, 5).k == 1);
    CHECK(zd10_params(5, 5).bound == 16);
    CHECK(zd10_params(6, 14).k == 4);
    CHECK(zd10_params(6, 14).bound == 36);

    CHECK_THROWS_AS(zd10_params(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(zd10_params(5, 10), std::invalid_argument);  // m = C(5,2) excluded

    // formula translation guarded by a linear scan over integer candidates:
    // k = max { j >= 0 : (2n-1-2j)^2 >= (2n-1)^2 - 8m }
    for (int n = 2; n <= 64; ++n) {
        const std::int64_t a = 2 * static_cast<std::int64_t>(n) - 1;
        const std::int64_t top = static_cast<std::int64_t>(n) * (n - 1) / 2 - 1;
        for (std::int64_t m = n - 1; m <= top; ++m) {
            const std::int64_t b = a * a - 8 * m;
            std::int64_t expect = 0;
            for (std::int64_t j = 0; a - 2 * j >= 0; ++j)
                if ((a - 2 * j) * (a - 2 * j) >= b) expect = j;
            REQUIRE(zd10_params(n, m).k == expect);
        }
    }
}

TEST_CASE("conjecture parameters") {
    CHECK(conjecture_params(9, 8).diameter == 8);
    CHECK(conjecture_params(9, 8).k == 0);
    CHECK(ecix::isomorphic(ecix::construct(FamilySpec::clique_path_partial(9, 8, 0)),
                           ecix::construct(FamilySpec::path(9))));

    CHECK(conjecture_params(6, 10).diameter == 3);
    CHECK(conjecture_params(6, 10).k == 2);  // k = n-D-1: g(6,3,2) = G(6,3)
    CHECK(ecix::isomorphic(ecix::construct(FamilySpec::clique_path_partial(6, 3, 2)),
                           ecix::construct(FamilySpec::clique_path(6, 3))));

    CHECK(conjecture_params(4, 3).diameter == 3);
    CHECK(conjecture_params(4, 3).k == 0);

    CHECK_THROWS_AS(conjecture_params(6, 4), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_params(6, 11), std::invalid_argument);  // m > C(5,2)

    // derived (D,k) always lands in the constructor range with matching m
    for (int n = 4; n <= 20; ++n) {
        const std::int64_t top = static_cast<std::int64_t>(n - 1) * (n - 2) / 2;
        for (std::int64_t m = n - 1; m <= top; ++m) {
            const auto [D, k] = conjecture_params(n, m);
            const auto g = ecix::construct(FamilySpec::clique_path_partial(n, D, k));
            REQUIRE(g.edge_count() == m);
        }
    }
}

TEST_CASE("max ECI among the two trees on 4 vertices") {
    ClassFilter f = order_only(4);
    f.edges = 3;
    const auto r = search_extremal(f, Direction::Max);
    CHECK(r.value == 14);
    CHECK(r.class_size == 2);
    CHECK(optima_keys(r) == std::set<std::string>{key_of(FamilySpec::path(4))});
}

TEST_CASE("one-dominating-vertex lower bound holds per graph, n <= 7") {
    for (int n = 4; n <= 7; ++n) {
        std::map<int, std::pair<std::uint64_t, std::string>> expect;  // p -> (bound, key)
        for (int p = 0; p <= n - 3; ++p)
            expect[p] = {*ecix::closed_eci(FamilySpec::pendant_star(n, p)),
                         key_of(FamilySpec::pendant_star(n, p))};
        ecix::for_each_connected(order_only(n), [&](const ecix::Graph& g) {
            if (ecix::dominating_count(g) != 1) return;
            const int p = ecix::pending_count(g);
            if (p > n - 3) return;
            if (n == 4 && p == 0) {
                FAIL("no n=4 graph with one dominating vertex and p=0 should exist");
                return;
            }
            const auto& [bound, key] = expect[p];
            const std::uint64_t value = ecix::eci(g);
            CHECK(value >= bound);
            CHECK((value == bound) == (canonical_key(g).g6 == key));
        });
    }
}

TEST_CASE("chain bound: eci >= -2x^2 + x(3n-1) for x >= 2 dominating vertices") {
    for (int n = 4; n <= 7; ++n) {
        ecix::for_each_connected(order_only(n), [&](const ecix::Graph& g) {
            const std::int64_t x = ecix::dominating_count(g);
            if (x < 2) return;
            const std::int64_t bound = -2 * x * x + x * (3 * n - 1);
            CHECK(static_cast<std::int64_t>(ecix::eci(g)) >= bound);
        });
    }
}

TEST_CASE("verify: small smoke runs") {
    CHECK(ecix::verify("min-order", 4, 6).verdict == Verdict::Pass);
    CHECK(ecix::verify("pendant-extreme", 4, 6).verdict == Verdict::Pass);
    CHECK(ecix::verify("dom-one", 4, 6).verdict == Verdict::Pass);
    CHECK(ecix::verify("dom-many", 4, 6).verdict == Verdict::Pass);
    CHECK(ecix::verify("dom-none", 4, 6).verdict == Verdict::Pass);
    CHECK(ecix::verify("min-pending", 4, 6).verdict == Verdict::Pass);
    CHECK(ecix::verify("zd10-min", 4, 6).verdict == Verdict::Pass);
    CHECK(ecix::verify("table1-max", 1, 6).verdict == Verdict::Pass);
    const auto conjecture = ecix::verify("conjecture-max", 5, 6);
    CHECK(conjecture.verdict == Verdict::ConjectureHolds);
    CHECK(conjecture.counterexamples.empty());

    const auto outcome = ecix::verify("min-order", 4, 5);
    CHECK(outcome.graphs_examined == 27);  // 6 + 21
    CHECK(outcome.cells_checked == 2);
    CHECK(outcome.statement == "min-order");

    // jobs > 1 gives identical outcomes
    ecix::EnumOptions parallel;
    parallel.jobs = 4;
    CHECK(ecix::verify("min-pending", 4, 7, parallel).verdict == Verdict::Pass);
}

TEST_CASE("verify: statement and range validation") {
    CHECK_THROWS_AS(ecix::verify("no-such-statement", 4, 6), std::invalid_argument);
    CHECK_THROWS_AS(ecix::verify("min-order", 3, 6), std::invalid_argument);
    CHECK_THROWS_AS(ecix::verify("min-order", 6, 4), std::invalid_argument);
    CHECK_THROWS_AS(ecix::verify("min-order", 4, 9), std::invalid_argument);   // theorems cap at 8
    CHECK_THROWS_AS(ecix::verify("table1-max", 1, 10), std::invalid_argument);
    CHECK(ecix::statement_ids().size() == 9);
}
