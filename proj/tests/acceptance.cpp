// Acceptance suite: one line per criterion, nonzero exit on any failure.
// All checks are exact-integer; no tolerances anywhere.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ecix/canonical.hpp"
#include "ecix/enumerate.hpp"
#include "ecix/extremal.hpp"
#include "ecix/families.hpp"
#include "ecix/graph6.hpp"
#include "ecix/report.hpp"
#include "oracle.hpp"

using ecix::ClassFilter;
using ecix::Direction;
using ecix::FamilySpec;
using ecix::Graph;
using ecix::Verdict;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, double seconds,
            const std::string& extra = "") {
    std::printf("%s criterion %d: %s (%.1f s)%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                seconds, extra.empty() ? "" : ("  [" + extra + "]").c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void dump_counterexamples(const ecix::VerificationOutcome& outcome) {
    std::fputs(ecix::emit_report(outcome, ecix::Format::Table).c_str(), stdout);
}

bool verdict_ok(const ecix::VerificationOutcome& outcome) {
    if (outcome.verdict != Verdict::Pass && outcome.verdict != Verdict::ConjectureHolds)
        dump_counterexamples(outcome);
    return outcome.verdict == Verdict::Pass || outcome.verdict == Verdict::ConjectureHolds;
}

std::set<std::string> optima_keys(const ecix::ExtremalResult& r) {
    std::set<std::string> keys;
    for (const auto& g : r.optima) keys.insert(ecix::encode_graph6(g));
    return keys;
}

std::string key_of(const FamilySpec& spec) {
    return ecix::canonical_key(ecix::construct(spec)).g6;
}

ClassFilter order_only(int n) {
    ClassFilter f;
    f.n = n;
    return f;
}

// 1. Minimum ECI for fixed order: 3(n-1), star unique, n = 4..8.
void criterion1() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = verdict_ok(ecix::verify("min-order", 4, 8));
    for (int n = 4; n <= 8 && ok; ++n) {
        const auto r = ecix::search_extremal(order_only(n), Direction::Min);
        ok = r.value == 3ull * static_cast<std::uint64_t>(n - 1) &&
             optima_keys(r) == std::set<std::string>{key_of(FamilySpec::complete_split(n, 1))};
    }
    report(1, "minimum ECI for fixed order equals 3(n-1) with the star unique, n=4..8", ok,
           seconds_since(start));
}

// 2. Minimum ECI for fixed order and pending count, n = 4..8.
void criterion2() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = verdict_ok(ecix::verify("min-pending", 4, 8));
    if (ok) {
        ClassFilter f = order_only(6);
        f.pending = 0;
        const auto r = ecix::search_extremal(f, Direction::Min);
        ok = r.value == 26 && optima_keys(r) == std::set<std::string>{key_of(FamilySpec::complete_split(6, 2))};
    }
    if (ok) {
        ClassFilter f = order_only(8);
        f.pending = 3;
        const auto r = ecix::search_extremal(f, Direction::Min);
        ok = r.value == 29 && optima_keys(r) == std::set<std::string>{key_of(FamilySpec::pendant_star(8, 3))};
    }
    report(2, "minimum ECI per (n,p) matches the known optima, n=4..8, p<=n-3", ok,
           seconds_since(start));
}

// 3. p = n-1 forces the star; p = n-2 forces ECI = 5n-6, n = 4..8.
void criterion3() {
    const auto start = std::chrono::steady_clock::now();
    const bool ok = verdict_ok(ecix::verify("pendant-extreme", 4, 8));
    report(3, "pendant-extreme classes: p=n-1 is the star, p=n-2 has ECI 5n-6, n=4..8", ok,
           seconds_since(start));
}

// 4. Table 1 maximum optima sets, n = 4..9.
void criterion4() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = verdict_ok(ecix::verify("table1-max", 4, 9));
    if (ok) {
        const auto r = ecix::search_extremal(order_only(9), Direction::Max);
        ok = r.class_size == 261080 && r.value == 134 &&
             optima_keys(r) == std::set<std::string>{key_of(FamilySpec::clique_path(9, 5))};
    }
    report(4, "maximum ECI optima reproduce Table 1 (M_n, W_5, G(8,4), G(9,5)), n=4..9", ok,
           seconds_since(start));
}

// 5. Zhou-Du bound with its equality characterization, n = 4..7, all m.
void criterion5() {
    const auto start = std::chrono::steady_clock::now();
    const bool ok = verdict_ok(ecix::verify("zd10-min", 4, 7));
    report(5, "Zhou-Du minimum 4m-k(n-1) and its equality biconditional, n=4..7, all m", ok,
           seconds_since(start));
}

// 6. Conjecture stress test, n = 5..8, all m in [n-1, C(n-1,2)].
void criterion6() {
    const auto start = std::chrono::steady_clock::now();
    const auto outcome = ecix::verify("conjecture-max", 5, 8);
    const bool consistent =
        (outcome.verdict == Verdict::ConjectureHolds) == outcome.counterexamples.empty();
    if (outcome.verdict == Verdict::ConjectureRefuted) dump_counterexamples(outcome);
    report(6, "conjectured maximum g(n,D,k) with the D=3 exception family, n=5..8", consistent,
           seconds_since(start), "verdict " + ecix::verdict_name(outcome.verdict));
}

// 7. Property suites.
void criterion7() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string failed;

    // closed-form / constructed equality across 4 <= n <= 50
    for (int n = 4; n <= 50 && ok; ++n) {
        for (int p = 0; p <= n - 3 && ok; ++p) {
            const auto spec = FamilySpec::pendant_star(n, p);
            ok = *ecix::closed_eci(spec) == ecix::eci(ecix::construct(spec));
        }
        for (int x = 1; x <= n - 2 && ok; ++x) {
            const auto spec = FamilySpec::complete_split(n, x);
            ok = *ecix::closed_eci(spec) == ecix::eci(ecix::construct(spec));
        }
        if (ok) ok = *ecix::closed_eci(FamilySpec::complete(n)) == ecix::eci(ecix::construct(FamilySpec::complete(n)));
        if (ok) ok = *ecix::closed_eci(FamilySpec::cycle(n)) == ecix::eci(ecix::construct(FamilySpec::cycle(n)));
    }
    if (!ok) failed = "closed-form equality";

    // connected class counts for n = 2..8
    if (ok) {
        const std::uint64_t expected[] = {1, 2, 6, 21, 112, 853, 11117};
        for (int n = 2; n <= 8 && ok; ++n) ok = ecix::count_connected(order_only(n)) == expected[n - 2];
        if (!ok) failed = "enumeration counts";
    }

    // canonical-key permutation invariance, 10^3 trials
    if (ok) {
        std::mt19937 rng(160914);
        std::uniform_int_distribution<int> order(1, 10);
        std::uniform_real_distribution<double> density(0.0, 1.0);
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            const Graph g = oracle::random_graph(rng, order(rng), density(rng));
            ok = ecix::canonical_key(oracle::permuted(rng, g)) == ecix::canonical_key(g);
        }
        if (!ok) failed = "canonical-key invariance";
    }

    // graph6 roundtrip fuzz, 10^4 cases
    if (ok) {
        std::mt19937 rng(603901);
        std::uniform_int_distribution<int> order(1, 12);
        std::uniform_real_distribution<double> density(0.0, 1.0);
        for (int trial = 0; trial < 10000 && ok; ++trial) {
            const Graph g = oracle::random_graph(rng, order(rng), density(rng));
            ok = ecix::decode_graph6(ecix::encode_graph6(g)) == g;
        }
        if (!ok) failed = "graph6 roundtrip";
    }

    // g(n,D,k) edge-count identity for all valid parameters, n <= 20
    if (ok) {
        for (int n = 4; n <= 20 && ok; ++n)
            for (int D = 2; D <= n - 1 && ok; ++D)
                for (int k = 0; k <= n - D - 1 && ok; ++k) {
                    const auto g = ecix::construct(FamilySpec::clique_path_partial(n, D, k));
                    const std::int64_t nd = n - D + 1;
                    ok = g.edge_count() == nd * (nd - 1) / 2 + D - 1 + k;
                }
        if (!ok) failed = "g(n,D,k) edge identity";
    }

    report(7, "property suites: closed forms, counts, canonical keys, graph6, edge identity", ok,
           seconds_since(start), failed);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (failures == 0)
        std::puts("acceptance: all criteria passed");
    else
        std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
