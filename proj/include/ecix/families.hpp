// families.hpp — deterministic constructors for the named graph families.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ecix/graph.hpp"

namespace ecix {

enum class Family {
    Complete,             // K_n
    Path,                 // P_n
    Cycle,                // C_n
    Wheel,                // W_n: hub joined to a cycle of order n-1
    MatchingReduced,      // M_n: K_n minus a maximum matching (odd n: one more edge)
    CompleteSplit,        // S_{n,x}: clique K_x joined to a stable set of n-x
    PendantStar,          // H_{n,p}: dominating vertex over p isolated vertices + near-perfect matching
    CliquePath,           // G(n,D): path u_0..u_D, clique K_{n-D-1} joined to u_0,u_1,u_2
    CliquePathPartial,    // g(n,D,k): clique joined to u_0,u_1; only k members joined to u_2
    ConjectureException,  // path u_0..u_3; i clique members on u_0,u_1,u_2, the rest on u_1,u_2,u_3
};

struct FamilySpec {
    Family family;
    int n = 0;
    int p = 0;         // PendantStar
    int x = 0;         // CompleteSplit
    int diameter = 0;  // CliquePath / CliquePathPartial
    int k = 0;         // CliquePathPartial
    int i = 0;         // ConjectureException

    // Factories validate parameter ranges and throw std::invalid_argument
    // naming the violated constraint.
    static FamilySpec complete(int n);
    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec wheel(int n);
    static FamilySpec matching_reduced(int n);
    static FamilySpec complete_split(int n, int x);
    static FamilySpec pendant_star(int n, int p);
    static FamilySpec clique_path(int n, int diameter);
    static FamilySpec clique_path_partial(int n, int diameter, int k);
    static FamilySpec conjecture_exception(int n, int i);
};

Graph construct(const FamilySpec& spec);

// Closed-form ECI where available: PendantStar, CompleteSplit with x <= n-2,
// Complete and Cycle. Empty for the other variants.
std::optional<std::uint64_t> closed_eci(const FamilySpec& spec);

// Short display name, e.g. "K_5", "H(8,3)", "g(8,3,2)".
std::string family_name(const FamilySpec& spec);

}  // namespace ecix
