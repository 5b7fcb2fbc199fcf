#ifndef HDESIGN_LOWERBOUND_HPP
#define HDESIGN_LOWERBOUND_HPP

#include "hdesign/decomposer.hpp"
#include "hdesign/packing.hpp"
#include "hdesign/pattern.hpp"

#include <optional>
#include <string>

namespace hdesign {

inline constexpr int kDoublingGuard = 40;
inline constexpr int kCompletionGuard = 16;

// Two disjoint copies of H, the second one upside down, as a bipartite
// graph with equal classes. Class one is 0..s-1, class two s..2s-1.
Pattern doubled_pattern(const Pattern& h);

struct MatchingCertificate {
    long long matching_edges = 0;
    bool friendly = false;
    int e = 0;
    // Least a with matching_edges <= e * binom(a, 2); only meaningful
    // when H is not matching-friendly.
    long long a_min = 0;

    bool admits(long long a) const;  // the counting inequality for a
    std::string text() const;
};

MatchingCertificate matching_certificate(const Pattern& h, long long matching_edges);

struct MatchingComplement {
    Packing packing;  // host 2n, uncovered graph {i, n + i}
    int n = 0;
    MatchingCertificate certificate;
};

// Smallest n <= guard with K_n decomposable into the doubled pattern, then
// the mirrored and crossed copies. Throws ResourceLimit when the search
// runs out of budget or passes the guard.
MatchingComplement matching_complement_packing(const Pattern& h, const DecomposeBudget& budget = {},
    int guard = kDoublingGuard);

struct ExtremalComplement {
    std::optional<Packing> packing;  // uncovered graph = union of the pieces
    int ex = 0;
    int pieces = 0;
    int union_edges = 0;
    DecomposeStatus status = DecomposeStatus::Exhausted;
    std::string diagnostics;
};

// Extremal H-free graph on n vertices, minus everything outside a union of
// 2e(H)-regular pieces; the complement of that union is then decomposed.
ExtremalComplement extremal_complement_packing(const Pattern& h, int n, const DecomposeBudget& budget = {});

// Least a <= max_add such that p extends to a design on host + a vertices.
// Throws ResourceLimit past the guard or when a search is inconclusive.
std::optional<int> min_completion_oracle(const Packing& p, int max_add, const DecomposeBudget& budget = {});

} // namespace hdesign

#endif // HDESIGN_LOWERBOUND_HPP
