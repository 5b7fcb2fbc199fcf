#ifndef HDESIGN_FINISHER_HPP
#define HDESIGN_FINISHER_HPP

#include "hdesign/decomposer.hpp"
#include "hdesign/packing.hpp"
#include "hdesign/pattern.hpp"
#include "hdesign/reducer.hpp"

#include <string>
#include <vector>

namespace hdesign {

struct FinisherParams {
    int m = 0;             // batch size; 0 = default_batch_m
    int m_escalations = 4; // extra tries with m + e, m + 2e, ...
    int x_steps = 8;       // X sizes tried above the smallest admissible one
    DecomposeBudget budget;
};

// Smallest multiple of e(H) that is at least 2|V(H)|.
int default_batch_m(const Pattern& h);

// e | binom(x+y+q, 2) - x*y.
bool congruence_holds(long long x, long long y, long long q, int e);

// Adds vertices (fresh, so adjacent to everything in the uncovered graph)
// until host = 1 mod e(H). They join Q. Returns how many were added.
int pad_to_congruence(ReductionState& s);

// Throws ConstructionViolation naming `stage` if some uncovered degree is
// not a multiple of g(H).
void check_degrees_mod_g(const SimpleGraph& uncovered, const Pattern& h, const std::string& stage);

struct EdgeCountReport {
    int subsets = 0;       // g-subsets of Q examined
    int batches = 0;
    int new_vertices = 0;
    int m = 0;
    int max_common = 0;    // largest common Y-neighbourhood afterwards
    int max_stray = 0;     // largest Y-degree of a batch vertex
    long long bound = 0;   // C''
    long long edges = 0;   // uncovered edges afterwards
};

EdgeCountReport reduce_edge_count(ReductionState& s, const FinisherParams& params);

struct CompletionReport {
    int q = 0;
    int y = 0;
    int moved = 0;    // isolated vertices moved into Q
    int x = 0;
    int x_tries = 0;
    long long g3_edges = 0;
    std::string trace;
};

// Completes the packing of s to a design on host + |X| vertices.
Packing complete_design(const ReductionState& s, const FinisherParams& params, CompletionReport* report = nullptr);

} // namespace hdesign

#endif // HDESIGN_FINISHER_HPP
