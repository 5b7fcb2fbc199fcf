#ifndef HDESIGN_REDUCER_HPP
#define HDESIGN_REDUCER_HPP

#include "hdesign/decomposer.hpp"
#include "hdesign/graph.hpp"
#include "hdesign/packing.hpp"
#include "hdesign/pattern.hpp"
#include "hdesign/starcover.hpp"

#include <string>
#include <vector>

namespace hdesign {

struct ReductionState {
    Packing packing;
    SimpleGraph uncovered;
    std::vector<int> Q;  // transversal, sorted
    std::vector<int> Y;  // independent part, sorted

    int host() const { return packing.host; }
};

// Q is every vertex, Y is empty.
ReductionState initial_state(const Packing& p);

// Throws ConstructionViolation unless Q and Y partition the host, Y is
// independent in the uncovered graph and the uncovered graph matches the
// packing.
void check_state(const ReductionState& s);

// Adds `k` vertices to host and uncovered graph; returns the first new id.
int add_host_vertices(ReductionState& s, int k);

// Places `copies` (which may use only existing vertices) and removes their
// edges from the uncovered graph; throws ConstructionViolation on reuse.
void place_copies(ReductionState& s, const std::vector<Embedding>& copies);

struct Construction1Report {
    int subclasses = 0;
    int new_vertices = 0;
    int copies = 0;
};

// One copy per retained star, |U| - 1 fresh vertices per color subclass.
Construction1Report construction1(ReductionState& s, const ColoredHypergraph& ch, const Anchor& anchor, const Pattern& h);

struct Construction2Report {
    int matchings = 0;
    int edges = 0;
    int new_vertices = 0;
    int copies = 0;
    int friendly_batches = 0;
    int template_matchings = 0;
    bool friendly = false;
};

struct ReducerParams {
    int threshold_T = 0;  // 0 = default max(4|V(H)|, 16)
    int max_passes = 16;
    DecomposeBudget budget;
};

int default_threshold(const Pattern& h);

// Stopping rule pieces: a pass is tried while q > T, its result is kept when
// the transversal shrank, and iteration goes on only after a halving.
bool keep_reducing(int q, int T);
bool pass_accepted(int q_before, int q_after);
bool pass_halved(int q_before, int q_after);

// Covers every uncovered edge with both ends below `old_count`.
Construction2Report construction2(ReductionState& s, const Pattern& h, int old_count, const DecomposeBudget& budget);

struct OrderingInfo {
    Ordering ordering;
    bool fallback = false;  // plain degeneracy ordering was used
    int threshold = 0;      // ceil(q^(1/s))
    int peeled = 0;
    int max_peel_degree = 0;
    int q_degeneracy = 0;
};

OrderingInfo zaran2_ordering_info(const SimpleGraph& g, const std::vector<int>& Q, const Pattern& h);
Ordering zaran2_ordering(const SimpleGraph& g, const std::vector<int>& Q, const Pattern& h);

// ceil(q^(1/s)) in exact integer arithmetic.
int ceil_root(long long q, int s);

struct PassReport {
    int q_before = 0;
    int q_after = 0;
    int host_before = 0;
    int host_after = 0;
    int stripped = 0;
    int stars = 0;
    int colors = 0;
    int evicted = 0;
    int downdegree = 0;
    bool zaran2_ordering = false;
    bool ordering_fallback = false;
    Construction1Report c1;
    Construction2Report c2;
    bool accepted = false;
};

PassReport reduce_transversal_once(ReductionState& s, const Pattern& h, const DecomposeBudget& budget);

struct IterationResult {
    ReductionState state;
    std::vector<PassReport> passes;
    std::string status;  // "below-threshold", "slowed", "stalled" or "pass-limit"
    int threshold = 0;
    int added = 0;
};

// Passes run while |Q| > T and the previous pass halved |Q|. A pass that
// does not shrink |Q| is undone and the status is "stalled"; one that
// shrinks without halving is kept and ends the loop ("slowed" if still
// above T).
IterationResult iterate_reduction(const ReductionState& s0, const Pattern& h, const ReducerParams& params);

std::string format_transcript(const IterationResult& r);

} // namespace hdesign

#endif // HDESIGN_REDUCER_HPP
