#ifndef HDESIGN_PIPELINE_HPP
#define HDESIGN_PIPELINE_HPP

#include "hdesign/finisher.hpp"
#include "hdesign/packing.hpp"
#include "hdesign/reducer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hdesign {

struct PipelineOptions {
    ReducerParams reducer;
    FinisherParams finisher;
    bool debug_verify = false;
    // Try to decompose the uncovered graph as it stands before anything else.
    bool try_direct = true;
    DecomposeBudget direct_budget{200'000, 5.0, 1, 120'000};
};

struct StageCounts {
    int step1 = 0;  // reduction passes
    int step2 = 0;  // padding and batches
    int step3 = 0;  // the final X
    int total() const { return step1 + step2 + step3; }
};

struct PipelineResult {
    Packing design;
    StageCounts added;
    bool direct = false;
    std::string transcript;
    std::string report;
};

// Extends `start` to a design. Throws NotBipartite, ResourceLimit or
// ConstructionViolation.
PipelineResult run_pipeline(const Packing& start, const PipelineOptions& options = {});

// Random edge-disjoint copies removed from K_n until none fits.
Packing random_maximal_packing(int n, const Pattern& h, std::uint64_t seed);

struct SweepRow {
    int n = 0;
    std::uint64_t seed = 0;
    StageCounts added;
    bool ok = false;
    std::string error;
};

// Runs the pipeline on random maximal packings for every n in [n_lo, n_hi]
// and every seed; rows come back in (n, seed) order whatever `threads` is.
std::vector<SweepRow> sweep(const Pattern& h, int n_lo, int n_hi, const std::vector<std::uint64_t>& seeds,
    const PipelineOptions& options, int threads = 1);

std::string format_sweep_csv(const std::vector<SweepRow>& rows);

} // namespace hdesign

#endif // HDESIGN_PIPELINE_HPP
