#ifndef HDESIGN_DECOMPOSER_HPP
#define HDESIGN_DECOMPOSER_HPP

#include "hdesign/graph.hpp"
#include "hdesign/packing.hpp"
#include "hdesign/pattern.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hdesign {

enum class DecomposeStatus { Found, NotDivisible, Exhausted, BudgetExceeded };

const char* to_string(DecomposeStatus s);

struct DecomposeBudget {
    std::uint64_t node_limit = 20'000'000;  // summed over restarts
    double seconds = 120.0;
    std::uint64_t seed = 1;
    // Above this many candidate copies the search switches to randomized
    // greedy packing with an exact search on the remainder.
    std::size_t row_cap = 120'000;
};

struct DecomposeResult {
    DecomposeStatus status = DecomposeStatus::Exhausted;
    std::optional<Packing> packing;  // host = g.order(), vertex ids of g
    std::string reason;
    std::uint64_t nodes = 0;
    int restarts = 0;
    bool hybrid = false;

    bool found() const { return status == DecomposeStatus::Found; }
};

DecomposeResult decompose_exact(const SimpleGraph& g, const Pattern& h, const DecomposeBudget& budget = {});

// Runs decompose_exact and throws ResourceLimit (with `what` and the
// reason) unless a decomposition is found.
std::vector<Embedding> require_decomposition(const SimpleGraph& g, const Pattern& h, const DecomposeBudget& budget,
    const std::string& what);

// Decomposition of K_{a,b} with classes 0..a-1 and a..a+b-1, assembled from
// smaller divisible blocks. Results are cached per pattern.
DecomposeResult decompose_complete_bipartite(int a, int b, const Pattern& h, const DecomposeBudget& budget = {});

// Copies covering K(A, B) for disjoint host vertex lists A and B; throws
// ResourceLimit when no decomposition is found.
std::vector<Embedding> cover_complete_bipartite(std::span<const int> A, std::span<const int> B, const Pattern& h,
    const DecomposeBudget& budget, const std::string& what);

// A complete design of K_r, cached in memory and, when a cache directory is
// set, on disk. Returns none when K_r has no decomposition; throws
// ResourceLimit when the search budget runs out.
std::optional<Packing> complete_graph_design(int r, const Pattern& h, const DecomposeBudget& budget = {});

void set_design_cache_dir(std::optional<std::filesystem::path> dir);
void clear_design_cache();

inline constexpr int kPackableRGuard = 40;

// Least r with binom(r,2) >= lower_bound, r divisible for h and K_r
// decomposable. Throws ResourceLimit past the guard.
int smallest_packable_r(const Pattern& h, long long lower_bound, int guard = kPackableRGuard,
    const DecomposeBudget& budget = {});

struct TemplateCover {
    std::vector<Embedding> copies;
    int new_vertices = 0;
};

// One template copy per matching edge (u,v), u < v: the copy's least image
// edge (x,y), x < y, is moved onto (u,v) and every other template vertex t
// goes to fresh_base + t. Throws InsufficientTemplate when there are fewer
// template copies than matching edges.
TemplateCover cover_matching_via_template(const Matching& L, const Pattern& h, int r, const Packing& templ, int fresh_base);

// Renames the vertices of every copy through `vertex_map`.
std::vector<Embedding> relabel(const std::vector<Embedding>& copies, std::span<const int> vertex_map);

} // namespace hdesign

#endif // HDESIGN_DECOMPOSER_HPP
