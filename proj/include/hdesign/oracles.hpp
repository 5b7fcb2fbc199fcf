#ifndef HDESIGN_ORACLES_HPP
#define HDESIGN_ORACLES_HPP

#include "hdesign/graph.hpp"
#include "hdesign/pattern.hpp"

#include <optional>

namespace hdesign {

inline constexpr int kExtremalGuard = 10;
inline constexpr int kZarankiewiczSideGuard = 7;
inline constexpr int kZarankiewiczSGuard = 3;
inline constexpr int kRegularEdgeGuard = 64;

struct ExtremalResult {
    int edges = 0;
    SimpleGraph witness;  // an H-free graph attaining ex(n, H)
};

// ex(n, H) by branch and bound. Throws ResourceLimit for n > guard.
int brute_force_extremal(int n, const Pattern& h, int guard = kExtremalGuard);
ExtremalResult extremal_graph(int n, const Pattern& h, int guard = kExtremalGuard);

// Largest number of edges of a K_{s,s}-free subgraph of K_{m,n}.
int brute_force_zarankiewicz(int m, int n, int s);

// Largest subgraph whose non-isolated vertices all have degree r, or none.
// Throws ResourceLimit when g has more than `edge_guard` edges.
std::optional<SimpleGraph> find_r_regular_subgraph(const SimpleGraph& g, int r, int edge_guard = kRegularEdgeGuard);

} // namespace hdesign

#endif // HDESIGN_ORACLES_HPP
