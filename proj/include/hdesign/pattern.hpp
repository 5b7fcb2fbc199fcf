#ifndef HDESIGN_PATTERN_HPP
#define HDESIGN_PATTERN_HPP

#include "hdesign/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hdesign {

struct Bipartition {
    std::vector<int> first;  // the larger class
    std::vector<int> second;
};

// The fixed pattern graph H with the constants the pipeline derives from it.
struct Pattern {
    std::string name;
    SimpleGraph graph;
    int e = 0;  // edge count
    int g = 0;  // gcd of vertex degrees
    // Witness for H inside K_{s,t}; empty for non-bipartite patterns.
    std::optional<Bipartition> bipartition;
    int s = 0;
    int t = 0;
    double eps = 0.0;  // 1/s

    bool bipartite() const { return bipartition.has_value(); }
    int order() const { return graph.order(); }
};

// Vertex v of H whose stars drive the transversal construction.
struct Anchor {
    int v = 0;
    int k = 0;  // deg(v)
    std::vector<int> U;   // class containing v
    std::vector<int> W;   // other class, contains N(v)
    std::vector<int> W1;  // N(v)
    int R = 1;            // ceil(|W| / |W1|)
    int sU = 0;
    int sW = 0;
};

// V2 independent, H[V1] a non-empty matching plus isolated vertices.
struct FriendlyPartition {
    std::vector<int> V1;
    std::vector<int> V2;
    std::vector<Edge> matched;     // matching edges inside V1
    std::vector<int> isolated;     // vertices of V1 outside the matching
};

// Throws DegeneratePattern when `graph` has no edges. Non-bipartite input
// yields a Pattern without bipartition (the pipeline refuses it).
Pattern analyze_pattern(const SimpleGraph& graph, std::string name = {});

// C4, C6, C8, P3, P4, K13, K2 and C8X (C8 with opposite vertices joined by
// length-2 paths). P3 is the path with two edges.
Pattern builtin_pattern(std::string_view name);
const std::vector<std::string>& builtin_pattern_names();
bool is_builtin_pattern(std::string_view name);

// Every proper 2-coloring, one per choice of side for each component.
std::vector<Bipartition> all_bipartitions(const SimpleGraph& graph);

// Smallest |V2| first, then smallest V1 bitmask.
std::optional<FriendlyPartition> matching_friendly_partition(const Pattern& h);

// Minimal k, then minimal R, then lowest v. Requires a bipartite pattern.
Anchor select_anchor(const Pattern& h);

bool is_divisible_order(long long n, const Pattern& h);
bool is_divisible_graph(const SimpleGraph& g, const Pattern& h);
bool is_divisible_bipartite(long long m, long long n, const Pattern& h);

} // namespace hdesign

#endif // HDESIGN_PATTERN_HPP
