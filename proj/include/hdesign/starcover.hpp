#ifndef HDESIGN_STARCOVER_HPP
#define HDESIGN_STARCOVER_HPP

#include "hdesign/graph.hpp"
#include "hdesign/pattern.hpp"

#include <string>
#include <vector>

namespace hdesign {

enum class StarKind { First, Second };

struct Star {
    int center = 0;
    std::vector<int> leaves;  // sorted
    StarKind kind = StarKind::First;
};

struct StarCollection {
    std::vector<Star> stars;
    int k = 0;
    Ordering ordering;
};

// Two-phase greedy: centers in ordering position take k later neighbours
// (smallest ids first) while they can, then every vertex takes k remaining
// neighbours of any position.
StarCollection star_collection(const SimpleGraph& g, int k, const Ordering& ord);

// g minus the edges of every star.
SimpleGraph leftover_graph(const SimpleGraph& g, const StarCollection& c);

// One k-edge (the leaf set) per star, centers kept alongside.
struct Hypergraph {
    int k = 0;
    std::vector<int> centers;
    std::vector<std::vector<int>> edges;

    std::size_t size() const { return edges.size(); }
    // Largest number of edges through one vertex.
    int max_degree() const;
};

Hypergraph build_hypergraph(const StarCollection& c);

struct HyperColoring {
    std::vector<int> color;  // per edge
    int colors = 0;
};

// First-fit in edge order: each edge takes the least color unused by the
// earlier edges it meets.
HyperColoring color_hypergraph(const Hypergraph& m);

struct ColoredHypergraph {
    int k = 0;
    int R = 1;
    int sigma_size = 0;  // |W1| (R - 1)
    int colors = 0;
    std::vector<int> centers;
    std::vector<std::vector<int>> edges;
    std::vector<int> color;
    std::vector<int> subclass;  // 0..R-1
    std::vector<std::vector<int>> sigma;  // sorted; empty when evicted
    std::vector<char> evicted;

    std::size_t evicted_count() const;
};

// Splits each color class into R contiguous parts (the first parts take the
// remainder) and gives every edge a sigma set of |W1|(R-1) vertices drawn in
// increasing order from the leaves of the other parts of its class, skipping
// its own center and vertices already assigned inside its part. Edges that
// cannot be served are evicted.
ColoredHypergraph split_and_assign_sigma(const Hypergraph& m, const HyperColoring& coloring, const Anchor& anchor);

// Text dumps, one star or hyperedge per line.
std::string dump_star_collection(const StarCollection& c);
std::string dump_colored_hypergraph(const ColoredHypergraph& ch);

} // namespace hdesign

#endif // HDESIGN_STARCOVER_HPP
