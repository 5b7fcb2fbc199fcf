#ifndef HDESIGN_SUBGRAPH_HPP
#define HDESIGN_SUBGRAPH_HPP

#include "hdesign/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace hdesign {

// Injective map from pattern vertices to host vertices: image[i] is the host
// vertex carrying pattern vertex i.
struct Embedding {
    std::vector<int> image;

    int operator[](std::size_t i) const { return image[i]; }
    std::size_t size() const { return image.size(); }
    bool operator==(const Embedding&) const = default;
};

// Host edges covered by `emb` when `pattern` is placed through it.
std::vector<Edge> image_edges(const SimpleGraph& pattern, const Embedding& emb);

// Precomputed matching order for a pattern: each vertex after the first of
// its component has an earlier neighbour, high-degree vertices first.
class SearchPlan {
public:
    explicit SearchPlan(const SimpleGraph& pattern);
    // Same, but the pattern edge (a, b) is matched first.
    SearchPlan(const SimpleGraph& pattern, int first_a, int first_b);

    const SimpleGraph& pattern() const { return pattern_; }
    const std::vector<int>& order() const { return order_; }
    // Pattern vertices earlier in the order adjacent to order()[i].
    const std::vector<std::vector<int>>& back_neighbors() const { return back_; }

private:
    void build(std::vector<int> seed);

    SimpleGraph pattern_;
    std::vector<int> order_;
    std::vector<std::vector<int>> back_;
};

// Visitor returns false to stop the enumeration.
using EmbeddingVisitor = std::function<bool(const Embedding&)>;

struct SearchControl {
    // Randomize candidate order (shuffled per level) when set.
    std::mt19937_64* rng = nullptr;
    // Stop after this many backtracking nodes (0 = unlimited).
    std::uint64_t node_limit = 0;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    bool truncated = false;
};

// Enumerates injective edge-preserving maps of plan.pattern() into host.
// `fixed` pins a prefix of plan.order() to given host vertices.
SearchStats for_each_embedding(const SimpleGraph& host, const SearchPlan& plan, const EmbeddingVisitor& visit,
    const SearchControl& control = {}, std::span<const int> fixed = {});

std::optional<Embedding> find_pattern_copy(const SimpleGraph& host, const SimpleGraph& pattern);

// A copy of `pattern` containing host edge e, or none.
std::optional<Embedding> find_copy_through(const SimpleGraph& host, const SimpleGraph& pattern, Edge e,
    std::mt19937_64* rng = nullptr);

// Distinct copies (distinct image edge sets), each reported once.
std::vector<Embedding> enumerate_copies(const SimpleGraph& host, const SimpleGraph& pattern,
    std::size_t limit, bool* truncated = nullptr);

struct StripResult {
    SimpleGraph remainder;
    std::vector<Embedding> removed;
};

// Greedily removes edge-disjoint copies until the remainder is pattern-free.
// With an rng, copies are located in randomized order.
StripResult strip_to_pattern_free(const SimpleGraph& g, const SimpleGraph& pattern, std::mt19937_64* rng = nullptr);

// Automorphism count of a small pattern.
std::uint64_t automorphism_count(const SimpleGraph& pattern);

// Answers "does the host contain a copy of the pattern using edge uv", with
// one seeded plan per automorphism orbit of oriented pattern edges.
class EdgeCopyDetector {
public:
    explicit EdgeCopyDetector(const SimpleGraph& pattern);

    bool contains_through(const SimpleGraph& host, int u, int v) const;
    std::optional<Embedding> copy_through(const SimpleGraph& host, int u, int v, std::mt19937_64* rng = nullptr) const;

private:
    std::vector<SearchPlan> plans_;
};

} // namespace hdesign

#endif // HDESIGN_SUBGRAPH_HPP
