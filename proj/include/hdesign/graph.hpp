#ifndef HDESIGN_GRAPH_HPP
#define HDESIGN_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hdesign {

// Unordered vertex pair, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Calls f(index) for every set bit of a word array.
template <class F>
void for_each_bit(std::span<const std::uint64_t> words, F&& f)
{
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            f(static_cast<int>(w * 64 + b));
        }
    }
}

// Undirected simple graph on vertices 0..n-1, stored as an adjacency bit
// matrix plus a degree array.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    static SimpleGraph complete(int n);
    // Classes are 0..a-1 and a..a+b-1.
    static SimpleGraph complete_bipartite(int a, int b);
    static SimpleGraph cycle(int n);
    // Path on n vertices (n-1 edges).
    static SimpleGraph path(int n);
    // Star with center 0 and k leaves.
    static SimpleGraph star(int k);
    static SimpleGraph from_edges(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return m_; }
    bool has_edges() const { return m_ != 0; }

    bool has_edge(int u, int v) const;
    // Returns false when the edge is already present. Loops and
    // out-of-range endpoints throw std::invalid_argument.
    bool add_edge(int u, int v);
    bool add_edge(Edge e) { return add_edge(e.u, e.v); }
    bool remove_edge(int u, int v);
    bool remove_edge(Edge e) { return remove_edge(e.u, e.v); }

    int degree(int v) const { return deg_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& degrees() const { return deg_; }
    int max_degree() const;
    int min_degree() const;

    std::vector<int> neighbors(int v) const;
    // Sorted lexicographically.
    std::vector<Edge> edges() const;

    // Appends k isolated vertices.
    void add_vertices(int k);

    // Subgraph induced on `vertices`; vertex i of the result is vertices[i].
    SimpleGraph induced(std::span<const int> vertices) const;
    SimpleGraph complement() const;

    std::span<const std::uint64_t> row(int v) const
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    int words() const { return words_; }

    bool operator==(const SimpleGraph& other) const;

private:
    std::uint64_t* row_ptr(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> deg_;
};

// perm[i] is the vertex at position i (v_{i+1}).
struct Ordering {
    std::vector<int> perm;

    std::size_t size() const { return perm.size(); }
    // position[v] for every vertex; throws InvalidOrdering unless perm is a
    // permutation of 0..n-1.
    std::vector<int> positions(int n) const;
};

struct Matching {
    std::vector<Edge> edges;
};

struct DegeneracyResult {
    Ordering ordering;
    int degeneracy = 0;
};

// Min-degree peeling, lowest id on ties; the first peeled vertex is placed
// last in the ordering.
DegeneracyResult degeneracy_ordering(const SimpleGraph& g);

// Maximum number of neighbours a vertex has among earlier vertices.
int downdegree(const SimpleGraph& g, const Ordering& ord);

// Proper edge coloring with at most max_degree + 1 colors (Misra-Gries fan
// rotation), returned as one matching per non-empty color class.
std::vector<Matching> edge_color_matchings(const SimpleGraph& g);

bool is_independent(const SimpleGraph& g, std::span<const int> vertices);
// True when every edge meets `vertices`.
bool is_transversal(const SimpleGraph& g, std::span<const int> vertices);

} // namespace hdesign

#endif // HDESIGN_GRAPH_HPP
