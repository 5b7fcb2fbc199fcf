#include "hdesign/graph.hpp"

#include "hdesign/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hdesign {

SimpleGraph::SimpleGraph(int n)
    : n_(n)
    , words_((n + 63) / 64)
    , bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64), 0)
    , deg_(static_cast<std::size_t>(n), 0)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
}

SimpleGraph SimpleGraph::complete(int n)
{
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::complete_bipartite(int a, int b)
{
    SimpleGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::cycle(int n)
{
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph SimpleGraph::path(int n)
{
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

SimpleGraph SimpleGraph::star(int k)
{
    SimpleGraph g(k + 1);
    for (int i = 1; i <= k; ++i)
        g.add_edge(0, i);
    return g;
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const Edge> edges)
{
    SimpleGraph g(n);
    for (const Edge& e : edges) {
        if (!g.add_edge(e.u, e.v))
            throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    return g;
}

void SimpleGraph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool SimpleGraph::has_edge(int u, int v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        return false;
    return (row(u)[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
}

bool SimpleGraph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        return false;
    row_ptr(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    row_ptr(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
    ++deg_[static_cast<std::size_t>(u)];
    ++deg_[static_cast<std::size_t>(v)];
    ++m_;
    return true;
}

bool SimpleGraph::remove_edge(int u, int v)
{
    if (!has_edge(u, v))
        return false;
    row_ptr(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    row_ptr(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
    --deg_[static_cast<std::size_t>(u)];
    --deg_[static_cast<std::size_t>(v)];
    --m_;
    return true;
}

int SimpleGraph::max_degree() const
{
    return deg_.empty() ? 0 : *std::max_element(deg_.begin(), deg_.end());
}

int SimpleGraph::min_degree() const
{
    return deg_.empty() ? 0 : *std::min_element(deg_.begin(), deg_.end());
}

std::vector<int> SimpleGraph::neighbors(int v) const
{
    check_vertex(v);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for_each_bit(row(v), [&](int w) { out.push_back(w); });
    return out;
}

std::vector<Edge> SimpleGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for_each_bit(row(u), [&](int w) {
            if (w > u)
                out.push_back({u, w});
        });
    return out;
}

void SimpleGraph::add_vertices(int k)
{
    if (k <= 0)
        return;
    SimpleGraph bigger(n_ + k);
    for (const Edge& e : edges())
        bigger.add_edge(e.u, e.v);
    *this = std::move(bigger);
}

SimpleGraph SimpleGraph::induced(std::span<const int> vertices) const
{
    SimpleGraph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (has_edge(vertices[i], vertices[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

SimpleGraph SimpleGraph::complement() const
{
    SimpleGraph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v))
                g.add_edge(u, v);
    return g;
}

bool SimpleGraph::operator==(const SimpleGraph& other) const
{
    return n_ == other.n_ && m_ == other.m_ && bits_ == other.bits_;
}

std::vector<int> Ordering::positions(int n) const
{
    if (static_cast<int>(perm.size()) != n)
        throw InvalidOrdering("ordering has " + std::to_string(perm.size()) + " entries for " + std::to_string(n) + " vertices");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        int v = perm[i];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
            throw InvalidOrdering("ordering is not a permutation (vertex " + std::to_string(v) + ")");
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    return pos;
}

DegeneracyResult degeneracy_ordering(const SimpleGraph& g)
{
    const int n = g.order();
    std::vector<int> deg = g.degrees();
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<int> peeled;
    peeled.reserve(static_cast<std::size_t>(n));
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] && (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
                best = v;
        d = std::max(d, deg[static_cast<std::size_t>(best)]);
        removed[static_cast<std::size_t>(best)] = 1;
        peeled.push_back(best);
        for_each_bit(g.row(best), [&](int w) {
            if (!removed[static_cast<std::size_t>(w)])
                --deg[static_cast<std::size_t>(w)];
        });
    }
    std::reverse(peeled.begin(), peeled.end());
    return {Ordering{std::move(peeled)}, d};
}

int downdegree(const SimpleGraph& g, const Ordering& ord)
{
    const std::vector<int> pos = ord.positions(g.order());
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        int back = 0;
        for_each_bit(g.row(v), [&](int w) {
            if (pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(v)])
                ++back;
        });
        best = std::max(best, back);
    }
    return best;
}

namespace {

// State for Misra-Gries: color of each edge and, per vertex, which neighbour
// (if any) is reached through each color.
class FanColoring {
public:
    FanColoring(const SimpleGraph& g, int colors)
        : g_(g)
        , n_(g.order())
        , colors_(colors)
        , edge_color_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1)
        , at_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(colors), -1)
    {
    }

    int color(int u, int v) const { return edge_color_[idx(u, v)]; }
    bool is_free(int v, int c) const { return at_[static_cast<std::size_t>(v) * colors_ + c] < 0; }
    int free_color(int v) const
    {
        for (int c = 0; c < colors_; ++c)
            if (is_free(v, c))
                return c;
        return -1;
    }

    void set(int u, int v, int c)
    {
        edge_color_[idx(u, v)] = c;
        edge_color_[idx(v, u)] = c;
        at_[static_cast<std::size_t>(u) * colors_ + c] = v;
        at_[static_cast<std::size_t>(v) * colors_ + c] = u;
    }

    void unset(int u, int v)
    {
        int c = color(u, v);
        if (c < 0)
            return;
        edge_color_[idx(u, v)] = -1;
        edge_color_[idx(v, u)] = -1;
        at_[static_cast<std::size_t>(u) * colors_ + c] = -1;
        at_[static_cast<std::size_t>(v) * colors_ + c] = -1;
    }

    void color_edge(int u, int v)
    {
        for (int c = 0; c < colors_; ++c)
            if (is_free(u, c) && is_free(v, c)) {
                set(u, v, c);
                return;
            }

        // Maximal fan of u starting at v.
        std::vector<int> fan{v};
        std::vector<char> in_fan(static_cast<std::size_t>(n_), 0);
        in_fan[static_cast<std::size_t>(v)] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            int last = fan.back();
            for_each_bit(g_.row(u), [&](int w) {
                if (grew || in_fan[static_cast<std::size_t>(w)])
                    return;
                int c = color(u, w);
                if (c >= 0 && is_free(last, c)) {
                    fan.push_back(w);
                    in_fan[static_cast<std::size_t>(w)] = 1;
                    grew = true;
                }
            });
        }

        const int c = free_color(u);
        const int d = free_color(fan.back());

        // Invert the cd path starting at u; it begins with a d-edge since c
        // is free on u.
        if (c != d) {
            std::vector<std::pair<int, int>> path;
            int cur = u;
            int want = d;
            while (true) {
                int nxt = at_[static_cast<std::size_t>(cur) * colors_ + want];
                if (nxt < 0)
                    break;
                path.emplace_back(cur, nxt);
                cur = nxt;
                want = want == d ? c : d;
            }
            std::vector<int> old;
            old.reserve(path.size());
            for (auto [a, b] : path) {
                old.push_back(color(a, b));
                unset(a, b);
            }
            for (std::size_t i = 0; i < path.size(); ++i)
                set(path[i].first, path[i].second, old[i] == c ? d : c);
        }

        // First fan vertex w with d free such that the prefix is still a fan.
        std::size_t w = 0;
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                int ci = color(u, fan[i]);
                if (ci < 0 || !is_free(fan[i - 1], ci))
                    break;
            }
            if (is_free(fan[i], d)) {
                w = i;
                break;
            }
            w = fan.size();
        }
        if (w >= fan.size())
            throw std::logic_error("fan rotation failed");

        // Rotate the prefix fan[0..w].
        std::vector<int> shifted;
        for (std::size_t i = 0; i < w; ++i)
            shifted.push_back(color(u, fan[i + 1]));
        for (std::size_t i = 1; i <= w; ++i)
            unset(u, fan[i]);
        for (std::size_t i = 0; i < w; ++i)
            set(u, fan[i], shifted[i]);
        set(u, fan[w], d);
    }

private:
    std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

    const SimpleGraph& g_;
    int n_;
    int colors_;
    std::vector<int> edge_color_;
    std::vector<int> at_;
};

} // namespace

std::vector<Matching> edge_color_matchings(const SimpleGraph& g)
{
    if (!g.has_edges())
        return {};
    const int colors = g.max_degree() + 1;
    FanColoring state(g, colors);
    const std::vector<Edge> edges = g.edges();
    for (const Edge& e : edges)
        state.color_edge(e.u, e.v);

    std::vector<Matching> classes(static_cast<std::size_t>(colors));
    for (const Edge& e : edges)
        classes[static_cast<std::size_t>(state.color(e.u, e.v))].edges.push_back(e);
    std::erase_if(classes, [](const Matching& m) { return m.edges.empty(); });
    return classes;
}

bool is_independent(const SimpleGraph& g, std::span<const int> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_transversal(const SimpleGraph& g, std::span<const int> vertices)
{
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (int v : vertices)
        in[static_cast<std::size_t>(v)] = 1;
    for (const Edge& e : g.edges())
        if (!in[static_cast<std::size_t>(e.u)] && !in[static_cast<std::size_t>(e.v)])
            return false;
    return true;
}

} // namespace hdesign
