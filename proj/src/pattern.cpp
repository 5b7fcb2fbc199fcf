#include "hdesign/pattern.hpp"

#include "hdesign/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace hdesign {

namespace {

// Component 2-coloring; returns false for an odd cycle.
bool two_color(const SimpleGraph& g, std::vector<int>& color, std::vector<int>& component, int& components)
{
    const int n = g.order();
    color.assign(static_cast<std::size_t>(n), -1);
    component.assign(static_cast<std::size_t>(n), -1);
    components = 0;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0)
            continue;
        std::vector<int> stack{s};
        color[static_cast<std::size_t>(s)] = 0;
        component[static_cast<std::size_t>(s)] = components;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(w)] < 0) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                    component[static_cast<std::size_t>(w)] = components;
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
        ++components;
    }
    return true;
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

} // namespace

std::vector<Bipartition> all_bipartitions(const SimpleGraph& graph)
{
    std::vector<int> color, component;
    int components = 0;
    if (!two_color(graph, color, component, components))
        return {};
    if (components > 20)
        throw ResourceLimit("too many components to enumerate bipartitions");
    std::vector<Bipartition> out;
    for (std::uint32_t flips = 0; flips < (1u << components); ++flips) {
        Bipartition b;
        for (int v = 0; v < graph.order(); ++v) {
            int side = color[static_cast<std::size_t>(v)] ^ static_cast<int>((flips >> component[static_cast<std::size_t>(v)]) & 1u);
            (side == 0 ? b.first : b.second).push_back(v);
        }
        out.push_back(std::move(b));
    }
    return out;
}

Pattern analyze_pattern(const SimpleGraph& graph, std::string name)
{
    if (!graph.has_edges())
        throw DegeneratePattern("pattern has no edges");
    Pattern p;
    p.name = std::move(name);
    p.graph = graph;
    p.e = static_cast<int>(graph.size());
    p.g = 0;
    for (int v = 0; v < graph.order(); ++v)
        p.g = std::gcd(p.g, graph.degree(v));

    std::vector<Bipartition> parts = all_bipartitions(graph);
    if (parts.empty())
        return p;
    const Bipartition* best = nullptr;
    for (const Bipartition& b : parts) {
        std::size_t hi = std::max(b.first.size(), b.second.size());
        if (!best || hi < std::max(best->first.size(), best->second.size()))
            best = &b;
    }
    Bipartition chosen = *best;
    if (chosen.first.size() < chosen.second.size())
        std::swap(chosen.first, chosen.second);
    p.s = static_cast<int>(chosen.first.size());
    p.t = static_cast<int>(chosen.second.size());
    p.eps = 1.0 / p.s;
    p.bipartition = std::move(chosen);
    // Each class's degree sum is e(H).
    if (p.e % p.g != 0)
        throw std::logic_error("gcd(H) does not divide e(H) for a bipartite pattern");
    return p;
}

const std::vector<std::string>& builtin_pattern_names()
{
    static const std::vector<std::string> names{"C4", "C6", "C8", "P3", "P4", "K13", "K2", "C8X"};
    return names;
}

bool is_builtin_pattern(std::string_view name)
{
    const auto& names = builtin_pattern_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

Pattern builtin_pattern(std::string_view name)
{
    if (name == "C4")
        return analyze_pattern(SimpleGraph::cycle(4), "C4");
    if (name == "C6")
        return analyze_pattern(SimpleGraph::cycle(6), "C6");
    if (name == "C8")
        return analyze_pattern(SimpleGraph::cycle(8), "C8");
    if (name == "P3")
        return analyze_pattern(SimpleGraph::path(3), "P3");
    if (name == "P4")
        return analyze_pattern(SimpleGraph::path(4), "P4");
    if (name == "K13")
        return analyze_pattern(SimpleGraph::star(3), "K13");
    if (name == "K2")
        return analyze_pattern(SimpleGraph::path(2), "K2");
    if (name == "C8X") {
        SimpleGraph g = SimpleGraph::cycle(8);
        g.add_vertices(4);
        for (int i = 0; i < 4; ++i) {
            g.add_edge(i, 8 + i);
            g.add_edge(i + 4, 8 + i);
        }
        return analyze_pattern(g, "C8X");
    }
    throw std::invalid_argument("unknown builtin pattern '" + std::string(name) + "'");
}

std::optional<FriendlyPartition> matching_friendly_partition(const Pattern& h)
{
    const SimpleGraph& g = h.graph;
    const int n = g.order();
    if (n > 24)
        throw ResourceLimit("pattern too large for exhaustive partition scan");
    std::optional<FriendlyPartition> best;
    int best_v2 = n + 1;
    std::uint32_t best_mask = 0;
    for (std::uint32_t v1mask = 1; v1mask < (1u << n); ++v1mask) {
        int v2size = n - std::popcount(v1mask);
        if (v2size > best_v2)
            continue;
        bool ok = true;
        int matched_edges = 0;
        for (const Edge& e : g.edges()) {
            bool a = (v1mask >> e.u) & 1u;
            bool b = (v1mask >> e.v) & 1u;
            if (!a && !b) {
                ok = false;  // V2 not independent
                break;
            }
            if (a && b)
                ++matched_edges;
        }
        if (!ok || matched_edges == 0)
            continue;
        for (int v = 0; v < n && ok; ++v) {
            if (!((v1mask >> v) & 1u))
                continue;
            int inside = 0;
            for (int w : g.neighbors(v))
                if ((v1mask >> w) & 1u)
                    ++inside;
            if (inside > 1)
                ok = false;
        }
        if (!ok)
            continue;
        if (v2size < best_v2 || (v2size == best_v2 && v1mask < best_mask)) {
            best_v2 = v2size;
            best_mask = v1mask;
            FriendlyPartition fp;
            for (int v = 0; v < n; ++v)
                ((best_mask >> v) & 1u ? fp.V1 : fp.V2).push_back(v);
            std::vector<char> in_matching(static_cast<std::size_t>(n), 0);
            for (const Edge& e : g.edges())
                if (((best_mask >> e.u) & 1u) && ((best_mask >> e.v) & 1u)) {
                    fp.matched.push_back(e);
                    in_matching[static_cast<std::size_t>(e.u)] = in_matching[static_cast<std::size_t>(e.v)] = 1;
                }
            for (int v : fp.V1)
                if (!in_matching[static_cast<std::size_t>(v)])
                    fp.isolated.push_back(v);
            best = std::move(fp);
        }
    }
    return best;
}

Anchor select_anchor(const Pattern& h)
{
    if (!h.bipartite())
        throw NotBipartite("anchor selection needs a bipartite pattern");
    std::optional<Anchor> best;
    auto key = [](const Anchor& a) { return std::make_tuple(a.k, a.R, a.v); };
    for (const Bipartition& b : all_bipartitions(h.graph)) {
        for (int side = 0; side < 2; ++side) {
            const std::vector<int>& U = side == 0 ? b.first : b.second;
            const std::vector<int>& W = side == 0 ? b.second : b.first;
            if (U.size() < W.size())
                continue;
            for (int v : U) {
                int k = h.graph.degree(v);
                if (k == 0)
                    continue;
                Anchor a;
                a.v = v;
                a.k = k;
                a.U = U;
                a.W = W;
                a.W1 = h.graph.neighbors(v);
                a.R = static_cast<int>((W.size() + a.W1.size() - 1) / a.W1.size());
                a.sU = static_cast<int>(U.size());
                a.sW = static_cast<int>(W.size());
                if (!best || key(a) < key(*best))
                    best = std::move(a);
            }
        }
    }
    if (!best)
        throw NotBipartite("no anchor vertex found");
    return *best;
}

bool is_divisible_order(long long n, const Pattern& h)
{
    long long pairs = n * (n - 1) / 2;
    return pairs % h.e == 0 && mod(n - 1, h.g) == 0;
}

bool is_divisible_graph(const SimpleGraph& g, const Pattern& h)
{
    if (g.size() % static_cast<std::size_t>(h.e) != 0)
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) % h.g != 0)
            return false;
    return true;
}

bool is_divisible_bipartite(long long m, long long n, const Pattern& h)
{
    return (m * n) % h.e == 0 && m % h.g == 0 && n % h.g == 0;
}

} // namespace hdesign
