#include "hdesign/starcover.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hdesign {

namespace {

// Takes the k smallest-id neighbours of c accepted by `ok` while there are
// at least k of them.
template <class Pred>
void take_stars(SimpleGraph& rest, int c, int k, StarKind kind, Pred ok, std::vector<Star>& out)
{
    while (true) {
        std::vector<int> cand;
        for_each_bit(rest.row(c), [&](int w) {
            if (ok(w))
                cand.push_back(w);
        });
        if (static_cast<int>(cand.size()) < k)
            return;
        cand.resize(static_cast<std::size_t>(k));
        for (int w : cand)
            rest.remove_edge(c, w);
        out.push_back(Star{c, std::move(cand), kind});
    }
}

} // namespace

StarCollection star_collection(const SimpleGraph& g, int k, const Ordering& ord)
{
    if (k < 1)
        throw std::invalid_argument("star_collection: k must be positive");
    const std::vector<int> pos = ord.positions(g.order());
    StarCollection c;
    c.k = k;
    c.ordering = ord;
    SimpleGraph rest = g;
    for (int center : ord.perm) {
        const int pc = pos[static_cast<std::size_t>(center)];
        take_stars(rest, center, k, StarKind::First,
            [&](int w) { return pos[static_cast<std::size_t>(w)] > pc; }, c.stars);
    }
    for (int center : ord.perm)
        take_stars(rest, center, k, StarKind::Second, [](int) { return true; }, c.stars);
    return c;
}

SimpleGraph leftover_graph(const SimpleGraph& g, const StarCollection& c)
{
    SimpleGraph rest = g;
    for (const Star& s : c.stars)
        for (int w : s.leaves)
            rest.remove_edge(s.center, w);
    return rest;
}

int Hypergraph::max_degree() const
{
    std::map<int, int> deg;
    int best = 0;
    for (const auto& e : edges)
        for (int v : e)
            best = std::max(best, ++deg[v]);
    return best;
}

Hypergraph build_hypergraph(const StarCollection& c)
{
    Hypergraph m;
    m.k = c.k;
    for (const Star& s : c.stars) {
        m.centers.push_back(s.center);
        m.edges.push_back(s.leaves);
    }
    return m;
}

HyperColoring color_hypergraph(const Hypergraph& m)
{
    HyperColoring out;
    out.color.assign(m.size(), -1);
    // colors already present at each vertex
    std::map<int, std::vector<int>> at;
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<char> used(static_cast<std::size_t>(out.colors) + 1, 0);
        for (int v : m.edges[i]) {
            auto it = at.find(v);
            if (it == at.end())
                continue;
            for (int c : it->second)
                used[static_cast<std::size_t>(c)] = 1;
        }
        int c = 0;
        while (used[static_cast<std::size_t>(c)])
            ++c;
        out.color[i] = c;
        out.colors = std::max(out.colors, c + 1);
        for (int v : m.edges[i])
            at[v].push_back(c);
    }
    return out;
}

std::size_t ColoredHypergraph::evicted_count() const
{
    return static_cast<std::size_t>(std::count(evicted.begin(), evicted.end(), 1));
}

ColoredHypergraph split_and_assign_sigma(const Hypergraph& m, const HyperColoring& coloring, const Anchor& anchor)
{
    ColoredHypergraph ch;
    ch.k = m.k;
    ch.R = anchor.R;
    ch.sigma_size = static_cast<int>(anchor.W1.size()) * (anchor.R - 1);
    ch.colors = coloring.colors;
    ch.centers = m.centers;
    ch.edges = m.edges;
    ch.color = coloring.color;
    ch.subclass.assign(m.size(), 0);
    ch.sigma.assign(m.size(), {});
    ch.evicted.assign(m.size(), 0);

    std::vector<std::vector<std::size_t>> classes(static_cast<std::size_t>(coloring.colors));
    for (std::size_t i = 0; i < m.size(); ++i)
        classes[static_cast<std::size_t>(coloring.color[i])].push_back(i);

    const int R = anchor.R;
    for (const auto& cls : classes) {
        const std::size_t total = cls.size();
        const std::size_t base = total / static_cast<std::size_t>(R);
        const std::size_t extra = total % static_cast<std::size_t>(R);
        std::size_t at = 0;
        for (int j = 0; j < R; ++j) {
            std::size_t len = base + (static_cast<std::size_t>(j) < extra ? 1 : 0);
            for (std::size_t t = 0; t < len; ++t)
                ch.subclass[cls[at + t]] = j;
            at += len;
        }
        if (ch.sigma_size == 0)
            continue;
        for (int j = 0; j < R; ++j) {
            std::vector<int> pool;
            for (std::size_t e : cls)
                if (ch.subclass[e] != j)
                    pool.insert(pool.end(), ch.edges[e].begin(), ch.edges[e].end());
            std::sort(pool.begin(), pool.end());
            pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
            std::vector<char> taken(pool.size(), 0);
            for (std::size_t e : cls) {
                if (ch.subclass[e] != j)
                    continue;
                std::vector<std::size_t> pick;
                for (std::size_t p = 0; p < pool.size() && static_cast<int>(pick.size()) < ch.sigma_size; ++p)
                    if (!taken[p] && pool[p] != ch.centers[e])
                        pick.push_back(p);
                if (static_cast<int>(pick.size()) < ch.sigma_size) {
                    ch.evicted[e] = 1;
                    continue;
                }
                for (std::size_t p : pick) {
                    taken[p] = 1;
                    ch.sigma[e].push_back(pool[p]);
                }
            }
        }
    }
    return ch;
}

std::string dump_star_collection(const StarCollection& c)
{
    std::ostringstream out;
    out << "stars k=" << c.k << " count=" << c.stars.size() << '\n';
    for (const Star& s : c.stars) {
        out << (s.kind == StarKind::First ? "first " : "second ") << s.center << " :";
        for (int w : s.leaves)
            out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

std::string dump_colored_hypergraph(const ColoredHypergraph& ch)
{
    std::ostringstream out;
    out << "hypergraph k=" << ch.k << " edges=" << ch.edges.size() << " colors=" << ch.colors << " R=" << ch.R
        << " evicted=" << ch.evicted_count() << '\n';
    for (std::size_t i = 0; i < ch.edges.size(); ++i) {
        out << "edge " << i << " center " << ch.centers[i] << " leaves";
        for (int v : ch.edges[i])
            out << ' ' << v;
        out << " color " << ch.color[i] << " part " << ch.subclass[i] + 1;
        if (ch.evicted[i]) {
            out << " evicted\n";
            continue;
        }
        out << " sigma";
        for (int v : ch.sigma[i])
            out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

} // namespace hdesign
