#include "doctest.h"

#include "hdesign/starcover.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace hdesign;

namespace {

SimpleGraph gnp(int n, double p, std::mt19937_64& rng)
{
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

Hypergraph hyper(int k, std::vector<std::vector<int>> edges)
{
    Hypergraph m;
    m.k = k;
    for (auto& e : edges) {
        m.centers.push_back(-1);
        m.edges.push_back(e);
    }
    return m;
}

Anchor anchor_with(int w1, int R)
{
    Anchor a;
    a.k = w1;
    a.W1.resize(static_cast<std::size_t>(w1));
    a.R = R;
    return a;
}

} // namespace

TEST_CASE("star_collection examples")
{
    StarCollection k3 = star_collection(SimpleGraph::complete(3), 2, Ordering{{0, 1, 2}});
    REQUIRE(k3.stars.size() == 1);
    CHECK(k3.stars[0].center == 0);
    CHECK(k3.stars[0].leaves == std::vector<int>{1, 2});
    CHECK(k3.stars[0].kind == StarKind::First);
    SimpleGraph left = leftover_graph(SimpleGraph::complete(3), k3);
    CHECK(left.edges() == std::vector<Edge>{{1, 2}});
    CHECK(left.max_degree() == 1);

    SimpleGraph star = SimpleGraph::star(3);
    auto deg = degeneracy_ordering(star);
    StarCollection s = star_collection(star, 2, deg.ordering);
    REQUIRE(s.stars.size() == 1);
    CHECK(s.stars[0].center == 0);
    CHECK(s.stars[0].kind == StarKind::First);
    CHECK(leftover_graph(star, s).size() == 1);

    CHECK(star_collection(SimpleGraph(5), 2, Ordering{{0, 1, 2, 3, 4}}).stars.empty());
}

TEST_CASE("hypergraph examples")
{
    CHECK(build_hypergraph(StarCollection{}).size() == 0);
    StarCollection two;
    two.k = 2;
    two.stars.push_back({0, {1, 2}, StarKind::First});
    two.stars.push_back({3, {4, 5}, StarKind::First});
    Hypergraph m = build_hypergraph(two);
    CHECK(m.size() == 2);
    CHECK(m.max_degree() == 1);

    StarCollection k3 = star_collection(SimpleGraph::complete(3), 2, Ordering{{0, 1, 2}});
    Hypergraph mk3 = build_hypergraph(k3);
    REQUIRE(mk3.size() == 1);
    CHECK(mk3.edges[0] == std::vector<int>{1, 2});
    CHECK(mk3.centers[0] == 0);
}

TEST_CASE("color_hypergraph examples")
{
    CHECK(color_hypergraph(hyper(2, {{1, 2}, {3, 4}, {5, 6}})).colors == 1);
    HyperColoring tri = color_hypergraph(hyper(2, {{1, 2}, {2, 3}, {3, 1}}));
    CHECK(tri.colors == 3);
    HyperColoring p = color_hypergraph(hyper(2, {{1, 2}, {3, 4}, {2, 3}}));
    CHECK(p.colors == 2);
    CHECK(p.color == std::vector<int>{0, 0, 1});
    CHECK(color_hypergraph(hyper(2, {})).colors == 0);
}

TEST_CASE("split_and_assign_sigma examples")
{
    Hypergraph m = hyper(2, {{1, 2}, {3, 4}, {5, 6}});
    HyperColoring one = color_hypergraph(m);
    ColoredHypergraph r1 = split_and_assign_sigma(m, one, anchor_with(2, 1));
    CHECK(r1.evicted_count() == 0);
    for (const auto& s : r1.sigma)
        CHECK(s.empty());

    Hypergraph pair = hyper(2, {{1, 2}, {3, 4}});
    ColoredHypergraph r2 = split_and_assign_sigma(pair, color_hypergraph(pair), anchor_with(2, 2));
    CHECK(r2.subclass == std::vector<int>{0, 1});
    CHECK(r2.sigma[0] == std::vector<int>{3, 4});
    CHECK(r2.sigma[1] == std::vector<int>{1, 2});
    CHECK(r2.evicted_count() == 0);

    Hypergraph single = hyper(2, {{1, 2}});
    ColoredHypergraph r3 = split_and_assign_sigma(single, color_hypergraph(single), anchor_with(2, 2));
    CHECK(r3.evicted_count() == 1);
    CHECK(r3.evicted[0] == 1);
}

TEST_CASE("split puts remainders in the earliest parts and never uses the center")
{
    Hypergraph m = hyper(2, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}});
    m.centers = {5, 1, 20, 21, 22};
    Anchor a = anchor_with(2, 3);
    ColoredHypergraph ch = split_and_assign_sigma(m, color_hypergraph(m), a);
    CHECK(ch.subclass == std::vector<int>{0, 0, 1, 1, 2});
    CHECK(ch.sigma_size == 4);
    for (std::size_t e = 0; e < ch.edges.size(); ++e)
        if (!ch.evicted[e])
            CHECK(std::find(ch.sigma[e].begin(), ch.sigma[e].end(), ch.centers[e]) == ch.sigma[e].end());
    CHECK(ch.sigma[0] == std::vector<int>{6, 7, 8, 9});
    CHECK(ch.evicted == std::vector<char>{0, 1, 0, 1, 0});
    CHECK(ch.sigma[2] == std::vector<int>{1, 2, 3, 4});
    CHECK(ch.sigma[4] == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("star collection, coloring and sigma properties on a random corpus")
{
    std::mt19937_64 rng(2024);
    int graphs = 0;
    const double ps[] = {0.1, 0.3, 0.6};
    for (int k = 2; k <= 3; ++k)
        for (double p : ps)
            for (int rep = 0; rep < 90; ++rep) {
                int n = 2 + static_cast<int>(rng() % 39);
                SimpleGraph g = gnp(n, p, rng);
                ++graphs;
                auto dg = degeneracy_ordering(g);
                const int d = downdegree(g, dg.ordering);
                StarCollection c = star_collection(g, k, dg.ordering);
                SimpleGraph left = g;
                std::vector<int> leaf_count(static_cast<std::size_t>(n), 0);
                const auto pos = dg.ordering.positions(n);
                for (const Star& s : c.stars) {
                    CHECK(static_cast<int>(s.leaves.size()) == k);
                    for (int w : s.leaves) {
                        CHECK(left.remove_edge(s.center, w));
                        ++leaf_count[static_cast<std::size_t>(w)];
                        if (s.kind == StarKind::First)
                            CHECK(pos[static_cast<std::size_t>(s.center)] < pos[static_cast<std::size_t>(w)]);
                    }
                }
                CHECK(left == leftover_graph(g, c));
                CHECK(left.max_degree() <= k - 1);
                for (int v = 0; v < n; ++v)
                    CHECK(leaf_count[static_cast<std::size_t>(v)] <= d + k - 1);

                Hypergraph m = build_hypergraph(c);
                HyperColoring col = color_hypergraph(m);
                const int delta = m.max_degree();
                if (m.size() > 0)
                    CHECK(col.colors <= k * (delta - 1) + 1);
                CHECK(delta <= d + k - 1);
                std::map<int, std::set<int>> used;
                for (std::size_t i = 0; i < m.size(); ++i)
                    for (int v : m.edges[i])
                        CHECK(used[col.color[i]].insert(v).second);

                for (int R = 1; R <= 3; ++R) {
                    ColoredHypergraph ch = split_and_assign_sigma(m, col, anchor_with(k, R));
                    for (int cl = 0; cl < col.colors; ++cl) {
                        std::vector<int> sizes(static_cast<std::size_t>(R), 0);
                        for (std::size_t i = 0; i < m.size(); ++i)
                            if (ch.color[i] == cl)
                                ++sizes[static_cast<std::size_t>(ch.subclass[i])];
                        auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
                        CHECK(*hi - *lo <= 1);
                        CHECK(std::is_sorted(sizes.rbegin(), sizes.rend()));
                        for (int j = 0; j < R; ++j) {
                            std::set<int> union_sigma;
                            std::size_t members = 0;
                            std::set<int> other_leaves;
                            for (std::size_t i = 0; i < m.size(); ++i)
                                if (ch.color[i] == cl && ch.subclass[i] != j)
                                    other_leaves.insert(m.edges[i].begin(), m.edges[i].end());
                            for (std::size_t i = 0; i < m.size(); ++i) {
                                if (ch.color[i] != cl || ch.subclass[i] != j || ch.evicted[i])
                                    continue;
                                ++members;
                                CHECK(static_cast<int>(ch.sigma[i].size()) == k * (R - 1));
                                for (int x : ch.sigma[i]) {
                                    union_sigma.insert(x);
                                    CHECK(other_leaves.count(x) == 1);
                                    CHECK(std::find(m.edges[i].begin(), m.edges[i].end(), x) == m.edges[i].end());
                                    CHECK(x != ch.centers[i]);
                                }
                            }
                            CHECK(union_sigma.size() == members * static_cast<std::size_t>(k * (R - 1)));
                        }
                    }
                }
            }
    CHECK(graphs >= 500);
}

TEST_CASE("dump formats")
{
    StarCollection k3 = star_collection(SimpleGraph::complete(3), 2, Ordering{{0, 1, 2}});
    CHECK(dump_star_collection(k3) == "stars k=2 count=1\nfirst 0 : 1 2\n");
    Hypergraph pair = hyper(2, {{1, 2}, {3, 4}});
    ColoredHypergraph r2 = split_and_assign_sigma(pair, color_hypergraph(pair), anchor_with(2, 2));
    CHECK(dump_colored_hypergraph(r2) ==
        "hypergraph k=2 edges=2 colors=1 R=2 evicted=0\n"
        "edge 0 center -1 leaves 1 2 color 0 part 1 sigma 3 4\n"
        "edge 1 center -1 leaves 3 4 color 0 part 2 sigma 1 2\n");
}
