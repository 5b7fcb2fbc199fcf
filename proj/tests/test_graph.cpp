#include "doctest.h"

#include "hdesign/errors.hpp"
#include "hdesign/graph.hpp"

#include <algorithm>
#include <random>

using namespace hdesign;

namespace {

SimpleGraph random_graph(int n, double p, std::mt19937_64& rng)
{
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

// max over non-empty vertex subsets of the induced minimum degree
int degeneracy_by_enumeration(const SimpleGraph& g)
{
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u)
                vs.push_back(v);
        best = std::max(best, g.induced(vs).min_degree());
    }
    return best;
}

} // namespace

TEST_CASE("simple graph basics")
{
    SimpleGraph g(5);
    CHECK(g.add_edge(0, 3));
    CHECK_FALSE(g.add_edge(3, 0));
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
    CHECK(g.size() == 1);
    CHECK(g.degree(3) == 1);
    CHECK(g.remove_edge(3, 0));
    CHECK(g.size() == 0);

    SimpleGraph big(130);
    big.add_edge(0, 129);
    big.add_edge(64, 65);
    CHECK(big.edges() == std::vector<Edge>{{0, 129}, {64, 65}});
    big.add_vertices(3);
    CHECK(big.order() == 133);
    CHECK(big.has_edge(129, 0));
    CHECK(SimpleGraph::complete(6).complement().size() == 0);
}

TEST_CASE("degeneracy ordering examples")
{
    auto c5 = degeneracy_ordering(SimpleGraph::cycle(5));
    CHECK(c5.degeneracy == 2);
    CHECK(degeneracy_ordering(SimpleGraph::complete(4)).degeneracy == 3);

    // star with leaves 0..4 and center 5
    SimpleGraph star(6);
    for (int i = 0; i < 5; ++i)
        star.add_edge(i, 5);
    auto s = degeneracy_ordering(star);
    CHECK(s.degeneracy == 1);
    CHECK(s.ordering.perm.front() == 5);

    auto empty = degeneracy_ordering(SimpleGraph(0));
    CHECK(empty.degeneracy == 0);
    CHECK(empty.ordering.perm.empty());
}

TEST_CASE("downdegree examples")
{
    CHECK(downdegree(SimpleGraph::path(3), Ordering{{0, 1, 2}}) == 1);
    CHECK(downdegree(SimpleGraph::complete(3), Ordering{{2, 0, 1}}) == 2);
    CHECK(downdegree(SimpleGraph(4), Ordering{{3, 1, 2, 0}}) == 0);
    CHECK_THROWS_AS(downdegree(SimpleGraph::path(3), Ordering{{0, 0, 1}}), InvalidOrdering);
    CHECK_THROWS_AS(downdegree(SimpleGraph::path(3), Ordering{{0, 1}}), InvalidOrdering);
}

TEST_CASE("degeneracy equals peeling downdegree and dominates induced minimum degree")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        SimpleGraph g = random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
        auto res = degeneracy_ordering(g);
        CHECK(downdegree(g, res.ordering) == res.degeneracy);
        CHECK(res.degeneracy == degeneracy_by_enumeration(g));
    }
}

TEST_CASE("edge coloring examples")
{
    SimpleGraph pm(6);
    pm.add_edge(0, 1);
    pm.add_edge(2, 3);
    pm.add_edge(4, 5);
    CHECK(edge_color_matchings(pm).size() == 1);
    CHECK(edge_color_matchings(SimpleGraph::cycle(5)).size() == 3);
    CHECK(edge_color_matchings(SimpleGraph::path(4)).size() == 2);
    CHECK(edge_color_matchings(SimpleGraph(3)).empty());
}

TEST_CASE("edge coloring partitions into at most max degree + 1 matchings")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 40);
        SimpleGraph g = random_graph(n, 0.05 + 0.9 * static_cast<double>(rng() % 100) / 100.0, rng);
        auto ms = edge_color_matchings(g);
        CHECK(static_cast<int>(ms.size()) <= g.max_degree() + 1);
        SimpleGraph back(n);
        for (const Matching& m : ms) {
            std::vector<int> seen(static_cast<std::size_t>(n), 0);
            for (const Edge& e : m.edges) {
                CHECK(g.has_edge(e.u, e.v));
                CHECK(++seen[static_cast<std::size_t>(e.u)] == 1);
                CHECK(++seen[static_cast<std::size_t>(e.v)] == 1);
                CHECK(back.add_edge(e));
            }
        }
        CHECK(back == g);
    }
}

TEST_CASE("transversal and independence helpers")
{
    SimpleGraph g = SimpleGraph::star(3);
    std::vector<int> center{0};
    std::vector<int> leaves{1, 2, 3};
    CHECK(is_transversal(g, center));
    CHECK_FALSE(is_transversal(g, std::vector<int>{1, 2}));
    CHECK(is_independent(g, leaves));
    CHECK_FALSE(is_independent(g, std::vector<int>{0, 1}));
}
