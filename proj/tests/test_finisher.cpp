#include "doctest.h"

#include "hdesign/errors.hpp"
#include "hdesign/finisher.hpp"
#include "hdesign/pipeline.hpp"
#include "hdesign/subgraph.hpp"

#include <algorithm>

using namespace hdesign;

namespace {

long long choose2(long long n)
{
    return n * (n - 1) / 2;
}

} // namespace

TEST_CASE("default batch size")
{
    CHECK(default_batch_m(builtin_pattern("C4")) == 8);
    CHECK(default_batch_m(builtin_pattern("P3")) == 6);
    CHECK(default_batch_m(builtin_pattern("C6")) == 12);
    CHECK(default_batch_m(builtin_pattern("K13")) == 9);
    for (const std::string& name : builtin_pattern_names()) {
        Pattern h = builtin_pattern(name);
        if (!h.bipartite())
            continue;
        int m = default_batch_m(h);
        CHECK(m % h.e == 0);
        CHECK(m % h.g == 0);
        CHECK(m >= 2 * h.order());
        CHECK(m - h.e < 2 * h.order());
    }
}

TEST_CASE("pad_to_congruence")
{
    ReductionState c4 = initial_state(Packing{10, builtin_pattern("C4"), {}});
    CHECK(pad_to_congruence(c4) == 3);
    CHECK(c4.host() == 13);
    CHECK(c4.Q.size() == 13);
    CHECK(pad_to_congruence(c4) == 0);
    check_state(c4);

    ReductionState p3 = initial_state(Packing{6, builtin_pattern("P3"), {}});
    CHECK(pad_to_congruence(p3) == 1);
    CHECK(p3.host() == 7);
    CHECK(p3.uncovered.degree(6) == 6);
}

TEST_CASE("the X congruence forces edge divisibility once the host is 1 mod e")
{
    for (const std::string& name : builtin_pattern_names()) {
        Pattern h = builtin_pattern(name);
        const int e = h.e;
        const int mod = 2 * e;
        for (int x = 0; x < 2 * mod; ++x)
            for (int y = 0; y < 2 * mod; ++y)
                for (int q = 0; q < 2 * mod; ++q) {
                    if ((y + q) % e != 1 % e)
                        continue;
                    if (((x - (y + q - 1)) % mod + mod) % mod != 0)
                        continue;
                    long long direct = choose2(x + y + q) - static_cast<long long>(x) * y;
                    CHECK(direct % e == 0);
                    CHECK(congruence_holds(x, y, q, e));
                }
    }
    // Without the host condition the congruence alone is not enough.
    CHECK_FALSE(congruence_holds(1, 2, 0, 2));
}

TEST_CASE("batch divisibility arithmetic")
{
    for (const std::string& name : builtin_pattern_names()) {
        Pattern h = builtin_pattern(name);
        if (!h.bipartite())
            continue;
        const int m = default_batch_m(h);
        for (int nprime = h.e; nprime <= 4 * h.e; nprime += h.e)
            CHECK(is_divisible_bipartite(h.g + m, nprime, h));
        for (int yprime = h.g; yprime <= 4 * h.g; yprime += h.g)
            CHECK(is_divisible_bipartite(m, yprime, h));
    }
}

TEST_CASE("check_degrees_mod_g")
{
    Pattern c4 = builtin_pattern("C4");
    CHECK_NOTHROW(check_degrees_mod_g(SimpleGraph::cycle(5), c4, "t"));
    CHECK_THROWS_AS(check_degrees_mod_g(SimpleGraph::path(3), c4, "t"), ConstructionViolation);
}

TEST_CASE("reduce_edge_count with one large neighbourhood for P3")
{
    Pattern p3 = builtin_pattern("P3");
    const int m = default_batch_m(p3);
    // q = 0 sees m + 3 vertices of Y; vertex m + 4 is isolated.
    const int leaves = m + 3;
    SimpleGraph star(leaves + 2);
    for (int y = 1; y <= leaves; ++y)
        star.add_edge(0, y);
    ReductionState s{Packing{star.order(), p3, {}}, star, {0}, {}};
    for (int y = 1; y < star.order(); ++y)
        s.Y.push_back(y);
    REQUIRE(s.host() % 2 == 1);
    EdgeCountReport r = reduce_edge_count(s, FinisherParams{});
    CHECK(r.batches == 1);
    CHECK(r.new_vertices == m);
    CHECK(s.host() == star.order() + m);
    CHECK(s.host() % 2 == 1);
    int qdeg = 0;
    for (int y : s.Y)
        qdeg += s.uncovered.has_edge(0, y);
    CHECK(qdeg <= m + 1);
    CHECK(qdeg == 1);
    CHECK(r.max_stray <= 2 * p3.e);
    CHECK(r.edges <= r.bound);
    CHECK(std::is_sorted(s.Q.begin(), s.Q.end()));
    CHECK(static_cast<int>(s.Q.size()) == 1 + m);
    CHECK(is_independent(s.uncovered, s.Y));
}

TEST_CASE("reduce_edge_count does nothing when neighbourhoods are small")
{
    Pattern c4 = builtin_pattern("C4");
    ReductionState s{Packing{5, c4, {}}, SimpleGraph(5), {0, 1}, {2, 3, 4}};
    s.uncovered.add_edge(0, 2);
    s.uncovered.add_edge(1, 2);
    EdgeCountReport r = reduce_edge_count(s, FinisherParams{});
    CHECK(r.batches == 0);
    CHECK(r.subsets == 1);
    CHECK(s.host() == 5);
}

TEST_CASE("complete_design on an empty uncovered graph")
{
    Pattern p3 = builtin_pattern("P3");
    Packing k4{4, p3, {Embedding{{0, 1, 2}}, Embedding{{1, 3, 2}}, Embedding{{3, 0, 2}}}};
    REQUIRE(is_design(k4));
    CompletionReport rep;
    Packing out = complete_design(initial_state(k4), FinisherParams{}, &rep);
    CHECK(rep.x == 0);
    CHECK(out.host == 4);
    CHECK(is_design(out));
}

TEST_CASE("complete_design for P3 with a single uncovered edge")
{
    Pattern p3 = builtin_pattern("P3");
    SimpleGraph k7 = SimpleGraph::complete(7);
    k7.remove_edge(0, 1);
    DecomposeResult d = decompose_exact(k7, p3);
    REQUIRE(d.found());
    ReductionState s = initial_state(Packing{7, p3, d.packing->copies});
    REQUIRE(s.uncovered.size() == 1);
    CompletionReport rep;
    Packing out = complete_design(s, FinisherParams{}, &rep);
    CHECK(is_design(out));
    CHECK(rep.q % p3.e == 1);
    CHECK(rep.y % p3.e == 0);
    CHECK(((rep.x - (rep.y + rep.q - 1)) % (2 * p3.e) + 2 * p3.e) % (2 * p3.e) == 0);
    CHECK(out.host == 7 + rep.x);
}

TEST_CASE("finisher stages keep their invariants on random maximal packings")
{
    for (const char* name : {"C4", "C6", "P4", "K13"}) {
        Pattern h = builtin_pattern(name);
        for (int n = 8; n <= 14; ++n) {
            ReductionState s = initial_state(random_maximal_packing(n, h, static_cast<std::uint64_t>(n)));
            pad_to_congruence(s);
            CHECK(s.host() % h.e == 1 % h.e);
            check_degrees_mod_g(s.uncovered, h, "pad");
            for (int y : s.Y) {
                int d = 0;
                for (int q : s.Q)
                    d += s.uncovered.has_edge(y, q);
                CHECK((d == 0 || d >= h.g));
            }
            EdgeCountReport r = reduce_edge_count(s, FinisherParams{});
            check_state(s);
            check_degrees_mod_g(s.uncovered, h, "batches");
            CHECK(r.edges <= r.bound);
            CHECK(s.host() % h.e == 1 % h.e);
            Packing out = complete_design(s, FinisherParams{});
            CHECK(is_design(out));
        }
    }
}
