#include "hdesign/reducer.hpp"

#include "hdesign/errors.hpp"
#include "hdesign/subgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hdesign {

ReductionState initial_state(const Packing& p)
{
    ReductionState s{p, uncovered_graph(p), {}, {}};
    s.Q.resize(static_cast<std::size_t>(p.host));
    std::iota(s.Q.begin(), s.Q.end(), 0);
    return s;
}

void check_state(const ReductionState& s)
{
    const int n = s.host();
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int v : s.Q)
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++)
            throw ConstructionViolation("state: bad transversal vertex " + std::to_string(v));
    for (int v : s.Y)
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++)
            throw ConstructionViolation("state: bad independent vertex " + std::to_string(v));
    if (std::count(seen.begin(), seen.end(), 1) != n)
        throw ConstructionViolation("state: Q and Y do not cover the host");
    if (!is_independent(s.uncovered, s.Y))
        throw ConstructionViolation("state: Y is not independent in the uncovered graph");
    if (!(uncovered_graph(s.packing) == s.uncovered))
        throw ConstructionViolation("state: uncovered graph out of sync with packing");
}

int add_host_vertices(ReductionState& s, int k)
{
    const int first = s.packing.host;
    if (k <= 0)
        return first;
    s.packing.host += k;
    s.uncovered.add_vertices(k);
    for (int v = first; v < first + k; ++v)
        for (int u = 0; u < v; ++u)
            s.uncovered.add_edge(u, v);
    return first;
}

namespace {

bool fits(const SimpleGraph& uncovered, const SimpleGraph& pattern, const Embedding& emb)
{
    std::vector<int> img = emb.image;
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end())
        return false;
    for (const Edge& e : image_edges(pattern, emb))
        if (!uncovered.has_edge(e.u, e.v))
            return false;
    return true;
}

} // namespace

void place_copies(ReductionState& s, const std::vector<Embedding>& copies)
{
    const SimpleGraph& pattern = s.packing.pattern.graph;
    for (const Embedding& emb : copies) {
        if (static_cast<int>(emb.size()) != pattern.order())
            throw ConstructionViolation("copy of wrong size");
        std::vector<int> img = emb.image;
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
            throw ConstructionViolation("copy is not injective");
        for (const Edge& e : image_edges(pattern, emb)) {
            if (e.v >= s.host())
                throw ConstructionViolation("copy leaves the host at vertex " + std::to_string(e.v));
            if (!s.uncovered.remove_edge(e))
                throw ConstructionViolation("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " already covered");
        }
        s.packing.copies.push_back(emb);
    }
}

Construction1Report construction1(ReductionState& s, const ColoredHypergraph& ch, const Anchor& anchor, const Pattern& h)
{
    Construction1Report rep;
    std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < ch.edges.size(); ++i)
        if (!ch.evicted[i])
            groups[{ch.color[i], ch.subclass[i]}].push_back(i);

    std::vector<int> w1 = anchor.W1;
    std::sort(w1.begin(), w1.end());
    std::vector<int> w_rest;
    for (int w : anchor.W)
        if (!std::binary_search(w1.begin(), w1.end(), w))
            w_rest.push_back(w);
    std::sort(w_rest.begin(), w_rest.end());
    std::vector<int> u_rest;
    for (int u : anchor.U)
        if (u != anchor.v)
            u_rest.push_back(u);
    std::sort(u_rest.begin(), u_rest.end());
    const int extra = static_cast<int>(u_rest.size());

    for (const auto& [key, members] : groups) {
        const int first = add_host_vertices(s, extra);
        for (int i = 0; i < extra; ++i)
            s.Q.push_back(first + i);
        ++rep.subclasses;
        rep.new_vertices += extra;
        std::vector<Embedding> copies;
        for (std::size_t e : members) {
            Embedding emb;
            emb.image.assign(static_cast<std::size_t>(h.order()), -1);
            emb.image[static_cast<std::size_t>(anchor.v)] = ch.centers[e];
            for (std::size_t t = 0; t < w1.size(); ++t)
                emb.image[static_cast<std::size_t>(w1[t])] = ch.edges[e][t];
            if (ch.sigma[e].size() < w_rest.size())
                throw ConstructionViolation("construction1: sigma set too small");
            for (std::size_t t = 0; t < w_rest.size(); ++t)
                emb.image[static_cast<std::size_t>(w_rest[t])] = ch.sigma[e][t];
            for (int t = 0; t < extra; ++t)
                emb.image[static_cast<std::size_t>(u_rest[static_cast<std::size_t>(t)])] = first + t;
            copies.push_back(std::move(emb));
        }
        place_copies(s, copies);
        rep.copies += static_cast<int>(copies.size());
    }
    std::sort(s.Q.begin(), s.Q.end());
    return rep;
}

int default_threshold(const Pattern& h)
{
    return std::max(4 * h.order(), 16);
}

bool keep_reducing(int q, int T)
{
    return q > T;
}

bool pass_accepted(int q_before, int q_after)
{
    return q_after < q_before;
}

bool pass_halved(int q_before, int q_after)
{
    return 2 * q_after <= q_before;
}

namespace {

// Places one copy of a matching-friendly pattern per chunk of |M1| matching
// edges, drawing V2 images from a pool of fresh batches.
class FriendlyRoute {
public:
    FriendlyRoute(ReductionState& s, const Pattern& h, const FriendlyPartition& fp, int old_count, Construction2Report& rep)
        : s_(s)
        , h_(h)
        , fp_(fp)
        , old_(old_count)
        , rep_(rep)
    {
    }

    void cover(const Matching& L)
    {
        const std::size_t m1 = fp_.matched.size();
        for (std::size_t at = 0; at < L.edges.size(); at += m1) {
            std::vector<Edge> chunk;
            for (std::size_t t = at; t < std::min(L.edges.size(), at + m1); ++t)
                chunk.push_back(L.edges[t]);
            place_chunk(chunk);
        }
    }

private:
    void place_chunk(const std::vector<Edge>& chunk)
    {
        for (std::size_t b = 0; b < batches_.size(); ++b)
            if (try_batch(chunk, batches_[b], false))
                return;
        const int first = add_host_vertices(s_, static_cast<int>(fp_.V2.size()));
        rep_.new_vertices += static_cast<int>(fp_.V2.size());
        ++rep_.friendly_batches;
        std::vector<int> batch(fp_.V2.size());
        std::iota(batch.begin(), batch.end(), first);
        batches_.push_back(batch);
        if (!try_batch(chunk, batches_.back(), true))
            throw ConstructionViolation("construction2: fresh batch could not host a copy");
    }

    bool try_batch(const std::vector<Edge>& chunk, const std::vector<int>& batch, bool may_grow)
    {
        Embedding emb;
        emb.image.assign(static_cast<std::size_t>(h_.order()), -1);
        std::vector<char> used(static_cast<std::size_t>(s_.host()), 0);
        auto put = [&](int pv, int hv) {
            emb.image[static_cast<std::size_t>(pv)] = hv;
            used[static_cast<std::size_t>(hv)] = 1;
        };
        for (std::size_t t = 0; t < fp_.V2.size(); ++t)
            put(fp_.V2[t], batch[t]);
        for (std::size_t t = 0; t < chunk.size(); ++t) {
            put(fp_.matched[t].u, chunk[t].u);
            put(fp_.matched[t].v, chunk[t].v);
        }
        // Spare matching slots go onto uncovered edges between new vertices.
        for (std::size_t t = chunk.size(); t < fp_.matched.size(); ++t) {
            const Edge me = fp_.matched[t];
            bool placed = false;
            for (int a = old_; a < s_.host() && !placed; ++a) {
                if (used[static_cast<std::size_t>(a)] || !edges_to_batch_free(me.u, a, emb))
                    continue;
                for (int b = a + 1; b < s_.host() && !placed; ++b) {
                    if (used[static_cast<std::size_t>(b)] || !s_.uncovered.has_edge(a, b) || !edges_to_batch_free(me.v, b, emb))
                        continue;
                    put(me.u, a);
                    put(me.v, b);
                    placed = true;
                }
            }
            if (!placed) {
                if (!may_grow)
                    return false;
                const int first = add_host_vertices(s_, 2);
                used.resize(static_cast<std::size_t>(s_.host()), 0);
                rep_.new_vertices += 2;
                put(me.u, first);
                put(me.v, first + 1);
            }
        }
        // Isolated V1 vertices go onto old vertices in increasing order.
        for (int x : fp_.isolated) {
            bool placed = false;
            for (int a = 0; a < old_ && !placed; ++a) {
                if (used[static_cast<std::size_t>(a)] || !edges_to_batch_free(x, a, emb))
                    continue;
                put(x, a);
                placed = true;
            }
            if (!placed) {
                if (!may_grow)
                    return false;
                const int first = add_host_vertices(s_, 1);
                used.resize(static_cast<std::size_t>(s_.host()), 0);
                rep_.new_vertices += 1;
                put(x, first);
            }
        }
        if (!fits(s_.uncovered, h_.graph, emb))
            return false;
        place_copies(s_, {emb});
        ++rep_.copies;
        return true;
    }

    // Edges from host vertex a (as pattern vertex pv) to already placed
    // pattern neighbours are all still uncovered.
    bool edges_to_batch_free(int pv, int a, const Embedding& emb) const
    {
        bool ok = true;
        for_each_bit(h_.graph.row(pv), [&](int w) {
            int img = emb.image[static_cast<std::size_t>(w)];
            if (img >= 0 && !s_.uncovered.has_edge(a, img))
                ok = false;
        });
        return ok;
    }

    ReductionState& s_;
    const Pattern& h_;
    const FriendlyPartition& fp_;
    int old_;
    Construction2Report& rep_;
    std::vector<std::vector<int>> batches_;
};

} // namespace

Construction2Report construction2(ReductionState& s, const Pattern& h, int old_count, const DecomposeBudget& budget)
{
    Construction2Report rep;
    SimpleGraph active(s.host());
    for (const Edge& e : s.uncovered.edges())
        if (e.v < old_count)
            active.add_edge(e);
    rep.edges = static_cast<int>(active.size());
    if (!active.has_edges())
        return rep;
    const std::vector<Matching> matchings = edge_color_matchings(active);
    rep.matchings = static_cast<int>(matchings.size());
    const std::optional<FriendlyPartition> fp = matching_friendly_partition(h);
    rep.friendly = fp.has_value();
    const int host_before = s.host();
    if (fp) {
        FriendlyRoute route(s, h, *fp, old_count, rep);
        for (const Matching& L : matchings)
            route.cover(L);
    } else {
        for (const Matching& L : matchings) {
            const int r = smallest_packable_r(h, static_cast<long long>(h.e) * static_cast<long long>(L.edges.size()),
                kPackableRGuard, budget);
            std::optional<Packing> templ = complete_graph_design(r, h, budget);
            if (!templ)
                throw ResourceLimit("construction2: no template design of K_" + std::to_string(r));
            const int base = add_host_vertices(s, r);
            TemplateCover tc = cover_matching_via_template(L, h, r, *templ, base);
            place_copies(s, tc.copies);
            rep.new_vertices += r;
            rep.copies += static_cast<int>(tc.copies.size());
            ++rep.template_matchings;
        }
    }
    for (int v = host_before; v < s.host(); ++v)
        s.Q.push_back(v);
    std::sort(s.Q.begin(), s.Q.end());
    for (const Edge& e : s.uncovered.edges())
        if (e.v < old_count)
            throw ConstructionViolation("construction2: old edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                " left uncovered");
    return rep;
}

int ceil_root(long long q, int s)
{
    if (q <= 0)
        return 0;
    if (s <= 1)
        return static_cast<int>(q);
    auto pow_at_least = [&](long long x) {
        long long p = 1;
        for (int i = 0; i < s; ++i) {
            p *= x;
            if (p >= q)
                return true;
        }
        return p >= q;
    };
    long long x = 1;
    while (!pow_at_least(x))
        ++x;
    return static_cast<int>(x);
}

OrderingInfo zaran2_ordering_info(const SimpleGraph& g, const std::vector<int>& Q, const Pattern& h)
{
    const int n = g.order();
    std::vector<char> inQ(static_cast<std::size_t>(n), 0);
    for (int v : Q)
        inQ[static_cast<std::size_t>(v)] = 1;
    std::vector<int> Y;
    for (int v = 0; v < n; ++v)
        if (!inQ[static_cast<std::size_t>(v)])
            Y.push_back(v);
    if (!is_independent(g, Y))
        throw std::invalid_argument("zaran2_ordering: Q is not a transversal");

    OrderingInfo info;
    info.threshold = ceil_root(static_cast<long long>(Q.size()), h.s);
    if (static_cast<int>(Y.size()) < info.threshold) {
        DegeneracyResult d = degeneracy_ordering(g);
        info.ordering = d.ordering;
        info.fallback = true;
        return info;
    }
    std::vector<int> ydeg(static_cast<std::size_t>(n), 0);
    for (int y : Y)
        for_each_bit(g.row(y), [&](int w) {
            if (inQ[static_cast<std::size_t>(w)])
                ++ydeg[static_cast<std::size_t>(y)];
        });
    std::vector<int> peel = Y;
    std::stable_sort(peel.begin(), peel.end(), [&](int a, int b) {
        return ydeg[static_cast<std::size_t>(a)] < ydeg[static_cast<std::size_t>(b)];
    });
    const std::size_t r = Y.size() - static_cast<std::size_t>(info.threshold);
    info.peeled = static_cast<int>(r);

    std::vector<int> qs = Q;
    std::sort(qs.begin(), qs.end());
    DegeneracyResult dq = degeneracy_ordering(g.induced(qs));
    info.q_degeneracy = dq.degeneracy;

    Ordering& ord = info.ordering;
    for (std::size_t i = r; i < peel.size(); ++i)
        ord.perm.push_back(peel[i]);
    for (int local : dq.ordering.perm)
        ord.perm.push_back(qs[static_cast<std::size_t>(local)]);
    for (std::size_t i = 0; i < r; ++i) {
        ord.perm.push_back(peel[i]);
        info.max_peel_degree = std::max(info.max_peel_degree, ydeg[static_cast<std::size_t>(peel[i])]);
    }
    return info;
}

Ordering zaran2_ordering(const SimpleGraph& g, const std::vector<int>& Q, const Pattern& h)
{
    return zaran2_ordering_info(g, Q, h).ordering;
}

PassReport reduce_transversal_once(ReductionState& s, const Pattern& h, const DecomposeBudget& budget)
{
    PassReport rep;
    rep.q_before = static_cast<int>(s.Q.size());
    rep.host_before = s.host();
    const int old_count = s.host();

    StripResult strip = strip_to_pattern_free(s.uncovered, h.graph);
    rep.stripped = static_cast<int>(strip.removed.size());
    place_copies(s, strip.removed);

    Ordering ord;
    if (s.Y.empty()) {
        ord = degeneracy_ordering(s.uncovered).ordering;
    } else {
        OrderingInfo info = zaran2_ordering_info(s.uncovered, s.Q, h);
        ord = info.ordering;
        rep.zaran2_ordering = !info.fallback;
        rep.ordering_fallback = info.fallback;
    }
    rep.downdegree = downdegree(s.uncovered, ord);

    const Anchor anchor = select_anchor(h);
    StarCollection stars = star_collection(s.uncovered, anchor.k, ord);
    rep.stars = static_cast<int>(stars.stars.size());
    Hypergraph m = build_hypergraph(stars);
    HyperColoring col = color_hypergraph(m);
    rep.colors = col.colors;
    ColoredHypergraph ch = split_and_assign_sigma(m, col, anchor);
    rep.evicted = static_cast<int>(ch.evicted_count());

    rep.c1 = construction1(s, ch, anchor, h);
    rep.c2 = construction2(s, h, old_count, budget);

    s.Y.resize(static_cast<std::size_t>(old_count));
    std::iota(s.Y.begin(), s.Y.end(), 0);
    s.Q.clear();
    for (int v = old_count; v < s.host(); ++v)
        s.Q.push_back(v);
    rep.q_after = static_cast<int>(s.Q.size());
    rep.host_after = s.host();
    return rep;
}

IterationResult iterate_reduction(const ReductionState& s0, const Pattern& h, const ReducerParams& params)
{
    IterationResult res{s0, {}, "below-threshold", params.threshold_T > 0 ? params.threshold_T : default_threshold(h), 0};
    int pass = 0;
    while (keep_reducing(static_cast<int>(res.state.Q.size()), res.threshold)) {
        if (pass++ >= params.max_passes) {
            res.status = "pass-limit";
            break;
        }
        ReductionState next = res.state;
        PassReport rep = reduce_transversal_once(next, h, params.budget);
        rep.accepted = pass_accepted(rep.q_before, rep.q_after);
        res.passes.push_back(rep);
        if (!rep.accepted) {
            res.status = "stalled";
            break;
        }
        res.state = std::move(next);
        if (!pass_halved(rep.q_before, rep.q_after)) {
            res.status = keep_reducing(rep.q_after, res.threshold) ? "slowed" : "below-threshold";
            break;
        }
    }
    res.added = res.state.host() - s0.host();
    return res;
}

std::string format_transcript(const IterationResult& r)
{
    std::ostringstream out;
    out << "reduction threshold=" << r.threshold << " passes=" << r.passes.size() << " status=" << r.status
        << " added=" << r.added << '\n';
    for (std::size_t i = 0; i < r.passes.size(); ++i) {
        const PassReport& p = r.passes[i];
        out << "pass " << i + 1 << " q_before=" << p.q_before << " q_after=" << p.q_after << " host=" << p.host_before
            << "->" << p.host_after << " stripped=" << p.stripped << " ordering="
            << (p.zaran2_ordering ? "zaran2" : (p.ordering_fallback ? "fallback" : "degeneracy")) << " downdegree="
            << p.downdegree << " stars=" << p.stars << " colors=" << p.colors << " evicted=" << p.evicted
            << " c1_subclasses=" << p.c1.subclasses << " c1_added=" << p.c1.new_vertices << " c2_edges=" << p.c2.edges
            << " c2_matchings=" << p.c2.matchings << " c2_route=" << (p.c2.friendly ? "friendly" : "template")
            << " c2_batches=" << p.c2.friendly_batches << " c2_added=" << p.c2.new_vertices
            << (p.accepted ? " accepted" : " rejected") << '\n';
    }
    return out.str();
}

} // namespace hdesign
