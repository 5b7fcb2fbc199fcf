#include "hdesign/lowerbound.hpp"

#include "hdesign/errors.hpp"
#include "hdesign/oracles.hpp"
#include "hdesign/subgraph.hpp"

#include <sstream>

namespace hdesign {

namespace {

// label[c][v]: vertex of the doubled pattern for vertex v of copy c.
struct Doubling {
    Pattern pattern;
    std::vector<int> label[2];
    int side = 0;
};

Doubling make_doubling(const Pattern& h)
{
    if (!h.bipartite())
        throw NotBipartite("pattern " + h.name + " is not bipartite");
    const Bipartition& bp = *h.bipartition;
    Doubling d;
    d.side = h.order();
    d.label[0].assign(static_cast<std::size_t>(h.order()), -1);
    d.label[1].assign(static_cast<std::size_t>(h.order()), -1);
    int next = 0;
    for (int v : bp.first)
        d.label[0][static_cast<std::size_t>(v)] = next++;
    for (int v : bp.second)
        d.label[1][static_cast<std::size_t>(v)] = next++;
    for (int v : bp.second)
        d.label[0][static_cast<std::size_t>(v)] = next++;
    for (int v : bp.first)
        d.label[1][static_cast<std::size_t>(v)] = next++;
    SimpleGraph g(2 * h.order());
    for (const Edge& e : h.graph.edges())
        for (int c = 0; c < 2; ++c)
            g.add_edge(d.label[c][static_cast<std::size_t>(e.u)], d.label[c][static_cast<std::size_t>(e.v)]);
    d.pattern = analyze_pattern(g, "2" + h.name);
    return d;
}

long long binom2(long long a)
{
    return a * (a - 1) / 2;
}

} // namespace

Pattern doubled_pattern(const Pattern& h)
{
    return make_doubling(h).pattern;
}

bool MatchingCertificate::admits(long long a) const
{
    return matching_edges <= static_cast<long long>(e) * binom2(a);
}

std::string MatchingCertificate::text() const
{
    std::ostringstream out;
    out << "certificate matching_edges=" << matching_edges << " e=" << e << '\n';
    if (friendly) {
        out << "pattern is matching-friendly: no counting bound\n";
        return out.str();
    }
    out << "every copy through a matching edge uses a pair of new vertices\n";
    out << "so " << matching_edges << " <= " << e << " * binom(a, 2)\n";
    out << "a=" << a_min - 1 << ": " << e << " * " << binom2(a_min - 1) << " = " << e * binom2(a_min - 1) << " < "
        << matching_edges << '\n';
    out << "a=" << a_min << ": " << e << " * " << binom2(a_min) << " = " << e * binom2(a_min)
        << " >= " << matching_edges << '\n';
    out << "a_min=" << a_min << '\n';
    return out.str();
}

MatchingCertificate matching_certificate(const Pattern& h, long long matching_edges)
{
    MatchingCertificate c;
    c.matching_edges = matching_edges;
    c.e = h.e;
    c.friendly = matching_friendly_partition(h).has_value();
    while (!c.admits(c.a_min))
        ++c.a_min;
    return c;
}

MatchingComplement matching_complement_packing(const Pattern& h, const DecomposeBudget& budget, int guard)
{
    Doubling d = make_doubling(h);
    const Pattern& hp = d.pattern;
    const int s = d.side;
    for (int n = hp.order(); n <= guard; ++n) {
        if (!is_divisible_graph(SimpleGraph::complete(n), hp))
            continue;
        DecomposeResult r = decompose_exact(SimpleGraph::complete(n), hp, budget);
        if (r.status == DecomposeStatus::BudgetExceeded)
            throw ResourceLimit("matching_complement_packing: K_" + std::to_string(n) + " into " + hp.name + ": " +
                r.reason);
        if (!r.found())
            continue;
        MatchingComplement out;
        out.n = n;
        out.packing = Packing{2 * n, h, {}};
        // side offsets for the two classes of the doubled pattern
        const int sides[4][2] = {{0, 0}, {n, n}, {0, n}, {n, 0}};
        for (const Embedding& phi : r.packing->copies)
            for (const auto& off : sides)
                for (int c = 0; c < 2; ++c) {
                    Embedding emb;
                    for (int v = 0; v < h.order(); ++v) {
                        int lbl = d.label[c][static_cast<std::size_t>(v)];
                        emb.image.push_back(phi.image[static_cast<std::size_t>(lbl)] + off[lbl < s ? 0 : 1]);
                    }
                    out.packing.copies.push_back(std::move(emb));
                }
        SimpleGraph left = uncovered_graph(out.packing);
        if (static_cast<int>(left.size()) != n)
            throw ConstructionViolation("matching_complement_packing: wrong uncovered edge count");
        for (int i = 0; i < n; ++i)
            if (!left.has_edge(i, n + i))
                throw ConstructionViolation("matching_complement_packing: uncovered graph is not the matching");
        out.certificate = matching_certificate(h, n);
        return out;
    }
    throw ResourceLimit("matching_complement_packing: no n <= " + std::to_string(guard));
}

ExtremalComplement extremal_complement_packing(const Pattern& h, int n, const DecomposeBudget& budget)
{
    ExtremalComplement out;
    ExtremalResult ex = extremal_graph(n, h);
    out.ex = ex.edges;
    std::ostringstream diag;
    diag << "ex(" << n << ", " << h.name << ")=" << ex.edges << '\n';
    diag << "high-degree pruning skipped at this size\n";
    const int r = 2 * h.e;
    SimpleGraph rest = ex.witness;
    SimpleGraph pieces(n);
    while (rest.size() >= static_cast<std::size_t>(r)) {
        std::optional<SimpleGraph> piece = find_r_regular_subgraph(rest, r);
        if (!piece || !piece->has_edges())
            break;
        ++out.pieces;
        for (const Edge& e : piece->edges()) {
            rest.remove_edge(e);
            pieces.add_edge(e);
        }
    }
    out.union_edges = static_cast<int>(pieces.size());
    diag << r << "-regular pieces=" << out.pieces << " union edges=" << out.union_edges << '\n';
    SimpleGraph target = pieces.complement();
    DecomposeResult d = decompose_exact(target, h, budget);
    out.status = d.status;
    diag << "complement decomposition " << to_string(d.status);
    if (!d.reason.empty())
        diag << " (" << d.reason << ")";
    diag << '\n';
    if (d.found()) {
        out.packing = Packing{n, h, d.packing->copies};
        if (find_pattern_copy(uncovered_graph(*out.packing), h.graph))
            throw ConstructionViolation("extremal_complement_packing: uncovered graph contains the pattern");
    }
    out.diagnostics = diag.str();
    return out;
}

std::optional<int> min_completion_oracle(const Packing& p, int max_add, const DecomposeBudget& budget)
{
    if (p.host + max_add > kCompletionGuard)
        throw ResourceLimit("min_completion_oracle: host + max_add exceeds " + std::to_string(kCompletionGuard));
    const SimpleGraph base = uncovered_graph(p);
    for (int a = 0; a <= max_add; ++a) {
        SimpleGraph g = base;
        g.add_vertices(a);
        for (int v = p.host; v < p.host + a; ++v)
            for (int u = 0; u < v; ++u)
                g.add_edge(u, v);
        if (!is_divisible_graph(g, p.pattern))
            continue;
        DecomposeResult r = decompose_exact(g, p.pattern, budget);
        if (r.found())
            return a;
        if (r.status == DecomposeStatus::BudgetExceeded)
            throw ResourceLimit("min_completion_oracle: inconclusive at a=" + std::to_string(a) + ": " + r.reason);
    }
    return std::nullopt;
}

} // namespace hdesign
