#include "hdesign/packing.hpp"

#include "hdesign/errors.hpp"

#include <sstream>

namespace hdesign {

std::string PackingReport::summary() const
{
    std::ostringstream os;
    os << (ok() ? "pass" : "fail") << " copies=" << copies << " covered=" << covered_edges
       << " range=" << (range_ok ? "ok" : "fail") << " isomorphism=" << (isomorphism_ok ? "ok" : "fail")
       << " disjoint=" << (disjoint_ok ? "ok" : "fail");
    for (const PackingFailure& f : failures)
        os << "\n  " << f.message;
    return os.str();
}

PackingReport verify_packing(const Packing& p)
{
    PackingReport rep;
    rep.copies = p.copies.size();
    const SimpleGraph& h = p.pattern.graph;
    const std::vector<Edge> pedges = h.edges();
    // owner[u*host+v] = copy index + 1 of the copy covering the pair.
    std::vector<std::size_t> owner(static_cast<std::size_t>(p.host) * static_cast<std::size_t>(p.host), 0);
    for (std::size_t c = 0; c < p.copies.size(); ++c) {
        const Embedding& emb = p.copies[c];
        if (static_cast<int>(emb.size()) != h.order()) {
            rep.isomorphism_ok = false;
            rep.failures.push_back({PackingFailure::Kind::Isomorphism, c, {}, "copy " + std::to_string(c) + " maps " + std::to_string(emb.size()) + " vertices, pattern has " + std::to_string(h.order())});
            continue;
        }
        bool in_range = true;
        for (int x : emb.image)
            if (x < 0 || x >= p.host)
                in_range = false;
        if (!in_range) {
            rep.range_ok = false;
            rep.failures.push_back({PackingFailure::Kind::Range, c, {}, "copy " + std::to_string(c) + " uses a vertex outside 0.." + std::to_string(p.host - 1)});
            continue;
        }
        std::vector<char> seen(static_cast<std::size_t>(p.host), 0);
        bool injective = true;
        for (int x : emb.image) {
            if (seen[static_cast<std::size_t>(x)])
                injective = false;
            seen[static_cast<std::size_t>(x)] = 1;
        }
        if (!injective) {
            rep.isomorphism_ok = false;
            rep.failures.push_back({PackingFailure::Kind::Isomorphism, c, {}, "copy " + std::to_string(c) + " is not injective"});
            continue;
        }
        for (const Edge& pe : pedges) {
            Edge he = make_edge(emb.image[static_cast<std::size_t>(pe.u)], emb.image[static_cast<std::size_t>(pe.v)]);
            std::size_t& slot = owner[static_cast<std::size_t>(he.u) * p.host + he.v];
            if (slot) {
                rep.disjoint_ok = false;
                rep.failures.push_back({PackingFailure::Kind::Disjointness, c, he,
                    "copies " + std::to_string(slot - 1) + " and " + std::to_string(c) + " share edge " + std::to_string(he.u) + "-" + std::to_string(he.v)});
            } else {
                slot = c + 1;
                ++rep.covered_edges;
            }
        }
    }
    return rep;
}

SimpleGraph uncovered_graph(const Packing& p)
{
    PackingReport rep = verify_packing(p);
    if (!rep.ok())
        throw ConstructionViolation("packing does not verify: " + rep.summary());
    SimpleGraph g = SimpleGraph::complete(p.host);
    for (const Embedding& emb : p.copies)
        for (const Edge& e : image_edges(p.pattern.graph, emb))
            g.remove_edge(e);
    return g;
}

bool is_design(const Packing& p)
{
    return !uncovered_graph(p).has_edges();
}

Packing extend(const Packing& p, int add_vertices, const std::vector<Embedding>& new_copies)
{
    if (add_vertices < 0)
        throw ExtensionRejected("negative vertex count");
    Packing out = p;
    out.host = p.host + add_vertices;
    SimpleGraph free = uncovered_graph(out);
    for (std::size_t c = 0; c < new_copies.size(); ++c) {
        const Embedding& emb = new_copies[c];
        if (static_cast<int>(emb.size()) != p.pattern.order())
            throw ExtensionRejected("new copy " + std::to_string(c) + " has wrong size");
        std::vector<char> seen(static_cast<std::size_t>(out.host), 0);
        for (int x : emb.image) {
            if (x < 0 || x >= out.host)
                throw ExtensionRejected("new copy " + std::to_string(c) + " uses vertex " + std::to_string(x) + " outside host");
            if (seen[static_cast<std::size_t>(x)])
                throw ExtensionRejected("new copy " + std::to_string(c) + " is not injective");
            seen[static_cast<std::size_t>(x)] = 1;
        }
        for (const Edge& e : image_edges(p.pattern.graph, emb)) {
            if (!free.remove_edge(e))
                throw ExtensionRejected("new copy " + std::to_string(c) + " reuses edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        }
        out.copies.push_back(emb);
    }
    return out;
}

} // namespace hdesign
