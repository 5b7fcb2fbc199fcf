#ifndef HDESIGN_PACKING_HPP
#define HDESIGN_PACKING_HPP

#include "hdesign/graph.hpp"
#include "hdesign/pattern.hpp"
#include "hdesign/subgraph.hpp"

#include <string>
#include <vector>

namespace hdesign {

// Edge-disjoint copies of a pattern inside K_host.
struct Packing {
    int host = 0;
    Pattern pattern;
    std::vector<Embedding> copies;
};

struct PackingFailure {
    enum class Kind { Range, Isomorphism, Disjointness };
    Kind kind;
    std::size_t copy = 0;
    Edge edge{};  // the shared pair for disjointness failures
    std::string message;
};

struct PackingReport {
    bool range_ok = true;
    bool isomorphism_ok = true;
    bool disjoint_ok = true;
    std::size_t copies = 0;
    std::size_t covered_edges = 0;
    std::vector<PackingFailure> failures;

    bool ok() const { return range_ok && isomorphism_ok && disjoint_ok; }
    std::string summary() const;
};

PackingReport verify_packing(const Packing& p);

// Complement of the covered edges inside K_host. Throws ConstructionViolation
// when the packing does not verify.
SimpleGraph uncovered_graph(const Packing& p);

bool is_design(const Packing& p);

// New vertices take ids host..host+add_vertices-1. Throws ExtensionRejected
// naming the offending edge on any overlap.
Packing extend(const Packing& p, int add_vertices, const std::vector<Embedding>& new_copies);

} // namespace hdesign

#endif // HDESIGN_PACKING_HPP
