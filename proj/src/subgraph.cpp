#include "hdesign/subgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace hdesign {

std::vector<Edge> image_edges(const SimpleGraph& pattern, const Embedding& emb)
{
    std::vector<Edge> out;
    out.reserve(pattern.size());
    for (const Edge& e : pattern.edges())
        out.push_back(make_edge(emb.image[static_cast<std::size_t>(e.u)], emb.image[static_cast<std::size_t>(e.v)]));
    return out;
}

SearchPlan::SearchPlan(const SimpleGraph& pattern)
    : pattern_(pattern)
{
    build({});
}

SearchPlan::SearchPlan(const SimpleGraph& pattern, int first_a, int first_b)
    : pattern_(pattern)
{
    if (!pattern.has_edge(first_a, first_b))
        throw std::invalid_argument("search plan seed is not a pattern edge");
    build({first_a, first_b});
}

void SearchPlan::build(std::vector<int> seed)
{
    const int n = pattern_.order();
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    order_.clear();
    for (int v : seed) {
        order_.push_back(v);
        placed[static_cast<std::size_t>(v)] = 1;
    }
    while (static_cast<int>(order_.size()) < n) {
        // Prefer the unplaced vertex with most placed neighbours, then
        // highest degree, then lowest id.
        int best = -1;
        int best_links = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)])
                continue;
            int links = 0;
            for (int p : order_)
                if (pattern_.has_edge(v, p))
                    ++links;
            if (links > best_links || (links == best_links && pattern_.degree(v) > pattern_.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        order_.push_back(best);
        placed[static_cast<std::size_t>(best)] = 1;
    }
    back_.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (pattern_.has_edge(order_[static_cast<std::size_t>(i)], order_[static_cast<std::size_t>(j)]))
                back_[static_cast<std::size_t>(i)].push_back(order_[static_cast<std::size_t>(j)]);
}

namespace {

class Matcher {
public:
    Matcher(const SimpleGraph& host, const SearchPlan& plan, const EmbeddingVisitor& visit, const SearchControl& control)
        : host_(host)
        , plan_(plan)
        , visit_(visit)
        , control_(control)
        , words_(static_cast<std::size_t>(host.words()))
        , used_(words_, 0)
        , scratch_(static_cast<std::size_t>(plan.pattern().order()) + 1, std::vector<std::uint64_t>(words_))
        , emb_{std::vector<int>(static_cast<std::size_t>(plan.pattern().order()), -1)}
    {
    }

    SearchStats run(std::span<const int> fixed)
    {
        const auto& order = plan_.order();
        if (fixed.size() > order.size())
            throw std::invalid_argument("too many fixed vertices");
        if (static_cast<int>(order.size()) > host_.order())
            return stats_;
        for (std::size_t i = 0; i < fixed.size(); ++i) {
            int x = fixed[i];
            int p = order[i];
            if (x < 0 || x >= host_.order() || is_used(x) || host_.degree(x) < plan_.pattern().degree(p))
                return stats_;
            for (int q : plan_.back_neighbors()[i])
                if (!host_.has_edge(x, emb_.image[static_cast<std::size_t>(q)]))
                    return stats_;
            assign(p, x);
        }
        recurse(fixed.size());
        return stats_;
    }

private:
    bool is_used(int x) const { return (used_[static_cast<std::size_t>(x >> 6)] >> (x & 63)) & 1u; }
    void assign(int p, int x)
    {
        emb_.image[static_cast<std::size_t>(p)] = x;
        used_[static_cast<std::size_t>(x >> 6)] |= std::uint64_t{1} << (x & 63);
    }
    void release(int p, int x)
    {
        emb_.image[static_cast<std::size_t>(p)] = -1;
        used_[static_cast<std::size_t>(x >> 6)] &= ~(std::uint64_t{1} << (x & 63));
    }

    // Returns false when the enumeration must stop.
    bool recurse(std::size_t level)
    {
        const auto& order = plan_.order();
        if (level == order.size())
            return visit_(emb_);
        ++stats_.nodes;
        if (control_.node_limit && stats_.nodes > control_.node_limit) {
            stats_.truncated = true;
            return false;
        }
        const int p = order[level];
        const int need = plan_.pattern().degree(p);
        auto& cand = scratch_[level];
        const auto& back = plan_.back_neighbors()[level];
        if (back.empty()) {
            std::fill(cand.begin(), cand.end(), ~std::uint64_t{0});
            int tail = host_.order() & 63;
            if (tail)
                cand[words_ - 1] = (std::uint64_t{1} << tail) - 1;
        } else {
            auto first = host_.row(emb_.image[static_cast<std::size_t>(back[0])]);
            std::copy(first.begin(), first.end(), cand.begin());
            for (std::size_t k = 1; k < back.size(); ++k) {
                auto r = host_.row(emb_.image[static_cast<std::size_t>(back[k])]);
                for (std::size_t w = 0; w < words_; ++w)
                    cand[w] &= r[w];
            }
        }
        for (std::size_t w = 0; w < words_; ++w)
            cand[w] &= ~used_[w];

        std::vector<int> list;
        for_each_bit(cand, [&](int x) {
            if (host_.degree(x) >= need)
                list.push_back(x);
        });
        if (control_.rng)
            std::shuffle(list.begin(), list.end(), *control_.rng);
        for (int x : list) {
            assign(p, x);
            bool go_on = recurse(level + 1);
            release(p, x);
            if (!go_on)
                return false;
        }
        return true;
    }

    const SimpleGraph& host_;
    const SearchPlan& plan_;
    const EmbeddingVisitor& visit_;
    const SearchControl& control_;
    std::size_t words_;
    std::vector<std::uint64_t> used_;
    std::vector<std::vector<std::uint64_t>> scratch_;
    Embedding emb_;
    SearchStats stats_;
};

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept
    {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace

SearchStats for_each_embedding(const SimpleGraph& host, const SearchPlan& plan, const EmbeddingVisitor& visit,
    const SearchControl& control, std::span<const int> fixed)
{
    Matcher m(host, plan, visit, control);
    return m.run(fixed);
}

std::optional<Embedding> find_pattern_copy(const SimpleGraph& host, const SimpleGraph& pattern)
{
    if (pattern.size() > host.size())
        return std::nullopt;
    SearchPlan plan(pattern);
    std::optional<Embedding> found;
    for_each_embedding(host, plan, [&](const Embedding& e) {
        found = e;
        return false;
    });
    return found;
}

std::optional<Embedding> find_copy_through(const SimpleGraph& host, const SimpleGraph& pattern, Edge e, std::mt19937_64* rng)
{
    if (!host.has_edge(e.u, e.v))
        return std::nullopt;
    std::vector<Edge> pedges = pattern.edges();
    if (rng)
        std::shuffle(pedges.begin(), pedges.end(), *rng);
    SearchControl control;
    control.rng = rng;
    std::optional<Embedding> found;
    auto stop = [&](const Embedding& emb) {
        found = emb;
        return false;
    };
    for (const Edge& pe : pedges) {
        SearchPlan plan(pattern, pe.u, pe.v);
        int orient[2][2] = {{e.u, e.v}, {e.v, e.u}};
        int first = rng ? static_cast<int>((*rng)() & 1u) : 0;
        for (int o = 0; o < 2; ++o) {
            const int* f = orient[(o + first) & 1];
            for_each_embedding(host, plan, stop, control, std::span<const int>(f, 2));
            if (found)
                return found;
        }
    }
    return found;
}

std::vector<Embedding> enumerate_copies(const SimpleGraph& host, const SimpleGraph& pattern, std::size_t limit, bool* truncated)
{
    std::vector<Embedding> out;
    if (truncated)
        *truncated = false;
    if (pattern.size() > host.size())
        return out;
    SearchPlan plan(pattern);
    const std::vector<Edge> pedges = pattern.edges();
    std::unordered_set<std::vector<int>, VectorHash> seen;
    const int n = host.order();
    std::vector<int> key(pedges.size());
    bool cut = false;
    for_each_embedding(host, plan, [&](const Embedding& emb) {
        for (std::size_t i = 0; i < pedges.size(); ++i) {
            Edge he = make_edge(emb.image[static_cast<std::size_t>(pedges[i].u)], emb.image[static_cast<std::size_t>(pedges[i].v)]);
            key[i] = he.u * n + he.v;
        }
        std::vector<int> sorted = key;
        std::sort(sorted.begin(), sorted.end());
        if (seen.insert(std::move(sorted)).second) {
            out.push_back(emb);
            if (limit && out.size() > limit) {
                cut = true;
                return false;
            }
        }
        return true;
    });
    if (cut) {
        out.pop_back();
        if (truncated)
            *truncated = true;
    }
    return out;
}

StripResult strip_to_pattern_free(const SimpleGraph& g, const SimpleGraph& pattern, std::mt19937_64* rng)
{
    StripResult res{g, {}};
    if (!pattern.has_edges())
        return res;
    SearchPlan plan(pattern);
    SearchControl control;
    control.rng = rng;
    while (res.remainder.size() >= pattern.size()) {
        std::optional<Embedding> found;
        for_each_embedding(res.remainder, plan, [&](const Embedding& e) {
            found = e;
            return false;
        }, control);
        if (!found)
            break;
        for (const Edge& e : image_edges(pattern, *found))
            res.remainder.remove_edge(e);
        res.removed.push_back(std::move(*found));
    }
    return res;
}

std::uint64_t automorphism_count(const SimpleGraph& pattern)
{
    // Automorphisms are the embeddings of the pattern into itself.
    SearchPlan plan(pattern);
    std::uint64_t count = 0;
    for_each_embedding(pattern, plan, [&](const Embedding&) {
        ++count;
        return true;
    });
    return count;
}

EdgeCopyDetector::EdgeCopyDetector(const SimpleGraph& pattern)
{
    std::vector<Embedding> autos;
    SearchPlan self(pattern);
    for_each_embedding(pattern, self, [&](const Embedding& e) {
        autos.push_back(e);
        return true;
    });
    std::vector<std::pair<int, int>> reps;
    std::vector<char> covered(static_cast<std::size_t>(pattern.order() * pattern.order()), 0);
    for (const Edge& e : pattern.edges()) {
        for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (covered[static_cast<std::size_t>(a * pattern.order() + b)])
                continue;
            reps.emplace_back(a, b);
            for (const Embedding& s : autos)
                covered[static_cast<std::size_t>(s[static_cast<std::size_t>(a)] * pattern.order() + s[static_cast<std::size_t>(b)])] = 1;
        }
    }
    for (auto [a, b] : reps)
        plans_.emplace_back(pattern, a, b);
}

std::optional<Embedding> EdgeCopyDetector::copy_through(const SimpleGraph& host, int u, int v, std::mt19937_64* rng) const
{
    if (!host.has_edge(u, v))
        return std::nullopt;
    SearchControl control;
    control.rng = rng;
    std::optional<Embedding> found;
    const int fixed[2] = {u, v};
    std::vector<std::size_t> idx(plans_.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    if (rng)
        std::shuffle(idx.begin(), idx.end(), *rng);
    for (std::size_t i : idx) {
        for_each_embedding(host, plans_[i], [&](const Embedding& e) {
            found = e;
            return false;
        }, control, std::span<const int>(fixed, 2));
        if (found)
            break;
    }
    return found;
}

bool EdgeCopyDetector::contains_through(const SimpleGraph& host, int u, int v) const
{
    return copy_through(host, u, v).has_value();
}

} // namespace hdesign
