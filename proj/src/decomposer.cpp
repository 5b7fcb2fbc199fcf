#include "hdesign/decomposer.hpp"

#include "hdesign/errors.hpp"
#include "hdesign/exact_cover.hpp"
#include "hdesign/formats.hpp"
#include "hdesign/subgraph.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <tuple>

namespace hdesign {

const char* to_string(DecomposeStatus s)
{
    switch (s) {
    case DecomposeStatus::Found:
        return "found";
    case DecomposeStatus::NotDivisible:
        return "not-divisible";
    case DecomposeStatus::Exhausted:
        return "exhausted";
    case DecomposeStatus::BudgetExceeded:
        return "budget-exceeded";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

std::string pattern_key(const Pattern& h)
{
    std::string key = std::to_string(h.graph.order()) + ":";
    for (const Edge& e : h.graph.edges())
        key += std::to_string(e.u) + "-" + std::to_string(e.v) + ",";
    return key;
}

std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    return x;
}

struct Budget {
    Budget(const DecomposeBudget& b)
        : nodes_left(b.node_limit)
        , deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(b.seconds)))
    {
    }

    bool expired() const { return nodes_left == 0 || Clock::now() > deadline; }
    void spend(std::uint64_t n) { nodes_left = n >= nodes_left ? 0 : nodes_left - n; }

    std::uint64_t nodes_left;
    Clock::time_point deadline;
    std::uint64_t used = 0;
};

class EdgeIndex {
public:
    explicit EdgeIndex(const SimpleGraph& g)
        : n_(g.order())
        , id_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1)
    {
        for (const Edge& e : g.edges()) {
            id_[static_cast<std::size_t>(e.u) * n_ + e.v] = count_;
            id_[static_cast<std::size_t>(e.v) * n_ + e.u] = count_;
            ++count_;
        }
    }
    int operator()(int u, int v) const { return id_[static_cast<std::size_t>(u) * n_ + v]; }
    int count() const { return count_; }

private:
    int n_;
    std::vector<int> id_;
    int count_ = 0;
};

enum class SearchOutcome { Found, Exhausted, Budget };

// Exact cover over the given candidate copies with geometric restarts; any
// restart that runs to completion proves there is no decomposition.
SearchOutcome exact_search(const SimpleGraph& g, const Pattern& h, const std::vector<Embedding>& cands,
    std::uint64_t seed, Budget& budget, std::uint64_t first_limit, std::vector<Embedding>& out, int& restarts)
{
    const EdgeIndex index(g);
    std::vector<std::vector<int>> rows;
    rows.reserve(cands.size());
    const std::vector<Edge> pedges = h.graph.edges();
    for (const Embedding& emb : cands) {
        std::vector<int> cols;
        for (const Edge& pe : pedges)
            cols.push_back(index(emb[static_cast<std::size_t>(pe.u)], emb[static_cast<std::size_t>(pe.v)]));
        rows.push_back(std::move(cols));
    }
    std::vector<int> row_order(rows.size());
    std::iota(row_order.begin(), row_order.end(), 0);
    std::vector<int> col_perm(static_cast<std::size_t>(index.count()));
    std::iota(col_perm.begin(), col_perm.end(), 0);

    std::uint64_t limit = std::max<std::uint64_t>(first_limit, 1000);
    for (int attempt = 0;; ++attempt) {
        if (budget.expired())
            return SearchOutcome::Budget;
        if (attempt > 0) {
            std::mt19937_64 rng(mix(seed, static_cast<std::uint64_t>(attempt)));
            std::shuffle(row_order.begin(), row_order.end(), rng);
            std::shuffle(col_perm.begin(), col_perm.end(), rng);
        }
        ExactCover dlx(index.count());
        std::vector<int> cols;
        for (int r : row_order) {
            cols.clear();
            for (int c : rows[static_cast<std::size_t>(r)])
                cols.push_back(col_perm[static_cast<std::size_t>(c)]);
            dlx.add_row(cols);
        }
        std::uint64_t this_limit = std::min(limit, budget.nodes_left);
        CoverResult res = dlx.solve(this_limit, budget.deadline);
        budget.spend(res.nodes);
        budget.used += res.nodes;
        ++restarts;
        if (res.status == CoverStatus::Found) {
            out.clear();
            for (int r : res.rows)
                out.push_back(cands[static_cast<std::size_t>(row_order[static_cast<std::size_t>(r)])]);
            return SearchOutcome::Found;
        }
        if (res.status == CoverStatus::Exhausted)
            return SearchOutcome::Exhausted;
        limit = limit + limit / 2;
    }
}

void remove_copy(SimpleGraph& g, const SimpleGraph& pattern, const Embedding& emb)
{
    for (const Edge& e : image_edges(pattern, emb))
        g.remove_edge(e);
}

void add_copy(SimpleGraph& g, const SimpleGraph& pattern, const Embedding& emb)
{
    for (const Edge& e : image_edges(pattern, emb))
        g.add_edge(e);
}

// Picks a vertex of least positive degree and its least-degree neighbour.
std::optional<Edge> hardest_edge(const SimpleGraph& g, std::mt19937_64& rng)
{
    int best = -1, best_deg = 0, ties = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == 0)
            continue;
        if (best < 0 || d < best_deg) {
            best = v;
            best_deg = d;
            ties = 1;
        } else if (d == best_deg && rng() % static_cast<std::uint64_t>(++ties) == 0) {
            best = v;
        }
    }
    if (best < 0)
        return std::nullopt;
    int nb = -1, nb_deg = 0;
    ties = 0;
    for_each_bit(g.row(best), [&](int w) {
        int d = g.degree(w);
        if (nb < 0 || d < nb_deg) {
            nb = w;
            nb_deg = d;
            ties = 1;
        } else if (d == nb_deg && rng() % static_cast<std::uint64_t>(++ties) == 0) {
            nb = w;
        }
    });
    return make_edge(best, nb);
}

// Randomized greedy packing down to a small remainder, then exact cover on
// the remainder; on failure the most recent greedy copies are returned to
// the remainder and the exact search is repeated.
SearchOutcome hybrid_search(const SimpleGraph& g, const Pattern& h, const DecomposeBudget& params, Budget& budget,
    std::vector<Embedding>& out, int& restarts)
{
    const EdgeCopyDetector detector(h.graph);
    const std::size_t tail = std::max<std::size_t>(static_cast<std::size_t>(6 * h.e), 36);
    for (int attempt = 0;; ++attempt) {
        if (budget.expired())
            return SearchOutcome::Budget;
        std::mt19937_64 rng(mix(params.seed ^ 0x5bd1e995ull, static_cast<std::uint64_t>(attempt)));
        SimpleGraph rest = g;
        std::vector<Embedding> chosen;
        bool dead = false;
        while (rest.size() > tail) {
            auto e = hardest_edge(rest, rng);
            auto emb = detector.copy_through(rest, e->u, e->v, &rng);
            if (!emb) {
                dead = true;
                break;
            }
            remove_copy(rest, h.graph, *emb);
            chosen.push_back(std::move(*emb));
            if ((chosen.size() & 63) == 0 && budget.expired())
                return SearchOutcome::Budget;
        }
        ++restarts;
        if (dead && chosen.empty())
            continue;
        // Undo 0, 2, 4, 8 ... of the latest greedy copies.
        std::size_t undo = 0;
        for (int round = 0; round < 5; ++round) {
            while (undo > 0 && !chosen.empty() && undo > 0) {
                add_copy(rest, h.graph, chosen.back());
                chosen.pop_back();
                --undo;
            }
            if (!dead || round > 0) {
                bool truncated = false;
                std::vector<Embedding> cands = enumerate_copies(rest, h.graph, params.row_cap, &truncated);
                if (truncated)
                    break;
                std::vector<Embedding> tail_copies;
                int inner = 0;
                Budget local = budget;
                local.nodes_left = std::min<std::uint64_t>(budget.nodes_left, 20'000 << round);
                SearchOutcome r = exact_search(rest, h, cands, mix(params.seed, static_cast<std::uint64_t>(attempt * 8 + round)),
                    local, 2000, tail_copies, inner);
                budget.spend(local.used);
                if (r == SearchOutcome::Found) {
                    out = chosen;
                    out.insert(out.end(), tail_copies.begin(), tail_copies.end());
                    return SearchOutcome::Found;
                }
                if (budget.expired())
                    return SearchOutcome::Budget;
            }
            undo = std::size_t{2} << round;
            if (chosen.empty())
                break;
        }
    }
}

bool covers_exactly(const SimpleGraph& g, const Pattern& h, const std::vector<Embedding>& copies)
{
    SimpleGraph left = g;
    for (const Embedding& emb : copies) {
        if (static_cast<int>(emb.size()) != h.order())
            return false;
        std::vector<int> img = emb.image;
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
            return false;
        for (const Edge& e : image_edges(h.graph, emb))
            if (!left.remove_edge(e))
                return false;
    }
    return left.size() == 0;
}

} // namespace

DecomposeResult decompose_exact(const SimpleGraph& g, const Pattern& h, const DecomposeBudget& params)
{
    DecomposeResult res;
    if (!g.has_edges()) {
        res.status = DecomposeStatus::Found;
        res.packing = Packing{g.order(), h, {}};
        return res;
    }
    if (!is_divisible_graph(g, h)) {
        res.status = DecomposeStatus::NotDivisible;
        res.reason = "divisibility: e(H) must divide " + std::to_string(g.size()) + " and gcd(H) = " + std::to_string(h.g) +
            " every degree";
        return res;
    }
    Budget budget(params);
    bool truncated = false;
    std::vector<Embedding> cands = enumerate_copies(g, h.graph, params.row_cap, &truncated);
    std::vector<Embedding> copies;
    SearchOutcome outcome;
    if (!truncated) {
        outcome = exact_search(g, h, cands, params.seed, budget, 50'000, copies, res.restarts);
    } else {
        res.hybrid = true;
        cands.clear();
        cands.shrink_to_fit();
        outcome = hybrid_search(g, h, params, budget, copies, res.restarts);
    }
    res.nodes = budget.used;
    switch (outcome) {
    case SearchOutcome::Found:
        if (!covers_exactly(g, h, copies))
            throw ConstructionViolation("decompose_exact: search produced an invalid cover");
        res.status = DecomposeStatus::Found;
        res.packing = Packing{g.order(), h, std::move(copies)};
        break;
    case SearchOutcome::Exhausted:
        res.status = DecomposeStatus::Exhausted;
        res.reason = "exhausted: no exact cover by copies of " + (h.name.empty() ? std::string("H") : h.name);
        break;
    case SearchOutcome::Budget:
        res.status = DecomposeStatus::BudgetExceeded;
        res.reason = "budget exceeded after " + std::to_string(res.nodes) + " nodes";
        break;
    }
    return res;
}

std::vector<Embedding> require_decomposition(const SimpleGraph& g, const Pattern& h, const DecomposeBudget& budget,
    const std::string& what)
{
    DecomposeResult r = decompose_exact(g, h, budget);
    if (!r.found())
        throw ResourceLimit(what + ": " + to_string(r.status) + (r.reason.empty() ? "" : " (" + r.reason + ")"));
    return std::move(r.packing->copies);
}

std::vector<Embedding> relabel(const std::vector<Embedding>& copies, std::span<const int> vertex_map)
{
    std::vector<Embedding> out;
    out.reserve(copies.size());
    for (const Embedding& emb : copies) {
        Embedding m;
        m.image.reserve(emb.size());
        for (int x : emb.image)
            m.image.push_back(vertex_map[static_cast<std::size_t>(x)]);
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

std::mutex g_bip_mutex;
std::map<std::tuple<std::string, int, int>, DecomposeResult> g_bip_cache;

constexpr int kDirectSide = 12;

DecomposeResult bipartite_rec(int a, int b, const Pattern& h, const DecomposeBudget& budget, const std::string& key);

// K_{b,a} solution read back as K_{a,b}.
DecomposeResult swapped(int a, int b, const Pattern& h, const DecomposeBudget& budget, const std::string& key)
{
    DecomposeResult r = bipartite_rec(b, a, h, budget, key);
    if (!r.found())
        return r;
    std::vector<int> map(static_cast<std::size_t>(a + b));
    for (int i = 0; i < b; ++i)
        map[static_cast<std::size_t>(i)] = a + i;
    for (int i = 0; i < a; ++i)
        map[static_cast<std::size_t>(b + i)] = i;
    r.packing->copies = relabel(r.packing->copies, map);
    return r;
}

DecomposeResult bipartite_rec(int a, int b, const Pattern& h, const DecomposeBudget& budget, const std::string& key)
{
    DecomposeResult res;
    if (a == 0 || b == 0) {
        res.status = DecomposeStatus::Found;
        res.packing = Packing{a + b, h, {}};
        return res;
    }
    if (!is_divisible_bipartite(a, b, h)) {
        res.status = DecomposeStatus::NotDivisible;
        res.reason = "divisibility of K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
        return res;
    }
    if (a > b)
        return swapped(a, b, h, budget, key);
    const auto ck = std::make_tuple(key, a, b);
    {
        std::lock_guard lock(g_bip_mutex);
        auto it = g_bip_cache.find(ck);
        if (it != g_bip_cache.end())
            return it->second;
    }
    bool budget_hit = false;
    if (b <= kDirectSide) {
        res = decompose_exact(SimpleGraph::complete_bipartite(a, b), h, budget);
        if (res.status != DecomposeStatus::BudgetExceeded) {
            std::lock_guard lock(g_bip_mutex);
            g_bip_cache.emplace(ck, res);
            return res;
        }
        budget_hit = true;
    }
    // Split the larger side b = c + (b - c) into two divisible blocks.
    for (int c = 1; c < b; ++c) {
        if (!is_divisible_bipartite(a, c, h) || !is_divisible_bipartite(a, b - c, h))
            continue;
        DecomposeResult left = bipartite_rec(a, c, h, budget, key);
        if (!left.found()) {
            budget_hit = budget_hit || left.status == DecomposeStatus::BudgetExceeded;
            continue;
        }
        DecomposeResult right = bipartite_rec(a, b - c, h, budget, key);
        if (!right.found()) {
            budget_hit = budget_hit || right.status == DecomposeStatus::BudgetExceeded;
            continue;
        }
        res = DecomposeResult{};
        res.status = DecomposeStatus::Found;
        res.nodes = left.nodes + right.nodes;
        std::vector<Embedding> copies = left.packing->copies;
        // right block: side A unchanged, side B shifted by c
        std::vector<int> map(static_cast<std::size_t>(a + b - c));
        for (int i = 0; i < a; ++i)
            map[static_cast<std::size_t>(i)] = i;
        for (int i = a; i < a + b - c; ++i)
            map[static_cast<std::size_t>(i)] = i + c;
        std::vector<Embedding> r2 = relabel(right.packing->copies, map);
        copies.insert(copies.end(), r2.begin(), r2.end());
        res.packing = Packing{a + b, h, std::move(copies)};
        std::lock_guard lock(g_bip_mutex);
        g_bip_cache.emplace(ck, res);
        return res;
    }
    res = DecomposeResult{};
    res.status = budget_hit ? DecomposeStatus::BudgetExceeded : DecomposeStatus::Exhausted;
    res.reason = "no block decomposition of K_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    if (!budget_hit) {
        std::lock_guard lock(g_bip_mutex);
        g_bip_cache.emplace(ck, res);
    }
    return res;
}

} // namespace

DecomposeResult decompose_complete_bipartite(int a, int b, const Pattern& h, const DecomposeBudget& budget)
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("decompose_complete_bipartite: negative side");
    return bipartite_rec(a, b, h, budget, pattern_key(h));
}

std::vector<Embedding> cover_complete_bipartite(std::span<const int> A, std::span<const int> B, const Pattern& h,
    const DecomposeBudget& budget, const std::string& what)
{
    const int a = static_cast<int>(A.size());
    const int b = static_cast<int>(B.size());
    DecomposeResult r = decompose_complete_bipartite(a, b, h, budget);
    if (!r.found())
        throw ResourceLimit(what + ": K_{" + std::to_string(a) + "," + std::to_string(b) + "} " + to_string(r.status));
    std::vector<int> map(A.begin(), A.end());
    map.insert(map.end(), B.begin(), B.end());
    return relabel(r.packing->copies, map);
}

namespace {

std::mutex g_design_mutex;
std::map<std::pair<std::string, int>, std::optional<Packing>> g_design_cache;
std::optional<std::filesystem::path> g_cache_dir;

std::optional<std::filesystem::path> cache_file(const Pattern& h, int r)
{
    std::lock_guard lock(g_design_mutex);
    if (!g_cache_dir)
        return std::nullopt;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(pattern_key(h))));
    return *g_cache_dir / ("K" + std::to_string(r) + "-" + buf + ".pack");
}

} // namespace

void set_design_cache_dir(std::optional<std::filesystem::path> dir)
{
    std::lock_guard lock(g_design_mutex);
    g_cache_dir = std::move(dir);
    if (g_cache_dir)
        std::filesystem::create_directories(*g_cache_dir);
}

void clear_design_cache()
{
    {
        std::lock_guard lock(g_design_mutex);
        g_design_cache.clear();
    }
    std::lock_guard lock(g_bip_mutex);
    g_bip_cache.clear();
}

std::optional<Packing> complete_graph_design(int r, const Pattern& h, const DecomposeBudget& budget)
{
    if (r < 0)
        throw std::invalid_argument("complete_graph_design: negative order");
    if (!is_divisible_order(r, h))
        return std::nullopt;
    const auto key = std::make_pair(pattern_key(h), r);
    {
        std::lock_guard lock(g_design_mutex);
        auto it = g_design_cache.find(key);
        if (it != g_design_cache.end())
            return it->second;
    }
    const SimpleGraph kr = SimpleGraph::complete(r);
    std::optional<Packing> design;
    bool loaded = false;
    auto file = cache_file(h, r);
    if (file && std::filesystem::exists(*file)) {
        try {
            Packing p = parse_packing(read_text_file(*file));
            if (p.host == r && p.pattern.graph == h.graph && covers_exactly(kr, h, p.copies)) {
                p.pattern = h;
                design = std::move(p);
                loaded = true;
            }
        } catch (const Error&) {
            loaded = false;
        }
    }
    if (!loaded) {
        DecomposeResult res = decompose_exact(kr, h, budget);
        if (res.status == DecomposeStatus::BudgetExceeded)
            throw ResourceLimit("design of K_" + std::to_string(r) + ": " + res.reason);
        if (res.found()) {
            design = std::move(res.packing);
            if (file)
                write_text_file(*file, format_packing(*design));
        }
    }
    std::lock_guard lock(g_design_mutex);
    g_design_cache.emplace(key, design);
    return design;
}

int smallest_packable_r(const Pattern& h, long long lower_bound, int guard, const DecomposeBudget& budget)
{
    for (int r = 1; r <= guard; ++r) {
        if (static_cast<long long>(r) * (r - 1) / 2 < lower_bound)
            continue;
        if (!is_divisible_order(r, h))
            continue;
        if (complete_graph_design(r, h, budget))
            return r;
    }
    throw ResourceLimit("smallest_packable_r: no packable r <= " + std::to_string(guard) + " for bound " +
        std::to_string(lower_bound));
}

TemplateCover cover_matching_via_template(const Matching& L, const Pattern& h, int r, const Packing& templ, int fresh_base)
{
    TemplateCover out;
    out.new_vertices = r;
    if (L.edges.size() > templ.copies.size())
        throw InsufficientTemplate("template has " + std::to_string(templ.copies.size()) + " copies for " +
            std::to_string(L.edges.size()) + " matching edges");
    for (std::size_t i = 0; i < L.edges.size(); ++i) {
        const Edge m = make_edge(L.edges[i].u, L.edges[i].v);
        const Embedding& src = templ.copies[i];
        std::vector<Edge> es = image_edges(h.graph, src);
        const Edge d = *std::min_element(es.begin(), es.end());
        Embedding emb;
        emb.image.reserve(src.size());
        for (int t : src.image) {
            if (t == d.u)
                emb.image.push_back(m.u);
            else if (t == d.v)
                emb.image.push_back(m.v);
            else
                emb.image.push_back(fresh_base + t);
        }
        out.copies.push_back(std::move(emb));
    }
    return out;
}

} // namespace hdesign
