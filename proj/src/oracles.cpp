#include "hdesign/oracles.hpp"

#include "hdesign/errors.hpp"
#include "hdesign/subgraph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace hdesign {

namespace {

std::string graph_key(const SimpleGraph& g)
{
    std::string key = std::to_string(g.order()) + ":";
    for (const Edge& e : g.edges())
        key += std::to_string(e.u) + "-" + std::to_string(e.v) + ",";
    return key;
}

// Branch and bound over edges of K_n. Symmetry is broken by fixing vertex 0
// as a maximum-degree vertex adjacent to exactly 1..D.
class ExtremalSearch {
public:
    ExtremalSearch(int n, const SimpleGraph& pattern, int known_lower, const SimpleGraph& lower_witness, int prev_ex)
        : n_(n)
        , detector_(pattern)
        , best_(known_lower)
        , best_graph_(lower_witness)
        , prev_ex_(prev_ex)
    {
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                pairs_.push_back({i, j});
    }

    ExtremalResult run(int upper)
    {
        for (int d = n_ - 1; d >= 1; --d) {
            if (best_ >= upper)
                break;
            if (n_ * d / 2 <= best_)
                break;
            g_ = SimpleGraph(n_);
            bool ok = true;
            for (int j = 1; j <= d && ok; ++j) {
                g_.add_edge(0, j);
                if (detector_.contains_through(g_, 0, j))
                    ok = false;
            }
            if (!ok)
                continue;
            cap_ = d;
            undecided_.assign(static_cast<std::size_t>(n_), 0);
            for (const Edge& e : pairs_) {
                ++undecided_[static_cast<std::size_t>(e.u)];
                ++undecided_[static_cast<std::size_t>(e.v)];
            }
            upper_ = upper;
            recurse(0, d);
        }
        return {best_, best_graph_};
    }

private:
    bool bounded_out(int cur) const
    {
        int slack = 0;
        for (int v = 0; v < n_; ++v)
            slack += std::min(cap_ - g_.degree(v), undecided_[static_cast<std::size_t>(v)]);
        int remaining = std::min(static_cast<int>(pairs_.size()) - idx_, slack / 2);
        if (cur + remaining <= best_)
            return true;
        // Removing a min-degree vertex of an improving graph leaves at most
        // ex(n-1) edges, so every degree must reach best+1-ex(n-1).
        if (prev_ex_ >= 0) {
            int need = best_ + 1 - prev_ex_;
            for (int v = 0; v < n_; ++v)
                if (g_.degree(v) + undecided_[static_cast<std::size_t>(v)] < need)
                    return true;
        }
        return false;
    }

    void recurse(std::size_t i, int cur)
    {
        if (best_ >= upper_)
            return;
        idx_ = static_cast<int>(i);
        if (bounded_out(cur))
            return;
        if (i == pairs_.size()) {
            if (cur > best_) {
                best_ = cur;
                best_graph_ = g_;
            }
            return;
        }
        const Edge e = pairs_[i];
        --undecided_[static_cast<std::size_t>(e.u)];
        --undecided_[static_cast<std::size_t>(e.v)];
        if (g_.degree(e.u) < cap_ && g_.degree(e.v) < cap_) {
            g_.add_edge(e.u, e.v);
            if (!detector_.contains_through(g_, e.u, e.v))
                recurse(i + 1, cur + 1);
            g_.remove_edge(e.u, e.v);
        }
        recurse(i + 1, cur);
        ++undecided_[static_cast<std::size_t>(e.u)];
        ++undecided_[static_cast<std::size_t>(e.v)];
        idx_ = static_cast<int>(i);
    }

    int n_;
    EdgeCopyDetector detector_;
    int best_;
    SimpleGraph best_graph_;
    int prev_ex_;
    std::vector<Edge> pairs_;
    SimpleGraph g_;
    int cap_ = 0;
    int upper_ = 0;
    int idx_ = 0;
    std::vector<int> undecided_;
};

std::mutex g_extremal_mutex;
std::map<std::string, ExtremalResult> g_extremal_cache;

ExtremalResult extremal_uncached(int n, const SimpleGraph& pattern);

ExtremalResult extremal_cached(int n, const SimpleGraph& pattern)
{
    const std::string key = std::to_string(n) + "|" + graph_key(pattern);
    {
        std::lock_guard lock(g_extremal_mutex);
        auto it = g_extremal_cache.find(key);
        if (it != g_extremal_cache.end())
            return it->second;
    }
    ExtremalResult r = extremal_uncached(n, pattern);
    std::lock_guard lock(g_extremal_mutex);
    g_extremal_cache.emplace(key, r);
    return r;
}

ExtremalResult extremal_uncached(int n, const SimpleGraph& pattern)
{
    if (n <= 1)
        return {0, SimpleGraph(std::max(n, 0))};
    if (pattern.order() > n) {
        SimpleGraph k = SimpleGraph::complete(n);
        return {static_cast<int>(k.size()), k};
    }
    ExtremalResult prev = extremal_cached(n - 1, pattern);
    SimpleGraph lower = prev.witness;
    lower.add_vertices(1);
    int upper = static_cast<int>(SimpleGraph::complete(n).size());
    if (n >= 3)
        upper = std::min<long long>(upper, static_cast<long long>(n) * prev.edges / (n - 2));
    if (prev.edges >= upper)
        return {prev.edges, lower};
    ExtremalSearch search(n, pattern, prev.edges, lower, prev.edges);
    return search.run(upper);
}

} // namespace

ExtremalResult extremal_graph(int n, const Pattern& h, int guard)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    if (n > guard)
        throw ResourceLimit("brute_force_extremal: n = " + std::to_string(n) + " exceeds guard " + std::to_string(guard));
    return extremal_cached(n, h.graph);
}

int brute_force_extremal(int n, const Pattern& h, int guard)
{
    return extremal_graph(n, h, guard).edges;
}

namespace {

class ZarankiewiczSearch {
public:
    ZarankiewiczSearch(int m, int n, int s)
        : m_(m)
        , n_(n)
        , s_(s)
    {
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
            masks_.push_back(mask);
        // Rows kept in order (popcount desc, mask asc).
        std::sort(masks_.begin(), masks_.end(), [](std::uint32_t a, std::uint32_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa > pb : a < b;
        });
    }

    int run()
    {
        for (int k = n_; k >= 1; --k) {
            if (k * m_ <= best_)
                break;
            std::uint32_t first = (1u << k) - 1;
            rows_.assign(1, first);
            if (!valid_last())
                continue;
            std::size_t start = static_cast<std::size_t>(std::find(masks_.begin(), masks_.end(), first) - masks_.begin());
            recurse(start, k);
        }
        return best_;
    }

private:
    bool valid_last() const
    {
        // No s rows (including the newest) with s common columns.
        const std::size_t r = rows_.size();
        if (static_cast<int>(r) < s_)
            return true;
        std::uint32_t last = rows_.back();
        if (std::popcount(last) < s_)
            return true;
        std::vector<int> pick;
        return !choose(0, static_cast<int>(r) - 1, s_ - 1, last, pick);
    }

    bool choose(int from, int limit, int left, std::uint32_t inter, std::vector<int>& pick) const
    {
        if (std::popcount(inter) < s_)
            return false;
        if (left == 0)
            return true;
        for (int i = from; i < limit; ++i)
            if (choose(i + 1, limit, left - 1, inter & rows_[static_cast<std::size_t>(i)], pick))
                return true;
        return false;
    }

    void recurse(std::size_t from, int cur)
    {
        const int placed = static_cast<int>(rows_.size());
        if (placed == m_) {
            best_ = std::max(best_, cur);
            return;
        }
        // Empty rows are allowed as the tail.
        best_ = std::max(best_, cur);
        for (std::size_t i = from; i < masks_.size(); ++i) {
            int pc = std::popcount(masks_[i]);
            if (cur + pc * (m_ - placed) <= best_)
                break;
            rows_.push_back(masks_[i]);
            if (valid_last())
                recurse(i, cur + pc);
            rows_.pop_back();
        }
    }

    int m_, n_, s_;
    int best_ = 0;
    std::vector<std::uint32_t> masks_;
    std::vector<std::uint32_t> rows_;
};

} // namespace

int brute_force_zarankiewicz(int m, int n, int s)
{
    if (m < 0 || n < 0 || s < 1)
        throw std::invalid_argument("brute_force_zarankiewicz: bad arguments");
    if (m > kZarankiewiczSideGuard || n > kZarankiewiczSideGuard || s > kZarankiewiczSGuard)
        throw ResourceLimit("brute_force_zarankiewicz: guard exceeded (m,n <= 7, s <= 3)");
    if (m == 0 || n == 0 || s == 1)
        return 0;
    if (s > m || s > n)
        return m * n;
    ZarankiewiczSearch search(m, n, s);
    return search.run();
}

namespace {

class RegularSearch {
public:
    RegularSearch(const SimpleGraph& g, int r)
        : g_(g)
        , r_(r)
        , edges_(g.edges())
        , deg_(static_cast<std::size_t>(g.order()), 0)
        , left_(g.degrees())
        , chosen_(edges_.size(), 0)
    {
    }

    std::optional<SimpleGraph> run()
    {
        recurse(0, 0);
        if (best_ <= 0)
            return std::nullopt;
        SimpleGraph out(g_.order());
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (best_chosen_[i])
                out.add_edge(edges_[i]);
        return out;
    }

private:
    bool vertex_ok(int v) const
    {
        int d = deg_[static_cast<std::size_t>(v)];
        int l = left_[static_cast<std::size_t>(v)];
        if (d > r_)
            return false;
        if (d > 0 && d + l < r_)
            return false;
        return true;
    }

    void recurse(std::size_t i, int cur)
    {
        int possible = 0;
        for (std::size_t j = i; j < edges_.size(); ++j)
            ++possible;
        if (cur + possible <= best_)
            return;
        if (i == edges_.size()) {
            for (int v = 0; v < g_.order(); ++v) {
                int d = deg_[static_cast<std::size_t>(v)];
                if (d != 0 && d != r_)
                    return;
            }
            if (cur > best_) {
                best_ = cur;
                best_chosen_ = chosen_;
            }
            return;
        }
        const Edge e = edges_[i];
        --left_[static_cast<std::size_t>(e.u)];
        --left_[static_cast<std::size_t>(e.v)];
        // Include.
        ++deg_[static_cast<std::size_t>(e.u)];
        ++deg_[static_cast<std::size_t>(e.v)];
        chosen_[i] = 1;
        if (vertex_ok(e.u) && vertex_ok(e.v))
            recurse(i + 1, cur + 1);
        chosen_[i] = 0;
        --deg_[static_cast<std::size_t>(e.u)];
        --deg_[static_cast<std::size_t>(e.v)];
        // Exclude.
        if (vertex_ok(e.u) && vertex_ok(e.v))
            recurse(i + 1, cur);
        ++left_[static_cast<std::size_t>(e.u)];
        ++left_[static_cast<std::size_t>(e.v)];
    }

    const SimpleGraph& g_;
    int r_;
    std::vector<Edge> edges_;
    std::vector<int> deg_;
    std::vector<int> left_;
    std::vector<char> chosen_;
    std::vector<char> best_chosen_;
    int best_ = 0;
};

} // namespace

std::optional<SimpleGraph> find_r_regular_subgraph(const SimpleGraph& g, int r, int edge_guard)
{
    if (r < 1)
        throw std::invalid_argument("find_r_regular_subgraph: r must be positive");
    if (static_cast<int>(g.size()) > edge_guard)
        throw ResourceLimit("find_r_regular_subgraph: " + std::to_string(g.size()) + " edges exceeds guard " + std::to_string(edge_guard));
    RegularSearch search(g, r);
    return search.run();
}

} // namespace hdesign
