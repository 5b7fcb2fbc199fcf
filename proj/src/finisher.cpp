#include "hdesign/finisher.hpp"

#include "hdesign/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hdesign {

int default_batch_m(const Pattern& h)
{
    const int target = 2 * h.order();
    return (target + h.e - 1) / h.e * h.e;
}

bool congruence_holds(long long x, long long y, long long q, int e)
{
    const long long n = x + y + q;
    const long long value = n * (n - 1) / 2 - x * y;
    return value % e == 0;
}

int pad_to_congruence(ReductionState& s)
{
    const int e = s.packing.pattern.e;
    const int add = ((1 - s.host()) % e + e) % e;
    const int first = add_host_vertices(s, add);
    for (int v = first; v < first + add; ++v)
        s.Q.push_back(v);
    std::sort(s.Q.begin(), s.Q.end());
    return add;
}

void check_degrees_mod_g(const SimpleGraph& uncovered, const Pattern& h, const std::string& stage)
{
    for (int v = 0; v < uncovered.order(); ++v)
        if (uncovered.degree(v) % h.g != 0)
            throw ConstructionViolation(stage + ": vertex " + std::to_string(v) + " has uncovered degree " +
                std::to_string(uncovered.degree(v)) + ", not a multiple of " + std::to_string(h.g));
}

namespace {

long long binom(long long n, long long k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<int> common_y_neighbours(const ReductionState& s, const std::vector<int>& K, const std::vector<char>& inY)
{
    std::vector<int> out;
    for_each_bit(s.uncovered.row(K[0]), [&](int y) {
        if (!inY[static_cast<std::size_t>(y)])
            return;
        for (std::size_t i = 1; i < K.size(); ++i)
            if (!s.uncovered.has_edge(K[i], y))
                return;
        out.push_back(y);
    });
    return out;
}

// Next g-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<int>& idx, int n)
{
    int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
        --i;
    if (i < 0)
        return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

// One batch for K: m fresh vertices, then K(K u Q*, N') and K(Q*, Y').
// Returns false when no Y' choice decomposes.
bool place_batch(ReductionState& s, const std::vector<int>& K, const std::vector<int>& N, const std::vector<int>& rest,
    int m, const FinisherParams& params)
{
    const Pattern& h = s.packing.pattern;
    const int e = h.e;
    std::vector<int> Nprime(N.begin(), N.end() - static_cast<long>(N.size() % static_cast<std::size_t>(e)));
    ReductionState trial = s;
    const int first = add_host_vertices(trial, m);
    std::vector<int> qstar(static_cast<std::size_t>(m));
    std::iota(qstar.begin(), qstar.end(), first);
    std::vector<int> left = K;
    left.insert(left.end(), qstar.begin(), qstar.end());
    try {
        place_copies(trial, cover_complete_bipartite(left, Nprime, h, params.budget, "batch K u Q*, N'"));
    } catch (const ResourceLimit&) {
        return false;
    }
    std::size_t ysize = rest.size() - rest.size() % static_cast<std::size_t>(h.g);
    while (true) {
        std::vector<int> Yprime(rest.begin(), rest.begin() + static_cast<long>(ysize));
        bool ok = true;
        std::vector<Embedding> copies;
        if (!Yprime.empty()) {
            try {
                copies = cover_complete_bipartite(qstar, Yprime, h, params.budget, "batch Q*, Y'");
            } catch (const ResourceLimit&) {
                ok = false;
            }
        }
        if (ok) {
            place_copies(trial, copies);
            for (int v : qstar)
                trial.Q.push_back(v);
            std::sort(trial.Q.begin(), trial.Q.end());
            s = std::move(trial);
            return true;
        }
        if (ysize < static_cast<std::size_t>(h.g) || rest.size() - (ysize - static_cast<std::size_t>(h.g)) >= static_cast<std::size_t>(e))
            return false;
        ysize -= static_cast<std::size_t>(h.g);
    }
}

} // namespace

EdgeCountReport reduce_edge_count(ReductionState& s, const FinisherParams& params)
{
    const Pattern& h = s.packing.pattern;
    const int e = h.e;
    const int g = h.g;
    EdgeCountReport rep;
    rep.m = params.m > 0 ? params.m : default_batch_m(h);
    if (rep.m % e != 0 || rep.m % g != 0)
        throw std::invalid_argument("batch size must be a multiple of e(H)");
    const std::vector<int> Qorig = s.Q;
    std::vector<char> inY(static_cast<std::size_t>(s.host()), 0);
    for (int y : s.Y)
        inY[static_cast<std::size_t>(y)] = 1;
    int m_max = rep.m;
    std::vector<int> zs;

    if (static_cast<int>(Qorig.size()) >= g) {
        std::vector<int> idx(static_cast<std::size_t>(g));
        std::iota(idx.begin(), idx.end(), 0);
        do {
            ++rep.subsets;
            std::vector<int> K;
            for (int i : idx)
                K.push_back(Qorig[static_cast<std::size_t>(i)]);
            std::vector<int> N = common_y_neighbours(s, K, inY);
            if (static_cast<int>(N.size()) <= rep.m)
                continue;
            std::vector<int> rest;
            for (int y : s.Y)
                if (!std::binary_search(N.begin(), N.end(), y))
                    rest.push_back(y);
            int m = rep.m;
            bool placed = false;
            for (int tries = 0; tries <= params.m_escalations && !placed; ++tries, m += e) {
                const int first = s.host();
                if (place_batch(s, K, N, rest, m, params)) {
                    placed = true;
                    ++rep.batches;
                    rep.new_vertices += m;
                    m_max = std::max(m_max, m);
                    for (int v = first; v < first + m; ++v)
                        zs.push_back(v);
                }
            }
            if (!placed)
                throw ResourceLimit("reduce_edge_count: no batch decomposition for a subset of size " + std::to_string(g) +
                    " with " + std::to_string(N.size()) + " common neighbours");
            inY.resize(static_cast<std::size_t>(s.host()), 0);
        } while (next_subset(idx, static_cast<int>(Qorig.size())));
    }

    if (static_cast<int>(Qorig.size()) >= g) {
        std::vector<int> idx(static_cast<std::size_t>(g));
        std::iota(idx.begin(), idx.end(), 0);
        do {
            std::vector<int> K;
            for (int i : idx)
                K.push_back(Qorig[static_cast<std::size_t>(i)]);
            rep.max_common = std::max(rep.max_common, static_cast<int>(common_y_neighbours(s, K, inY).size()));
        } while (next_subset(idx, static_cast<int>(Qorig.size())));
    }
    for (int z : zs) {
        int stray = 0;
        for_each_bit(s.uncovered.row(z), [&](int y) { stray += inY[static_cast<std::size_t>(y)]; });
        rep.max_stray = std::max(rep.max_stray, stray);
    }
    if (rep.max_stray > 2 * e)
        throw ConstructionViolation("reduce_edge_count: a batch vertex keeps " + std::to_string(rep.max_stray) +
            " uncovered edges into Y");
    if (rep.max_common > m_max + e)
        throw ConstructionViolation("reduce_edge_count: common neighbourhood of " + std::to_string(rep.max_common) +
            " left");
    rep.bound = binom(static_cast<long long>(s.Q.size()), 2) +
        static_cast<long long>(g) * binom(static_cast<long long>(Qorig.size()), g) * (m_max + e) +
        2LL * e * static_cast<long long>(zs.size());
    rep.edges = static_cast<long long>(s.uncovered.size());
    if (rep.edges > rep.bound)
        throw ConstructionViolation("reduce_edge_count: " + std::to_string(rep.edges) + " uncovered edges exceed " +
            std::to_string(rep.bound));
    return rep;
}

Packing complete_design(const ReductionState& s, const FinisherParams& params, CompletionReport* report)
{
    const Pattern& h = s.packing.pattern;
    const int e = h.e;
    const SimpleGraph& g3 = s.uncovered;
    const int n = s.host();
    CompletionReport local;
    CompletionReport& rep = report ? *report : local;
    rep = CompletionReport{};
    rep.g3_edges = static_cast<long long>(g3.size());
    std::ostringstream trace;

    if (!g3.has_edges()) {
        rep.trace = "uncovered graph empty\n";
        return s.packing;
    }
    std::vector<int> Q, Y;
    for (int v = 0; v < n; ++v)
        (g3.degree(v) > 0 ? Q : Y).push_back(v);
    while (Y.size() % static_cast<std::size_t>(e) != 0) {
        Q.push_back(Y.front());
        Y.erase(Y.begin());
        ++rep.moved;
    }
    std::sort(Q.begin(), Q.end());
    rep.q = static_cast<int>(Q.size());
    rep.y = static_cast<int>(Y.size());
    const long long q = rep.q, y = rep.y;
    trace << "host=" << n << " q=" << q << " y=" << y << " moved=" << rep.moved << " e(G3)=" << rep.g3_edges << '\n';
    if (n % e != 1 % e)
        throw ConstructionViolation("complete_design: host " + std::to_string(n) + " is not 1 mod " + std::to_string(e));
    if ((rep.g3_edges - binom(n, 2)) % e != 0)
        throw ConstructionViolation("complete_design: e(G3) is not binom(|Q|+|Y|, 2) mod e(H)");

    const long long mod = 2LL * e;
    const long long x0 = ((y + q - 1) % mod + mod) % mod;
    for (int step = 0; step <= params.x_steps; ++step) {
        const long long x = x0 + step * mod;
        ++rep.x_tries;
        if (x % h.g != 0 || !congruence_holds(x, y, q, e))
            throw ConstructionViolation("complete_design: congruence fails at |X|=" + std::to_string(x));
        const int fq = static_cast<int>(q);
        const int fx = static_cast<int>(x);
        SimpleGraph f(fq + fx);
        for (int i = 0; i < fq; ++i)
            for (int j = i + 1; j < fq; ++j)
                if (g3.has_edge(Q[static_cast<std::size_t>(i)], Q[static_cast<std::size_t>(j)]))
                    f.add_edge(i, j);
        for (int i = fq; i < fq + fx; ++i)
            for (int j = 0; j < i; ++j)
                f.add_edge(j, i);
        DecomposeResult r = decompose_exact(f, h, params.budget);
        trace << "x=" << x << " " << to_string(r.status) << " nodes=" << r.nodes << " restarts=" << r.restarts
              << (r.hybrid ? " hybrid" : "") << '\n';
        if (!r.found())
            continue;
        std::vector<int> map(Q);
        std::vector<int> X;
        for (int i = 0; i < fx; ++i) {
            map.push_back(n + i);
            X.push_back(n + i);
        }
        std::vector<Embedding> copies = relabel(r.packing->copies, map);
        if (!X.empty() && !Y.empty()) {
            std::vector<Embedding> xy = cover_complete_bipartite(X, Y, h, params.budget, "K(X, Y)");
            copies.insert(copies.end(), xy.begin(), xy.end());
        }
        Packing out = extend(s.packing, fx, copies);
        if (!is_design(out))
            throw ConstructionViolation("complete_design: result is not a design");
        rep.x = fx;
        rep.trace = trace.str();
        return out;
    }
    rep.trace = trace.str();
    throw ResourceLimit("complete_design: no X size within " + std::to_string(params.x_steps + 1) + " tries\n" +
        rep.trace);
}

} // namespace hdesign
