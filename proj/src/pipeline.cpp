#include "hdesign/pipeline.hpp"

#include "hdesign/errors.hpp"
#include "hdesign/subgraph.hpp"

#include <atomic>
#include <random>
#include <sstream>
#include <thread>

namespace hdesign {

namespace {

void strip_state(ReductionState& s, const Pattern& h, int& copies)
{
    StripResult r = strip_to_pattern_free(s.uncovered, h.graph);
    copies += static_cast<int>(r.removed.size());
    place_copies(s, r.removed);
}

} // namespace

PipelineResult run_pipeline(const Packing& start, const PipelineOptions& options)
{
    const Pattern& h = start.pattern;
    if (!h.bipartite())
        throw NotBipartite("pattern " + h.name + " is not bipartite");
    if (h.e == 0)
        throw DegeneratePattern("pattern " + h.name + " has no edges");
    PackingReport check = verify_packing(start);
    if (!check.ok())
        throw ConstructionViolation("input packing does not verify: " + check.summary());

    PipelineResult res;
    std::ostringstream log;
    const SimpleGraph g0 = uncovered_graph(start);
    log << "pattern " << h.name << " e=" << h.e << " g=" << h.g << " host=" << start.host << " copies="
        << start.copies.size() << " uncovered=" << g0.size() << '\n';

    if (options.try_direct && (!g0.has_edges() || is_divisible_graph(g0, h))) {
        DecomposeResult d = decompose_exact(g0, h, options.direct_budget);
        log << "direct " << to_string(d.status) << '\n';
        if (d.found()) {
            res.design = extend(start, 0, d.packing->copies);
            res.direct = true;
        }
    }

    if (!res.direct) {
        ReductionState s0 = initial_state(start);
        IterationResult it = iterate_reduction(s0, h, options.reducer);
        log << format_transcript(it);
        ReductionState s = std::move(it.state);
        if (options.debug_verify)
            check_state(s);
        res.added.step1 = it.added;

        const int pad = pad_to_congruence(s);
        int stripped = 0;
        strip_state(s, h, stripped);
        check_degrees_mod_g(s.uncovered, h, "after padding");
        if (options.debug_verify)
            check_state(s);
        EdgeCountReport er = reduce_edge_count(s, options.finisher);
        strip_state(s, h, stripped);
        check_degrees_mod_g(s.uncovered, h, "after batches");
        if (options.debug_verify)
            check_state(s);
        res.added.step2 = pad + er.new_vertices;
        log << "pad " << pad << " stripped " << stripped << '\n';
        log << "batches m=" << er.m << " subsets=" << er.subsets << " batches=" << er.batches << " added="
            << er.new_vertices << " max_common=" << er.max_common << " max_stray=" << er.max_stray
            << " edges=" << er.edges << " bound=" << er.bound << '\n';

        CompletionReport cr;
        res.design = complete_design(s, options.finisher, &cr);
        res.added.step3 = cr.x;
        log << "completion q=" << cr.q << " y=" << cr.y << " moved=" << cr.moved << " x=" << cr.x << " tries=" << cr.x_tries
            << '\n'
            << cr.trace;
    }

    if (!is_design(res.design))
        throw ConstructionViolation("pipeline output is not a design");
    res.transcript = log.str();
    std::ostringstream rep;
    rep << "pattern " << h.name << '\n'
        << "input host " << start.host << " copies " << start.copies.size() << " uncovered " << g0.size() << '\n'
        << "added step1 " << res.added.step1 << '\n'
        << "added step2 " << res.added.step2 << '\n'
        << "added step3 " << res.added.step3 << '\n'
        << "added total " << res.added.total() << '\n'
        << "output host " << res.design.host << " copies " << res.design.copies.size() << '\n'
        << "verify " << (is_design(res.design) ? "design" : "not-a-design") << '\n';
    res.report = rep.str();
    return res;
}

Packing random_maximal_packing(int n, const Pattern& h, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    StripResult r = strip_to_pattern_free(SimpleGraph::complete(n), h.graph, &rng);
    return Packing{n, h, std::move(r.removed)};
}

std::vector<SweepRow> sweep(const Pattern& h, int n_lo, int n_hi, const std::vector<std::uint64_t>& seeds,
    const PipelineOptions& options, int threads)
{
    std::vector<SweepRow> rows;
    for (int n = n_lo; n <= n_hi; ++n)
        for (std::uint64_t seed : seeds) {
            SweepRow r;
            r.n = n;
            r.seed = seed;
            rows.push_back(r);
        }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            SweepRow& r = rows[i];
            try {
                PipelineOptions o = options;
                o.reducer.budget.seed = r.seed;
                o.finisher.budget.seed = r.seed;
                PipelineResult p = run_pipeline(random_maximal_packing(r.n, h, r.seed), o);
                r.added = p.added;
                r.ok = true;
            } catch (const std::exception& ex) {
                r.error = ex.what();
            }
        }
    };
    const int count = std::max(1, threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < count; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    return rows;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows)
{
    std::ostringstream out;
    out << "n,seed,added_step1,added_step2,added_step3,total\n";
    for (const SweepRow& r : rows) {
        out << r.n << ',' << r.seed << ',';
        if (r.ok)
            out << r.added.step1 << ',' << r.added.step2 << ',' << r.added.step3 << ',' << r.added.total() << '\n';
        else
            out << "error,error,error,error\n";
    }
    return out.str();
}

} // namespace hdesign
