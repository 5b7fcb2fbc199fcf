#include "hdesign/errors.hpp"
#include "hdesign/formats.hpp"
#include "hdesign/lowerbound.hpp"
#include "hdesign/oracles.hpp"
#include "hdesign/pipeline.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>

using namespace hdesign;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kNotBipartite = 3, kResource = 4, kInternal = 5 };

struct Common {
    std::uint64_t seed = 1;
    std::uint64_t budget_nodes = 20'000'000;
    double budget_secs = 120.0;
    int threshold_T = 0;
    int batch_m = 0;
    bool debug_verify = false;
    int threads = 1;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--seed", c.seed, "random seed");
    cmd->add_option("--budget-nodes", c.budget_nodes, "search node budget per decomposition");
    cmd->add_option("--budget-secs", c.budget_secs, "search time budget per decomposition");
    cmd->add_option("--threshold-T", c.threshold_T, "stop reducing once |Q| <= T (0 = default)");
    cmd->add_option("--batch-m", c.batch_m, "batch size for edge reduction (0 = default)");
    cmd->add_flag("--debug-verify", c.debug_verify, "check state invariants after every stage");
    cmd->add_option("--threads", c.threads, "worker threads (sweep)")->check(CLI::PositiveNumber);
}

DecomposeBudget budget_of(const Common& c)
{
    DecomposeBudget b;
    b.node_limit = c.budget_nodes;
    b.seconds = c.budget_secs;
    b.seed = c.seed;
    return b;
}

PipelineOptions options_of(const Common& c)
{
    PipelineOptions o;
    o.reducer.threshold_T = c.threshold_T;
    o.reducer.budget = budget_of(c);
    o.finisher.m = c.batch_m;
    o.finisher.budget = budget_of(c);
    o.debug_verify = c.debug_verify;
    return o;
}

// A builtin name, or a path to an edge-list file.
Pattern load_pattern(const std::string& spec)
{
    if (is_builtin_pattern(spec))
        return builtin_pattern(spec);
    if (!std::filesystem::exists(spec))
        throw ParseError("unknown pattern '" + spec + "' (not a builtin name or a file)");
    SimpleGraph g = parse_edge_list(read_text_file(spec));
    return analyze_pattern(g, std::filesystem::path(spec).stem().string());
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Complete partial packings of a bipartite graph to designs"};
    app.require_subcommand(1);

    Common common;
    std::string pattern_spec;
    std::string packing_path;
    int random_n = 0;
    std::string out_path, report_path, transcript_path;

    CLI::App* complete = app.add_subcommand("complete", "extend a packing to a design");
    complete->add_option("--pattern", pattern_spec, "builtin pattern name or edge-list file")->required();
    auto* packing_opt = complete->add_option("--packing", packing_path, "packing file to extend");
    complete->add_option("--random", random_n, "start from a random maximal packing of K_n")->excludes(packing_opt);
    complete->add_option("--out", out_path, "design output file");
    complete->add_option("--report", report_path, "report file (default stdout)");
    complete->add_option("--transcript", transcript_path, "stage transcript file");
    add_common(complete, common);

    bool want_design = false;
    CLI::App* verify = app.add_subcommand("verify", "verify a packing file");
    verify->add_option("packing", packing_path, "packing file")->required();
    verify->add_flag("--design", want_design, "also require every host edge to be covered");

    int n = 0, m = 0, s = 2;
    CLI::App* oracle_ex = app.add_subcommand("oracle-ex", "extremal number by exhaustive search");
    oracle_ex->add_option("--pattern", pattern_spec)->required();
    oracle_ex->add_option("--n", n)->required();

    CLI::App* oracle_z = app.add_subcommand("oracle-z", "Zarankiewicz number z(m, n; s, s)");
    oracle_z->add_option("--m", m)->required();
    oracle_z->add_option("--n", n)->required();
    oracle_z->add_option("--s", s);

    std::string mode = "matching";
    int max_add = 4;
    CLI::App* lower = app.add_subcommand("lowerbound", "lower-bound constructions and the completion oracle");
    lower->add_option("--pattern", pattern_spec)->required();
    lower->add_option("--mode", mode, "matching, extremal or min-completion")
        ->check(CLI::IsMember({"matching", "extremal", "min-completion"}));
    lower->add_option("--n", n, "host size (extremal; min-completion on the empty packing)");
    lower->add_option("--packing", packing_path, "packing file (min-completion)");
    lower->add_option("--max-add", max_add, "largest number of added vertices tried");
    lower->add_option("--out", out_path, "packing output file");
    add_common(lower, common);

    int n_lo = 8, n_hi = 20, seeds = 5;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "added-vertex counts over a range of n as CSV");
    sweep_cmd->add_option("--pattern", pattern_spec)->required();
    sweep_cmd->add_option("--n-lo", n_lo);
    sweep_cmd->add_option("--n-hi", n_hi);
    sweep_cmd->add_option("--seeds", seeds, "seeds 1..k per n");
    sweep_cmd->add_option("--out", out_path, "CSV file (default stdout)");
    add_common(sweep_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (complete->parsed()) {
            Pattern h = load_pattern(pattern_spec);
            Packing start;
            if (!packing_path.empty()) {
                start = parse_packing(read_text_file(packing_path));
                if (!(start.pattern.graph == h.graph))
                    throw ParseError("packing file uses a different pattern graph");
                start.pattern = h;
            } else if (random_n > 0) {
                start = random_maximal_packing(random_n, h, common.seed);
            } else {
                throw ParseError("complete needs --packing or --random");
            }
            PipelineResult r = run_pipeline(start, options_of(common));
            if (!out_path.empty())
                write_text_file(out_path, format_packing(r.design));
            if (!transcript_path.empty())
                write_text_file(transcript_path, r.transcript);
            emit(report_path, r.report);
            return is_design(r.design) ? kOk : kVerifyFailed;
        }
        if (verify->parsed()) {
            Packing p = parse_packing(read_text_file(packing_path));
            PackingReport rep = verify_packing(p);
            std::cout << rep.summary() << '\n';
            bool ok = rep.ok();
            if (want_design) {
                bool design = ok && is_design(p);
                std::cout << (design ? "design" : "not a design") << '\n';
                ok = design;
            }
            return ok ? kOk : kVerifyFailed;
        }
        if (oracle_ex->parsed()) {
            Pattern h = load_pattern(pattern_spec);
            std::cout << "ex(" << n << ", " << h.name << ") = " << brute_force_extremal(n, h) << '\n';
            return kOk;
        }
        if (oracle_z->parsed()) {
            std::cout << "z(" << m << ", " << n << "; " << s << ", " << s << ") = " << brute_force_zarankiewicz(m, n, s)
                      << '\n';
            return kOk;
        }
        if (lower->parsed()) {
            Pattern h = load_pattern(pattern_spec);
            if (!h.bipartite())
                throw NotBipartite("pattern " + h.name + " is not bipartite");
            DecomposeBudget b = budget_of(common);
            if (mode == "matching") {
                MatchingComplement mc = matching_complement_packing(h, b);
                std::cout << "matching complement n=" << mc.n << " host=" << mc.packing.host << " copies="
                          << mc.packing.copies.size() << '\n'
                          << mc.certificate.text();
                if (!out_path.empty())
                    write_text_file(out_path, format_packing(mc.packing));
            } else if (mode == "extremal") {
                ExtremalComplement ec = extremal_complement_packing(h, n, b);
                std::cout << ec.diagnostics;
                if (ec.packing && !out_path.empty())
                    write_text_file(out_path, format_packing(*ec.packing));
                if (!ec.packing)
                    return kResource;
            } else {
                Packing p = packing_path.empty() ? Packing{n, h, {}} : parse_packing(read_text_file(packing_path));
                std::optional<int> a = min_completion_oracle(p, max_add, b);
                if (a)
                    std::cout << "min completion " << *a << '\n';
                else
                    std::cout << "no completion with at most " << max_add << " new vertices\n";
            }
            return kOk;
        }
        if (sweep_cmd->parsed()) {
            Pattern h = load_pattern(pattern_spec);
            if (!h.bipartite())
                throw NotBipartite("pattern " + h.name + " is not bipartite");
            std::vector<std::uint64_t> seed_list;
            for (int i = 1; i <= seeds; ++i)
                seed_list.push_back(static_cast<std::uint64_t>(i));
            std::vector<SweepRow> rows = sweep(h, n_lo, n_hi, seed_list, options_of(common), common.threads);
            emit(out_path, format_sweep_csv(rows));
            for (const SweepRow& r : rows)
                if (!r.ok) {
                    std::cerr << "n=" << r.n << " seed=" << r.seed << ": " << r.error << '\n';
                    return kResource;
                }
            return kOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const NotBipartite& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNotBipartite;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}
