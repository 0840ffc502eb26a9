#include "ramsey/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "ramsey/bounds.hpp"
#include "ramsey/cache.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/saturation.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

namespace {

struct Options {
    std::vector<std::string> tokens;
    std::vector<int> table;
    std::uint64_t budget_nodes = SearchConfig{}.node_budget;
    long long budget_secs = SearchConfig{}.wall_budget.count();
    int threads = 1;
    bool no_prune = false;
    bool no_symmetry = false;
    bool progress = false;
    std::string cache;
    std::string cert_out;
    std::string file;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& words, std::size_t count)
{
    std::string out;
    for (std::size_t i = 0; i < count && i < words.size(); ++i)
        out += (i ? " " : "") + words[i];
    return out;
}

PatternSpec pattern_from(const std::vector<std::string>& tokens, std::size_t count)
{
    if (count == 0)
        throw UsageError("missing pattern; grammar: " + std::string(kPatternGrammar));
    return parse_pattern(join(tokens, count));
}

std::string blue_line(const TwoColoring& c)
{
    std::string out = "blue";
    for (std::size_t idx : c.edges(Color::Blue)) {
        const auto e = from_linear(idx);
        out += ' ' + std::to_string(e.i) + '-' + std::to_string(e.j);
    }
    return out;
}

std::string format_interval(const BoundInterval& b)
{
    std::ostringstream out;
    if (b.lo == b.hi && b.lo_source == b.hi_source)
        out << "lo=" << b.lo << " hi=" << b.hi << " (" << to_string(b.hi_source) << ')';
    else
        out << "lo=" << b.lo << " (" << to_string(b.lo_source) << ") hi=" << b.hi << " (" << to_string(b.hi_source)
            << ')';
    return out.str();
}

class Session {
public:
    Session(const Options& opt, std::ostream& out, std::ostream& err)
        : opt_(opt)
        , out_(out)
        , err_(err)
    {
        if (opt.threads < 1)
            throw UsageError("--threads must be >= 1");
        if (opt.budget_nodes == 0 || opt.budget_secs <= 0)
            throw UsageError("budgets must be positive");
        cfg_.node_budget = opt.budget_nodes;
        cfg_.wall_budget = std::chrono::seconds(opt.budget_secs);
        cfg_.worker_count = opt.threads;
        if (opt.no_prune)
            cfg_.prune_containment = cfg_.prune_degree = cfg_.prune_maxdeg_lemma = false;
        if (opt.no_symmetry)
            cfg_.symmetry_color_swap = cfg_.symmetry_first_vertex = false;
        if (opt.progress)
            cfg_.progress = [&err](const SearchProgress& p) {
                err << "progress: nodes=" << p.nodes << " rate=" << std::fixed << std::setprecision(0)
                    << p.nodes_per_second << "/s subtrees=" << p.prefixes_done << '/' << p.prefixes_total << '\n';
            };
        if (!opt.cache.empty())
            cache_.emplace(opt.cache, &err);
    }

    ArrowDecider decider()
    {
        if (cache_)
            return cache_->decider(cfg_);
        return [this](const PatternSpec& p, int n) { return decide_arrow(p, n, cfg_); };
    }

    const SearchConfig& config() const { return cfg_; }

    void write_certificate(const std::string& path, const Certificate& cert)
    {
        std::ofstream file(path);
        file << emit_certificate(cert);
        if (!file)
            throw std::runtime_error("cannot write certificate to " + path);
        out_ << "certificate written to " << path << '\n';
    }

    int bounds()
    {
        if (!opt_.table.empty()) {
            const int m_max = opt_.table.at(0);
            const int n_max = opt_.table.at(1);
            out_ << "m n lo hi lo-source hi-source\n";
            for (int m = 1; m <= m_max; ++m)
                for (int n = m; n <= n_max; ++n) {
                    const auto b = bistar_bounds(m, n);
                    out_ << m << ' ' << n << ' ' << b.lo << ' ' << b.hi << ' ' << to_string(b.lo_source) << ' '
                         << to_string(b.hi_source) << '\n';
                }
            return kExitProven;
        }
        const PatternSpec p = pattern_from(opt_.tokens, opt_.tokens.size());
        out_ << format_interval(pattern_bounds(p)) << '\n';
        return kExitProven;
    }

    int compute()
    {
        const PatternSpec p = pattern_from(opt_.tokens, opt_.tokens.size());
        const auto result = compute_ramsey(p, cfg_, decider());
        if (const auto* bounded = std::get_if<BoundedOnly>(&result)) {
            out_ << "INCONCLUSIVE: r(" << p.to_string() << ") in [" << bounded->interval.lo << ", "
                 << bounded->interval.hi << "] " << format_interval(bounded->interval) << '\n';
            return kExitInconclusive;
        }
        const auto& value = std::get<RamseyValue>(result);
        out_ << "r = " << value.value << '\n';
        out_ << "lower certificate: K_" << value.lower_certificate.n_vertices() << " avoids " << p.to_string()
             << " in both colors\n";
        out_ << blue_line(value.lower_certificate) << '\n';
        out_ << "upper proof: K_" << value.value << " exhaustive, nodes=" << value.upper_proof_stats.nodes << '\n';
        if (!opt_.cert_out.empty()) {
            write_certificate(opt_.cert_out, no_mono_certificate(p, value.lower_certificate));
            write_certificate(opt_.cert_out + ".arrow", arrow_certificate(p, value.value, value.upper_proof_stats));
        }
        return kExitProven;
    }

    int decide()
    {
        if (opt_.tokens.size() < 2)
            throw UsageError("decide needs a pattern followed by the order N");
        int order = 0;
        try {
            order = std::stoi(opt_.tokens.back());
        } catch (const std::exception&) {
            throw UsageError("decide: order '" + opt_.tokens.back() + "' is not an integer");
        }
        const PatternSpec p = pattern_from(opt_.tokens, opt_.tokens.size() - 1);
        const auto outcome = decider()(p, order);
        if (const auto* proof = std::get_if<AllColoringsContain>(&outcome)) {
            out_ << "AllColoringsContain: every 2-coloring of K_" << order << " contains a monochromatic "
                 << p.to_string() << " (nodes=" << proof->stats.nodes << ")\n";
            if (!opt_.cert_out.empty())
                write_certificate(opt_.cert_out, arrow_certificate(p, order, proof->stats));
            return kExitProven;
        }
        if (const auto* cx = std::get_if<Counterexample>(&outcome)) {
            out_ << "Counterexample: K_" << order << " coloring with no monochromatic " << p.to_string() << '\n';
            out_ << blue_line(cx->coloring) << '\n';
            if (!opt_.cert_out.empty())
                write_certificate(opt_.cert_out, no_mono_certificate(p, cx->coloring));
            return kExitCounterexample;
        }
        out_ << "INCONCLUSIVE: budget exhausted after " << std::get<BudgetExhausted>(outcome).stats.nodes
             << " nodes\n";
        return kExitInconclusive;
    }

    int witness()
    {
        const PatternSpec p = pattern_from(opt_.tokens, opt_.tokens.size());
        const TwoColoring w = witness_for(p);
        const bool avoids =
            !contains_mono_pattern(w, Color::Blue, p) && !contains_mono_pattern(w, Color::Red, p) && w.complete();
        if (!avoids) {
            out_ << "CHECK FAILED: witness K_" << w.n_vertices() << " contains " << p.to_string() << '\n';
            return kExitMalformed;
        }
        out_ << "witness: K_" << w.n_vertices() << " avoids " << p.to_string() << " in both colors, so r >= "
             << w.n_vertices() + 1 << '\n';
        out_ << blue_line(w) << '\n';
        if (!opt_.cert_out.empty())
            write_certificate(opt_.cert_out, no_mono_certificate(p, w));
        return kExitProven;
    }

    int saturate()
    {
        const PatternSpec p = pattern_from(opt_.tokens, opt_.tokens.size());
        if (const auto* s = p.get_if<Star>()) {
            const auto report = verify_star_saturated(s->leaves);
            out_ << report.render();
            if (!opt_.cert_out.empty())
                write_certificate(opt_.cert_out,
                                  no_mono_certificate(PatternSpec::plus_edge(p, LeafLeaf{}), report.witness));
            return report.passed() ? kExitProven : kExitMalformed;
        }
        const auto* b = p.get_if<Bistar>();
        if (b == nullptr)
            throw UsageError("saturate takes 'star <n>' or 'bistar <m> <n>'");
        const auto report = verify_bistar_unsaturated(b->m, b->n, cfg_, std::nullopt, decider());
        out_ << report.render();
        if (report.counterexample) {
            out_ << blue_line(*report.counterexample) << '\n';
            if (!opt_.cert_out.empty())
                write_certificate(opt_.cert_out, no_mono_certificate(report.augmented, *report.counterexample));
        } else if (report.verdict == Verdict::Confirms && !opt_.cert_out.empty()) {
            write_certificate(opt_.cert_out, arrow_certificate(report.augmented, report.ramsey_value, report.stats));
        }
        switch (report.verdict) {
        case Verdict::Confirms:
            return kExitProven;
        case Verdict::Contradicts:
            return kExitCounterexample;
        case Verdict::Inconclusive:
            break;
        }
        return kExitInconclusive;
    }

    int verify()
    {
        std::ifstream in(opt_.file);
        if (!in)
            throw UsageError("cannot read " + opt_.file);
        std::stringstream buf;
        buf << in.rdbuf();
        const auto result = verify_certificate(buf.str());
        out_ << (result.valid() ? "" : "invalid (" + std::string(to_string(result.problem)) + "): ")
             << result.message << '\n';
        switch (result.problem) {
        case CertificateProblem::None:
            return kExitProven;
        case CertificateProblem::Malformed:
            return kExitMalformed;
        case CertificateProblem::OrderMismatch:
            return kExitOrderMismatch;
        case CertificateProblem::ClaimMismatch:
            return kExitClaimMismatch;
        case CertificateProblem::Unverifiable:
            break;
        }
        return kExitInconclusive;
    }

private:
    static TwoColoring witness_for(const PatternSpec& p)
    {
        if (const auto* plus = p.get_if<PlusEdge>()) {
            if (const auto* s = std::get_if<Star>(&plus->base))
                return star_plus_edge_coloring(s->leaves);
            const auto& b = std::get<Bistar>(plus->base);
            return lower_bound_witness(PatternSpec::bistar(b.m, b.n));
        }
        if (const auto s = star_shape(p); s && *s >= 2) {
            if (*s % 2 == 1)
                return circulant_star_coloring(*s);
            return split_clique_coloring(*s - 1, *s - 1);
        }
        return lower_bound_witness(p);
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
    SearchConfig cfg_;
    std::optional<ArrowCache> cache_;
};

void add_search_flags(CLI::App* sub, Options& opt)
{
    sub->add_option("--budget-nodes", opt.budget_nodes, "node budget (one node = one edge-color assignment)");
    sub->add_option("--budget-secs", opt.budget_secs, "wall-clock budget in seconds");
    sub->add_option("--threads", opt.threads, "search workers");
    sub->add_flag("--no-prune", opt.no_prune, "disable containment and degree pruning");
    sub->add_flag("--no-symmetry", opt.no_symmetry, "disable color-swap and first-vertex symmetry breaking");
    sub->add_flag("--progress", opt.progress, "report search progress on stderr");
    sub->add_option("--cache", opt.cache, "append-only cache of proven arrow facts");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Exact Ramsey numbers of stars, bistars and caterpillars by exhaustive search", "tree-ramsey"};
    app.require_subcommand(1);
    app.footer("pattern grammar: " + std::string(kPatternGrammar) +
               "\nexit codes: 0 proven, 1 counterexample, 2 inconclusive, 3 usage, 4 malformed/failed check, "
               "5 order mismatch, 6 claim mismatch");

    auto* bounds = app.add_subcommand("bounds", "print the bound interval with its sources");
    bounds->add_option("pattern", opt.tokens, "pattern expression");
    bounds->add_option("--table", opt.table, "bistar bound table for m <= m-max, n <= n-max")
        ->expected(2)
        ->type_name("M-MAX N-MAX");

    auto* compute = app.add_subcommand("compute", "exact Ramsey number by exhaustive search");
    compute->add_option("pattern", opt.tokens, "pattern expression")->required();
    compute->add_option("--cert-out", opt.cert_out, "write the lower certificate here and the proof to <path>.arrow");
    add_search_flags(compute, opt);

    auto* decide = app.add_subcommand("decide", "decide K_N -> (P, P)");
    decide->add_option("pattern", opt.tokens, "pattern expression followed by N")->required();
    decide->add_option("--cert-out", opt.cert_out, "certificate path");
    add_search_flags(decide, opt);

    auto* witness = app.add_subcommand("witness", "emit and verify the extremal lower-bound coloring");
    witness->add_option("pattern", opt.tokens, "pattern expression")->required();
    witness->add_option("--cert-out", opt.cert_out, "certificate path");

    auto* saturate = app.add_subcommand("saturate", "saturation check for 'star <n>' or 'bistar <m> <n>'");
    saturate->add_option("pattern", opt.tokens, "pattern expression")->required();
    saturate->add_option("--cert-out", opt.cert_out, "certificate path");
    add_search_flags(saturate, opt);

    auto* verify = app.add_subcommand("verify", "re-check a certificate file");
    verify->add_option("file", opt.file, "certificate file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitProven;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        Session session(opt, out, err);
        if (bounds->parsed()) {
            if (opt.table.empty() && opt.tokens.empty())
                throw UsageError("bounds needs a pattern or --table M-MAX N-MAX");
            return session.bounds();
        }
        if (compute->parsed())
            return session.compute();
        if (decide->parsed())
            return session.decide();
        if (witness->parsed())
            return session.witness();
        if (saturate->parsed())
            return session.saturate();
        return session.verify();
    } catch (const PatternParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace ramsey
