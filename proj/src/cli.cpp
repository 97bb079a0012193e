#include "arcminor/cli.hpp"

#include "arcminor/certify.hpp"
#include "arcminor/error.hpp"
#include "arcminor/generate.hpp"
#include "arcminor/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <ostream>
#include <thread>

namespace arcminor::cli {

namespace {

struct Options {
    std::string input;
    std::string corpus_name;
    std::string output;
    std::string format = "json";
    bool exact = false;
    std::string algo = "tucker";
    std::optional<int> x;
    std::optional<int> oracle_limit;
    std::optional<std::uint64_t> step_budget;
    int random = 0;
    int jobs = 1;
    int n = 10;
    std::uint64_t seed = 0;
    std::string mode = "same-cyclic-order";
    std::optional<int> min_overlap;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ArcFamily load_input(const Options& o)
{
    if (!o.input.empty() && !o.corpus_name.empty())
        throw UsageError("--input and --corpus are mutually exclusive");
    if (!o.corpus_name.empty()) {
        const auto& c = corpus();
        const auto it = c.find(o.corpus_name);
        if (it == c.end())
            throw UsageError("unknown corpus instance '" + o.corpus_name + "'");
        return it->second;
    }
    if (o.input.empty())
        throw UsageError("an input family is required (--input FILE or --corpus NAME)");
    return load_family(o.input);
}

OracleLimits limits_from(const Options& o)
{
    OracleLimits limits = OracleLimits::from_environment();
    if (o.oracle_limit) {
        limits.exact_vertex_limit = *o.oracle_limit;
        limits.brute_vertex_limit = *o.oracle_limit;
    }
    if (o.step_budget)
        limits.step_budget = *o.step_budget;
    return limits;
}

GeneratorMode parse_mode(const std::string& mode)
{
    if (mode == "same-cyclic-order")
        return GeneratorMode::same_cyclic_order;
    if (mode == "perturbed-uniform")
        return GeneratorMode::perturbed_uniform;
    throw UsageError("unknown --mode '" + mode + "'");
}

void emit(const Options& o, std::ostream& out, const Json& doc, const std::string& text)
{
    const std::string body = o.format == "json" ? doc.dump(2) + "\n" : text;
    if (o.output.empty()) {
        out << body;
        return;
    }
    std::ofstream file(o.output);
    if (!file)
        throw Error(Errc::parse_error, "cannot write " + o.output);
    file << body;
}

std::string opt_text(const std::optional<int>& v)
{
    return v ? std::to_string(*v) : "none";
}

std::string names_text(const ArcFamily& f, const std::vector<Vertex>& ids)
{
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i)
        s += (i ? "," : "") + f.name(ids[i]);
    return s + "}";
}

int cmd_gen(const Options& o, std::ostream& out)
{
    GeneratorConfig cfg;
    cfg.n = o.n;
    cfg.seed = o.seed;
    cfg.mode = parse_mode(o.mode);
    cfg.min_overlap_target = o.min_overlap;
    const ArcFamily f = random_proper_family(cfg);
    std::ostringstream text;
    text << "circle " << f.circle() << "\n";
    for (ArcId id = 0; id < f.size(); ++id)
        text << f.name(id) << " " << f.arc(id).l << " " << f.arc(id).r << "\n";
    emit(o, out, family_to_json(f), text.str());
    return exit_ok;
}

int cmd_check(const Options& o, std::ostream& out)
{
    const ArcFamily f = load_input(o);
    const ProperCheck pc = is_proper(f);
    Json containments = Json::array();
    std::ostringstream text;
    text << "n " << f.size() << ", circle " << f.circle() << "\n";
    text << "invariants ok\n";
    text << (pc.proper ? "proper\n" : "not proper\n");
    for (const Containment& c : pc.violations) {
        containments.push_back({{"inner", f.name(c.inner)}, {"outer", f.name(c.outer)}});
        text << "  " << f.name(c.inner) << " inside " << f.name(c.outer) << "\n";
    }
    const Json doc = {{"n", f.size()},
                      {"circle", f.circle()},
                      {"invariants", true},
                      {"proper", pc.proper},
                      {"containments", std::move(containments)}};
    emit(o, out, doc, text.str());
    return pc.proper ? exit_ok : exit_validation;
}

int cmd_stats(const Options& o, std::ostream& out)
{
    const ArcFamily f = load_input(o);
    const OverlapStats s = overlap_stats(f);
    const Graph g = intersection_graph(f);
    const std::optional<int> cover = circular_cover(f);
    std::optional<int> chi;
    if (o.exact) {
        const OracleLimits limits = limits_from(o);
        chi = exact_chromatic(g, limits.exact_vertex_limit, tucker_color(f)).chi;
    }
    const Json doc = {{"n", f.size()},
                      {"circle", f.circle()},
                      {"r_sup", s.r_sup},
                      {"sup_witness", s.sup_witness},
                      {"r_inf", s.r_inf},
                      {"inf_witness", {{"from", s.inf_witness.from}, {"to", s.inf_witness.to}}},
                      {"cover", cover ? Json(*cover) : Json(nullptr)},
                      {"min_degree", g.min_degree()},
                      {"tucker_bound", s.r_sup + s.r_inf},
                      {"chi", chi ? Json(*chi) : Json(nullptr)}};
    std::ostringstream text;
    text << "n            " << f.size() << "\n"
         << "r_sup        " << s.r_sup << " (position " << s.sup_witness << ")\n"
         << "r_inf        " << s.r_inf << "\n"
         << "cover        " << opt_text(cover) << "\n"
         << "min_degree   " << g.min_degree() << "\n"
         << "tucker_bound " << s.r_sup + s.r_inf << "\n"
         << "chi          " << (chi ? std::to_string(*chi) : "not computed") << "\n";
    emit(o, out, doc, text.str());
    return exit_ok;
}

Coloring scheme_coloring(const ArcFamily& f, const Graph& g, const Options& o)
{
    const Labeling lab = canonical_labeling(f);
    int x = 1;
    if (o.x) {
        x = *o.x;
    } else {
        const OracleLimits limits = limits_from(o);
        if (g.size() <= limits.exact_vertex_limit)
            x = std::max(1, exact_chromatic(g, limits.exact_vertex_limit, tucker_color(f)).chi - lab.r());
    }
    const SchemeParams p = SchemeParams::make(lab.r(), x, lab.k());
    if (o.algo == "scheme-even")
        return scheme_t_even(lab, p);
    if (o.algo == "scheme-odd1")
        return scheme_t_odd_general(lab, p);
    return scheme_t_odd_tight(lab, p);
}

int cmd_color(const Options& o, std::ostream& out)
{
    const ArcFamily f = load_input(o);
    const Graph g = intersection_graph(f);
    Coloring c;
    if (o.algo == "tucker")
        c = tucker_color(f);
    else if (o.algo == "exact")
        c = exact_chromatic(g, limits_from(o).exact_vertex_limit, tucker_color(f)).coloring;
    else
        c = scheme_coloring(f, g, o);
    const ColoringCheck check = validate_coloring(g, c);
    Json doc = coloring_to_json(f, c, check.valid);
    std::ostringstream text;
    text << o.algo << ": " << c.num_colors << " colors, " << (check.valid ? "valid" : "INVALID") << "\n";
    if (check.conflict) {
        doc["conflict"] = {f.name(check.conflict->first), f.name(check.conflict->second)};
        text << "conflict " << f.name(check.conflict->first) << " " << f.name(check.conflict->second) << "\n";
    }
    for (ArcId id = 0; id < f.size(); ++id)
        text << f.name(id) << " " << c.colors[static_cast<std::size_t>(id)] << "\n";
    emit(o, out, doc, text.str());
    return check.valid ? exit_ok : exit_validation;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err)
{
    const ArcFamily f = load_input(o);
    try {
        const HadwigerCertificate cert = certify_hadwiger(f, limits_from(o));
        const MinorCheck check = validate_clique_minor(intersection_graph(f), cert.minor);
        std::ostringstream text;
        text << "chi " << cert.chi << ", route " << to_string(cert.route);
        if (!cert.variant.empty())
            text << " (" << cert.variant << ")";
        text << ", " << (check.valid ? "validated" : "INVALID") << " K" << cert.minor.target << "\n";
        for (const auto& set : cert.minor.branch_sets)
            text << "  " << names_text(f, set) << "\n";
        emit(o, out, hadwiger_to_json(f, cert), text.str());
        return check.valid ? exit_ok : exit_validation;
    } catch (const OracleExhausted& e) {
        err << "error: " << e.what() << "\n";
        const Json doc = {{"error", "OracleExhausted"},
                          {"chi", e.chi()},
                          {"audit_trail", attempts_to_json(e.audit_trail())}};
        std::ostringstream text;
        text << "chi " << e.chi() << ", oracle exhausted\n";
        for (const RouteAttempt& a : e.audit_trail())
            text << "  " << a.route << ": " << a.reason << "\n";
        emit(o, out, doc, text.str());
        return exit_oracle_exhausted;
    }
}

std::string audit_text(const AuditReport& report)
{
    std::ostringstream text;
    text << report.instances.size() << " instances, " << report.theorem_failures() << " theorem failures, "
         << report.alarms << " alarms\n";
    for (const auto* list : {&report.lemmas, &report.hypotheses}) {
        for (const LemmaTally& t : *list) {
            text << "  " << std::left << std::setw(44) << t.name << std::right << std::setw(8) << t.checked
                 << std::setw(8) << t.failed;
            if (!t.counterexample.empty())
                text << "  " << t.counterexample;
            text << "\n";
        }
    }
    return text.str();
}

int cmd_audit(const Options& o, std::ostream& out)
{
    const OracleLimits limits = limits_from(o);
    AuditReport report;
    if (o.random > 0) {
        if (!o.input.empty() || !o.corpus_name.empty())
            throw UsageError("--random cannot be combined with an input family");
        const GeneratorMode mode = parse_mode(o.mode);
        std::vector<AuditReport> parts(static_cast<std::size_t>(o.random));
        std::vector<std::string> failures(parts.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < parts.size(); i = next++) {
                try {
                    GeneratorConfig cfg;
                    cfg.n = o.n;
                    cfg.seed = o.seed + i;
                    cfg.mode = mode;
                    cfg.min_overlap_target = o.min_overlap;
                    parts[i] = lemma_audit(random_proper_family(cfg), limits);
                } catch (const std::exception& e) {
                    failures[i] = e.what();
                }
            }
        };
        const int jobs = std::clamp(o.jobs, 1, 64);
        std::vector<std::thread> pool;
        for (int j = 1; j < jobs; ++j)
            pool.emplace_back(worker);
        worker();
        for (auto& t : pool)
            t.join();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!failures[i].empty())
                throw Error(Errc::invariant_violation, "instance " + std::to_string(i) + ": " + failures[i]);
            report.merge(parts[i]);
        }
    } else {
        report = lemma_audit(load_input(o), limits);
    }
    emit(o, out, audit_to_json(report), audit_text(report));
    return report.theorem_failures() == 0 && report.alarms == 0 ? exit_ok : exit_validation;
}

int cmd_bench(const Options& o, std::ostream& out)
{
    using Clock = std::chrono::steady_clock;
    const auto ms = [](Clock::time_point a, Clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    const OracleLimits limits = limits_from(o);
    Json rows = Json::array();
    std::ostringstream text;
    text << std::left << std::setw(12) << "instance" << std::right << std::setw(5) << "n" << std::setw(5) << "chi"
         << std::setw(16) << "route" << std::setw(12) << "stats_ms" << std::setw(12) << "tucker_ms" << std::setw(12)
         << "exact_ms" << std::setw(12) << "certify_ms" << "\n";
    for (const auto& [name, f] : corpus()) {
        const auto t0 = Clock::now();
        (void)overlap_stats(f);
        (void)circular_cover(f);
        const auto t1 = Clock::now();
        const Coloring tc = tucker_color(f);
        const auto t2 = Clock::now();
        const int chi = exact_chromatic(intersection_graph(f), limits.exact_vertex_limit, tc).chi;
        const auto t3 = Clock::now();
        std::string route;
        try {
            route = to_string(certify_hadwiger(f, limits).route);
        } catch (const OracleExhausted&) {
            route = "exhausted";
        }
        const auto t4 = Clock::now();
        rows.push_back({{"instance", name},
                        {"n", f.size()},
                        {"chi", chi},
                        {"route", route},
                        {"stats_ms", ms(t0, t1)},
                        {"tucker_ms", ms(t1, t2)},
                        {"exact_ms", ms(t2, t3)},
                        {"certify_ms", ms(t3, t4)}});
        text << std::left << std::setw(12) << name << std::right << std::setw(5) << f.size() << std::setw(5) << chi
             << std::setw(16) << route << std::fixed << std::setprecision(3) << std::setw(12) << ms(t0, t1)
             << std::setw(12) << ms(t1, t2) << std::setw(12) << ms(t2, t3) << std::setw(12) << ms(t3, t4) << "\n";
    }
    emit(o, out, rows, text.str());
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Proper circular-arc families: colorings and clique-minor certificates", "arcminor"};
    app.require_subcommand(1, 1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--output,-o", o.output, "Write the document to FILE instead of stdout");
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input,-i", o.input, "Family JSON file");
        sub->add_option("--corpus", o.corpus_name, "Built-in instance: c5, triangle, disjoint2, c5k3");
    };
    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--oracle-limit", o.oracle_limit, "Vertex limit for the exact oracles")
            ->check(CLI::PositiveNumber);
        sub->add_option("--step-budget", o.step_budget, "Step budget for the brute-force minor search");
    };
    auto add_generator = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "Number of arcs")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "Generator seed");
        sub->add_option("--mode", o.mode, "Generator mode")
            ->check(CLI::IsMember({"same-cyclic-order", "perturbed-uniform"}));
        sub->add_option("--min-overlap", o.min_overlap, "Reject families with smaller r_sup");
    };

    CLI::App* gen = app.add_subcommand("gen", "Generate a random proper family");
    add_generator(gen);
    add_format(gen);
    CLI::App* check = app.add_subcommand("check", "Check invariants and properness");
    add_input(check);
    add_format(check);
    CLI::App* stats = app.add_subcommand("stats", "Overlap statistics");
    add_input(stats);
    add_format(stats);
    add_limits(stats);
    stats->add_flag("--exact", o.exact, "Also compute the exact chromatic number");
    CLI::App* color = app.add_subcommand("color", "Color the intersection graph");
    add_input(color);
    add_format(color);
    add_limits(color);
    color->add_option("--algo", o.algo, "Coloring algorithm")
        ->check(CLI::IsMember({"tucker", "exact", "scheme-even", "scheme-odd1", "scheme-odd2"}));
    color->add_option("--x", o.x, "Excess x for the scheme colorings (default chi - r_sup)")
        ->check(CLI::PositiveNumber);
    CLI::App* certify = app.add_subcommand("certify", "Emit a clique-minor certificate");
    add_input(certify);
    add_format(certify);
    add_limits(certify);
    CLI::App* audit = app.add_subcommand("audit", "Audit structural facts over families");
    add_input(audit);
    add_format(audit);
    add_limits(audit);
    add_generator(audit);
    audit->add_option("--random", o.random, "Audit N generated families (seeds seed..seed+N-1)")
        ->check(CLI::NonNegativeNumber);
    audit->add_option("--jobs,-j", o.jobs, "Worker threads for --random")->check(CLI::PositiveNumber);
    CLI::App* bench = app.add_subcommand("bench", "Timing table over the corpus");
    add_format(bench);
    add_limits(bench);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(o, out);
        if (check->parsed())
            return cmd_check(o, out);
        if (stats->parsed())
            return cmd_stats(o, out);
        if (color->parsed())
            return cmd_color(o, out);
        if (certify->parsed())
            return cmd_certify(o, out, err);
        if (audit->parsed())
            return cmd_audit(o, out);
        return cmd_bench(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
        case Errc::parse_error:
            return exit_usage;
        case Errc::oracle_exhausted:
        case Errc::instance_too_large:
            return exit_oracle_exhausted;
        default:
            return exit_validation;
        }
    }
}

} // namespace arcminor::cli
