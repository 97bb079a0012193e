#include "arcminor/certify.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <system_error>

namespace arcminor {

OracleLimits OracleLimits::from_environment()
{
    OracleLimits limits;
    if (const char* raw = std::getenv("ARCMINOR_ORACLE_LIMIT")) {
        const std::string_view text(raw);
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) {
            limits.exact_vertex_limit = value;
            limits.brute_vertex_limit = value;
        }
    }
    return limits;
}

const char* to_string(Route r) noexcept
{
    switch (r) {
    case Route::clique: return "clique";
    case Route::good_path_set: return "good_path_set";
    case Route::brute_force: return "brute_force";
    }
    return "?";
}

namespace {

using Attempt = std::function<GoodPathSet()>;

void try_variant(const std::string& label, const Attempt& build, const Labeling& lab, const Graph& g,
                 PathRouteResult& out)
{
    if (out.minor)
        return;
    try {
        const GoodPathSet gps = build();
        out.minor = gps_to_minor(lab, gps, g);
        out.variant = label;
        out.attempts.push_back({"good_path_set/" + label, true, ""});
    } catch (const Error& e) {
        out.attempts.push_back({"good_path_set/" + label, false, e.what()});
    }
}

} // namespace

PathRouteResult good_path_routes(const ArcFamily& f, const Labeling& lab, const Graph& g, int x)
{
    PathRouteResult out;
    const int k = lab.k();
    if (x < 1 || k < x) {
        out.attempts.push_back({"good_path_set", false, "needs 1 <= x <= k (x=" + std::to_string(x) +
                                                            ", k=" + std::to_string(k) + ")"});
        return out;
    }
    const int b = k % x;
    if (b == 0)
        try_variant("uniform", [&] { return gps_uniform(lab, x); }, lab, g, out);
    if (x >= 2 && b != 0) {
        for (int i = 2 * x; i <= k - x && !out.minor; ++i)
            try_variant("successor(i=" + std::to_string(i) + ")", [&] { return gps_successor(f, lab, x, i); }, lab,
                        g, out);
    }
    if (b >= 1)
        try_variant("tail", [&] { return gps_tail(f, lab, x); }, lab, g, out);
    if (lab.r() == 2 * x && b == x - 1) {
        for (int j = 1; j <= x && !out.minor; ++j)
            try_variant("subcase2(j=" + std::to_string(j) + ")", [&] { return gps_subcase2(f, lab, x, j); }, lab, g,
                        out);
    }
    if (out.attempts.empty())
        out.attempts.push_back({"good_path_set", false, "no construction applies to k=" + std::to_string(k) +
                                                            ", x=" + std::to_string(x)});
    return out;
}

HadwigerCertificate certify_hadwiger(const ArcFamily& f, const OracleLimits& limits)
{
    if (!is_proper(f).proper)
        throw Error(Errc::not_proper, "certification needs a proper family");
    const OverlapStats s = overlap_stats(f);
    const Graph g = intersection_graph(f);
    const ChromaticResult exact = exact_chromatic(g, limits.exact_vertex_limit, tucker_color(f));

    HadwigerCertificate out;
    out.chi = exact.chi;
    auto singletons = [&](std::vector<Vertex> clique, const char* variant) {
        clique.resize(static_cast<std::size_t>(out.chi));
        out.route = Route::clique;
        out.variant = variant;
        out.minor.target = out.chi;
        for (Vertex v : clique)
            out.minor.branch_sets.push_back({v});
        out.audit_trail.push_back({std::string("clique/") + variant, true, ""});
        return out;
    };

    if (out.chi <= s.r_sup)
        return singletons(overlap_set(f, s.sup_witness), "max_overlap");
    const std::vector<Vertex> omega = max_clique(g);
    if (static_cast<int>(omega.size()) >= out.chi)
        return singletons(omega, "max_clique");
    out.audit_trail.push_back({"clique", false,
                               "largest clique has " + std::to_string(omega.size()) + " vertices, chi is " +
                                   std::to_string(out.chi)});

    const Labeling lab = canonical_labeling(f);
    PathRouteResult paths = good_path_routes(f, lab, g, out.chi - s.r_sup);
    out.audit_trail.insert(out.audit_trail.end(), paths.attempts.begin(), paths.attempts.end());
    if (paths.minor) {
        out.route = Route::good_path_set;
        out.variant = paths.variant;
        out.minor = std::move(*paths.minor);
        return out;
    }

    if (!limits.allow_brute_force) {
        out.audit_trail.push_back({"brute_force", false, "disabled"});
    } else if (g.size() > std::min(limits.brute_vertex_limit, max_mask_vertices)) {
        out.audit_trail.push_back({"brute_force", false,
                                   "instance has " + std::to_string(g.size()) + " vertices, limit is " +
                                       std::to_string(limits.brute_vertex_limit)});
    } else {
        MinorSearch search = brute_force_hadwiger(g, out.chi, limits.brute_vertex_limit, limits.step_budget);
        if (search.certificate) {
            out.audit_trail.push_back({"brute_force", true, std::to_string(search.steps) + " steps"});
            out.route = Route::brute_force;
            out.variant = "exhaustive";
            out.minor = std::move(*search.certificate);
            return out;
        }
        out.audit_trail.push_back({"brute_force", false,
                                   search.budget_exhausted ? "step budget exhausted"
                                                           : "search completed without finding a minor"});
    }
    throw OracleExhausted(out.chi, std::move(out.audit_trail));
}

// ---------------------------------------------------------------------------

namespace {

std::string names(const ArcFamily& f, ArcId u, ArcId v)
{
    return f.name(u) + "," + f.name(v);
}

std::vector<ArcId> sorted(std::vector<ArcId> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

std::optional<std::string> check_adjacency_bounds(const ArcFamily& f, const OverlapStats& s)
{
    for (ArcId u = 0; u < f.size(); ++u) {
        const auto cw = static_cast<int>(clockwise_neighbors(f, u).size());
        const auto acw = static_cast<int>(anticlockwise_neighbors(f, u).size());
        for (int count : {cw, acw}) {
            if (count < s.r_inf || count > s.r_sup - 1) {
                std::ostringstream msg;
                msg << f.name(u) << " has " << cw << " clockwise and " << acw << " anticlockwise neighbours, "
                    << "bounds [" << s.r_inf << ", " << (s.r_sup - 1) << "]";
                return msg.str();
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_right_endpoint_order(const ArcFamily& f)
{
    std::vector<ArcId> order(static_cast<std::size_t>(f.size()));
    for (Position p = 0; p < f.circle(); ++p) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](ArcId x, ArcId y) {
            return f.distance(p, f.arc(x).r) < f.distance(p, f.arc(y).r);
        });
        const std::vector<ArcId> here = overlap_set(f, p);
        std::vector<ArcId> first(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(here.size()));
        if (sorted(first) != here)
            return "right endpoints after position " + std::to_string(p) + " do not start with its overlap set";
    }
    return std::nullopt;
}

std::optional<std::string> check_clockwise_contiguity(const ArcFamily& f)
{
    const std::vector<ArcId> order = right_endpoint_order(f);
    const auto n = order.size();
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i)
        rank[static_cast<std::size_t>(order[i])] = i;
    for (ArcId v = 0; v < f.size(); ++v) {
        const std::vector<ArcId> cw = clockwise_neighbors(f, v);
        std::vector<ArcId> run;
        for (std::size_t d = 1; d <= cw.size(); ++d)
            run.push_back(order[(rank[static_cast<std::size_t>(v)] + d) % n]);
        if (sorted(run) != cw)
            return "clockwise neighbours of " + f.name(v) + " are not the run of right endpoints after it";
    }
    return std::nullopt;
}

std::optional<std::string> check_adjacency_duality(const ArcFamily& f)
{
    for (ArcId u = 0; u < f.size(); ++u) {
        for (ArcId v = 0; v < f.size(); ++v) {
            if (u == v)
                continue;
            const bool cw = clockwise_adjacent(f, u, v);
            if (cw != anticlockwise_adjacent(f, v, u))
                return "clockwise/anticlockwise asymmetry for " + names(f, u, v);
            if (f.intersects(u, v) != (cw || anticlockwise_adjacent(f, u, v)))
                return "intersection without directed adjacency for " + names(f, u, v);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_endpoint_order_duality(const ArcFamily& f)
{
    std::vector<ArcId> by_left(static_cast<std::size_t>(f.size()));
    std::iota(by_left.begin(), by_left.end(), 0);
    std::sort(by_left.begin(), by_left.end(), [&](ArcId x, ArcId y) { return f.arc(x).l < f.arc(y).l; });
    const std::vector<ArcId> by_right = right_endpoint_order(f);
    const auto start = std::find(by_right.begin(), by_right.end(), by_left.front());
    std::vector<ArcId> rotated(start, by_right.end());
    rotated.insert(rotated.end(), by_right.begin(), start);
    if (rotated != by_left)
        return std::string("cyclic order of left endpoints differs from that of right endpoints");
    return std::nullopt;
}

std::optional<std::string> check_tucker_bound(const ArcFamily& f, const OverlapStats& s)
{
    const Coloring c = tucker_color(f);
    const ColoringCheck check = validate_coloring(intersection_graph(f), c);
    if (!check.valid)
        return "cut coloring conflicts on " + names(f, check.conflict->first, check.conflict->second);
    if (c.num_colors > s.r_sup + s.r_inf)
        return "cut coloring uses " + std::to_string(c.num_colors) + " colors, bound is " +
               std::to_string(s.r_sup + s.r_inf);
    return std::nullopt;
}

std::optional<std::string> check_labeled_adjacency_runs(const ArcFamily& f, const Labeling& lab)
{
    const int r = lab.r();
    const int k = lab.k();
    auto cw = [&](ArcId u, ArcId v) { return clockwise_adjacent(f, u, v); };
    auto acw = [&](ArcId u, ArcId v) { return anticlockwise_adjacent(f, u, v); };
    auto fail = [](const char* item, const std::string& what) { return std::string(item) + ": " + what; };

    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= k; ++j) {
            if (!cw(lab.q_at(i), lab.a_at(j)))
                continue;
            for (int h = i + 1; h <= r; ++h)
                if (!cw(lab.q_at(i), lab.q_at(h)))
                    return fail("q-clockwise", "q_" + std::to_string(h) + " missing after q_" + std::to_string(i));
            for (int h = 1; h <= j; ++h)
                if (!cw(lab.q_at(i), lab.a_at(h)))
                    return fail("q-clockwise", "a_" + std::to_string(h) + " missing after q_" + std::to_string(i));
        }
    }
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            if (i == j)
                continue;
            if (cw(lab.a_at(i), lab.a_at(j))) {
                if (j < i)
                    return fail("a-clockwise", "a_" + std::to_string(j) + " precedes a_" + std::to_string(i));
                for (int h = i + 1; h <= j; ++h)
                    if (!cw(lab.a_at(i), lab.a_at(h)))
                        return fail("a-clockwise", "a_" + std::to_string(h) + " missing after a_" + std::to_string(i));
            }
            if (acw(lab.a_at(i), lab.a_at(j))) {
                if (j > i)
                    return fail("a-anticlockwise", "a_" + std::to_string(j) + " follows a_" + std::to_string(i));
                for (int h = j; h <= i - 1; ++h)
                    if (!acw(lab.a_at(i), lab.a_at(h)))
                        return fail("a-anticlockwise", "a_" + std::to_string(h) + " missing before a_" + std::to_string(i));
            }
        }
    }
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= k; ++j) {
            if (!acw(lab.q_at(i), lab.a_at(j)))
                continue;
            for (int h = j; h <= k; ++h)
                if (!acw(lab.q_at(i), lab.a_at(h)))
                    return fail("q-anticlockwise", "a_" + std::to_string(h) + " missing before q_" + std::to_string(i));
            for (int h = 1; h <= i - 1; ++h)
                if (!acw(lab.q_at(i), lab.q_at(h)))
                    return fail("q-anticlockwise", "q_" + std::to_string(h) + " missing before q_" + std::to_string(i));
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_stride_adjacency(const ArcFamily& f, const OverlapStats& s)
{
    const std::vector<ArcId> order = right_endpoint_order(f);
    const auto n = order.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (int d = 1; d <= s.r_inf; ++d) {
            const ArcId next = order[(i + static_cast<std::size_t>(d)) % n];
            if (!clockwise_adjacent(f, order[i], next))
                return f.name(next) + " follows " + f.name(order[i]) + " within r_inf but is not clockwise adjacent";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_three_halves_bound(std::optional<int> cover, int chi, int r_sup)
{
    if (cover && *cover >= 4 && 2 * chi > 3 * r_sup) {
        std::ostringstream msg;
        msg << "cover " << *cover << ", chi " << chi << " exceeds 3/2 * " << r_sup;
        return msg.str();
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

void AuditReport::merge(const AuditReport& other)
{
    instances.insert(instances.end(), other.instances.begin(), other.instances.end());
    schemes.insert(schemes.end(), other.schemes.begin(), other.schemes.end());
    alarms += other.alarms;
    auto fold = [](std::vector<LemmaTally>& into, const std::vector<LemmaTally>& from) {
        for (const LemmaTally& t : from) {
            auto it = std::find_if(into.begin(), into.end(), [&](const LemmaTally& x) { return x.name == t.name; });
            if (it == into.end()) {
                into.push_back(t);
                continue;
            }
            it->checked += t.checked;
            it->failed += t.failed;
            if (it->counterexample.empty())
                it->counterexample = t.counterexample;
        }
    };
    fold(lemmas, other.lemmas);
    fold(hypotheses, other.hypotheses);
}

long AuditReport::theorem_failures() const
{
    long total = 0;
    for (const LemmaTally& t : lemmas)
        total += t.failed;
    return total;
}

namespace {

LemmaTally tally(std::string name, CheckKind kind, const std::optional<std::string>& failure)
{
    LemmaTally t;
    t.name = std::move(name);
    t.kind = kind;
    t.checked = 1;
    t.failed = failure ? 1 : 0;
    t.counterexample = failure.value_or("");
    return t;
}

LemmaTally hypothesis(std::string name, bool holds, std::string detail)
{
    return tally(std::move(name), CheckKind::hypothesis, holds ? std::nullopt : std::optional(std::move(detail)));
}

} // namespace

AuditReport lemma_audit(const ArcFamily& f, const OracleLimits& limits)
{
    if (!is_proper(f).proper)
        throw Error(Errc::not_proper, "audit needs a proper family");

    const OverlapStats s = overlap_stats(f);
    const Graph g = intersection_graph(f);
    const Labeling lab = canonical_labeling(f);

    InstanceStats stats;
    stats.n = f.size();
    stats.r_sup = s.r_sup;
    stats.r_inf = s.r_inf;
    stats.cover = circular_cover(f);
    stats.min_degree = g.min_degree();
    if (f.size() <= std::min(limits.exact_vertex_limit, max_mask_vertices))
        stats.chi = exact_chromatic(g, limits.exact_vertex_limit, tucker_color(f)).chi;

    AuditReport report;
    report.instances.push_back(stats);
    auto theorem = [&](const char* name, const std::optional<std::string>& failure) {
        report.lemmas.push_back(tally(name, CheckKind::theorem, failure));
    };
    theorem("adjacency_count_bounds", check_adjacency_bounds(f, s));
    theorem("right_endpoint_order", check_right_endpoint_order(f));
    theorem("clockwise_contiguity", check_clockwise_contiguity(f));
    theorem("adjacency_duality", check_adjacency_duality(f));
    theorem("endpoint_order_duality", check_endpoint_order_duality(f));
    theorem("tucker_bound", check_tucker_bound(f, s));
    theorem("labeled_adjacency_runs", check_labeled_adjacency_runs(f, lab));
    theorem("stride_adjacency", check_stride_adjacency(f, s));
    if (stats.chi)
        theorem("three_halves_bound", check_three_halves_bound(stats.cover, *stats.chi, s.r_sup));

    if (!stats.chi || *stats.chi <= s.r_sup)
        return report;

    const int r = s.r_sup;
    const int x = *stats.chi - r;
    const int k = lab.k();
    const int n = f.size();
    const int b = k % x;
    const int chi = *stats.chi;
    auto ints = [](std::initializer_list<std::pair<const char*, int>> kv) {
        std::ostringstream msg;
        for (auto [key, value] : kv)
            msg << key << '=' << value << ' ';
        return msg.str();
    };
    report.hypotheses = {
        hypothesis("chi_at_most_half_n", chi <= (n + 1) / 2, ints({{"chi", chi}, {"n", n}})),
        hypothesis("min_degree_at_least_r_plus_x_minus_1", stats.min_degree >= r + x - 1,
                   ints({{"delta", stats.min_degree}, {"r", r}, {"x", x}})),
        hypothesis("twice_excess_at_most_r", 2 * x <= r, ints({{"r", r}, {"x", x}})),
        hypothesis("k_at_least_r_plus_2x_minus_1", k >= r + 2 * x - 1, ints({{"k", k}, {"r", r}, {"x", x}})),
        hypothesis("k_at_least_4x_minus_1", k >= 4 * x - 1, ints({{"k", k}, {"x", x}})),
        hypothesis("k_not_multiple_of_x", b != 0, ints({{"k", k}, {"x", x}})),
        hypothesis("twice_excess_plus_remainder_exceeds_r", 2 * x + b > r, ints({{"r", r}, {"x", x}, {"b", b}})),
    };
    const bool all_hold = std::all_of(report.hypotheses.begin(), report.hypotheses.end(),
                                      [](const LemmaTally& t) { return t.failed == 0; });

    const SchemeParams params = SchemeParams::make(r, x, k);
    bool some_scheme_valid = false;
    using Scheme = Coloring (*)(const Labeling&, const SchemeParams&);
    const std::pair<const char*, Scheme> schemes[] = {
        {"scheme_t_even", &scheme_t_even},
        {"scheme_t_odd_general", &scheme_t_odd_general},
        {"scheme_t_odd_tight", &scheme_t_odd_tight},
    };
    for (auto [name, scheme] : schemes) {
        try {
            const Coloring c = scheme(lab, params);
            const ColoringCheck check = validate_coloring(g, c);
            SchemeOutcome o{name, check.valid, ""};
            if (!check.valid)
                o.detail = "conflict on " + names(f, check.conflict->first, check.conflict->second);
            some_scheme_valid = some_scheme_valid || check.valid;
            report.schemes.push_back(std::move(o));
        } catch (const Error& e) {
            if (e.code() != Errc::precondition)
                throw;
        }
    }

    const bool has_paths = good_path_routes(f, lab, g, x).minor.has_value();
    if (all_hold && !some_scheme_valid && !has_paths)
        ++report.alarms;
    return report;
}

} // namespace arcminor
