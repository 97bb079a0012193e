#include "arcminor/arc_family.hpp"

#include "arcminor/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace arcminor {

const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::empty_family: return "EmptyFamily";
    case Errc::degenerate_arc: return "DegenerateArc";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::unknown_arc: return "UnknownArc";
    case Errc::not_proper: return "NotProper";
    case Errc::lemma_fr_violation: return "LemmaFrViolation";
    case Errc::missing_assignment: return "MissingAssignment";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::precondition: return "PreconditionViolation";
    case Errc::adjacency_gap: return "AdjacencyGap";
    case Errc::path_pair_nonadjacent: return "PathPairNonadjacent";
    case Errc::oracle_exhausted: return "OracleExhausted";
    case Errc::rejection_budget_exceeded: return "RejectionBudgetExceeded";
    case Errc::parse_error: return "ParseError";
    }
    return "Error";
}

namespace {

std::string arc_label(ArcId id)
{
    return "A" + std::to_string(id);
}

} // namespace

ArcFamily::ArcFamily(int circle, std::vector<Arc> arcs, std::vector<std::string> names)
    : circle_(circle), arcs_(std::move(arcs)), names_(std::move(names))
{
    if (arcs_.empty())
        throw Error(Errc::invariant_violation, "family has no arcs");
    if (circle_ < 1)
        throw Error(Errc::invariant_violation, "circle size must be positive");
    if (names_.empty()) {
        names_.reserve(arcs_.size());
        for (std::size_t i = 0; i < arcs_.size(); ++i)
            names_.push_back(arc_label(static_cast<ArcId>(i)));
    }
    if (names_.size() != arcs_.size())
        throw Error(Errc::invariant_violation, "one name per arc required");

    std::unordered_set<std::string> seen_names;
    std::vector<char> used(static_cast<std::size_t>(circle_), 0);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        const std::string& nm = names_[i];
        if (!seen_names.insert(nm).second)
            throw Error(Errc::invariant_violation, "unique ids: duplicate id " + nm);
        for (Position p : {a.l, a.r}) {
            if (p < 0 || p >= circle_)
                throw Error(Errc::invariant_violation,
                            "endpoint range: arc " + nm + " endpoint " + std::to_string(p));
        }
        if (a.l == a.r)
            throw Error(Errc::invariant_violation, "single-point arc: " + nm);
        if (distance(a.l, a.r) == circle_ - 1)
            throw Error(Errc::invariant_violation, "full-circle arc: " + nm);
        for (Position p : {a.l, a.r}) {
            if (used[static_cast<std::size_t>(p)])
                throw Error(Errc::invariant_violation,
                            "distinct endpoints: position " + std::to_string(p) + " reused by " + nm);
            used[static_cast<std::size_t>(p)] = 1;
        }
    }
}

const Arc& ArcFamily::arc(ArcId id) const
{
    if (id < 0 || id >= size())
        throw Error(Errc::unknown_arc, "arc id " + std::to_string(id));
    return arcs_[static_cast<std::size_t>(id)];
}

const std::string& ArcFamily::name(ArcId id) const
{
    if (id < 0 || id >= size())
        throw Error(Errc::unknown_arc, "arc id " + std::to_string(id));
    return names_[static_cast<std::size_t>(id)];
}

std::optional<ArcId> ArcFamily::find(std::string_view nm) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == nm)
            return static_cast<ArcId>(i);
    return std::nullopt;
}

bool ArcFamily::contains(ArcId id, Position p) const
{
    const Arc& a = arc(id);
    return distance(a.l, p) <= distance(a.l, a.r);
}

bool ArcFamily::intersects(ArcId u, ArcId v) const
{
    return contains(u, arc(v).l) || contains(v, arc(u).l);
}

ArcFamily normalize(std::span<const RawArc> raw)
{
    if (raw.empty())
        throw Error(Errc::empty_family, "no arcs given");

    struct Token {
        double value;
        int kind; // 0 = left, 1 = right
        ArcId arc;
    };
    std::vector<Token> tokens;
    tokens.reserve(raw.size() * 2);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const RawArc& a = raw[i];
        if (!std::isfinite(a.left) || !std::isfinite(a.right))
            throw Error(Errc::degenerate_arc, "arc " + std::to_string(i) + " has a non-finite endpoint");
        if (a.left == a.right)
            throw Error(Errc::degenerate_arc, "arc " + std::to_string(i) + " is a single point");
        tokens.push_back({a.left, 0, static_cast<ArcId>(i)});
        tokens.push_back({a.right, 1, static_cast<ArcId>(i)});
    }
    std::sort(tokens.begin(), tokens.end(), [](const Token& x, const Token& y) {
        return std::tie(x.value, x.kind, x.arc) < std::tie(y.value, y.kind, y.arc);
    });

    std::vector<Arc> arcs(raw.size());
    Position next = 0;
    for (std::size_t j = 0; j < tokens.size(); ++j) {
        const Token& t = tokens[j];
        const Token& after = tokens[(j + 1) % tokens.size()];
        if (t.kind == 0)
            arcs[static_cast<std::size_t>(t.arc)].l = next++;
        else
            arcs[static_cast<std::size_t>(t.arc)].r = next++;
        // An arc whose complement holds no endpoint would otherwise cover
        // every discrete position.
        if (t.kind == 1 && after.kind == 0 && after.arc == t.arc)
            ++next;
    }
    return ArcFamily(next, std::move(arcs));
}

ProperCheck is_proper(const ArcFamily& f)
{
    ProperCheck out;
    const int n = f.size();
    for (ArcId inner = 0; inner < n; ++inner) {
        const Arc& u = f.arc(inner);
        for (ArcId outer = 0; outer < n; ++outer) {
            if (inner == outer)
                continue;
            const Arc& v = f.arc(outer);
            const int dl = f.distance(v.l, u.l);
            const int dr = f.distance(v.l, u.r);
            if (dl < dr && dr < f.distance(v.l, v.r))
                out.violations.push_back({inner, outer});
        }
    }
    out.proper = out.violations.empty();
    return out;
}

std::vector<ArcId> overlap_set(const ArcFamily& f, Position p)
{
    if (p < 0 || p >= f.circle())
        throw Error(Errc::out_of_range, "position " + std::to_string(p));
    std::vector<ArcId> out;
    for (ArcId id = 0; id < f.size(); ++id)
        if (f.contains(id, p))
            out.push_back(id);
    return out;
}

OverlapStats overlap_stats(const ArcFamily& f)
{
    const int m = f.circle();
    std::vector<int> diff(static_cast<std::size_t>(m) + 1, 0);
    std::vector<int> ends_at(static_cast<std::size_t>(m), 0);
    std::vector<Position> endpoints;
    endpoints.reserve(static_cast<std::size_t>(f.size()) * 2);
    for (const Arc& a : f.arcs()) {
        if (a.l <= a.r) {
            ++diff[static_cast<std::size_t>(a.l)];
            --diff[static_cast<std::size_t>(a.r) + 1];
        } else {
            ++diff[static_cast<std::size_t>(a.l)];
            --diff[static_cast<std::size_t>(m)];
            ++diff[0];
            --diff[static_cast<std::size_t>(a.r) + 1];
        }
        ends_at[static_cast<std::size_t>(a.r)] = 1;
        endpoints.push_back(a.l);
        endpoints.push_back(a.r);
    }

    OverlapStats s;
    s.counts.resize(static_cast<std::size_t>(m));
    int running = 0;
    for (int p = 0; p < m; ++p) {
        running += diff[static_cast<std::size_t>(p)];
        s.counts[static_cast<std::size_t>(p)] = running;
    }

    s.r_sup = -1;
    for (int p = 0; p < m; ++p) {
        if (s.counts[static_cast<std::size_t>(p)] > s.r_sup) {
            s.r_sup = s.counts[static_cast<std::size_t>(p)];
            s.sup_witness = p;
        }
    }

    std::sort(endpoints.begin(), endpoints.end());
    s.r_inf = f.size() + 1;
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
        const Position from = endpoints[i];
        const Position to = endpoints[(i + 1) % endpoints.size()];
        const int c = s.counts[static_cast<std::size_t>(from)] - ends_at[static_cast<std::size_t>(from)];
        if (c < s.r_inf) {
            s.r_inf = c;
            s.inf_witness = {from, to};
        }
    }
    return s;
}

std::vector<ArcId> gap_overlap_set(const ArcFamily& f, Gap g)
{
    std::vector<ArcId> out;
    for (ArcId id = 0; id < f.size(); ++id)
        if (f.contains(id, g.from) && f.arc(id).r != g.from)
            out.push_back(id);
    return out;
}

namespace {

void check_pair(const ArcFamily& f, ArcId u, ArcId v)
{
    (void)f.arc(u);
    (void)f.arc(v);
    if (u == v)
        throw Error(Errc::precondition, "adjacency query needs two distinct arcs");
}

} // namespace

bool clockwise_adjacent(const ArcFamily& f, ArcId u, ArcId v)
{
    check_pair(f, u, v);
    return f.contains(v, f.arc(u).r);
}

bool anticlockwise_adjacent(const ArcFamily& f, ArcId u, ArcId v)
{
    check_pair(f, u, v);
    return f.contains(v, f.arc(u).l);
}

std::vector<ArcId> clockwise_neighbors(const ArcFamily& f, ArcId u)
{
    std::vector<ArcId> out;
    for (ArcId v = 0; v < f.size(); ++v)
        if (v != u && clockwise_adjacent(f, u, v))
            out.push_back(v);
    return out;
}

std::vector<ArcId> anticlockwise_neighbors(const ArcFamily& f, ArcId u)
{
    std::vector<ArcId> out;
    for (ArcId v = 0; v < f.size(); ++v)
        if (v != u && anticlockwise_adjacent(f, u, v))
            out.push_back(v);
    return out;
}

std::vector<ArcId> right_endpoint_order(const ArcFamily& f)
{
    std::vector<ArcId> order(static_cast<std::size_t>(f.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](ArcId x, ArcId y) { return f.arc(x).r < f.arc(y).r; });
    return order;
}

std::optional<int> circular_cover(const ArcFamily& f)
{
    const int m = f.circle();
    const int n = f.size();
    std::optional<int> best;
    for (ArcId start = 0; start < n; ++start) {
        const Position origin = f.arc(start).l;
        long reach = f.distance(origin, f.arc(start).r);
        int used = 1;
        while (reach < m && used <= n) {
            const Position frontier = static_cast<Position>((origin + reach) % m);
            int extension = 0;
            for (ArcId w = 0; w < n; ++w)
                if (f.contains(w, frontier))
                    extension = std::max(extension, f.distance(frontier, f.arc(w).r));
            if (extension == 0)
                break;
            reach += extension;
            ++used;
        }
        if (reach >= m && (!best || used < *best))
            best = used;
    }
    return best;
}

Labeling canonical_labeling(const ArcFamily& f)
{
    if (!is_proper(f).proper)
        throw Error(Errc::not_proper, "canonical labeling needs a proper family");
    const OverlapStats s = overlap_stats(f);
    if (s.r_sup < 1)
        throw Error(Errc::precondition, "no position is covered");

    Labeling lab;
    lab.base_point = s.sup_witness;
    std::vector<ArcId> order(static_cast<std::size_t>(f.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](ArcId x, ArcId y) {
        return f.distance(lab.base_point, f.arc(x).r) < f.distance(lab.base_point, f.arc(y).r);
    });
    lab.q.assign(order.begin(), order.begin() + s.r_sup);
    lab.a.assign(order.begin() + s.r_sup, order.end());

    std::vector<ArcId> first(lab.q);
    std::sort(first.begin(), first.end());
    if (first != overlap_set(f, lab.base_point)) {
        std::ostringstream msg;
        msg << "first " << s.r_sup << " right endpoints after position " << lab.base_point
            << " are not its overlap set";
        throw Error(Errc::lemma_fr_violation, msg.str());
    }
    return lab;
}

std::vector<LabelRef> label_lookup(const Labeling& lab, int vertex_count)
{
    std::vector<LabelRef> out(static_cast<std::size_t>(vertex_count));
    auto put = [&](ArcId id, bool in_q, int index) {
        if (id < 0 || id >= vertex_count)
            throw Error(Errc::unknown_arc, "labeling refers to arc " + std::to_string(id));
        out[static_cast<std::size_t>(id)] = {in_q, index};
    };
    for (int i = 1; i <= lab.r(); ++i)
        put(lab.q_at(i), true, i);
    for (int i = 1; i <= lab.k(); ++i)
        put(lab.a_at(i), false, i);
    return out;
}

} // namespace arcminor
