#include "arcminor/coloring.hpp"

#include "arcminor/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace arcminor {

Coloring Coloring::from_colors(std::vector<int> colors)
{
    Coloring c;
    c.num_colors = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
    c.colors = std::move(colors);
    return c;
}

std::vector<std::vector<Vertex>> Coloring::classes() const
{
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(std::max(num_colors, 0)));
    for (std::size_t v = 0; v < colors.size(); ++v)
        if (colors[v] >= 1 && colors[v] <= num_colors)
            out[static_cast<std::size_t>(colors[v] - 1)].push_back(static_cast<Vertex>(v));
    return out;
}

ColoringCheck validate_coloring(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.colors.size()) != g.size())
        throw Error(Errc::missing_assignment, "coloring covers " + std::to_string(c.colors.size()) + " of " +
                                                  std::to_string(g.size()) + " vertices");
    for (Vertex v = 0; v < g.size(); ++v)
        if (c.colors[static_cast<std::size_t>(v)] < 1)
            throw Error(Errc::missing_assignment, "vertex " + std::to_string(v) + " has no color");

    ColoringCheck out;
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex w : g.neighbors(u)) {
            if (w >= u)
                break;
            if (c.colors[static_cast<std::size_t>(u)] == c.colors[static_cast<std::size_t>(w)]) {
                out.valid = false;
                out.conflict = std::pair{u, w};
                return out;
            }
        }
    }
    return out;
}

Coloring tucker_color(const ArcFamily& f)
{
    const OverlapStats s = overlap_stats(f);
    const std::vector<ArcId> cut = gap_overlap_set(f, s.inf_witness);
    std::vector<char> is_cut(static_cast<std::size_t>(f.size()), 0);
    for (ArcId id : cut)
        is_cut[static_cast<std::size_t>(id)] = 1;

    // Every remaining arc avoids the gap, so measured from the gap's far
    // endpoint it is an interval [lo, hi] on a line.
    const Position origin = s.inf_witness.to;
    struct Interval {
        int lo;
        int hi;
        ArcId id;
    };
    std::vector<Interval> line;
    for (ArcId id = 0; id < f.size(); ++id) {
        if (is_cut[static_cast<std::size_t>(id)])
            continue;
        line.push_back({f.distance(origin, f.arc(id).l), f.distance(origin, f.arc(id).r), id});
    }
    std::sort(line.begin(), line.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });

    std::vector<int> colors(static_cast<std::size_t>(f.size()), 0);
    std::vector<int> busy_until; // per color, right end of the last interval using it
    for (const Interval& iv : line) {
        std::size_t c = 0;
        while (c < busy_until.size() && busy_until[c] >= iv.lo)
            ++c;
        if (c == busy_until.size())
            busy_until.push_back(iv.hi);
        else
            busy_until[c] = iv.hi;
        colors[static_cast<std::size_t>(iv.id)] = static_cast<int>(c) + 1;
    }
    int next = static_cast<int>(busy_until.size());
    for (ArcId id : cut)
        colors[static_cast<std::size_t>(id)] = ++next;
    return Coloring::from_colors(std::move(colors));
}

namespace {

int clamp_limit(int vertex_limit)
{
    return std::min(vertex_limit, max_mask_vertices);
}

void require_size(const Graph& g, int vertex_limit, const char* what)
{
    if (g.size() > clamp_limit(vertex_limit)) {
        std::ostringstream msg;
        msg << what << " limited to " << clamp_limit(vertex_limit) << " vertices, got " << g.size();
        throw Error(Errc::instance_too_large, msg.str());
    }
}

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, int lower, Coloring start)
        : n_(g.size()), adj_(g.neighbor_masks()), lower_(lower), best_(std::move(start)),
          color_(static_cast<std::size_t>(n_), 0), classes_(static_cast<std::size_t>(n_) + 1, 0)
    {
    }

    Coloring run()
    {
        descend(0, 0);
        return best_;
    }

private:
    Vertex pick() const
    {
        Vertex chosen = -1;
        int best_sat = -1;
        int best_deg = -1;
        Mask uncolored = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (color_[static_cast<std::size_t>(v)] == 0)
                uncolored |= Mask{1} << v;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] != 0)
                continue;
            int sat = 0;
            for (int c = 1; c <= used_; ++c)
                if (classes_[static_cast<std::size_t>(c)] & adj_[static_cast<std::size_t>(v)])
                    ++sat;
            const int deg = std::popcount(adj_[static_cast<std::size_t>(v)] & uncolored);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                chosen = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return chosen;
    }

    void assign(Vertex v, int c)
    {
        color_[static_cast<std::size_t>(v)] = c;
        classes_[static_cast<std::size_t>(c)] |= Mask{1} << v;
    }

    void unassign(Vertex v, int c)
    {
        color_[static_cast<std::size_t>(v)] = 0;
        classes_[static_cast<std::size_t>(c)] &= ~(Mask{1} << v);
    }

    void descend(int colored, int used)
    {
        if (best_.num_colors <= lower_ || used >= best_.num_colors)
            return;
        if (colored == n_) {
            best_ = Coloring::from_colors(color_);
            return;
        }
        used_ = used;
        const Vertex v = pick();
        for (int c = 1; c <= used; ++c) {
            if (classes_[static_cast<std::size_t>(c)] & adj_[static_cast<std::size_t>(v)])
                continue;
            assign(v, c);
            descend(colored + 1, used);
            unassign(v, c);
            used_ = used;
            if (best_.num_colors <= lower_)
                return;
        }
        if (used + 1 < best_.num_colors) {
            assign(v, used + 1);
            descend(colored + 1, used + 1);
            unassign(v, used + 1);
            used_ = used;
        }
    }

    int n_;
    std::vector<Mask> adj_;
    int lower_;
    Coloring best_;
    std::vector<int> color_;
    std::vector<Mask> classes_; // indexed by color, slot 0 unused
    int used_ = 0;
};

ChromaticResult finish_exact(const Graph& g, int vertex_limit, Coloring start)
{
    require_size(g, vertex_limit, "exact chromatic number");
    if (g.size() == 0)
        return {0, Coloring{}};
    const int lower = static_cast<int>(greedy_clique(g).size());
    Coloring best = DsaturSearch(g, lower, std::move(start)).run();
    return {best.num_colors, std::move(best)};
}

} // namespace

ChromaticResult exact_chromatic(const Graph& g, int vertex_limit)
{
    std::vector<int> distinct(static_cast<std::size_t>(g.size()));
    std::iota(distinct.begin(), distinct.end(), 1);
    return finish_exact(g, vertex_limit, Coloring::from_colors(std::move(distinct)));
}

ChromaticResult exact_chromatic(const Graph& g, int vertex_limit, const Coloring& upper_bound)
{
    if (!validate_coloring(g, upper_bound).valid)
        throw Error(Errc::precondition, "seed coloring is not valid");
    return finish_exact(g, vertex_limit, upper_bound);
}

std::vector<Vertex> greedy_clique(const Graph& g)
{
    std::vector<Vertex> best;
    for (Vertex start = 0; start < g.size(); ++start) {
        std::vector<Vertex> clique{start};
        std::vector<Vertex> cand(g.neighbors(start).begin(), g.neighbors(start).end());
        while (!cand.empty()) {
            auto pick = std::max_element(cand.begin(), cand.end(), [&](Vertex x, Vertex y) {
                auto in_cand = [&](Vertex z) {
                    return static_cast<long>(std::count_if(cand.begin(), cand.end(),
                                                           [&](Vertex w) { return w != z && g.adjacent(z, w); }));
                };
                return in_cand(x) < in_cand(y);
            });
            const Vertex v = *pick;
            clique.push_back(v);
            std::erase_if(cand, [&](Vertex w) { return w == v || !g.adjacent(v, w); });
        }
        if (clique.size() > best.size())
            best = std::move(clique);
    }
    std::sort(best.begin(), best.end());
    return best;
}

namespace {

void grow_clique(const std::vector<Mask>& adj, Mask current, Mask candidates, Mask& best)
{
    if (candidates == 0) {
        if (std::popcount(current) > std::popcount(best))
            best = current;
        return;
    }
    while (candidates != 0) {
        if (std::popcount(current) + std::popcount(candidates) <= std::popcount(best))
            return;
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        grow_clique(adj, current | (Mask{1} << v), candidates & adj[static_cast<std::size_t>(v)], best);
    }
    if (std::popcount(current) > std::popcount(best))
        best = current;
}

} // namespace

std::vector<Vertex> max_clique(const Graph& g)
{
    require_size(g, max_mask_vertices, "maximum clique");
    const auto adj = g.neighbor_masks();
    const Mask all = g.size() == 64 ? ~Mask{0} : (Mask{1} << g.size()) - 1;
    Mask best = 0;
    grow_clique(adj, 0, all, best);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.size(); ++v)
        if (best & (Mask{1} << v))
            out.push_back(v);
    return out;
}

std::vector<Vertex> color_critical_subgraph(const Graph& g, int vertex_limit)
{
    require_size(g, vertex_limit, "color-critical reduction");
    const int chi = exact_chromatic(g, vertex_limit).chi;
    std::vector<Vertex> kept(static_cast<std::size_t>(g.size()));
    std::iota(kept.begin(), kept.end(), 0);
    // A vertex that is critical in some set stays critical in every subset
    // that still has chromatic number chi, so one pass suffices.
    for (Vertex v = 0; v < g.size(); ++v) {
        std::vector<Vertex> without;
        std::copy_if(kept.begin(), kept.end(), std::back_inserter(without), [v](Vertex w) { return w != v; });
        if (exact_chromatic(g.induced(without), vertex_limit).chi == chi)
            kept = std::move(without);
    }
    return kept;
}

SchemeParams SchemeParams::make(int r, int x, int k)
{
    if (r < 1 || x < 1 || k < 1) {
        std::ostringstream msg;
        msg << "need r, x, k >= 1 (got r=" << r << " x=" << x << " k=" << k << ")";
        throw Error(Errc::precondition, msg.str());
    }
    return {r, x, k, k / x, k % x};
}

namespace {

class SchemeBuilder {
public:
    SchemeBuilder(const Labeling& lab, const SchemeParams& p, const char* name) : lab_(lab)
    {
        if (lab.r() != p.r || lab.k() != p.k) {
            std::ostringstream msg;
            msg << name << ": labeling has r=" << lab.r() << " k=" << lab.k() << ", params r=" << p.r
                << " k=" << p.k;
            throw Error(Errc::precondition, msg.str());
        }
        if (2 * p.x > p.r)
            fail(name, "needs 2x <= r");
        colors_.assign(static_cast<std::size_t>(lab.size()), 0);
        for (int i = 1; i <= p.r; ++i)
            q(i, i);
    }

    [[noreturn]] static void fail(const char* name, const char* why)
    {
        throw Error(Errc::precondition, std::string(name) + ": " + why);
    }

    void q(int i, int color) { put(lab_.q_at(i), color); }
    void a(int i, int color) { put(lab_.a_at(i), color); }

    Coloring finish()
    {
        for (std::size_t v = 0; v < colors_.size(); ++v)
            if (colors_[v] == 0)
                throw Error(Errc::missing_assignment, "scheme left arc " + std::to_string(v) + " uncolored");
        return Coloring::from_colors(std::move(colors_));
    }

private:
    void put(ArcId id, int color)
    {
        if (id < 0 || id >= static_cast<int>(colors_.size()))
            throw Error(Errc::unknown_arc, "labeling refers to arc " + std::to_string(id));
        colors_[static_cast<std::size_t>(id)] = color;
    }

    const Labeling& lab_;
    std::vector<int> colors_;
};

int mod(int value, int m)
{
    const int r = value % m;
    return r < 0 ? r + m : r;
}

} // namespace

Coloring scheme_t_even(const Labeling& lab, const SchemeParams& p)
{
    constexpr const char* name = "scheme_t_even";
    if (p.t % 2 != 0)
        SchemeBuilder::fail(name, "t must be even");
    if (p.k < p.x + 1)
        SchemeBuilder::fail(name, "needs k >= x + 1");
    SchemeBuilder s(lab, p, name);
    const int k = p.k, x = p.x, r = p.r;
    for (int i = 1; i <= k - x + 1; ++i)
        s.a(i, mod(i - 1, 2 * x) + 1);
    for (int i = 1; i <= x - 1; ++i)
        s.a(k - x + i + 1, r + i);
    return s.finish();
}

Coloring scheme_t_odd_general(const Labeling& lab, const SchemeParams& p)
{
    constexpr const char* name = "scheme_t_odd_general";
    if (p.t % 2 != 1)
        SchemeBuilder::fail(name, "t must be odd");
    if (p.t < 3)
        SchemeBuilder::fail(name, "needs t >= 3 so that a_{k-2x-b} exists");
    if (p.x + p.b >= p.r - 1)
        SchemeBuilder::fail(name, "needs x + b < r - 1");
    SchemeBuilder s(lab, p, name);
    const int k = p.k, x = p.x, r = p.r, b = p.b;
    for (int i = 1; i <= k - 3 * x - b; ++i)
        s.a(i, mod(i - 1, 2 * x) + 1);
    for (int i = k - 2 * x - b; i <= k - x + 1; ++i)
        s.a(i, mod(i - (k - 2 * x - b), r) + 1);
    for (int j = 1; j <= x - 1; ++j) {
        s.a(k - 3 * x - b + j, r + j);
        s.a(k - x + j + 1, r + j);
    }
    return s.finish();
}

Coloring scheme_t_odd_tight(const Labeling& lab, const SchemeParams& p)
{
    constexpr const char* name = "scheme_t_odd_tight";
    if (p.t % 2 != 1)
        SchemeBuilder::fail(name, "t must be odd");
    if (p.x + p.b != p.r - 1)
        SchemeBuilder::fail(name, "needs x + b = r - 1");
    SchemeBuilder s(lab, p, name);
    const int k = p.k, x = p.x, r = p.r, b = p.b;
    for (int i = 1; i <= k - x - b; ++i)
        s.a(i, mod(i - 1, 2 * x) + 1);
    for (int j = 1; j <= x; ++j)
        s.a(k - x + j, x + j);
    for (int j = 1; j <= b; ++j)
        s.a(k - x - b + j, r + j);
    return s.finish();
}

} // namespace arcminor
