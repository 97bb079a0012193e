#include "arcminor/minors.hpp"

#include "arcminor/error.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace arcminor {

const char* to_string(PathClause c) noexcept
{
    switch (c) {
    case PathClause::shape: return "shape";
    case PathClause::endpoints: return "endpoints";
    case PathClause::disjoint: return "disjoint";
    case PathClause::avoids_overlap: return "avoids_overlap";
    case PathClause::adjacency: return "adjacency";
    }
    return "?";
}

const char* to_string(MinorClause c) noexcept
{
    switch (c) {
    case MinorClause::count: return "count";
    case MinorClause::nonempty: return "nonempty";
    case MinorClause::disjoint: return "disjoint";
    case MinorClause::connected: return "connected";
    case MinorClause::pairwise_adjacent: return "pairwise_adjacent";
    }
    return "?";
}

namespace {

PathSetCheck path_failure(PathClause c, std::string detail)
{
    return {false, c, std::move(detail)};
}

MinorCheck minor_failure(MinorClause c, std::string detail)
{
    return {false, c, std::move(detail)};
}

[[noreturn]] void precondition(const std::string& what)
{
    throw Error(Errc::precondition, what);
}

int remainder_of(int k, int x)
{
    return k % x;
}

} // namespace

PathSetCheck validate_good_path_set(const Labeling& lab, const GoodPathSet& gps, const Graph& g)
{
    const int k = lab.k();
    const int x = gps.x;
    const auto labels = label_lookup(lab, g.size());
    for (const auto& path : gps.paths)
        for (Vertex v : path)
            if (v < 0 || v >= g.size())
                throw Error(Errc::unknown_arc, "path vertex " + std::to_string(v));

    if (x < 1 || x > k)
        return path_failure(PathClause::shape, "x must lie in [1, k]");
    if (static_cast<int>(gps.paths.size()) != x)
        return path_failure(PathClause::shape, "expected " + std::to_string(x) + " paths, got " +
                                                   std::to_string(gps.paths.size()));
    for (int i = 1; i <= x; ++i) {
        const auto& path = gps.paths[static_cast<std::size_t>(i - 1)];
        if (path.empty())
            return path_failure(PathClause::shape, "path " + std::to_string(i) + " is empty");
        if (path.front() != lab.a_at(i) || path.back() != lab.a_at(k - x + i)) {
            std::ostringstream msg;
            msg << "path " << i << " must run from a_" << i << " to a_" << (k - x + i);
            return path_failure(PathClause::endpoints, msg.str());
        }
    }
    std::vector<int> owner(static_cast<std::size_t>(g.size()), 0);
    for (int i = 1; i <= x; ++i) {
        for (Vertex v : gps.paths[static_cast<std::size_t>(i - 1)]) {
            int& o = owner[static_cast<std::size_t>(v)];
            if (o != 0) {
                std::ostringstream msg;
                msg << "vertex " << v << " appears in path " << o << " and path " << i;
                return path_failure(PathClause::disjoint, msg.str());
            }
            o = i;
        }
    }
    for (int i = 1; i <= x; ++i) {
        for (Vertex v : gps.paths[static_cast<std::size_t>(i - 1)]) {
            const LabelRef ref = labels[static_cast<std::size_t>(v)];
            if (ref.in_q || ref.index == 0) {
                std::ostringstream msg;
                msg << "path " << i << " uses vertex " << v << " (q_" << ref.index << ") of the maximum overlap set";
                return path_failure(PathClause::avoids_overlap, msg.str());
            }
        }
    }
    for (int i = 1; i <= x; ++i) {
        const auto& path = gps.paths[static_cast<std::size_t>(i - 1)];
        for (std::size_t s = 1; s < path.size(); ++s) {
            if (!g.adjacent(path[s - 1], path[s])) {
                const auto l1 = labels[static_cast<std::size_t>(path[s - 1])].index;
                const auto l2 = labels[static_cast<std::size_t>(path[s])].index;
                std::ostringstream msg;
                msg << "path " << i << ": a_" << l1 << " is not adjacent to a_" << l2;
                return path_failure(PathClause::adjacency, msg.str());
            }
        }
    }
    return {};
}

LabelPaths uniform_label_paths(int k, int x)
{
    if (x < 1 || k < x)
        precondition("uniform paths need 1 <= x <= k");
    if (k % x != 0)
        precondition("uniform paths need x to divide k (k=" + std::to_string(k) + ", x=" + std::to_string(x) + ")");
    LabelPaths out(static_cast<std::size_t>(x));
    for (int j = 1; j <= x; ++j)
        for (int l = j; l <= k; l += x)
            out[static_cast<std::size_t>(j - 1)].push_back(l);
    return out;
}

int successor_index(int k, int x, int i, int l)
{
    const int b = remainder_of(k, x);
    if (l >= 1 && l <= i - 2 * x)
        return l + x;
    if (l > i - 2 * x && l <= i - x - b)
        return l + x + b;
    if (l > i - x - b && l <= i - x)
        return l + b;
    if (l > i - x && l <= k - x)
        return l + x;
    precondition("successor undefined at a_" + std::to_string(l));
}

LabelPaths successor_label_paths(int k, int x, int i)
{
    if (x < 2)
        precondition("successor paths need x >= 2");
    if (k % x == 0)
        precondition("successor paths need k not divisible by x");
    if (i < 2 * x || i > k - x) {
        std::ostringstream msg;
        msg << "successor paths need 2x <= i <= k - x (i=" << i << ", x=" << x << ", k=" << k << ")";
        precondition(msg.str());
    }
    LabelPaths out(static_cast<std::size_t>(x));
    for (int j = 1; j <= x; ++j) {
        auto& path = out[static_cast<std::size_t>(j - 1)];
        for (int l = j;; l = successor_index(k, x, i, l)) {
            path.push_back(l);
            if (l > k - x)
                break;
        }
    }
    return out;
}

LabelPaths tail_label_paths(int k, int x)
{
    const int b = x >= 1 ? remainder_of(k, x) : 0;
    if (x < 1 || b < 1)
        precondition("tail attachment needs k mod x >= 1");
    if (k < 2 * x + b)
        precondition("tail attachment needs k >= 2x + b");
    LabelPaths out(static_cast<std::size_t>(x));
    for (int j = 1; j <= x; ++j) {
        auto& path = out[static_cast<std::size_t>(j - 1)];
        for (int l = j; l <= k - 2 * x - b + j; l += x)
            path.push_back(l);
        path.push_back(k - x + j);
    }
    return out;
}

LabelPaths subcase2_label_paths(int k, int x, int j)
{
    if (x < 1)
        precondition("path extension needs x >= 1");
    const int b = remainder_of(k, x);
    if (b != x - 1)
        precondition("path extension needs k mod x = x - 1");
    if (k < 2 * x + b)
        precondition("path extension needs k >= 2x + b");
    if (j < 1 || j > x)
        precondition("path extension needs 1 <= j <= x");
    LabelPaths out(static_cast<std::size_t>(x));
    for (int i = 1; i <= x; ++i) {
        auto& path = out[static_cast<std::size_t>(i - 1)];
        for (int l = i; l <= k - 2 * x - b + i; l += x)
            path.push_back(l);
        if (i < j)
            path.push_back(k - x - b + i);
        else if (i > j)
            path.push_back(k - x - b + i - 1);
        path.push_back(k - x + i);
    }
    return out;
}

GoodPathSet to_good_path_set(const Labeling& lab, const LabelPaths& paths)
{
    GoodPathSet gps;
    gps.x = static_cast<int>(paths.size());
    for (const auto& path : paths) {
        auto& ids = gps.paths.emplace_back();
        for (int l : path) {
            if (l < 1 || l > lab.k())
                precondition("label a_" + std::to_string(l) + " outside 1.." + std::to_string(lab.k()));
            ids.push_back(lab.a_at(l));
        }
    }
    return gps;
}

GoodPathSet gps_uniform(const Labeling& lab, int x)
{
    return to_good_path_set(lab, uniform_label_paths(lab.k(), x));
}

GoodPathSet gps_successor(const ArcFamily& f, const Labeling& lab, int x, int i)
{
    LabelPaths paths = successor_label_paths(lab.k(), x, i);
    if (!clockwise_adjacent(f, lab.a_at(i - 2 * x + 1), lab.a_at(i))) {
        std::ostringstream msg;
        msg << "a_" << i << " is not clockwise adjacent to a_" << (i - 2 * x + 1);
        precondition(msg.str());
    }
    return to_good_path_set(lab, paths);
}

GoodPathSet gps_tail(const ArcFamily& f, const Labeling& lab, int x)
{
    LabelPaths paths = tail_label_paths(lab.k(), x);
    const int k = lab.k();
    const int b = remainder_of(k, x);
    std::vector<int> missing;
    for (int j = 1; j <= x; ++j)
        if (!clockwise_adjacent(f, lab.a_at(k - 2 * x - b + j), lab.a_at(k - x + j)))
            missing.push_back(j);
    if (!missing.empty()) {
        std::ostringstream msg;
        msg << "a_{k-x+j} not clockwise adjacent to a_{k-2x-b+j} for j =";
        for (int j : missing)
            msg << ' ' << j;
        precondition(msg.str());
    }
    return to_good_path_set(lab, paths);
}

GoodPathSet gps_subcase2(const ArcFamily& f, const Labeling& lab, int x, int j)
{
    if (lab.r() != 2 * x)
        precondition("path extension needs r = 2x");
    LabelPaths paths = subcase2_label_paths(lab.k(), x, j);
    const int k = lab.k();
    const int b = remainder_of(k, x);
    if (!anticlockwise_adjacent(f, lab.a_at(k - x + j), lab.a_at(k - 2 * x - b + j))) {
        std::ostringstream msg;
        msg << "a_" << (k - 2 * x - b + j) << " is not anticlockwise adjacent to a_" << (k - x + j);
        precondition(msg.str());
    }
    return to_good_path_set(lab, paths);
}

MinorCheck validate_clique_minor(const Graph& g, const MinorCertificate& cert)
{
    for (const auto& set : cert.branch_sets)
        for (Vertex v : set)
            if (v < 0 || v >= g.size())
                throw Error(Errc::unknown_arc, "branch set vertex " + std::to_string(v));

    const auto& sets = cert.branch_sets;
    if (static_cast<int>(sets.size()) != cert.target)
        return minor_failure(MinorClause::count, "claims K_" + std::to_string(cert.target) + " with " +
                                                     std::to_string(sets.size()) + " branch sets");
    for (std::size_t s = 0; s < sets.size(); ++s)
        if (sets[s].empty())
            return minor_failure(MinorClause::nonempty, "branch set " + std::to_string(s) + " is empty");

    std::vector<int> owner(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t s = 0; s < sets.size(); ++s) {
        for (Vertex v : sets[s]) {
            int& o = owner[static_cast<std::size_t>(v)];
            if (o != -1 && o != static_cast<int>(s))
                return minor_failure(MinorClause::disjoint, "vertex " + std::to_string(v) + " is in branch sets " +
                                                                std::to_string(o) + " and " + std::to_string(s));
            if (o == static_cast<int>(s))
                return minor_failure(MinorClause::disjoint, "vertex " + std::to_string(v) + " repeated in branch set " +
                                                                std::to_string(s));
            o = static_cast<int>(s);
        }
    }

    for (std::size_t s = 0; s < sets.size(); ++s) {
        std::vector<Vertex> stack{sets[s].front()};
        std::set<Vertex> reached{sets[s].front()};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (owner[static_cast<std::size_t>(w)] == static_cast<int>(s) && reached.insert(w).second)
                    stack.push_back(w);
        }
        if (reached.size() != sets[s].size())
            return minor_failure(MinorClause::connected, "branch set " + std::to_string(s) + " is disconnected");
    }

    std::vector<std::vector<char>> touch(sets.size(), std::vector<char>(sets.size(), 0));
    for (Vertex v = 0; v < g.size(); ++v) {
        const int ov = owner[static_cast<std::size_t>(v)];
        if (ov < 0)
            continue;
        for (Vertex w : g.neighbors(v)) {
            const int ow = owner[static_cast<std::size_t>(w)];
            if (ow >= 0)
                touch[static_cast<std::size_t>(ov)][static_cast<std::size_t>(ow)] = 1;
        }
    }
    for (std::size_t s = 0; s < sets.size(); ++s)
        for (std::size_t t = s + 1; t < sets.size(); ++t)
            if (!touch[s][t])
                return minor_failure(MinorClause::pairwise_adjacent, "branch sets " + std::to_string(s) + " and " +
                                                                         std::to_string(t) + " share no edge");
    return {};
}

MinorCertificate gps_to_minor(const Labeling& lab, const GoodPathSet& gps, const Graph& g)
{
    const PathSetCheck check = validate_good_path_set(lab, gps, g);
    if (!check.valid)
        precondition(std::string("not a good path set (") + to_string(*check.failed) + "): " + check.detail);

    const int k = lab.k();
    const int x = gps.x;
    for (int j = 1; j <= lab.r(); ++j) {
        for (int i = 1; i <= x; ++i) {
            const Vertex q = lab.q_at(j);
            if (!g.adjacent(q, lab.a_at(i)) && !g.adjacent(q, lab.a_at(k - x + i))) {
                std::ostringstream msg;
                msg << "q_" << j << " is adjacent to neither a_" << i << " nor a_" << (k - x + i);
                throw Error(Errc::adjacency_gap, msg.str());
            }
        }
    }
    for (int i = 0; i < x; ++i) {
        for (int j = i + 1; j < x; ++j) {
            bool joined = false;
            for (Vertex u : gps.paths[static_cast<std::size_t>(i)])
                for (Vertex v : gps.paths[static_cast<std::size_t>(j)])
                    joined = joined || g.adjacent(u, v);
            if (!joined) {
                std::ostringstream msg;
                msg << "paths " << (i + 1) << " and " << (j + 1) << " share no edge";
                throw Error(Errc::path_pair_nonadjacent, msg.str());
            }
        }
    }

    MinorCertificate cert;
    cert.target = lab.r() + x;
    for (Vertex q : lab.q)
        cert.branch_sets.push_back({q});
    for (const auto& path : gps.paths)
        cert.branch_sets.push_back(path);
    const MinorCheck mc = validate_clique_minor(g, cert);
    if (!mc.valid)
        precondition(std::string("assembled minor failed validation: ") + mc.detail);
    return cert;
}

namespace {

class BruteSearch {
public:
    BruteSearch(const Graph& g, int target, std::uint64_t budget)
        : n_(g.size()), adj_(g.neighbor_masks()), target_(target), budget_(budget)
    {
    }

    MinorSearch run()
    {
        MinorSearch out;
        const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        if (search(all, 0)) {
            MinorCertificate cert;
            cert.target = target_;
            for (Mask s : chosen_)
                cert.branch_sets.push_back(vertices(s));
            out.certificate = std::move(cert);
        }
        out.budget_exhausted = exhausted_;
        out.steps = steps_;
        return out;
    }

private:
    static std::vector<Vertex> vertices(Mask s)
    {
        std::vector<Vertex> out;
        for (; s != 0; s &= s - 1)
            out.push_back(std::countr_zero(s));
        return out;
    }

    Mask neighborhood(Mask s) const
    {
        Mask out = 0;
        for (Mask rest = s; rest != 0; rest &= rest - 1)
            out |= adj_[static_cast<std::size_t>(std::countr_zero(rest))];
        return out & ~s;
    }

    bool tick()
    {
        if (++steps_ > budget_)
            exhausted_ = true;
        return !exhausted_;
    }

    /// Connected subsets of `allowed` that contain `root`, each exactly once.
    void connected_sets(Mask current, Mask frontier, Mask forbidden, Mask allowed, std::vector<Mask>& out)
    {
        if (!tick())
            return;
        out.push_back(current);
        while (frontier != 0) {
            const int w = std::countr_zero(frontier);
            const Mask bit = Mask{1} << w;
            frontier &= ~bit;
            const Mask grown = current | bit;
            const Mask next = (frontier | adj_[static_cast<std::size_t>(w)]) & allowed & ~grown & ~forbidden;
            connected_sets(grown, next, forbidden, allowed, out);
            if (exhausted_)
                return;
            forbidden |= bit;
        }
    }

    bool search(Mask available, int from)
    {
        const int have = static_cast<int>(chosen_.size());
        if (have == target_)
            return true;
        const int need = target_ - have;
        Mask placed = 0;
        for (Mask s : chosen_)
            placed |= s;

        for (int v = from; v < n_; ++v) {
            const Mask upper = v == 0 ? available : available & ~((Mask{1} << v) - 1);
            if (std::popcount(upper) < need)
                return false;
            if (!(upper & (Mask{1} << v)))
                continue;

            std::vector<Mask> sets;
            const Mask root = Mask{1} << v;
            connected_sets(root, adj_[static_cast<std::size_t>(v)] & upper & ~root, 0, upper, sets);
            if (exhausted_)
                return false;
            std::stable_sort(sets.begin(), sets.end(),
                             [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

            for (Mask s : sets) {
                if (!tick())
                    return false;
                const Mask rest = upper & ~s & ~root;
                if (std::popcount(rest & ~s) < need - 1)
                    continue;
                const Mask around = neighborhood(s);
                bool touches_all = true;
                for (Mask c : chosen_)
                    touches_all = touches_all && (around & c) != 0;
                if (!touches_all)
                    continue;
                // Each other branch set needs its own neighbour of s.
                if (std::popcount(around & (placed | rest)) < target_ - 1)
                    continue;
                chosen_.push_back(s);
                if (search(upper & ~s, v + 1))
                    return true;
                chosen_.pop_back();
                if (exhausted_)
                    return false;
            }
        }
        return false;
    }

    int n_;
    std::vector<Mask> adj_;
    int target_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    bool exhausted_ = false;
    std::vector<Mask> chosen_;
};

} // namespace

MinorSearch brute_force_hadwiger(const Graph& g, int target, int vertex_limit, std::uint64_t step_budget)
{
    const int limit = std::min(vertex_limit, max_mask_vertices);
    if (g.size() > limit)
        throw Error(Errc::instance_too_large, "minor search limited to " + std::to_string(limit) + " vertices, got " +
                                                  std::to_string(g.size()));
    if (target < 1)
        precondition("minor search needs target >= 1");
    if (target > g.size())
        return {};
    const auto t = static_cast<std::size_t>(target);
    if (g.edge_count() < t * (t - 1) / 2)
        return {};
    return BruteSearch(g, target, step_budget).run();
}

} // namespace arcminor
