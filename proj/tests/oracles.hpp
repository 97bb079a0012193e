#pragma once

// Slow reference implementations used only by the tests. They work on
// explicit position sets and plain enumeration and share no code with the
// library algorithms they check.

#include "arcminor/arc_family.hpp"
#include "arcminor/generate.hpp"
#include "arcminor/graph.hpp"
#include "arcminor/minors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using arcminor::ArcFamily;
using arcminor::Graph;

inline std::set<int> points(const ArcFamily& f, int id)
{
    std::set<int> s;
    const auto a = f.arc(id);
    for (int p = a.l;; p = (p + 1) % f.circle()) {
        s.insert(p);
        if (p == a.r)
            break;
    }
    return s;
}

inline bool intersects(const ArcFamily& f, int u, int v)
{
    const auto pu = points(f, u);
    const auto pv = points(f, v);
    return std::any_of(pu.begin(), pu.end(), [&](int p) { return pv.count(p) > 0; });
}

inline bool strictly_inside(const ArcFamily& f, int u, int v)
{
    const auto pu = points(f, u);
    const auto pv = points(f, v);
    return pu.size() < pv.size() && std::includes(pv.begin(), pv.end(), pu.begin(), pu.end());
}

inline bool proper(const ArcFamily& f)
{
    for (int u = 0; u < f.size(); ++u)
        for (int v = 0; v < f.size(); ++v)
            if (u != v && strictly_inside(f, u, v))
                return false;
    return true;
}

inline std::vector<int> overlap(const ArcFamily& f, int p)
{
    std::vector<int> out;
    for (int id = 0; id < f.size(); ++id)
        if (points(f, id).count(p))
            out.push_back(id);
    return out;
}

inline int r_sup(const ArcFamily& f)
{
    int best = 0;
    for (int p = 0; p < f.circle(); ++p)
        best = std::max(best, static_cast<int>(overlap(f, p).size()));
    return best;
}

/// Minimum over all (continuous) points of the circle: every open gap after
/// an endpoint e is covered exactly by the arcs holding both e and e + 1.
inline int r_inf(const ArcFamily& f)
{
    std::vector<int> endpoints;
    for (const auto& a : f.arcs()) {
        endpoints.push_back(a.l);
        endpoints.push_back(a.r);
    }
    int best = f.size();
    for (int e : endpoints) {
        int count = 0;
        for (int id = 0; id < f.size(); ++id) {
            const auto pts = points(f, id);
            count += pts.count(e) && pts.count((e + 1) % f.circle()) ? 1 : 0;
        }
        best = std::min(best, count);
    }
    return best;
}

inline Graph graph(const ArcFamily& f)
{
    Graph g(f.size());
    for (int u = 0; u < f.size(); ++u)
        for (int v = u + 1; v < f.size(); ++v)
            if (intersects(f, u, v))
                g.add_edge(u, v);
    return g;
}

/// Smallest subfamily covering every position and every gap; nullopt if the
/// whole family leaves something uncovered. n <= 16.
inline std::optional<int> cover(const ArcFamily& f)
{
    const int n = f.size();
    std::vector<std::set<int>> pts;
    for (int id = 0; id < n; ++id)
        pts.push_back(points(f, id));
    auto covers = [&](std::uint32_t mask) {
        for (int p = 0; p < f.circle(); ++p) {
            const int next = (p + 1) % f.circle();
            bool ok = false;
            for (int id = 0; id < n && !ok; ++id)
                ok = (mask >> id & 1u) && pts[id].count(p) && pts[id].count(next);
            if (!ok)
                return false;
        }
        return true;
    };
    std::optional<int> best;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int bits = std::popcount(mask);
        if ((!best || bits < *best) && covers(mask))
            best = bits;
    }
    return best;
}

inline bool colorable(const Graph& g, int colors)
{
    std::vector<int> c(static_cast<std::size_t>(g.size()), 0);
    std::function<bool(int)> place = [&](int v) {
        if (v == g.size())
            return true;
        for (int h = 1; h <= colors; ++h) {
            bool ok = true;
            for (int u : g.neighbors(v))
                ok = ok && !(u < v && c[static_cast<std::size_t>(u)] == h);
            if (!ok)
                continue;
            c[static_cast<std::size_t>(v)] = h;
            if (place(v + 1))
                return true;
        }
        c[static_cast<std::size_t>(v)] = 0;
        return false;
    };
    return place(0);
}

inline int chromatic(const Graph& g)
{
    int k = g.size() == 0 ? 0 : 1;
    while (!colorable(g, k))
        ++k;
    return k;
}

inline int clique_number(const Graph& g)
{
    const int n = g.size();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int bits = std::popcount(mask);
        if (bits <= best)
            continue;
        bool clique = true;
        for (int u = 0; u < n && clique; ++u)
            for (int v = u + 1; v < n && clique; ++v)
                if ((mask >> u & 1u) && (mask >> v & 1u))
                    clique = g.adjacent(u, v);
        if (clique)
            best = bits;
    }
    return best;
}

inline bool connected(const Graph& g, const std::vector<int>& set)
{
    if (set.empty())
        return false;
    std::set<int> members(set.begin(), set.end()), seen{set.front()};
    std::vector<int> stack{set.front()};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (members.count(u) && seen.insert(u).second)
                stack.push_back(u);
    }
    return seen.size() == members.size();
}

inline bool valid_minor(const Graph& g, const arcminor::MinorCertificate& cert)
{
    if (static_cast<int>(cert.branch_sets.size()) != cert.target)
        return false;
    std::set<int> used;
    for (const auto& s : cert.branch_sets) {
        if (!connected(g, s))
            return false;
        for (int v : s)
            if (!used.insert(v).second)
                return false;
    }
    for (std::size_t i = 0; i < cert.branch_sets.size(); ++i)
        for (std::size_t j = i + 1; j < cert.branch_sets.size(); ++j) {
            bool touch = false;
            for (int u : cert.branch_sets[i])
                for (int v : cert.branch_sets[j])
                    touch = touch || g.adjacent(u, v);
            if (!touch)
                return false;
        }
    return true;
}

/// Tries every map from vertices to {unused, set 1..t}. Tiny graphs only.
inline bool has_minor(const Graph& g, int t)
{
    const int n = g.size();
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> go = [&](int v) {
        if (v == n) {
            arcminor::MinorCertificate cert{t, std::vector<std::vector<int>>(static_cast<std::size_t>(t))};
            for (int u = 0; u < n; ++u)
                if (label[static_cast<std::size_t>(u)] > 0)
                    cert.branch_sets[static_cast<std::size_t>(label[static_cast<std::size_t>(u)] - 1)].push_back(u);
            return valid_minor(g, cert);
        }
        // Sets are opened in order so each partition is visited once.
        int opened = 0;
        for (int u = 0; u < v; ++u)
            opened = std::max(opened, label[static_cast<std::size_t>(u)]);
        for (int l = 0; l <= std::min(t, opened + 1); ++l) {
            label[static_cast<std::size_t>(v)] = l;
            if (go(v + 1))
                return true;
        }
        return false;
    };
    return go(0);
}

inline ArcFamily generated(int n, std::uint64_t seed,
                           arcminor::GeneratorMode mode = arcminor::GeneratorMode::same_cyclic_order)
{
    arcminor::GeneratorConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    cfg.mode = mode;
    return arcminor::random_proper_family(cfg);
}

} // namespace oracle
