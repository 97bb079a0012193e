#pragma once

#include "arcminor/arc_family.hpp"
#include "arcminor/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace arcminor {

/// Vertex-indexed colors, all >= 1.
struct Coloring {
    std::vector<int> colors;
    int num_colors = 0;

    static Coloring from_colors(std::vector<int> colors);

    /// Vertices of color h live in classes()[h - 1], ascending.
    std::vector<std::vector<Vertex>> classes() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ColoringCheck {
    bool valid = true;
    std::optional<std::pair<Vertex, Vertex>> conflict;
};

/// Scans vertices in increasing order against their lower-numbered
/// neighbours and reports the first monochromatic edge.
ColoringCheck validate_coloring(const Graph& g, const Coloring& c);

/// Cuts the circle at a minimum-overlap gap, colors the remaining arcs as
/// intervals by first fit in left-endpoint order, then gives each cut arc its
/// own fresh color. Uses at most r_sup + r_inf colors.
Coloring tucker_color(const ArcFamily& f);

inline constexpr int default_exact_vertex_limit = 24;

struct ChromaticResult {
    int chi = 0;
    Coloring coloring;
};

/// DSATUR branch and bound. Throws Error(instance_too_large) above the limit
/// (which is itself capped at 64).
ChromaticResult exact_chromatic(const Graph& g, int vertex_limit = default_exact_vertex_limit);
/// Same, seeded with a known valid coloring as the initial upper bound.
ChromaticResult exact_chromatic(const Graph& g, int vertex_limit, const Coloring& upper_bound);

std::vector<Vertex> greedy_clique(const Graph& g);
/// Exact maximum clique; at most 64 vertices.
std::vector<Vertex> max_clique(const Graph& g);

/// Deletes vertices whose removal keeps the chromatic number until every
/// remaining vertex is critical. Returns the kept vertices ascending.
std::vector<Vertex> color_critical_subgraph(const Graph& g, int vertex_limit = default_exact_vertex_limit);

/// Parameters of the explicit (r + x - 1)-colorings: t = floor(k / x),
/// b = k mod x.
struct SchemeParams {
    int r = 0;
    int x = 0;
    int k = 0;
    int t = 0;
    int b = 0;

    static SchemeParams make(int r, int x, int k);
    int target() const noexcept { return r + x; }
};

/// t even: q_i -> i, a_i -> (i-1) mod 2x + 1 up to a_{k-x+1}, the last x-1
/// arcs get r+1..r+x-1.
Coloring scheme_t_even(const Labeling& lab, const SchemeParams& p);

/// t odd, x + b < r - 1.
Coloring scheme_t_odd_general(const Labeling& lab, const SchemeParams& p);

/// t odd, x + b = r - 1 (so r = 2x and b = x - 1).
Coloring scheme_t_odd_tight(const Labeling& lab, const SchemeParams& p);

} // namespace arcminor
