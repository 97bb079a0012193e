#pragma once

#include "arcminor/arc_family.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace arcminor {

using Vertex = int;

/// Vertex subset for the exhaustive oracles, which cap instances at 64 vertices.
using Mask = std::uint64_t;
inline constexpr int max_mask_vertices = 64;

/// Simple undirected graph with sorted adjacency lists and an O(1) edge test.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

    int size() const noexcept { return n_; }
    bool adjacent(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    int min_degree() const;
    std::size_t edge_count() const noexcept { return edges_; }

    void add_edge(Vertex u, Vertex v);

    /// Requires size() <= 64.
    std::vector<Mask> neighbor_masks() const;

    /// Subgraph induced by `keep`; vertex i of the result is keep[i].
    Graph induced(std::span<const Vertex> keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check(Vertex v) const;

    int n_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> matrix_;
};

/// Vertices are arc ids; edges join intersecting arcs.
Graph intersection_graph(const ArcFamily& f);

} // namespace arcminor
