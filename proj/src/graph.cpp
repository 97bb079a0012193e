#include "arcminor/graph.hpp"

#include "arcminor/error.hpp"

#include <algorithm>
#include <limits>

namespace arcminor {

Graph::Graph(int vertex_count)
    : n_(vertex_count), adj_(static_cast<std::size_t>(vertex_count)),
      matrix_(static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(vertex_count), 0)
{
    if (vertex_count < 0)
        throw Error(Errc::precondition, "negative vertex count");
}

Graph::Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(vertex_count)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::check(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw Error(Errc::unknown_arc, "vertex " + std::to_string(v));
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    check(u);
    check(v);
    return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    check(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::min_degree() const
{
    int best = n_ == 0 ? 0 : std::numeric_limits<int>::max();
    for (Vertex v = 0; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check(u);
    check(v);
    if (u == v)
        throw Error(Errc::precondition, "self loop on vertex " + std::to_string(u));
    if (adjacent(u, v))
        return;
    const auto un = static_cast<std::size_t>(n_);
    matrix_[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)] = 1;
    matrix_[static_cast<std::size_t>(v) * un + static_cast<std::size_t>(u)] = 1;
    auto insert_sorted = [](std::vector<Vertex>& list, Vertex w) {
        list.insert(std::lower_bound(list.begin(), list.end(), w), w);
    };
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    ++edges_;
}

std::vector<Mask> Graph::neighbor_masks() const
{
    if (n_ > max_mask_vertices)
        throw Error(Errc::instance_too_large, "bit-set oracles handle at most 64 vertices");
    std::vector<Mask> out(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v)
        for (Vertex w : adj_[static_cast<std::size_t>(v)])
            out[static_cast<std::size_t>(v)] |= Mask{1} << w;
    return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const
{
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j]))
                g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return g;
}

Graph intersection_graph(const ArcFamily& f)
{
    Graph g(f.size());
    for (ArcId u = 0; u < f.size(); ++u)
        for (ArcId v = u + 1; v < f.size(); ++v)
            if (f.intersects(u, v))
                g.add_edge(u, v);
    return g;
}

} // namespace arcminor
