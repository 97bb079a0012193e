#pragma once

#include "arcminor/arc_family.hpp"
#include "arcminor/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arcminor {

/// x vertex-disjoint paths, path i running from a_i to a_{k-x+i} and avoiding
/// the maximum overlap set. Paths hold vertex (arc) ids.
struct GoodPathSet {
    int x = 0;
    std::vector<std::vector<Vertex>> paths;

    friend bool operator==(const GoodPathSet&, const GoodPathSet&) = default;
};

enum class PathClause { shape, endpoints, disjoint, avoids_overlap, adjacency };
const char* to_string(PathClause c) noexcept;

struct PathSetCheck {
    bool valid = true;
    std::optional<PathClause> failed;
    std::string detail;
};

PathSetCheck validate_good_path_set(const Labeling& lab, const GoodPathSet& gps, const Graph& g);

/// Label-level paths: sequences of 1-based a-indices.
using LabelPaths = std::vector<std::vector<int>>;

/// P_j = (a_j, a_{x+j}, ..., a_{k-x+j}); requires x | k.
LabelPaths uniform_label_paths(int k, int x);

/// Paths obtained by following the piecewise successor from each a_j,
/// 1 <= j <= x. Requires x >= 2, k mod x != 0 and 2x <= i <= k - x.
LabelPaths successor_label_paths(int k, int x, int i);

/// The successor of a_l (1 <= l <= k - x) under the rearrangement at i.
int successor_index(int k, int x, int i, int l);

/// P_j = (a_j, a_{x+j}, ..., a_{k-2x-b+j}, a_{k-x+j}); requires b >= 1 and
/// k >= 2x + b.
LabelPaths tail_label_paths(int k, int x);

/// Base stride paths ending at a_{k-2x-b+i}, extended so that path j jumps to
/// a_{k-x+j} directly and every other path detours through the gap
/// a_{k-x-b+1}..a_{k-x}. Requires b = x - 1.
LabelPaths subcase2_label_paths(int k, int x, int j);

GoodPathSet to_good_path_set(const Labeling& lab, const LabelPaths& paths);

/// Each construction checks its adjacency hypothesis on the family and
/// throws Error(precondition) naming it when it fails.
GoodPathSet gps_uniform(const Labeling& lab, int x);
GoodPathSet gps_successor(const ArcFamily& f, const Labeling& lab, int x, int i);
GoodPathSet gps_tail(const ArcFamily& f, const Labeling& lab, int x);
GoodPathSet gps_subcase2(const ArcFamily& f, const Labeling& lab, int x, int j);

/// Branch sets for a claimed K_target minor.
struct MinorCertificate {
    int target = 0;
    std::vector<std::vector<Vertex>> branch_sets;

    friend bool operator==(const MinorCertificate&, const MinorCertificate&) = default;
};

enum class MinorClause { count, nonempty, disjoint, connected, pairwise_adjacent };
const char* to_string(MinorClause c) noexcept;

struct MinorCheck {
    bool valid = true;
    std::optional<MinorClause> failed;
    std::string detail;
};

MinorCheck validate_clique_minor(const Graph& g, const MinorCertificate& cert);

/// Singletons for q_1..q_r followed by one branch set per path. Throws
/// Error(adjacency_gap) when some q misses both ends of a path and
/// Error(path_pair_nonadjacent) when two paths share no edge.
MinorCertificate gps_to_minor(const Labeling& lab, const GoodPathSet& gps, const Graph& g);

inline constexpr int default_brute_vertex_limit = 12;
inline constexpr std::uint64_t default_step_budget = 50'000'000;

struct MinorSearch {
    std::optional<MinorCertificate> certificate;
    bool budget_exhausted = false;
    std::uint64_t steps = 0;
};

/// Exhaustive search for `target` disjoint connected pairwise-adjacent
/// vertex sets. An absent certificate with `budget_exhausted == false` proves
/// there is no K_target minor.
MinorSearch brute_force_hadwiger(const Graph& g, int target, int vertex_limit = default_brute_vertex_limit,
                                 std::uint64_t step_budget = default_step_budget);

} // namespace arcminor
