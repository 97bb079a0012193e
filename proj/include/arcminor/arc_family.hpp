#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arcminor {

using ArcId = int;
using Position = int;

/// Closed arc from `l` clockwise to `r` on a circle of discrete positions.
struct Arc {
    Position l = 0;
    Position r = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Arc given by arbitrary real endpoints. `left > right` wraps through the
/// smallest coordinate.
struct RawArc {
    double left = 0.0;
    double right = 0.0;
};

/// n closed arcs on a circle of `circle()` positions, all 2n endpoints
/// distinct, no arc a single point or the whole circle. Immutable.
class ArcFamily {
public:
    /// Throws Error(invariant_violation) naming the first broken invariant.
    ArcFamily(int circle, std::vector<Arc> arcs, std::vector<std::string> names = {});

    int circle() const noexcept { return circle_; }
    int size() const noexcept { return static_cast<int>(arcs_.size()); }
    std::span<const Arc> arcs() const noexcept { return arcs_; }
    const Arc& arc(ArcId id) const;
    const std::string& name(ArcId id) const;
    std::optional<ArcId> find(std::string_view name) const;

    /// Clockwise number of steps from `from` to `to`, in [0, circle).
    int distance(Position from, Position to) const noexcept
    {
        const int d = (to - from) % circle_;
        return d < 0 ? d + circle_ : d;
    }

    bool contains(ArcId id, Position p) const;
    bool intersects(ArcId u, ArcId v) const;

    friend bool operator==(const ArcFamily&, const ArcFamily&) = default;

private:
    int circle_;
    std::vector<Arc> arcs_;
    std::vector<std::string> names_;
};

/// Rank-compresses raw endpoints preserving cyclic order. Coinciding
/// coordinates are ordered (position, left before right, arc index). When an
/// arc's complement holds no other endpoint an empty position is inserted
/// there so the arc does not cover every discrete position.
ArcFamily normalize(std::span<const RawArc> raw);

struct Containment {
    ArcId inner;
    ArcId outer;
    friend bool operator==(const Containment&, const Containment&) = default;
};

struct ProperCheck {
    bool proper = true;
    std::vector<Containment> violations;
};

ProperCheck is_proper(const ArcFamily& f);

/// Arcs whose closed span contains `p`, ascending by id.
std::vector<ArcId> overlap_set(const ArcFamily& f, Position p);

/// Open interval between two consecutive endpoint positions.
struct Gap {
    Position from;
    Position to;
    friend bool operator==(const Gap&, const Gap&) = default;
};

struct OverlapStats {
    int r_sup = 0;
    Position sup_witness = 0;
    int r_inf = 0;
    Gap inf_witness{0, 0};
    std::vector<int> counts; // |O(p)| for every position p
};

OverlapStats overlap_stats(const ArcFamily& f);

/// Arcs covering the open gap, ascending by id.
std::vector<ArcId> gap_overlap_set(const ArcFamily& f, Gap g);

/// v lies in O(r(u)).
bool clockwise_adjacent(const ArcFamily& f, ArcId u, ArcId v);
/// v lies in O(l(u)).
bool anticlockwise_adjacent(const ArcFamily& f, ArcId u, ArcId v);

std::vector<ArcId> clockwise_neighbors(const ArcFamily& f, ArcId u);
std::vector<ArcId> anticlockwise_neighbors(const ArcFamily& f, ArcId u);

/// All arcs sorted by the position of their right endpoint.
std::vector<ArcId> right_endpoint_order(const ArcFamily& f);

/// Minimum number of arcs whose union is the circle; nullopt if the union of
/// all arcs leaves a gap.
std::optional<int> circular_cover(const ArcFamily& f);

/// Canonical ordering: the maximum-overlap arcs q_1..q_r followed by the
/// remaining arcs a_1..a_k, both by clockwise right endpoint from the base
/// point. The 1-based accessors mirror that notation.
struct Labeling {
    Position base_point = 0;
    std::vector<ArcId> q;
    std::vector<ArcId> a;

    int r() const noexcept { return static_cast<int>(q.size()); }
    int k() const noexcept { return static_cast<int>(a.size()); }
    ArcId q_at(int i) const { return q.at(static_cast<std::size_t>(i - 1)); }
    ArcId a_at(int i) const { return a.at(static_cast<std::size_t>(i - 1)); }
    int size() const noexcept { return r() + k(); }
};

Labeling canonical_labeling(const ArcFamily& f);

/// Where an arc sits in a labeling: `in_q` and its 1-based index.
struct LabelRef {
    bool in_q = false;
    int index = 0;
};

/// Indexed by arc id; entries for ids absent from the labeling have index 0.
std::vector<LabelRef> label_lookup(const Labeling& lab, int vertex_count);

} // namespace arcminor
