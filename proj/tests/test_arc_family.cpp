#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arcminor/arc_family.hpp"
#include "arcminor/error.hpp"
#include "arcminor/generate.hpp"
#include "arcminor/graph.hpp"
#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

using namespace arcminor;

namespace {

const ArcFamily& c5() { return corpus().at("c5"); }
const ArcFamily& triangle() { return corpus().at("triangle"); }
const ArcFamily& disjoint2() { return corpus().at("disjoint2"); }

Errc code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::parse_error;
}

bool message_has(auto&& fn, const std::string& needle)
{
    try {
        fn();
    } catch (const Error& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

} // namespace

TEST_CASE("normalize compresses ranks")
{
    const RawArc raw[] = {{0.0, 5.0}, {4.0, 9.0}};
    const ArcFamily f = normalize(raw);
    CHECK(f.circle() == 4);
    CHECK(f.arc(0) == Arc{0, 2});
    CHECK(f.arc(1) == Arc{1, 3});
}

TEST_CASE("normalize breaks ties left before right")
{
    const RawArc raw[] = {{0.0, 2.0}, {2.0, 4.0}};
    const ArcFamily f = normalize(raw);
    CHECK(f.circle() == 4);
    CHECK(f.arc(0) == Arc{0, 2});
    CHECK(f.arc(1) == Arc{1, 3});
    CHECK(is_proper(f).proper);
    CHECK(f.intersects(0, 1));
}

TEST_CASE("normalize rejects degenerate input")
{
    const RawArc point[] = {{1.5, 1.5}};
    CHECK(code_of([&] { normalize(point); }) == Errc::degenerate_arc);
    const RawArc nan[] = {{0.0, std::numeric_limits<double>::quiet_NaN()}};
    CHECK(code_of([&] { normalize(nan); }) == Errc::degenerate_arc);
    CHECK(code_of([] { normalize(std::span<const RawArc>{}); }) == Errc::empty_family);
}

TEST_CASE("a lone arc gets a spare position")
{
    const RawArc one[] = {{0.2, 0.7}};
    const ArcFamily f = normalize(one);
    CHECK(f.circle() == 3);
    CHECK(f.arc(0) == Arc{0, 1});
    CHECK(is_proper(f).proper);
}

TEST_CASE("wrapping raw arcs")
{
    const RawArc raw[] = {{0.9, 0.1}, {0.05, 0.5}};
    const ArcFamily f = normalize(raw);
    CHECK(f.intersects(0, 1));
    CHECK(f.contains(0, f.arc(1).l));
}

TEST_CASE("family invariants")
{
    CHECK(message_has([] { ArcFamily(8, {{0, 4}, {4, 6}}); }, "distinct endpoints"));
    CHECK(message_has([] { ArcFamily(8, {{3, 3}}); }, "single-point arc"));
    CHECK(message_has([] { ArcFamily(8, {{0, 2}, {4, 6}}, {"A", "A"}); }, "unique ids"));
    CHECK(code_of([] { ArcFamily(8, {{0, 9}}); }) == Errc::invariant_violation);
    CHECK(code_of([] { ArcFamily(3, {{1, 0}}); }) == Errc::invariant_violation);
    CHECK(c5().name(4) == "A4");
    CHECK(c5().find("A2") == 2);
    CHECK_FALSE(c5().find("B").has_value());
}

TEST_CASE("containment")
{
    CHECK(is_proper(c5()).proper);
    const ArcFamily nested(8, {{0, 5}, {1, 3}});
    const ProperCheck pc = is_proper(nested);
    CHECK_FALSE(pc.proper);
    REQUIRE(pc.violations.size() == 1);
    CHECK(pc.violations[0] == Containment{1, 0});
    CHECK(is_proper(ArcFamily(4, {{0, 1}})).proper);
    const ArcFamily wrapped(10, {{8, 3}, {9, 1}, {4, 6}});
    CHECK(is_proper(wrapped).violations == std::vector<Containment>{{1, 0}});
}

TEST_CASE("overlap sets")
{
    CHECK(overlap_set(c5(), 4) == std::vector<ArcId>{0, 1});
    CHECK(overlap_set(c5(), 2) == std::vector<ArcId>{0});
    CHECK(overlap_set(disjoint2(), 2).empty());
    CHECK(code_of([] { overlap_set(c5(), 20); }) == Errc::out_of_range);
}

TEST_CASE("overlap statistics")
{
    const OverlapStats s = overlap_stats(c5());
    CHECK(s.r_sup == 2);
    CHECK(s.r_inf == 1);
    // Position 0 lies in A0 and in the wrapping arc A4, and is scanned first.
    CHECK(s.sup_witness == 0);
    const OverlapStats d = overlap_stats(disjoint2());
    CHECK(d.r_sup == 1);
    CHECK(d.r_inf == 0);
    const OverlapStats t = overlap_stats(triangle());
    CHECK(t.r_sup == 2);
    CHECK(t.r_inf == 1);
    CHECK(gap_overlap_set(c5(), {5, 8}) == std::vector<ArcId>{1});
}

TEST_CASE("directional adjacency")
{
    CHECK(clockwise_adjacent(c5(), 0, 1));
    CHECK_FALSE(anticlockwise_adjacent(c5(), 0, 1));
    CHECK(anticlockwise_adjacent(c5(), 1, 0));
    CHECK_FALSE(clockwise_adjacent(c5(), 0, 2));
    CHECK_FALSE(anticlockwise_adjacent(c5(), 0, 2));
    CHECK(clockwise_neighbors(c5(), 4) == std::vector<ArcId>{0});
    CHECK(anticlockwise_neighbors(c5(), 0) == std::vector<ArcId>{4});
    CHECK(code_of([] { clockwise_adjacent(c5(), 1, 1); }) == Errc::precondition);
}

TEST_CASE("intersection graphs")
{
    const Graph g = intersection_graph(c5());
    CHECK(g.edge_count() == 5);
    for (int i = 0; i < 5; ++i)
        CHECK(g.adjacent(i, (i + 1) % 5));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.min_degree() == 2);
    CHECK(intersection_graph(disjoint2()).edge_count() == 0);
    CHECK(intersection_graph(triangle()).edge_count() == 3);
}

TEST_CASE("circular cover")
{
    CHECK(circular_cover(c5()) == 5);
    CHECK(circular_cover(triangle()) == 3);
    CHECK_FALSE(circular_cover(disjoint2()).has_value());
}

TEST_CASE("canonical labeling")
{
    const Labeling lab = canonical_labeling(c5());
    CHECK(lab.base_point == 0);
    CHECK(lab.q == std::vector<ArcId>{4, 0});
    CHECK(lab.a == std::vector<ArcId>{1, 2, 3});
    CHECK(lab.r() == 2);
    CHECK(lab.k() == 3);
    CHECK(lab.a_at(1) == 1);

    const Labeling lone = canonical_labeling(ArcFamily(3, {{0, 1}}));
    CHECK(lone.q == std::vector<ArcId>{0});
    CHECK(lone.k() == 0);

    const Labeling tri = canonical_labeling(triangle());
    CHECK(tri.r() == 2);
    CHECK(tri.k() == 1);

    CHECK(code_of([] { canonical_labeling(ArcFamily(8, {{0, 5}, {1, 3}})); }) == Errc::not_proper);

    const auto refs = label_lookup(lab, 5);
    CHECK(refs[4].in_q);
    CHECK(refs[4].index == 1);
    CHECK_FALSE(refs[3].in_q);
    CHECK(refs[3].index == 3);
}

TEST_CASE("properties against point-set oracles")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const int n = 1 + static_cast<int>(seed % 12);
        const auto mode = seed % 3 == 0 ? GeneratorMode::perturbed_uniform : GeneratorMode::same_cyclic_order;
        const ArcFamily f = oracle::generated(n, seed, mode);
        CAPTURE(seed);
        REQUIRE(oracle::proper(f));
        CHECK(is_proper(f).proper);
        CHECK(intersection_graph(f) == oracle::graph(f));
        const OverlapStats s = overlap_stats(f);
        CHECK(s.r_sup == oracle::r_sup(f));
        CHECK(s.r_inf == oracle::r_inf(f));
        CHECK(static_cast<int>(overlap_set(f, s.sup_witness).size()) == s.r_sup);
        for (int p = 0; p < f.circle(); ++p) {
            CHECK(overlap_set(f, p) == oracle::overlap(f, p));
            CHECK(s.counts[static_cast<std::size_t>(p)] == static_cast<int>(oracle::overlap(f, p).size()));
        }
        CHECK(circular_cover(f) == oracle::cover(f));
        for (int u = 0; u < f.size(); ++u)
            for (int v = 0; v < f.size(); ++v)
                if (u != v)
                    CHECK(f.intersects(u, v) ==
                          (clockwise_adjacent(f, u, v) || anticlockwise_adjacent(f, u, v)));
        const Labeling lab = canonical_labeling(f);
        CHECK(lab.r() == s.r_sup);
        CHECK(lab.size() == f.size());
    }
}

TEST_CASE("containment detected against oracle on arbitrary families")
{
    // Random lengths without the generator's properness guarantee.
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 6;
        std::vector<RawArc> raw;
        for (int i = 0; i < n; ++i) {
            const double l = u(rng);
            raw.push_back({l, std::fmod(l + 0.05 + 0.8 * u(rng), 1.0)});
        }
        const ArcFamily f = normalize(raw);
        CAPTURE(trial);
        CHECK(is_proper(f).proper == oracle::proper(f));
        for (const Containment& c : is_proper(f).violations)
            CHECK(oracle::strictly_inside(f, c.inner, c.outer));
    }
}
