#include "arcminor/generate.hpp"

#include "arcminor/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace arcminor {

namespace {

double unit(std::mt19937_64& rng)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

std::vector<double> sorted_lefts(std::mt19937_64& rng, int n)
{
    std::vector<double> lefts(static_cast<std::size_t>(n));
    for (double& l : lefts)
        l = unit(rng);
    std::sort(lefts.begin(), lefts.end());
    return lefts;
}

// With lefts increasing, proper arcs are exactly those whose unwrapped rights
// also increase and stay within one turn of the first right.
std::vector<RawArc> same_cyclic_order(std::mt19937_64& rng, int n)
{
    const std::vector<double> lefts = sorted_lefts(rng, n);
    const double mean = 0.02 + 0.88 * unit(rng);
    std::vector<double> rights(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < rights.size(); ++i) {
        const double lo = i == 0 ? lefts[0] : std::max(lefts[i], rights[i - 1]);
        const double hi = i == 0 ? lefts[0] + 1.0 : std::min(lefts[i] + 1.0, rights[0] + 1.0);
        double proposal = lefts[i] + mean * (0.5 + unit(rng));
        if (!(proposal > lo && proposal < hi))
            proposal = lo + (hi - lo) * (0.05 + 0.9 * unit(rng));
        rights[i] = proposal;
    }
    std::vector<RawArc> raw;
    raw.reserve(rights.size());
    for (std::size_t i = 0; i < rights.size(); ++i)
        raw.push_back({lefts[i], std::fmod(rights[i], 1.0)});
    return raw;
}

std::vector<RawArc> perturbed_uniform(std::mt19937_64& rng, int n)
{
    const std::vector<double> lefts = sorted_lefts(rng, n);
    const double length = 0.05 + 0.55 * unit(rng);
    std::vector<RawArc> raw;
    raw.reserve(lefts.size());
    for (double l : lefts) {
        const double len = length * (1.0 + 0.2 * (unit(rng) - 0.5));
        raw.push_back({l, std::fmod(l + len, 1.0)});
    }
    return raw;
}

} // namespace

ArcFamily random_proper_family(const GeneratorConfig& cfg)
{
    if (cfg.n < 1)
        throw Error(Errc::precondition, "generator needs n >= 1");
    std::mt19937_64 rng(cfg.seed);
    const int budget = std::max(cfg.rejection_budget, 1);
    for (int attempt = 0; attempt < budget; ++attempt) {
        const std::vector<RawArc> raw =
            cfg.mode == GeneratorMode::same_cyclic_order ? same_cyclic_order(rng, cfg.n) : perturbed_uniform(rng, cfg.n);
        ArcFamily f = normalize(raw);
        if (!is_proper(f).proper)
            continue;
        if (cfg.min_overlap_target && overlap_stats(f).r_sup < *cfg.min_overlap_target)
            continue;
        return f;
    }
    throw Error(Errc::rejection_budget_exceeded,
                "no acceptable family after " + std::to_string(budget) + " draws");
}

ArcFamily cycle_power(int n, int d)
{
    if (d < 1 || n < 2 * d + 2)
        throw Error(Errc::precondition, "cycle power needs d >= 1 and n >= 2d + 2");
    const int circle = 4 * n;
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        arcs.push_back({4 * i, (4 * (i + d) + 1) % circle});
    return ArcFamily(circle, std::move(arcs));
}

namespace {

ArcFamily make(int circle, std::vector<Arc> arcs)
{
    return ArcFamily(circle, std::move(arcs));
}

std::map<std::string, ArcFamily> build_corpus()
{
    std::map<std::string, ArcFamily> out;
    out.emplace("c5", make(20, {{0, 5}, {4, 9}, {8, 13}, {12, 17}, {16, 1}}));
    out.emplace("triangle", make(12, {{0, 5}, {4, 9}, {8, 1}}));
    out.emplace("disjoint2", make(8, {{0, 1}, {4, 5}}));
    std::vector<Arc> blown_up;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 3; ++j)
            blown_up.push_back({12 * i + j, (12 * i + 15 + j) % 60});
    out.emplace("c5k3", make(60, std::move(blown_up)));
    return out;
}

} // namespace

const std::map<std::string, ArcFamily>& corpus()
{
    static const std::map<std::string, ArcFamily> instances = build_corpus();
    return instances;
}

} // namespace arcminor
