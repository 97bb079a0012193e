#pragma once

#include "arcminor/arc_family.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace arcminor {

enum class GeneratorMode {
    /// Lefts and rights placed in the same cyclic order; proper by construction.
    same_cyclic_order,
    /// Uniform lefts with jittered common length, families with containment
    /// rejected.
    perturbed_uniform,
};

struct GeneratorConfig {
    int n = 1;
    std::uint64_t seed = 0;
    GeneratorMode mode = GeneratorMode::same_cyclic_order;
    std::optional<int> min_overlap_target;
    int rejection_budget = 1000;
};

/// Deterministic in the config. Throws Error(precondition) for n < 1 and
/// Error(rejection_budget_exceeded) when no acceptable family was drawn.
ArcFamily random_proper_family(const GeneratorConfig& cfg);

/// n equally spaced arcs, each meeting the next d clockwise: the d-th power
/// of the n-cycle. Requires n >= 2d + 2 and d >= 1.
ArcFamily cycle_power(int n, int d);

/// Fixed instances: "c5", "triangle", "disjoint2", "c5k3" (Catlin's C5[K3]).
const std::map<std::string, ArcFamily>& corpus();

} // namespace arcminor
