#pragma once

#include "arcminor/arc_family.hpp"
#include "arcminor/coloring.hpp"
#include "arcminor/error.hpp"
#include "arcminor/graph.hpp"
#include "arcminor/minors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arcminor {

struct OracleLimits {
    int exact_vertex_limit = default_exact_vertex_limit;
    int brute_vertex_limit = default_brute_vertex_limit;
    std::uint64_t step_budget = default_step_budget;
    bool allow_brute_force = true;

    /// Defaults, with both vertex limits replaced by ARCMINOR_ORACLE_LIMIT
    /// when that variable holds a positive integer.
    static OracleLimits from_environment();
};

enum class Route { clique, good_path_set, brute_force };
const char* to_string(Route r) noexcept;

struct RouteAttempt {
    std::string route; // "clique", "good_path_set/successor(i=5)", ...
    bool succeeded = false;
    std::string reason;
};

struct HadwigerCertificate {
    int chi = 0;
    Route route = Route::clique;
    std::string variant;
    MinorCertificate minor;
    std::vector<RouteAttempt> audit_trail;
};

/// No route produced a certificate within the configured limits.
class OracleExhausted : public Error {
public:
    OracleExhausted(int chi, std::vector<RouteAttempt> trail)
        : Error(Errc::oracle_exhausted, "no K_" + std::to_string(chi) + " certificate within limits"),
          chi_(chi), trail_(std::move(trail))
    {
    }

    int chi() const noexcept { return chi_; }
    const std::vector<RouteAttempt>& audit_trail() const noexcept { return trail_; }

private:
    int chi_;
    std::vector<RouteAttempt> trail_;
};

struct PathRouteResult {
    std::optional<MinorCertificate> minor;
    std::string variant;
    std::vector<RouteAttempt> attempts;
};

/// Tries every good-path-set construction that applies to (k, x) and returns
/// the first one whose paths validate and contract to a K_{r+x} minor.
PathRouteResult good_path_routes(const ArcFamily& f, const Labeling& lab, const Graph& g, int x);

/// Clique route, then good path sets, then brute force. Throws
/// Error(not_proper) or OracleExhausted.
HadwigerCertificate certify_hadwiger(const ArcFamily& f, const OracleLimits& limits = {});

// ---------------------------------------------------------------------------
// Per-instance checks of the structural facts about proper families. Each
// returns a description of the first counterexample, or nullopt.

std::optional<std::string> check_adjacency_bounds(const ArcFamily& f, const OverlapStats& s);
std::optional<std::string> check_right_endpoint_order(const ArcFamily& f);
std::optional<std::string> check_clockwise_contiguity(const ArcFamily& f);
std::optional<std::string> check_adjacency_duality(const ArcFamily& f);
std::optional<std::string> check_endpoint_order_duality(const ArcFamily& f);
std::optional<std::string> check_tucker_bound(const ArcFamily& f, const OverlapStats& s);
std::optional<std::string> check_labeled_adjacency_runs(const ArcFamily& f, const Labeling& lab);
std::optional<std::string> check_stride_adjacency(const ArcFamily& f, const OverlapStats& s);
/// l(F) >= 4 implies 2 chi <= 3 r_sup; vacuous otherwise.
std::optional<std::string> check_three_halves_bound(std::optional<int> cover, int chi, int r_sup);

enum class CheckKind { theorem, hypothesis };

struct LemmaTally {
    std::string name;
    CheckKind kind = CheckKind::theorem;
    long checked = 0;
    long failed = 0; // hypotheses: instances where it does not hold
    std::string counterexample;
};

struct InstanceStats {
    int n = 0;
    int r_sup = 0;
    int r_inf = 0;
    std::optional<int> cover;
    std::optional<int> chi;
    int min_degree = 0;
};

struct SchemeOutcome {
    std::string scheme;
    bool valid = false;
    std::string detail;
};

struct AuditReport {
    std::vector<InstanceStats> instances;
    std::vector<LemmaTally> lemmas;
    std::vector<LemmaTally> hypotheses;
    std::vector<SchemeOutcome> schemes; // concatenated over instances
    long alarms = 0;

    /// Counters add; instance lists concatenate. Associative.
    void merge(const AuditReport& other);
    long theorem_failures() const;
};

/// Throws Error(not_proper).
AuditReport lemma_audit(const ArcFamily& f, const OracleLimits& limits = {});

} // namespace arcminor
