#pragma once

#include <stdexcept>
#include <string>

namespace arcminor {

enum class Errc {
    empty_family,
    degenerate_arc,
    invariant_violation,
    out_of_range,
    unknown_arc,
    not_proper,
    lemma_fr_violation,
    missing_assignment,
    instance_too_large,
    precondition,
    adjacency_gap,
    path_pair_nonadjacent,
    oracle_exhausted,
    rejection_budget_exceeded,
    parse_error,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace arcminor
