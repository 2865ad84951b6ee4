#pragma once

#include <cstddef>
#include <string>

#include "pars/dist.hpp"
#include "pars/pars.hpp"

namespace pars {

/// Which successor a non-terminal point takes in a full-evolution round.
enum class LimitStrategy { FirstRule, LastRule };

std::string to_string(LimitStrategy s);

struct LimitReport {
    bool converged = false;
    LimitStrategy strategy = LimitStrategy::FirstRule;
    std::size_t iterations = 0;
    /// Mass already on terminal elements.
    CanonicalDist terminal_part;
    /// Exact mass still on non-terminal elements.
    Weight residual_liveness;
    /// 2·liveness: bounds the distance to any terminal limit reachable
    /// from the final distribution.
    Weight error_bound;
    CanonicalDist final_distribution;
};

/// Evolves every non-terminal point each round (canonicalizing between
/// rounds) until liveness ≤ epsilon or max_iters rounds. `start` must be
/// normalised and epsilon positive (DistError otherwise).
LimitReport limit_estimate(const Pars& p, const PointDist& start, const Weight& epsilon, std::size_t max_iters,
                           LimitStrategy strategy = LimitStrategy::FirstRule);

}  // namespace pars
