#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pars/dist.hpp"
#include "pars/pars.hpp"

namespace pars {

enum class SchedulerStrategy { First, Random };

struct TraceStep {
    std::size_t successor = 0;
    ElementId element;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// One sampled run from `root`: pick a successor distribution (the first,
/// or uniformly at random), then sample an element by its exact weights.
/// Stops at a terminal element or after max_steps. Pure in its arguments.
std::vector<TraceStep> simulate(const Pars& p, const ElementId& root, SchedulerStrategy strategy, std::uint64_t seed,
                                std::size_t max_steps);

}  // namespace pars
