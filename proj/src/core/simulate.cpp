#include "pars/simulate.hpp"

#include <limits>
#include <random>
#include <string>

namespace pars {

namespace {

/// Uniform integer in [0, n) by rejection; the engine's output sequence is
/// fixed by the standard, so runs replay across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % n;
}

/// Samples a point index: a uniform 64-bit draw u is compared exactly
/// against cumulative weights scaled by 2^64.
std::size_t sample_point(std::mt19937_64& rng, const PointDist& d) {
    mpz_class u(std::to_string(rng()));
    mpz_class scale = 1;
    scale <<= 64;
    Rational x(u, scale);
    Rational cum = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        cum += d[i].weight.value();
        if (x < cum) return i;
    }
    return d.size() - 1;
}

}  // namespace

std::vector<TraceStep> simulate(const Pars& p, const ElementId& root, SchedulerStrategy strategy, std::uint64_t seed,
                                std::size_t max_steps) {
    std::mt19937_64 rng(seed);
    std::vector<TraceStep> trace;
    ElementId current = root;
    while (trace.size() < max_steps) {
        auto succ = p.successors(current);
        if (succ.empty()) break;
        std::size_t k = strategy == SchedulerStrategy::First ? 0 : uniform_below(rng, succ.size());
        const PointDist& d = succ[k];
        current = d[sample_point(rng, d)].element;
        trace.push_back({k, current});
    }
    return trace;
}

}  // namespace pars
