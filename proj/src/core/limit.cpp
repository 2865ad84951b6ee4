#include "pars/limit.hpp"

namespace pars {

std::string to_string(LimitStrategy s) { return s == LimitStrategy::FirstRule ? "first" : "last"; }

LimitReport limit_estimate(const Pars& p, const PointDist& start, const Weight& epsilon, std::size_t max_iters,
                           LimitStrategy strategy) {
    if (total_weight(start) != Weight(1)) throw DistError("limit start distribution must be normalised");
    if (!epsilon.is_positive()) throw DistError("epsilon must be positive");

    auto terminal = [&](const ElementId& e) { return p.is_terminal(e); };
    LimitReport r;
    r.strategy = strategy;
    CanonicalDist current = canonicalize(start);
    while (true) {
        r.residual_liveness = liveness(to_point_dist(current), terminal);
        if (r.residual_liveness <= epsilon || r.iterations >= max_iters) break;
        CanonicalDist next;
        for (const auto& [a, w] : current) {
            auto succ = p.successors(a);
            if (succ.empty()) {
                next[a] += w;
                continue;
            }
            const PointDist& d = strategy == LimitStrategy::FirstRule ? succ.front() : succ.back();
            for (const auto& pt : d) next[pt.element] += w * pt.weight;
        }
        current = std::move(next);
        ++r.iterations;
    }
    r.converged = r.residual_liveness <= epsilon;
    r.error_bound = Weight(2) * r.residual_liveness;
    r.final_distribution = current;
    for (const auto& [a, w] : current)
        if (terminal(a)) r.terminal_part[a] = w;
    return r;
}

}  // namespace pars
