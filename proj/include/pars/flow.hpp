#pragma once

// k rounds of (split, evolve, merge) as a layered mass-flow LP. A round
// routes the mass of each element over {Keep} ∪ successors; the final
// layer is exactly the set of canonical forms reachable by k steps of
// parallel evolution modulo ≈ (Keep pads shorter paths).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pars/dist.hpp"
#include "pars/lp.hpp"
#include "pars/pars.hpp"

namespace pars {

/// Memoized canonical successor lists, shared by the layers of one query.
class SuccessorCache {
public:
    explicit SuccessorCache(const Pars& p) : pars_(p) {}
    const std::vector<CanonicalDist>& get(const ElementId& a);
    const Pars& pars() const { return pars_; }

private:
    const Pars& pars_;
    std::map<ElementId, std::vector<CanonicalDist>> cache_;
};

struct FlowLayerVar {
    std::size_t layer;
    ElementId element;
    /// 0 = Keep, i+1 = successor i.
    std::size_t option;
};

struct FlowWitness {
    /// The common (or target) canonical distribution.
    CanonicalDist meet;
    /// Mass routed through each (layer, element, option) on each side.
    std::vector<std::pair<FlowLayerVar, Weight>> left_flow;
    std::vector<std::pair<FlowLayerVar, Weight>> right_flow;
};

struct FlowRefutation {
    /// Farkas multipliers labelled by the LP row they weight.
    std::vector<std::pair<std::string, Rational>> certificate;
};

struct FlowOutcome {
    std::optional<FlowWitness> witness;
    std::optional<FlowRefutation> refutation;
    /// The query exceeded `max_elements` and was not attempted.
    bool too_large = false;
};

/// Is there C with left ↠ᵏ C ᵏ↞ right (k steps modulo ≈ on each side)?
FlowOutcome join_flow(SuccessorCache& cache, const CanonicalDist& left, const CanonicalDist& right, std::size_t steps,
                      std::size_t max_elements = 4096);

/// Is target reachable from `from` in k steps modulo ≈?
FlowOutcome reach_flow(SuccessorCache& cache, const CanonicalDist& from, const CanonicalDist& target,
                       std::size_t steps, std::size_t max_elements = 4096);

}  // namespace pars
