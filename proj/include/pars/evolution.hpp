#pragma once

// Parallel evolution of list distributions, and its closure under
// equivalence as a per-element polytope of one-step outcomes.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "pars/dist.hpp"
#include "pars/pars.hpp"

namespace pars {

struct Keep {
    friend bool operator==(Keep, Keep) { return true; }
};
struct Evolve {
    std::size_t successor = 0;
    friend bool operator==(Evolve, Evolve) = default;
};

/// Per point of a distribution: keep it, or replace it by one of its
/// element's successor distributions (scaled by the point's weight).
using PointChoice = std::variant<Keep, Evolve>;
using EvolveChoice = std::vector<PointChoice>;

/// At least one point evolves.
bool is_proper(const EvolveChoice& c);

/// Applies `choice` to `d`. Throws DistError on a length mismatch, an
/// out-of-range successor index, or a terminal point told to evolve.
PointDist evolve(const Pars& p, const PointDist& d, const EvolveChoice& choice);

struct Evolution {
    EvolveChoice choice;
    PointDist result;
};

/// Every parallel-evolution successor of `d`, one per Keep/Evolve
/// assignment, in lexicographic order (Keep first, then successor order).
/// The all-Keep identity is first.
std::vector<Evolution> parallel_successors(const Pars& p, const PointDist& d);

/// One step of (parallel evolution modulo ≈), as a polytope: each element
/// `a` of the canonical base with weight w_a distributes w_a over its
/// options {Keep} ∪ successors(a).
class StepPolytope {
public:
    struct Generator {
        ElementId element;
        Weight mass;
        /// options[0] is Keep ({element: 1}); the rest are the canonical
        /// successor distributions in successor order.
        std::vector<CanonicalDist> options;
    };

    StepPolytope(const Pars& p, const CanonicalDist& base);

    const CanonicalDist& base() const { return base_; }
    const std::vector<Generator>& generators() const { return generators_; }
    /// Elements that can carry mass after the step.
    std::vector<ElementId> reachable_elements() const;

    /// Realized distribution for coefficients λ[g][o] (one row per generator,
    /// summing to that generator's mass). Throws DistError otherwise.
    CanonicalDist realize(const std::vector<std::vector<Weight>>& coefficients) const;

    /// Coefficients realizing `target`, when it lies in the polytope.
    std::optional<std::vector<std::vector<Weight>>> find_realization(const CanonicalDist& target) const;

private:
    CanonicalDist base_;
    std::vector<Generator> generators_;
};

StepPolytope one_step_polytope(const Pars& p, const PointDist& d);

}  // namespace pars
