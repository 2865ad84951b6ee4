#pragma once

// Finite certificates that settle joinability questions outright.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pars/dist.hpp"
#include "pars/pars.hpp"

namespace pars {

/// Weights h on elements with h(a) = Σ D(b)·h(b) for every rule a ↦ D in
/// `closure`. Every step of parallel evolution and every ≈ step preserves
/// Σ X(a)·h(a), so two distributions that disagree on it never meet.
using Invariant = std::map<ElementId, Rational>;

/// A basis of the invariants over a forward-closed element set.
std::vector<Invariant> invariant_basis(const Pars& p, const std::set<ElementId>& closure);

Rational evaluate(const Invariant& h, const CanonicalDist& d);

/// An invariant separating `left` and `right`, searched over the forward
/// closure of their supports (capped at `max_elements`).
std::optional<Invariant> separating_invariant(const Pars& p, const CanonicalDist& left, const CanonicalDist& right,
                                              std::size_t max_elements = 512);

/// Longest element path inside `closure`; std::nullopt when it has a cycle.
std::optional<std::size_t> closure_height(const Pars& p, const std::set<ElementId>& closure);

/// Terminal values: an acyclic choice of one rule per non-terminal element
/// reaching terminal elements, whose induced terminal distribution N(a) is
/// preserved by every rule (N(a) = Σ D(b)·N(b) for all a ↦ D). Every
/// reduct of [(1,a)] then reaches N(a), so the closure is confluent and
/// N(a) is its unique terminal distribution.
struct TerminalValues {
    std::map<ElementId, CanonicalDist> value;
    std::map<ElementId, std::size_t> chosen_rule;
};

std::optional<TerminalValues> terminal_values(const Pars& p, const std::set<ElementId>& roots,
                                              std::size_t max_elements = 512);

}  // namespace pars
