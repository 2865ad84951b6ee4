#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "pars/dist.hpp"

namespace pars {

/// A probabilistic abstract rewriting system: each element maps to the
/// (possibly empty) list of normalised distributions it can step to.
/// An element is terminal iff that list is empty. Implementations must be
/// deterministic: repeated queries return the same list.
class Pars {
public:
    virtual ~Pars() = default;
    virtual std::vector<NormalDist> successors(const ElementId& a) const = 0;
    virtual bool is_terminal(const ElementId& a) const { return successors(a).empty(); }
};

/// Extensionally listed system over a finite carrier.
class FinitePars final : public Pars {
public:
    FinitePars() = default;

    /// Appends `a ↦ target`; every element mentioned joins the carrier.
    void add_rule(const ElementId& a, NormalDist target);
    /// Adds an element with no rules (terminal unless rules follow).
    void add_element(const ElementId& a) { carrier_.insert(a); }

    std::vector<NormalDist> successors(const ElementId& a) const override;
    bool is_terminal(const ElementId& a) const override;

    const std::set<ElementId>& carrier() const { return carrier_; }
    /// Rules in insertion order, as (source, target) pairs.
    const std::vector<std::pair<ElementId, NormalDist>>& rules() const { return rule_list_; }
    bool contains(const ElementId& a) const { return carrier_.contains(a); }

    /// Elements reachable from `roots` (including them) along rule targets.
    std::set<ElementId> forward_closure(const std::set<ElementId>& roots) const;

    friend bool operator==(const FinitePars& a, const FinitePars& b) {
        return a.carrier_ == b.carrier_ && a.rule_list_ == b.rule_list_;
    }

private:
    std::set<ElementId> carrier_;
    std::map<ElementId, std::vector<NormalDist>> rules_;
    std::vector<std::pair<ElementId, NormalDist>> rule_list_;
};

/// Forward closure over an arbitrary (possibly lazy) system, capped at
/// `max_elements`; returns std::nullopt when the cap is exceeded.
std::optional<std::set<ElementId>> forward_closure(const Pars& p, const std::set<ElementId>& roots,
                                                   std::size_t max_elements);

}  // namespace pars
