#include "pars/pars.hpp"

#include <deque>

namespace pars {

void FinitePars::add_rule(const ElementId& a, NormalDist target) {
    carrier_.insert(a);
    for (const auto& p : target) carrier_.insert(p.element);
    rules_[a].push_back(target);
    rule_list_.emplace_back(a, std::move(target));
}

std::vector<NormalDist> FinitePars::successors(const ElementId& a) const {
    auto it = rules_.find(a);
    if (it == rules_.end()) return {};
    return it->second;
}

bool FinitePars::is_terminal(const ElementId& a) const { return !rules_.contains(a); }

std::set<ElementId> FinitePars::forward_closure(const std::set<ElementId>& roots) const {
    return *pars::forward_closure(*this, roots, carrier_.size() + roots.size());
}

std::optional<std::set<ElementId>> forward_closure(const Pars& p, const std::set<ElementId>& roots,
                                                   std::size_t max_elements) {
    std::set<ElementId> seen(roots.begin(), roots.end());
    std::deque<ElementId> queue(roots.begin(), roots.end());
    while (!queue.empty()) {
        ElementId a = queue.front();
        queue.pop_front();
        for (const auto& d : p.successors(a))
            for (const auto& pt : d)
                if (seen.insert(pt.element).second) {
                    if (seen.size() > max_elements) return std::nullopt;
                    queue.push_back(pt.element);
                }
    }
    return seen;
}

}  // namespace pars
