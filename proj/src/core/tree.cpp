#include "pars/tree.hpp"

#include <algorithm>
#include <map>

namespace pars {

CompTree CompTree::leaf(ElementId e) {
    return CompTree(std::make_shared<const Node>(Node{std::move(e), std::nullopt, {}}));
}

CompTree CompTree::node(ElementId e, std::size_t rule, std::vector<Branch> branches) {
    return CompTree(std::make_shared<const Node>(Node{std::move(e), rule, std::move(branches)}));
}

std::size_t CompTree::depth() const {
    std::size_t d = 0;
    for (const auto& b : branches()) d = std::max(d, b.tree.depth() + 1);
    return d;
}

bool operator==(const CompTree& a, const CompTree& b) {
    if (a.node_ == b.node_) return true;
    if (a.root() != b.root() || a.rule() != b.rule() || a.branches().size() != b.branches().size()) return false;
    for (std::size_t i = 0; i < a.branches().size(); ++i)
        if (a.branches()[i].weight != b.branches()[i].weight || !(a.branches()[i].tree == b.branches()[i].tree))
            return false;
    return true;
}

bool is_valid_tree(const Pars& p, const CompTree& t) {
    if (t.is_leaf()) return true;
    auto succ = p.successors(t.root());
    if (*t.rule() >= succ.size()) return false;
    const PointDist& target = succ[*t.rule()];
    if (target.size() != t.branches().size()) return false;
    for (std::size_t i = 0; i < target.size(); ++i) {
        const auto& br = t.branches()[i];
        if (br.weight != target[i].weight || br.tree.root() != target[i].element) return false;
        if (!is_valid_tree(p, br.tree)) return false;
    }
    return true;
}

namespace {

void collect_support(const CompTree& t, const Weight& scale_by, std::vector<Point>& out) {
    if (t.is_leaf()) {
        out.push_back({scale_by, t.root()});
        return;
    }
    for (const auto& br : t.branches()) collect_support(br.tree, scale_by * br.weight, out);
}

bool leaves_terminal(const Pars& p, const CompTree& t) {
    if (t.is_leaf()) return p.is_terminal(t.root());
    return std::all_of(t.branches().begin(), t.branches().end(),
                       [&](const auto& br) { return leaves_terminal(p, br.tree); });
}

class TreeEnumerator {
public:
    TreeEnumerator(const Pars& p, std::size_t max_count, bool maximal_only)
        : pars_(p), max_count_(max_count), maximal_only_(maximal_only) {}

    std::vector<CompTree> trees(const ElementId& a, std::size_t depth_left) {
        auto key = std::make_pair(a, depth_left);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<CompTree> out;
        auto succ = pars_.successors(a);
        if (succ.empty() || !maximal_only_) out.push_back(CompTree::leaf(a));
        if (!succ.empty() && depth_left == 0 && maximal_only_) complete = false;
        if (depth_left > 0) {
            for (std::size_t r = 0; r < succ.size() && out.size() < max_count_; ++r)
                expand(a, r, succ[r], depth_left, out);
        }
        memo_.emplace(key, out);
        return out;
    }

    bool complete = true;

private:
    void expand(const ElementId& a, std::size_t rule, const PointDist& target, std::size_t depth_left,
                std::vector<CompTree>& out) {
        std::vector<std::vector<CompTree>> children;
        children.reserve(target.size());
        for (const auto& pt : target) {
            children.push_back(trees(pt.element, depth_left - 1));
            if (children.back().empty()) return;
        }
        // Cartesian product over the per-point subtree choices.
        std::vector<std::size_t> idx(children.size(), 0);
        while (true) {
            if (out.size() >= max_count_) {
                complete = false;
                return;
            }
            std::vector<CompTree::Branch> branches;
            branches.reserve(target.size());
            for (std::size_t i = 0; i < target.size(); ++i)
                branches.push_back({target[i].weight, children[i][idx[i]]});
            out.push_back(CompTree::node(a, rule, std::move(branches)));
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == children[k].size()) idx[k++] = 0;
            if (k == idx.size()) return;
        }
    }

    const Pars& pars_;
    std::size_t max_count_;
    bool maximal_only_;
    std::map<std::pair<ElementId, std::size_t>, std::vector<CompTree>> memo_;
};

}  // namespace

PointDist supp(const CompTree& t) {
    std::vector<Point> out;
    collect_support(t, Weight(1), out);
    return PointDist(std::move(out));
}

bool is_maximal(const Pars& p, const CompTree& t) { return leaves_terminal(p, t); }

TreeEnumeration enumerate_maximal_trees(const Pars& p, const ElementId& root, const TreeLimits& limits) {
    TreeEnumerator en(p, limits.max_count, true);
    TreeEnumeration result;
    result.trees = en.trees(root, limits.max_depth);
    result.complete = en.complete;
    return result;
}

std::vector<CompTree> enumerate_trees(const Pars& p, const ElementId& root, std::size_t max_depth,
                                      std::size_t max_count) {
    TreeEnumerator en(p, max_count, false);
    return en.trees(root, max_depth);
}

}  // namespace pars
