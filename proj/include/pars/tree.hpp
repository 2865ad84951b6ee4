#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "pars/dist.hpp"
#include "pars/pars.hpp"

namespace pars {

/// A finite computation tree: a leaf, or an element expanded by one of its
/// successor distributions with a subtree per point. Subtrees are shared.
class CompTree {
public:
    struct Branch;

    static CompTree leaf(ElementId e);
    /// `rule` is the index into successors(e) the branches follow.
    static CompTree node(ElementId e, std::size_t rule, std::vector<Branch> branches);

    const ElementId& root() const;
    bool is_leaf() const;
    std::optional<std::size_t> rule() const;
    const std::vector<Branch>& branches() const;
    std::size_t depth() const;

    friend bool operator==(const CompTree& a, const CompTree& b);

private:
    struct Node;
    explicit CompTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct CompTree::Branch {
    Weight weight;
    CompTree tree;
};

struct CompTree::Node {
    ElementId element;
    std::optional<std::size_t> rule;
    std::vector<Branch> branches;
};

inline const ElementId& CompTree::root() const { return node_->element; }
inline bool CompTree::is_leaf() const { return !node_->rule.has_value(); }
inline std::optional<std::size_t> CompTree::rule() const { return node_->rule; }
inline const std::vector<CompTree::Branch>& CompTree::branches() const { return node_->branches; }

/// True when every node's branches spell out the successor it names.
bool is_valid_tree(const Pars& p, const CompTree& t);

/// Leaf distribution with accumulated branch probabilities.
PointDist supp(const CompTree& t);

/// Every leaf is a terminal element.
bool is_maximal(const Pars& p, const CompTree& t);

struct TreeLimits {
    std::size_t max_depth = 16;
    std::size_t max_count = 10000;
};

struct TreeEnumeration {
    std::vector<CompTree> trees;
    /// False when a limit cut off unexplored trees (the "Unknown" outcome).
    bool complete = true;
};

/// All maximal trees rooted at `root`, in rule-index order. When a limit is
/// hit, `complete` is false and `trees` holds those found so far.
TreeEnumeration enumerate_maximal_trees(const Pars& p, const ElementId& root, const TreeLimits& limits);

/// All trees (not necessarily maximal) of depth ≤ max_depth rooted at `root`.
std::vector<CompTree> enumerate_trees(const Pars& p, const ElementId& root, std::size_t max_depth,
                                      std::size_t max_count);

}  // namespace pars
