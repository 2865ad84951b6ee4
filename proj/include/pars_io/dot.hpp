#pragma once

#include <string>

#include "pars/tree.hpp"

namespace pars::io {

/// Graphviz digraph of a computation tree. Nodes are numbered n0, n1, …
/// in preorder and labelled by element; edges carry `p/q` weights.
std::string export_tree_dot(const CompTree& t, const std::string& graph_name = "tree");

}  // namespace pars::io
