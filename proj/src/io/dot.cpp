#include "pars_io/dot.hpp"

#include <sstream>

namespace pars::io {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

std::size_t emit(const CompTree& t, std::size_t& counter, std::ostream& nodes, std::ostream& edges) {
    std::size_t id = counter++;
    nodes << "  n" << id << " [label=" << quoted(t.root().str()) << "];\n";
    for (const auto& b : t.branches()) {
        edges << "  n" << id << " -> n" << counter << " [label=" << quoted(b.weight.str()) << "];\n";
        emit(b.tree, counter, nodes, edges);
    }
    return id;
}

}  // namespace

std::string export_tree_dot(const CompTree& t, const std::string& graph_name) {
    std::ostringstream nodes, edges;
    std::size_t counter = 0;
    emit(t, counter, nodes, edges);
    return "digraph " + quoted(graph_name) + " {\n" + nodes.str() + edges.str() + "}\n";
}

}  // namespace pars::io
