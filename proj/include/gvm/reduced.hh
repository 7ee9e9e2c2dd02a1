#pragma once

#include <gvm/graph.hh>

#include <string>
#include <vector>

namespace gvm {

/// Partition of V(G) by open-neighbourhood equality, and the quotient on it.
///
/// Two vertices share a class iff N(u) = N(v); classes are therefore
/// independent sets, and adjacent twins are never merged. Classes are ordered
/// by their smallest vertex and list their members in increasing order. Class
/// i is adjacent to class j in the quotient iff some (equivalently every)
/// member of i is adjacent to some member of j.
struct ReducedGraph {
    std::vector<std::vector<Vertex>> classes;
    std::vector<int> class_of;
    Graph quotient;

    auto class_count() const -> int { return static_cast<int>(classes.size()); }
    auto class_size(int i) const -> int { return static_cast<int>(classes[i].size()); }
    auto class_sizes() const -> std::vector<int>;
};

auto reduce(const Graph & g) -> ReducedGraph;

/// quotient[empty(m_1), ..., empty(m_k)]; isomorphic to the graph that was reduced.
auto blow_up(const ReducedGraph & r) -> Graph;

/// Quotient in graph file format followed by "class <i>: v..." lines.
auto write_reduced(const ReducedGraph & r) -> std::string;

}
