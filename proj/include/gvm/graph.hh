#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gvm {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted neighbour lists.
/// Immutable once built; from_edges rejects loops, duplicates and bad ids.
class Graph {
public:
    Graph() = default;

    static auto from_edges(int n, std::span<const Edge> edges) -> Graph;

    auto order() const -> int { return static_cast<int>(_adjacency.size()); }
    auto size() const -> std::size_t { return _edge_count; }
    auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adjacency[v]; }
    auto degree(Vertex v) const -> int { return static_cast<int>(_adjacency[v].size()); }
    auto adjacent(Vertex u, Vertex v) const -> bool;

    /// Edges as (u, v) with u < v, sorted.
    auto edges() const -> std::vector<Edge>;
    auto connected() const -> bool;

    /// Subgraph induced by the given vertices, renumbered in the order given.
    auto induced(std::span<const Vertex> vertices) const -> Graph;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    std::vector<std::vector<Vertex>> _adjacency;
    std::size_t _edge_count = 0;
};

/// Text format: "n e" then e lines "u v", newline terminated.
auto read_graph(std::string_view text) -> Graph;
auto write_graph(const Graph & g) -> std::string;

}
