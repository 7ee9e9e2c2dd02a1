#include <gvm/errors.hh>
#include <gvm/graph.hh>

#include <algorithm>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace gvm {

auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
{
    if (n < 0)
        throw ParseError("negative vertex count");
    Graph g;
    g._adjacency.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge " + std::to_string(u) + " " + std::to_string(v) + " has a vertex outside 0.."
                + std::to_string(n - 1));
        if (u == v)
            throw ParseError("self-loop at vertex " + std::to_string(u));
        g._adjacency[u].push_back(v);
        g._adjacency[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto & nbrs = g._adjacency[v];
        std::sort(nbrs.begin(), nbrs.end());
        auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
        if (dup != nbrs.end())
            throw ParseError("duplicate edge " + std::to_string(std::min(v, *dup)) + " "
                + std::to_string(std::max(v, *dup)));
    }
    g._edge_count = edges.size();
    return g;
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    auto & nbrs = _adjacency[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

auto Graph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    result.reserve(_edge_count);
    for (Vertex u = 0; u < order(); ++u)
        for (auto v : _adjacency[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Graph::connected() const -> bool
{
    if (order() == 0)
        return true;
    vector<char> seen(order(), 0);
    vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (! stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto v : _adjacency[u])
            if (! seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == order();
}

auto Graph::induced(std::span<const Vertex> vertices) const -> Graph
{
    vector<Edge> sub_edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                sub_edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return from_edges(static_cast<int>(vertices.size()), sub_edges);
}

auto read_graph(string_view text) -> Graph
{
    std::istringstream in{string(text)};
    long long n = 0, e = 0;
    if (! (in >> n >> e) || n < 0 || e < 0)
        throw ParseError("graph header must be 'n e' with non-negative integers");
    vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(e));
    for (long long i = 0; i < e; ++i) {
        long long u = 0, v = 0;
        if (! (in >> u >> v))
            throw ParseError("expected " + std::to_string(e) + " edges, found " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    string rest;
    if (in >> rest)
        throw ParseError("trailing data after " + std::to_string(e) + " edges");
    return Graph::from_edges(static_cast<int>(n), edges);
}

auto write_graph(const Graph & g) -> string
{
    string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}
