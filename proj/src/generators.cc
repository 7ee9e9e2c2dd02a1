#include <gvm/errors.hh>
#include <gvm/generators.hh>

#include <string>

using std::vector;

namespace gvm {

namespace {
    auto require_vertices(int n, const char * family) -> void
    {
        if (n < 1)
            throw PreconditionError(std::string(family) + " needs at least one vertex");
    }

    auto is_prime(int q) -> bool
    {
        if (q < 2)
            return false;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0)
                return false;
        return true;
    }
}

auto gen_path(int n) -> Graph
{
    require_vertices(n, "path");
    vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

auto gen_cycle(int n) -> Graph
{
    require_vertices(n, "cycle");
    if (n < 3)
        throw PreconditionError("a simple cycle needs at least 3 vertices");
    vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

auto gen_complete(int n) -> Graph
{
    require_vertices(n, "complete graph");
    vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

auto gen_empty(int n) -> Graph
{
    require_vertices(n, "empty graph");
    return Graph::from_edges(n, {});
}

auto gen_complete_multipartite(const vector<int> & part_sizes) -> Graph
{
    if (part_sizes.empty())
        throw PreconditionError("complete multipartite graph needs at least one part");
    vector<Graph> parts;
    for (auto s : part_sizes)
        parts.push_back(gen_empty(s));
    return h_join(gen_complete(static_cast<int>(part_sizes.size())), parts);
}

auto gen_friendship(FriendshipParams params) -> Graph
{
    if (params.n < 3)
        throw PreconditionError("friendship graph cycles need length n >= 3");
    if (params.m < 1)
        throw PreconditionError("friendship graph needs m >= 1 cycles");
    vector<Edge> edges;
    for (int i = 1; i <= params.m; ++i) {
        edges.emplace_back(0, params.arm_vertex(i, 1));
        for (int k = 1; k + 1 <= params.n - 1; ++k)
            edges.emplace_back(params.arm_vertex(i, k), params.arm_vertex(i, k + 1));
        edges.emplace_back(params.arm_vertex(i, params.n - 1), 0);
    }
    return Graph::from_edges(params.vertex_count(), edges);
}

auto gen_caterpillar(const vector<int> & pendants_per_spine_vertex) -> Graph
{
    int spine = static_cast<int>(pendants_per_spine_vertex.size());
    require_vertices(spine, "caterpillar spine");
    vector<Edge> edges;
    for (Vertex v = 0; v + 1 < spine; ++v)
        edges.emplace_back(v, v + 1);
    Vertex next = spine;
    for (Vertex s = 0; s < spine; ++s) {
        if (pendants_per_spine_vertex[s] < 0)
            throw PreconditionError("negative pendant count");
        for (int p = 0; p < pendants_per_spine_vertex[s]; ++p)
            edges.emplace_back(s, next++);
    }
    return Graph::from_edges(next, edges);
}

auto h_join(const Graph & h, const vector<Graph> & parts) -> Graph
{
    if (static_cast<int>(parts.size()) != h.order())
        throw PreconditionError("h_join needs one part per vertex of H: got " + std::to_string(parts.size())
            + " parts for " + std::to_string(h.order()) + " vertices");
    vector<Vertex> offset(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        offset[i + 1] = offset[i] + parts[i].order();

    vector<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto [u, v] : parts[i].edges())
            edges.emplace_back(offset[i] + u, offset[i] + v);
    for (auto [i, j] : h.edges())
        for (Vertex u = offset[i]; u < offset[i + 1]; ++u)
            for (Vertex v = offset[j]; v < offset[j + 1]; ++v)
                edges.emplace_back(u, v);
    return Graph::from_edges(offset.back(), edges);
}

namespace {
    struct SupportPatterns {
        Graph pattern_graph;
        vector<unsigned> masks;
    };

    auto support_patterns(const vector<int> & primes) -> SupportPatterns
    {
        if (primes.size() < 2)
            throw PreconditionError("a product of fewer than two fields has no zero divisors");
        if (primes.size() > 20)
            throw PreconditionError("too many fields");
        for (auto q : primes)
            if (! is_prime(q))
                throw PreconditionError(std::to_string(q) + " is not a prime");

        unsigned full = (1u << primes.size()) - 1;
        SupportPatterns result;
        for (unsigned mask = 1; mask < full; ++mask)
            result.masks.push_back(mask);
        vector<Edge> edges;
        for (std::size_t a = 0; a < result.masks.size(); ++a)
            for (std::size_t b = a + 1; b < result.masks.size(); ++b)
                if ((result.masks[a] & result.masks[b]) == 0)
                    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        result.pattern_graph = Graph::from_edges(static_cast<int>(result.masks.size()), edges);
        return result;
    }
}

auto gen_zero_divisor(const vector<int> & primes) -> Graph
{
    auto patterns = support_patterns(primes);
    vector<Graph> parts;
    for (auto mask : patterns.masks) {
        int size = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (1u << i))
                size *= primes[i] - 1;
        parts.push_back(gen_empty(size));
    }
    return h_join(patterns.pattern_graph, parts);
}

auto zero_divisor_tuples(const vector<int> & primes) -> vector<vector<int>>
{
    auto patterns = support_patterns(primes);
    vector<vector<int>> tuples;
    for (auto mask : patterns.masks) {
        vector<int> t(primes.size(), 0);
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (1u << i))
                t[i] = 1;
        while (true) {
            tuples.push_back(t);
            // odometer over the support coordinates, values 1..q-1
            std::size_t i = primes.size();
            while (i-- > 0) {
                if (! (mask & (1u << i)))
                    continue;
                if (++t[i] < primes[i])
                    break;
                t[i] = 1;
            }
            if (i == static_cast<std::size_t>(-1))
                break;
        }
    }
    return tuples;
}

}
