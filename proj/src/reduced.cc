#include <gvm/generators.hh>
#include <gvm/reduced.hh>

#include <algorithm>
#include <numeric>

using std::vector;

namespace gvm {

auto ReducedGraph::class_sizes() const -> vector<int>
{
    vector<int> sizes;
    for (auto & c : classes)
        sizes.push_back(static_cast<int>(c.size()));
    return sizes;
}

auto reduce(const Graph & g) -> ReducedGraph
{
    int n = g.order();

    // Sort vertices by neighbour list (ties by id), so twins become runs.
    vector<Vertex> by_key(n);
    std::iota(by_key.begin(), by_key.end(), 0);
    std::stable_sort(by_key.begin(), by_key.end(), [&](Vertex a, Vertex b) {
        auto na = g.neighbours(a), nb = g.neighbours(b);
        return std::lexicographical_compare(na.begin(), na.end(), nb.begin(), nb.end());
    });

    vector<vector<Vertex>> runs;
    for (int i = 0; i < n; ++i) {
        auto v = by_key[i];
        if (i > 0) {
            auto prev = g.neighbours(by_key[i - 1]), cur = g.neighbours(v);
            if (std::equal(prev.begin(), prev.end(), cur.begin(), cur.end())) {
                runs.back().push_back(v);
                continue;
            }
        }
        runs.push_back({v});
    }
    // Runs are already internally sorted (stable sort on ids); order runs by their first vertex.
    std::sort(runs.begin(), runs.end(), [](auto & a, auto & b) { return a.front() < b.front(); });

    ReducedGraph r;
    r.classes = std::move(runs);
    r.class_of.assign(n, -1);
    for (int c = 0; c < r.class_count(); ++c)
        for (auto v : r.classes[c])
            r.class_of[v] = c;

    vector<Edge> quotient_edges;
    for (int c = 0; c < r.class_count(); ++c)
        for (auto u : g.neighbours(r.classes[c].front())) {
            auto d = r.class_of[u];
            if (c < d && r.classes[d].front() == u)
                quotient_edges.emplace_back(c, d);
        }
    r.quotient = Graph::from_edges(r.class_count(), quotient_edges);
    return r;
}

auto blow_up(const ReducedGraph & r) -> Graph
{
    vector<Graph> parts;
    for (auto & c : r.classes)
        parts.push_back(gen_empty(static_cast<int>(c.size())));
    return h_join(r.quotient, parts);
}

auto write_reduced(const ReducedGraph & r) -> std::string
{
    auto out = write_graph(r.quotient);
    for (int c = 0; c < r.class_count(); ++c) {
        out += "class " + std::to_string(c) + ":";
        for (auto v : r.classes[c])
            out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

}
