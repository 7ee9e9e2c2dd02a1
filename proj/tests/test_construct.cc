#include <gvm/construct.hh>
#include <gvm/errors.hh>
#include <gvm/generators.hh>
#include <gvm/search.hh>

#include "support/oracle.hh"

#include <doctest.h>

#include <random>

using namespace gvm;
using std::int64_t;
using std::vector;

namespace {

auto values(const vector<GroupElement> & xs)
{
    vector<int64_t> out;
    for (auto & x : xs)
        out.push_back(x.components.at(0));
    return out;
}

auto cyclic(const GroupSpec & spec, vector<int64_t> labels)
{
    Labeling l{spec, {}};
    for (auto v : labels)
        l.values.push_back(make_element(spec, {v}));
    return l;
}

auto oracle_verifies(const Graph & g, const MagicCertificate & c)
{
    vector<oracle::Element> labels;
    for (auto & x : c.labeling.values)
        labels.push_back(x.components);
    return oracle::is_magic(g, c.labeling.spec.moduli(), labels)
        && (g.order() == 0 || oracle::weights(g, c.labeling.spec.moduli(), labels)[0] == c.mu.components);
}

auto is_induced_copy(const Graph & h, const Graph & g, const vector<std::pair<Vertex, Vertex>> & injection)
{
    for (auto [u, gu] : injection)
        for (auto [v, gv] : injection)
            if (u != v && h.adjacent(u, v) != g.adjacent(gu, gv))
                return false;
    return true;
}

}

TEST_CASE("sum splitting patterns")
{
    auto z5 = parse_spec("Z5");
    auto el = [&](int64_t v) { return make_element(z5, {v}); };
    CHECK(values(sum_split({el(0), 2, z5})) == vector<int64_t>{1, 4});
    CHECK(values(sum_split({el(0), 3, z5}, {el(1), el(2)})) == vector<int64_t>{3, 3, 4});
    CHECK(values(sum_split({el(0), 3, z5})) == vector<int64_t>{2, 4, 4});
    CHECK(values(sum_split({el(2), 3, z5})) == vector<int64_t>{2, 3, 2});
    CHECK(values(sum_split({el(2), 4, z5})) == vector<int64_t>{3, 4, 3, 2});
    CHECK(values(sum_split({el(2), 1, z5})) == vector<int64_t>{2});
    CHECK_THROWS_AS(sum_split({el(0), 1, z5}), PreconditionError);
    CHECK_THROWS_AS(sum_split({el(0), 3, z5}, {el(1), el(4)}), PreconditionError);
    CHECK_THROWS_AS(sum_split({el(2), 2, z5}, {el(3), {}}), PreconditionError);

    auto z2 = parse_spec("Z2");
    auto one = make_element(z2, {1});
    CHECK_THROWS_AS(sum_split({zero(z2), 3, z2}), PreconditionError);
    CHECK_THROWS_AS(sum_split({one, 2, z2}), PreconditionError);
    CHECK(values(sum_split({one, 3, z2})) == vector<int64_t>{1, 1, 1});
}

TEST_CASE("sum splitting over every small group")
{
    vector<const char *> specs = {"Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12", "Z13", "Z16", "Z25",
        "Z2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ6", "Z2xZ2xZ2", "Z5xZ5", "Z4xZ4", "Z2xZ2xZ4", "Z3xZ6", "Z2xZ12", "Z"};
    for (auto text : specs) {
        auto spec = parse_spec(text);
        vector<GroupElement> targets;
        if (spec.is_finite())
            targets = enumerate_elements(spec, true);
        else
            for (int64_t k = -4; k <= 4; ++k)
                targets.push_back(make_element(spec, {k}));
        for (auto & target : targets)
            for (int n = 1; n <= 6; ++n) {
                if (n == 1 && is_zero(target))
                    continue;
                auto parts = sum_split({target, n, spec});
                REQUIRE(static_cast<int>(parts.size()) == n);
                auto sum = zero(spec);
                for (auto & x : parts) {
                    CHECK_FALSE(is_zero(x));
                    sum = add(spec, sum, x);
                }
                CHECK_MESSAGE(sum == target, text << " n=" << n);
            }
    }
}

TEST_CASE("lifting quotient labelings")
{
    auto z5 = parse_spec("Z5");
    auto star = gen_complete_multipartite({1, 3});
    auto r = reduce(star);
    auto q = std::get<QuotientCertificate>(verify_a_prime(r, cyclic(z5, {1, 1})));
    auto c = lift_labeling(star, r, q);
    CHECK(values(c.labeling.values) == vector<int64_t>{1, 1, 4, 1});
    CHECK(c.mu == make_element(z5, {1}));

    auto z3 = parse_spec("Z3");
    auto k23 = gen_complete_multipartite({2, 3});
    auto r23 = reduce(k23);
    auto q23 = std::get<QuotientCertificate>(verify_a_prime(r23, cyclic(z3, {1, 1})));
    CHECK(lift_labeling(k23, r23, q23).mu == make_element(z3, {1}));

    CHECK(std::holds_alternative<Exhausted>(brute_force_a_prime(reduce(gen_path(4)), z3)));

    QuotientCertificate forged{cyclic(z5, {1, 2}), make_element(z5, {1})};
    CHECK_THROWS_AS(lift_labeling(star, r, forged), PreconditionError);
    CHECK_THROWS_AS(lift_labeling(gen_path(4), r, q), PreconditionError);
}

TEST_CASE("lifted weights equal quotient weights class by class")
{
    std::mt19937 rng(41);
    int lifted = 0;
    for (int t = 0; t < 200; ++t) {
        auto g = oracle::random_connected_graph(rng, 2 + t % 8, t % 2 ? 0.25 : 0.5);
        auto r = reduce(g);
        for (auto text : {"Z3", "Z4", "Z5", "Z2xZ2"}) {
            auto spec = parse_spec(text);
            auto found = brute_force_a_prime(r, spec);
            auto * q = std::get_if<QuotientCertificate>(&found);
            if (! q)
                continue;
            auto c = lift_labeling(g, r, *q);
            ++lifted;
            CHECK(oracle_verifies(g, c));
            CHECK(c.mu == q->mu);
            auto wg = weights(g, c.labeling);
            auto wh = weights(r.quotient, q->labeling);
            for (Vertex v = 0; v < g.order(); ++v)
                CHECK(wg[v] == wh[r.class_of[v]]);
        }
    }
    CHECK(lifted > 100);
}

TEST_CASE("H-join of empty graphs")
{
    auto z3 = parse_spec("Z3"), z5 = parse_spec("Z5");
    auto c = label_h_join_empty(gen_complete(2), {2, 2}, z3);
    CHECK(values(c.labeling.values) == vector<int64_t>{1, 2, 1, 2});
    CHECK(is_zero(c.mu));

    auto el = [&](int64_t v) { return make_element(z5, {v}); };
    auto odd = label_h_join_empty(gen_complete(2), {3, 2}, z5, {el(1), el(2)});
    CHECK(values(odd.labeling.values) == vector<int64_t>{3, 3, 4, 1, 4});
    CHECK(is_zero(odd.mu));

    CHECK_THROWS_AS(label_h_join_empty(gen_complete(2), {1, 2}, z5), PreconditionError);
    CHECK_THROWS_AS(label_h_join_empty(gen_complete(2), {2, 2}, parse_spec("Z2")), PreconditionError);
    CHECK_THROWS_AS(label_h_join_empty(gen_complete(2), {2}, z5), PreconditionError);

    std::mt19937 rng(43);
    vector<const char *> specs = {"Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z2xZ2", "Z3xZ3", "Z2xZ4", "Z"};
    for (int t = 0; t < 60; ++t) {
        auto h = oracle::random_connected_graph(rng, 1 + t % 6, 0.4);
        vector<int> sizes;
        for (int i = 0; i < h.order(); ++i)
            sizes.push_back(2 + static_cast<int>(rng() % 4));
        auto spec = parse_spec(specs[t % specs.size()]);
        auto cert = label_h_join_empty(h, sizes, spec);
        vector<Graph> parts;
        for (auto s : sizes)
            parts.push_back(gen_empty(s));
        auto g = h_join(h, parts);
        if (spec.is_finite())
            CHECK(oracle_verifies(g, cert));
        CHECK(is_zero(cert.mu));
        std::size_t at = 0;
        for (auto s : sizes) {
            auto sum = zero(spec);
            for (int i = 0; i < s; ++i)
                sum = add(spec, sum, cert.labeling.values[at++]);
            CHECK(is_zero(sum));
        }
    }
}

TEST_CASE("strong support vertices")
{
    auto z5 = parse_spec("Z5");
    auto s22 = gen_caterpillar({2, 2});
    auto c = label_strong_support(s22, z5);
    CHECK(c.mu == make_element(z5, {1}));
    CHECK(values(vector<GroupElement>(c.labeling.values.begin(), c.labeling.values.begin() + 2))
        == vector<int64_t>{1, 1});
    CHECK(oracle_verifies(s22, c));

    auto star = gen_complete_multipartite({1, 3});
    auto cs = label_strong_support(star, z5);
    CHECK(cs.mu == make_element(z5, {1}));

    CHECK_THROWS_WITH_AS(label_strong_support(gen_caterpillar({2, 1, 2}), z5), "vertex 1 is not a strong support vertex",
        PreconditionError);
    CHECK_THROWS_AS(label_strong_support(s22, parse_spec("Z2")), PreconditionError);

    // Pendant classes: 0 under spine ends, -a under inner spine vertices.
    auto fig = gen_caterpillar({2, 2, 2, 2});
    auto r = reduce(fig);
    auto a = make_element(z5, {1});
    auto l = pendant_class_labeling(fig, r, z5, a);
    for (int cls = 0; cls < r.class_count(); ++cls) {
        auto v = r.classes[cls][0];
        int64_t expected = v < 4 ? 1 : (fig.neighbours(v)[0] == 0 || fig.neighbours(v)[0] == 3) ? 0 : 4;
        CHECK(l.values[cls] == make_element(z5, {expected}));
    }
    CHECK(std::holds_alternative<QuotientCertificate>(verify_a_prime(r, l)));

    std::mt19937 rng(47);
    for (int t = 0; t < 30; ++t) {
        int core_n = 1 + t % 5;
        auto core = oracle::random_connected_graph(rng, core_n, 0.4);
        auto edges = core.edges();
        int next = core_n;
        for (Vertex v = 0; v < core_n; ++v)
            for (int k = 2 + static_cast<int>(rng() % 3); k > 0; --k)
                edges.emplace_back(v, next++);
        auto g = Graph::from_edges(next, edges);
        for (auto text : {"Z3", "Z4", "Z7", "Z3xZ3"}) {
            auto spec = parse_spec(text);
            auto cert = label_strong_support(g, spec);
            CHECK(oracle_verifies(g, cert));
            CHECK(cert.mu == *first_canonical(spec, [](auto & x) { return ! is_zero(x); }));
        }
    }
}

TEST_CASE("caterpillar classification")
{
    CHECK(is_caterpillar(gen_path(6)));
    CHECK_FALSE(is_caterpillar(gen_cycle(4)));
    auto spider = Graph::from_edges(7, vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK_FALSE(is_caterpillar(spider));
    CHECK_THROWS_AS(classify_caterpillar(spider), PreconditionError);

    auto p4 = classify_caterpillar(gen_path(4));
    CHECK_FALSE(p4.magic);
    REQUIRE(p4.witness);
    CHECK((*p4.witness == 1 || *p4.witness == 2));
    CHECK(classify_caterpillar(gen_caterpillar({2, 2})).magic);
    CHECK_FALSE(classify_caterpillar(gen_caterpillar({2, 0, 2})).magic);
    CHECK(*classify_caterpillar(gen_caterpillar({2, 0, 2})).witness == 1);
    CHECK(classify_caterpillar(gen_path(3)).magic);

    auto z5 = parse_spec("Z5");
    auto with = classify_caterpillar(gen_caterpillar({3, 1, 2}), z5);
    REQUIRE(with.certificate);
    CHECK(oracle_verifies(gen_caterpillar({3, 1, 2}), *with.certificate));
}

TEST_CASE("caterpillars agree with brute force")
{
    // All pendant vectors with at most 8 vertices in total.
    vector<vector<int>> shapes;
    for (int spine = 1; spine <= 8; ++spine) {
        vector<int> p(spine, 0);
        while (true) {
            int total = spine;
            for (auto x : p)
                total += x;
            if (total <= 8)
                shapes.push_back(p);
            int i = 0;
            while (i < spine && ++p[i] + spine > 8)
                p[i++] = 0;
            if (i == spine)
                break;
        }
    }
    CHECK(shapes.size() > 100);
    for (auto & shape : shapes) {
        auto t = gen_caterpillar(shape);
        auto verdict = classify_caterpillar(t);
        for (auto text : {"Z3", "Z5"}) {
            auto spec = parse_spec(text);
            bool magic = std::holds_alternative<MagicCertificate>(brute_force_magic(t, spec));
            CHECK_MESSAGE(magic == verdict.magic, write_graph(t) << text);
            if (verdict.magic)
                CHECK(oracle_verifies(t, *classify_caterpillar(t, spec).certificate));
        }
    }
}

TEST_CASE("embedding as an induced subgraph")
{
    auto z3 = parse_spec("Z3");
    auto p4 = embed_as_induced(gen_path(4), z3);
    CHECK(p4.graph.order() == 8);
    CHECK(is_zero(p4.certificate.mu));
    CHECK(is_induced_copy(gen_path(4), p4.graph, p4.injection));
    CHECK(reduce(p4.graph).class_sizes() == vector<int>{2, 2, 2, 2});

    auto k22 = gen_complete_multipartite({2, 2});
    CHECK(embed_as_induced(k22, z3).graph == k22);
    CHECK_THROWS_AS(embed_as_induced(gen_complete(1), z3), PreconditionError);

    std::mt19937 rng(53);
    for (int t = 0; t < 80; ++t) {
        auto h = oracle::random_connected_graph(rng, 2 + t % 7, 0.35);
        auto spec = parse_spec(t % 2 ? "Z5" : "Z2xZ2");
        auto e = embed_as_induced(h, spec);
        CHECK(e.graph.order() <= 2 * h.order());
        CHECK(is_induced_copy(h, e.graph, e.injection));
        CHECK(oracle_verifies(e.graph, e.certificate));
        for (auto s : reduce(e.graph).class_sizes())
            CHECK(s >= 2);
    }
}

TEST_CASE("one-vertex extension")
{
    auto z3 = parse_spec("Z3");
    auto k22 = gen_complete_multipartite({2, 2});
    auto start = label_h_join_empty(gen_complete(2), {2, 2}, z3);
    auto e = extend_class(k22, start, 1);
    CHECK(reduce(e.graph).class_sizes() == vector<int>{2, 3});
    CHECK(e.new_vertex == 4);
    CHECK(e.certificate.mu == start.mu);
    CHECK(oracle_verifies(e.graph, e.certificate));

    auto k3 = gen_complete(3);
    auto all_a = std::get<MagicCertificate>(verify_magic(k3, cyclic(z3, {1, 1, 1})));
    auto e3 = extend_class(k3, all_a, 0);
    CHECK(e3.graph.order() == 4);
    CHECK(oracle_verifies(e3.graph, e3.certificate));
    CHECK(e3.certificate.labeling.values[1] == all_a.labeling.values[1]);

    MagicCertificate forged{cyclic(z3, {1, 1, 2}), make_element(z3, {2})};
    CHECK_THROWS_AS(extend_class(k3, forged, 0), PreconditionError);
    CHECK_THROWS_AS(extend_class(k3, all_a, 3), PreconditionError);

    std::mt19937 rng(59);
    auto g = k22;
    auto c = start;
    for (int step = 0; step < 5; ++step) {
        auto r = reduce(g);
        int cls = static_cast<int>(rng() % r.class_count());
        auto next = extend_class(g, c, cls);
        CHECK(next.certificate.mu == c.mu);
        CHECK(oracle_verifies(next.graph, next.certificate));
        for (Vertex v = 0; v < g.order(); ++v)
            if (r.class_of[v] != cls)
                CHECK(next.certificate.labeling.values[v] == c.labeling.values[v]);
        g = next.graph;
        c = next.certificate;
    }
}
