#include <gvm/construct.hh>
#include <gvm/errors.hh>
#include <gvm/generators.hh>

#include <stdexcept>

using std::optional;
using std::vector;

namespace gvm {

namespace {

auto first_nonzero(const GroupSpec & spec, const std::function<bool(const GroupElement &)> & extra)
    -> optional<GroupElement>
{
    return first_canonical(spec, [&](const GroupElement & x) { return ! is_zero(x) && extra(x); });
}

auto require_large_group(const GroupSpec & spec, const char * what)
{
    auto size = spec.order();
    if (size && *size <= 2)
        throw PreconditionError(std::string(what) + " needs a group of order > 2, got " + format_spec(spec));
}

auto resolve(const GroupSpec & spec, const optional<GroupElement> & given,
    const std::function<bool(const GroupElement &)> & ok, const char * name) -> GroupElement
{
    if (given) {
        if (! conforms(spec, *given))
            throw ConformanceError(std::string(name) + " does not belong to " + format_spec(spec));
        if (is_zero(*given) || ! ok(*given))
            throw PreconditionError(std::string(name) + " = " + format_element(*given)
                + " violates the side condition of the split");
        return *given;
    }
    auto found = first_nonzero(spec, ok);
    if (! found)
        throw PreconditionError(std::string("no admissible ") + name + " in " + format_spec(spec));
    return *found;
}

auto make_certificate(const Graph & g, Labeling l) -> MagicCertificate
{
    auto verdict = verify_magic(g, l);
    if (auto * c = std::get_if<MagicCertificate>(&verdict))
        return *c;
    throw std::logic_error("constructed labeling failed verification: "
        + std::get<Refutation>(verdict).describe());
}

auto is_pendant(const Graph & g, Vertex v) { return g.degree(v) == 1; }

}

auto sum_split(const SplitRequest & request, const SplitChoice & choice) -> vector<GroupElement>
{
    auto & spec = request.spec;
    auto & target = request.target;
    int n = request.n;
    if (! conforms(spec, target))
        throw ConformanceError("split target does not belong to " + format_spec(spec));
    if (n < 1)
        throw PreconditionError("cannot split into " + std::to_string(n) + " summands");

    auto any = [](const GroupElement &) { return true; };
    vector<GroupElement> out;
    if (is_zero(target)) {
        if (n == 1)
            throw PreconditionError("zero cannot be written as one nonzero summand");
        auto b = resolve(spec, choice.b, any, "b");
        auto minus_b = neg(spec, b);
        if (n % 2 == 0) {
            for (int i = 1; i <= n; ++i)
                out.push_back(i % 2 ? b : minus_b);
            return out;
        }
        auto c = resolve(spec, choice.c, [&](const GroupElement & x) { return ! is_zero(add(spec, b, x)); }, "c");
        out.push_back(add(spec, b, c));
        out.push_back(neg(spec, c));
        for (int i = 3; i <= n; ++i)
            out.push_back(i % 2 ? minus_b : b);
        return out;
    }

    auto minus_a = neg(spec, target);
    if (n % 2 == 1) {
        for (int i = 1; i <= n; ++i)
            out.push_back(i % 2 ? target : minus_a);
        return out;
    }
    auto b = resolve(spec, choice.b, [&](const GroupElement & x) { return ! is_zero(add(spec, target, x)); }, "b");
    out.push_back(add(spec, target, b));
    out.push_back(neg(spec, b));
    for (int i = 3; i <= n; ++i)
        out.push_back(i % 2 ? minus_a : target);
    return out;
}

auto lift_labeling(const Graph & g, const ReducedGraph & r, const QuotientCertificate & certificate)
    -> MagicCertificate
{
    auto & spec = certificate.labeling.spec;
    if (static_cast<int>(r.class_of.size()) != g.order() || reduce(g).classes != r.classes)
        throw PreconditionError("reduced graph does not belong to this graph");
    auto verdict = verify_a_prime(r, certificate.labeling);
    auto * checked = std::get_if<QuotientCertificate>(&verdict);
    if (! checked || checked->mu != certificate.mu)
        throw PreconditionError("quotient labeling is not a verified A' labeling");

    Labeling l{spec, vector<GroupElement>(g.order())};
    for (int c = 0; c < r.class_count(); ++c) {
        auto & members = r.classes[c];
        auto & label = certificate.labeling.values[c];
        if (members.size() == 1) {
            l.values[members[0]] = label;
            continue;
        }
        require_large_group(spec, "lifting");
        auto parts = sum_split({label, static_cast<int>(members.size()), spec});
        for (std::size_t i = 0; i < members.size(); ++i)
            l.values[members[i]] = parts[i];
    }
    auto result = make_certificate(g, std::move(l));
    if (result.mu != certificate.mu)
        throw std::logic_error("lifted labeling changed the magic constant");
    return result;
}

auto zero_sum_block(const GroupSpec & spec, int size, const BlockChoice & choice) -> vector<GroupElement>
{
    if (size < 2)
        throw PreconditionError("zero-sum blocks need at least two vertices, got " + std::to_string(size));
    return sum_split({zero(spec), size, spec}, {choice.a, choice.b});
}

auto label_h_join_empty(const Graph & h, const vector<int> & sizes, const GroupSpec & spec,
    const BlockChoice & choice) -> MagicCertificate
{
    require_large_group(spec, "the H-join labeling");
    if (static_cast<int>(sizes.size()) != h.order())
        throw PreconditionError("need one block size per vertex of H");
    vector<Graph> parts;
    Labeling l{spec, {}};
    for (auto s : sizes) {
        auto block = zero_sum_block(spec, s, choice);
        l.values.insert(l.values.end(), block.begin(), block.end());
        parts.push_back(gen_empty(s));
    }
    return make_certificate(h_join(h, parts), std::move(l));
}

auto label_twin_classes(const Graph & g, const GroupSpec & spec, const BlockChoice & choice) -> MagicCertificate
{
    require_large_group(spec, "the zero-sum class labeling");
    auto r = reduce(g);
    Labeling l{spec, vector<GroupElement>(g.order())};
    for (int c = 0; c < r.class_count(); ++c) {
        if (r.class_size(c) < 2)
            throw PreconditionError("vertex " + std::to_string(r.classes[c][0]) + " has no twin");
        auto block = zero_sum_block(spec, r.class_size(c), choice);
        for (int i = 0; i < r.class_size(c); ++i)
            l.values[r.classes[c][i]] = block[i];
    }
    return make_certificate(g, std::move(l));
}

auto pendant_class_labeling(const Graph & g, const ReducedGraph & r, const GroupSpec & spec, const GroupElement & a)
    -> Labeling
{
    Labeling l{spec, {}};
    for (int c = 0; c < r.class_count(); ++c) {
        auto v = r.classes[c][0];
        if (! is_pendant(g, v)) {
            l.values.push_back(a);
            continue;
        }
        auto support = r.class_of[g.neighbours(v)[0]];
        l.values.push_back(scalar_mul(spec, 2 - r.quotient.degree(support), a));
    }
    return l;
}

auto label_strong_support(const Graph & g, const GroupSpec & spec, optional<GroupElement> a) -> MagicCertificate
{
    require_large_group(spec, "the strong support labeling");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (is_pendant(g, v))
            continue;
        int pendants = 0;
        for (auto u : g.neighbours(v))
            pendants += is_pendant(g, u);
        if (pendants < 2)
            throw PreconditionError("vertex " + std::to_string(v) + " is not a strong support vertex");
    }
    auto label = resolve(spec, a, [](const GroupElement &) { return true; }, "a");
    auto r = reduce(g);
    auto verdict = verify_a_prime(r, pendant_class_labeling(g, r, spec, label));
    auto * q = std::get_if<QuotientCertificate>(&verdict);
    if (! q)
        throw std::logic_error("pendant class labeling failed: " + std::get<Refutation>(verdict).describe());
    return lift_labeling(g, r, *q);
}

auto is_caterpillar(const Graph & t) -> bool
{
    int n = t.order();
    if (n == 0 || ! t.connected() || t.size() != static_cast<std::size_t>(n - 1))
        return false;
    for (Vertex v = 0; v < n; ++v) {
        if (t.degree(v) <= 1)
            continue;
        int spine_neighbours = 0;
        for (auto u : t.neighbours(v))
            spine_neighbours += t.degree(u) > 1;
        if (spine_neighbours > 2)
            return false;
    }
    return true;
}

auto classify_caterpillar(const Graph & t, const optional<GroupSpec> & spec) -> CaterpillarVerdict
{
    if (! is_caterpillar(t))
        throw PreconditionError("graph is not a caterpillar");
    CaterpillarVerdict verdict;
    if (t.order() >= 4)
        for (Vertex v = 0; v < t.order(); ++v)
            if (t.degree(v) == 2) {
                verdict.witness = v;
                return verdict;
            }
    verdict.magic = true;
    if (spec) {
        require_large_group(*spec, "the caterpillar labeling");
        auto a = *first_nonzero(*spec, [](const GroupElement &) { return true; });
        auto r = reduce(t);
        auto q = verify_a_prime(r, pendant_class_labeling(t, r, *spec, a));
        if (! std::holds_alternative<QuotientCertificate>(q))
            throw std::logic_error("pendant class labeling failed: " + std::get<Refutation>(q).describe());
        verdict.certificate = lift_labeling(t, r, std::get<QuotientCertificate>(q));
    }
    return verdict;
}

auto embed_as_induced(const Graph & h, const GroupSpec & spec) -> Embedding
{
    require_large_group(spec, "embedding");
    int n = h.order();
    for (Vertex v = 0; v < n; ++v)
        if (h.degree(v) == 0)
            throw PreconditionError("vertex " + std::to_string(v) + " is isolated; only graphs without isolated vertices embed");

    auto r = reduce(h);
    vector<Vertex> twin(n, -1);
    int next = n;
    for (auto & members : r.classes)
        if (members.size() == 1)
            twin[members[0]] = next++;
    auto edges = h.edges();
    for (auto [u, v] : h.edges()) {
        if (twin[u] >= 0)
            edges.emplace_back(twin[u], v);
        if (twin[v] >= 0)
            edges.emplace_back(u, twin[v]);
        if (twin[u] >= 0 && twin[v] >= 0)
            edges.emplace_back(twin[u], twin[v]);
    }
    auto g = Graph::from_edges(next, edges);
    Embedding e{g, label_twin_classes(g, spec), {}};
    for (Vertex v = 0; v < n; ++v)
        e.injection.emplace_back(v, v);
    return e;
}

auto extend_class(const Graph & g, const MagicCertificate & certificate, int class_index) -> Extension
{
    auto & spec = certificate.labeling.spec;
    require_large_group(spec, "extension");
    auto verdict = verify_magic(g, certificate.labeling);
    auto * checked = std::get_if<MagicCertificate>(&verdict);
    if (! checked || checked->mu != certificate.mu)
        throw PreconditionError("certificate to extend does not verify on this graph");

    auto r = reduce(g);
    if (class_index < 0 || class_index >= r.class_count())
        throw PreconditionError("class " + std::to_string(class_index) + " does not exist; the graph has "
            + std::to_string(r.class_count()) + " classes");

    auto & members = r.classes[class_index];
    Vertex x = g.order();
    auto edges = g.edges();
    for (auto u : g.neighbours(members[0]))
        edges.emplace_back(u, x);

    auto sum = zero(spec);
    for (auto v : members)
        sum = add(spec, sum, certificate.labeling.values[v]);
    auto parts = sum_split({sum, static_cast<int>(members.size()) + 1, spec});

    Labeling l = certificate.labeling;
    for (std::size_t i = 0; i < members.size(); ++i)
        l.values[members[i]] = parts[i];
    l.values.push_back(parts.back());

    auto extended = Graph::from_edges(x + 1, edges);
    auto result = make_certificate(extended, std::move(l));
    if (result.mu != certificate.mu)
        throw std::logic_error("extension changed the magic constant");
    return Extension{std::move(extended), std::move(result), x};
}

}
