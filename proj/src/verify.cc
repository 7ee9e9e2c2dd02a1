#include <gvm/errors.hh>
#include <gvm/verify.hh>

#include <map>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace gvm {

namespace {
    auto check_conformance(const Labeling & l) -> void
    {
        for (std::size_t v = 0; v < l.values.size(); ++v)
            if (! conforms(l.spec, l.values[v]))
                throw ConformanceError("label of vertex " + std::to_string(v) + " does not conform to "
                    + format_spec(l.spec));
    }

    auto first_mismatch(const vector<GroupElement> & w) -> std::optional<Refutation>
    {
        for (std::size_t v = 1; v < w.size(); ++v)
            if (w[v] != w[0])
                return Refutation{Refutation::Reason::weight_mismatch, 0, static_cast<Vertex>(v), w[0], w[v]};
        return std::nullopt;
    }
}

auto Refutation::describe() const -> string
{
    switch (reason) {
    case Reason::size_mismatch:
        return "labeling size does not match the graph";
    case Reason::zero_label:
        return "vertex " + std::to_string(vertex) + " has label 0";
    case Reason::zero_on_singleton_class:
        return "class " + std::to_string(vertex) + " has size 1 but label 0";
    case Reason::weight_mismatch:
        return "w(" + std::to_string(vertex) + ")=" + format_element(*weight) + " != w(" + std::to_string(other)
            + ")=" + format_element(*other_weight);
    }
    return "unknown refutation";
}

auto weights(const Graph & g, const Labeling & l) -> vector<GroupElement>
{
    if (static_cast<int>(l.values.size()) != g.order())
        throw ConformanceError("labeling has " + std::to_string(l.values.size()) + " labels for "
            + std::to_string(g.order()) + " vertices");
    check_conformance(l);
    vector<GroupElement> w(g.order(), zero(l.spec));
    for (Vertex v = 0; v < g.order(); ++v)
        for (auto u : g.neighbours(v))
            w[v] = add(l.spec, w[v], l.values[u]);
    return w;
}

auto verify_magic(const Graph & g, const Labeling & l) -> MagicVerdict
{
    if (static_cast<int>(l.values.size()) != g.order())
        return Refutation{Refutation::Reason::size_mismatch};
    check_conformance(l);
    for (Vertex v = 0; v < g.order(); ++v)
        if (is_zero(l.values[v]))
            return Refutation{Refutation::Reason::zero_label, v};
    auto w = weights(g, l);
    if (auto bad = first_mismatch(w))
        return *bad;
    return MagicCertificate{l, w.empty() ? zero(l.spec) : w[0]};
}

auto verify_a_prime(const ReducedGraph & r, const Labeling & l) -> QuotientVerdict
{
    if (static_cast<int>(l.values.size()) != r.class_count())
        return Refutation{Refutation::Reason::size_mismatch};
    check_conformance(l);
    for (int c = 0; c < r.class_count(); ++c)
        if (is_zero(l.values[c]) && r.class_size(c) < 2)
            return Refutation{Refutation::Reason::zero_on_singleton_class, c};
    auto w = weights(r.quotient, l);
    if (auto bad = first_mismatch(w))
        return *bad;
    return QuotientCertificate{l, w.empty() ? zero(l.spec) : w[0]};
}

auto write_labeling(const Labeling & l) -> string
{
    string out;
    for (std::size_t v = 0; v < l.values.size(); ++v)
        out += std::to_string(v) + " " + format_element(l.values[v]) + "\n";
    return out;
}

auto write_certificate(const MagicCertificate & c) -> string
{
    return write_labeling(c.labeling) + "mu " + format_element(c.mu) + "\n";
}

auto read_labeling(const GroupSpec & spec, string_view text) -> ParsedLabeling
{
    std::istringstream in{string(text)};
    std::map<long long, GroupElement> by_vertex;
    std::optional<GroupElement> mu;
    string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields{line};
        string head, body, extra;
        if (! (fields >> head))
            continue;
        if (! (fields >> body) || (fields >> extra))
            throw ParseError("labeling line " + std::to_string(line_no) + " must be '<vertex> <components>'");
        if (head == "mu") {
            mu = parse_element(spec, body);
            continue;
        }
        long long v = 0;
        std::size_t used = 0;
        try {
            v = std::stoll(head, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != head.size() || v < 0)
            throw ParseError("labeling line " + std::to_string(line_no) + ": bad vertex '" + head + "'");
        if (! by_vertex.emplace(v, parse_element(spec, body)).second)
            throw ParseError("vertex " + head + " labeled twice");
    }

    ParsedLabeling result{Labeling{spec, {}}, mu};
    long long expected = 0;
    for (auto & [v, x] : by_vertex) {
        if (v != expected)
            throw ParseError("labeling is missing vertex " + std::to_string(expected));
        result.labeling.values.push_back(x);
        ++expected;
    }
    return result;
}

}
