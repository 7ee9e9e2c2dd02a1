#include <gvm/abelian.hh>
#include <gvm/errors.hh>

#include <algorithm>
#include <charconv>
#include <numeric>

using std::int64_t;
using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace gvm {

namespace {
    auto reduce_mod(__int128 v, int64_t m) -> int64_t
    {
        auto r = v % m;
        if (r < 0)
            r += m;
        return static_cast<int64_t>(r);
    }

    auto checked(__int128 v) -> int64_t
    {
        if (v > INT64_MAX || v < INT64_MIN)
            throw DomainError("integer overflow in Z component");
        return static_cast<int64_t>(v);
    }

    auto require_conforms(const GroupSpec & spec, const GroupElement & x) -> void
    {
        if (! conforms(spec, x))
            throw ConformanceError("element " + format_element(x) + " does not conform to " + format_spec(spec));
    }

    auto parse_int(string_view s) -> optional<int64_t>
    {
        int64_t v = 0;
        auto first = s.data(), last = s.data() + s.size();
        if (first != last && *first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || first == last)
            return std::nullopt;
        return v;
    }

    auto trim(string_view s) -> string_view
    {
        while (! s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
            s.remove_prefix(1);
        while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
            s.remove_suffix(1);
        return s;
    }
}

GroupSpec::GroupSpec(vector<int64_t> moduli) :
    _moduli(std::move(moduli))
{
    if (_moduli.empty())
        throw ParseError("a group spec needs at least one factor");
    for (auto m : _moduli)
        if (m != infinite_modulus && m < 2)
            throw ParseError("cyclic factor Z" + std::to_string(m) + " is trivial or malformed");
}

auto GroupSpec::is_finite() const -> bool
{
    for (auto m : _moduli)
        if (m == infinite_modulus)
            return false;
    return true;
}

auto GroupSpec::order() const -> optional<int64_t>
{
    if (! is_finite())
        return std::nullopt;
    __int128 n = 1;
    for (auto m : _moduli) {
        n *= m;
        if (n > INT64_MAX)
            throw DomainError("group order overflows");
    }
    return static_cast<int64_t>(n);
}

auto parse_spec(string_view text) -> GroupSpec
{
    text = trim(text);
    if (text.empty())
        throw ParseError("empty group spec");

    vector<int64_t> moduli;
    std::size_t pos = 0;
    while (true) {
        auto end = text.find('x', pos);
        auto factor = text.substr(pos, end == string_view::npos ? string_view::npos : end - pos);
        if (factor.empty() || factor.front() != 'Z')
            throw ParseError("bad factor '" + string(factor) + "' in group spec '" + string(text) + "'");
        factor.remove_prefix(1);
        if (factor.empty())
            moduli.push_back(infinite_modulus);
        else {
            for (char c : factor)
                if (c < '0' || c > '9')
                    throw ParseError("bad modulus in group spec '" + string(text) + "'");
            auto m = parse_int(factor);
            if (! m || *m < 2)
                throw ParseError("factor Z" + string(factor) + " is trivial or malformed");
            moduli.push_back(*m);
        }
        if (end == string_view::npos)
            break;
        pos = end + 1;
    }
    return GroupSpec{std::move(moduli)};
}

auto format_spec(const GroupSpec & spec) -> string
{
    string out;
    for (std::size_t i = 0; i < spec.rank(); ++i) {
        if (i > 0)
            out += 'x';
        out += 'Z';
        if (spec.moduli()[i] != infinite_modulus)
            out += std::to_string(spec.moduli()[i]);
    }
    return out;
}

auto make_element(const GroupSpec & spec, vector<int64_t> components) -> GroupElement
{
    if (components.size() != spec.rank())
        throw ConformanceError("element has " + std::to_string(components.size()) + " components but "
            + format_spec(spec) + " has " + std::to_string(spec.rank()) + " factors");
    for (std::size_t i = 0; i < components.size(); ++i)
        if (spec.moduli()[i] != infinite_modulus)
            components[i] = reduce_mod(components[i], spec.moduli()[i]);
    return GroupElement{std::move(components)};
}

auto parse_element(const GroupSpec & spec, string_view text) -> GroupElement
{
    text = trim(text);
    vector<int64_t> components;
    std::size_t pos = 0;
    while (true) {
        auto end = text.find(',', pos);
        auto part = trim(text.substr(pos, end == string_view::npos ? string_view::npos : end - pos));
        auto v = parse_int(part);
        if (! v)
            throw ParseError("bad element component '" + string(part) + "'");
        components.push_back(*v);
        if (end == string_view::npos)
            break;
        pos = end + 1;
    }
    try {
        return make_element(spec, std::move(components));
    }
    catch (const ConformanceError & e) {
        throw ParseError(e.what());
    }
}

auto format_element(const GroupElement & x) -> string
{
    string out;
    for (std::size_t i = 0; i < x.components.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(x.components[i]);
    }
    return out;
}

auto conforms(const GroupSpec & spec, const GroupElement & x) -> bool
{
    if (x.components.size() != spec.rank())
        return false;
    for (std::size_t i = 0; i < spec.rank(); ++i) {
        auto m = spec.moduli()[i];
        if (m != infinite_modulus && (x.components[i] < 0 || x.components[i] >= m))
            return false;
    }
    return true;
}

auto zero(const GroupSpec & spec) -> GroupElement
{
    return GroupElement{vector<int64_t>(spec.rank(), 0)};
}

auto is_zero(const GroupElement & x) -> bool
{
    for (auto c : x.components)
        if (c != 0)
            return false;
    return true;
}

auto add(const GroupSpec & spec, const GroupElement & x, const GroupElement & y) -> GroupElement
{
    require_conforms(spec, x);
    require_conforms(spec, y);
    GroupElement r{vector<int64_t>(spec.rank())};
    for (std::size_t i = 0; i < spec.rank(); ++i) {
        auto m = spec.moduli()[i];
        __int128 s = __int128{x.components[i]} + y.components[i];
        r.components[i] = m == infinite_modulus ? checked(s) : reduce_mod(s, m);
    }
    return r;
}

auto neg(const GroupSpec & spec, const GroupElement & x) -> GroupElement
{
    return scalar_mul(spec, -1, x);
}

auto sub(const GroupSpec & spec, const GroupElement & x, const GroupElement & y) -> GroupElement
{
    return add(spec, x, neg(spec, y));
}

auto scalar_mul(const GroupSpec & spec, int64_t k, const GroupElement & x) -> GroupElement
{
    require_conforms(spec, x);
    GroupElement r{vector<int64_t>(spec.rank())};
    for (std::size_t i = 0; i < spec.rank(); ++i) {
        auto m = spec.moduli()[i];
        if (m == infinite_modulus)
            r.components[i] = checked(__int128{k} * x.components[i]);
        else
            r.components[i] = reduce_mod(__int128{reduce_mod(k, m)} * x.components[i], m);
    }
    return r;
}

auto order(const GroupSpec & spec, const GroupElement & x) -> ElementOrder
{
    require_conforms(spec, x);
    int64_t result = 1;
    for (std::size_t i = 0; i < spec.rank(); ++i) {
        auto m = spec.moduli()[i];
        if (x.components[i] == 0)
            continue;
        if (m == infinite_modulus)
            return std::nullopt;
        result = std::lcm(result, m / std::gcd(x.components[i], m));
    }
    return result;
}

auto exponent_divides(const GroupSpec & spec, int64_t d) -> bool
{
    if (d < 1)
        throw DomainError("exponent test needs d >= 1");
    for (auto m : spec.moduli())
        if (m == infinite_modulus || d % m != 0)
            return false;
    return true;
}

auto enumerate_elements(const GroupSpec & spec, bool include_zero) -> vector<GroupElement>
{
    if (! spec.is_finite())
        throw UnsupportedError("cannot enumerate " + format_spec(spec) + ": it has an infinite factor");
    vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(*spec.order()));
    optional<GroupElement> x = zero(spec);
    while (x) {
        if (include_zero || ! is_zero(*x))
            out.push_back(*x);
        x = next_canonical(spec, *x);
    }
    return out;
}

auto next_canonical(const GroupSpec & spec, const GroupElement & x) -> optional<GroupElement>
{
    require_conforms(spec, x);
    auto r = x;
    for (std::size_t i = spec.rank(); i-- > 0;) {
        auto m = spec.moduli()[i];
        auto & c = r.components[i];
        if (m == infinite_modulus) {
            c = c > 0 ? -c : checked(__int128{1} - c);
            return r;
        }
        if (++c < m)
            return r;
        c = 0;
    }
    return std::nullopt;
}

auto first_canonical(const GroupSpec & spec, const std::function<bool(const GroupElement &)> & pred,
    int64_t step_limit) -> optional<GroupElement>
{
    optional<GroupElement> x = zero(spec);
    for (int64_t steps = 0; x && steps < step_limit; ++steps) {
        if (pred(*x))
            return x;
        x = next_canonical(spec, *x);
    }
    return std::nullopt;
}

auto first_of_order(const GroupSpec & spec, int64_t d) -> optional<GroupElement>
{
    vector<int64_t> finite_moduli;
    vector<std::size_t> positions;
    for (std::size_t i = 0; i < spec.rank(); ++i)
        if (spec.moduli()[i] != infinite_modulus) {
            finite_moduli.push_back(spec.moduli()[i]);
            positions.push_back(i);
        }
    if (finite_moduli.empty())
        return std::nullopt;

    GroupSpec torsion{finite_moduli};
    optional<GroupElement> t = zero(torsion);
    for (; t; t = next_canonical(torsion, *t)) {
        if (order(torsion, *t) != d)
            continue;
        auto x = zero(spec);
        for (std::size_t j = 0; j < positions.size(); ++j)
            x.components[positions[j]] = t->components[j];
        return x;
    }
    return std::nullopt;
}

namespace {

void invariant_factors(int64_t rest, int64_t previous, vector<int64_t> & prefix, vector<vector<int64_t>> & out)
{
    if (rest == 1) {
        if (! prefix.empty())
            out.push_back(prefix);
        return;
    }
    for (int64_t d = previous; d <= rest; d += previous) {
        if (rest % d != 0)
            continue;
        prefix.push_back(d);
        invariant_factors(rest / d, d, prefix, out);
        prefix.pop_back();
    }
}

}

auto groups_of_order(int64_t n) -> vector<GroupSpec>
{
    if (n < 2)
        throw DomainError("groups of order " + std::to_string(n) + " are trivial");
    vector<vector<int64_t>> factors;
    vector<int64_t> prefix;
    for (int64_t first = 2; first <= n; ++first)
        if (n % first == 0) {
            prefix = {first};
            invariant_factors(n / first, first, prefix, factors);
        }
    std::sort(factors.begin(), factors.end(), [](auto & a, auto & b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    vector<GroupSpec> out;
    for (auto & f : factors)
        out.emplace_back(f);
    return out;
}

}
