#include <gvm/errors.hh>
#include <gvm/friendship.hh>

#include <numeric>
#include <stdexcept>

using std::int64_t;
using std::optional;
using std::vector;

namespace gvm {

namespace {

auto residue(int n) { return n % 4; }

auto check_params(FriendshipParams p)
{
    if (p.n < 3 || p.m < 1)
        throw PreconditionError("f(n,m) needs n >= 3 and m >= 1, got f(" + std::to_string(p.n) + ","
            + std::to_string(p.m) + ")");
}

auto check_spec(const GroupSpec & spec, const GroupElement & x)
{
    if (! conforms(spec, x))
        throw ConformanceError("element " + format_element(x) + " does not belong to " + format_spec(spec));
}

/// Fills the labeling arm by arm; label(i, k) gives arm i, position k.
template <typename F>
auto arm_labeling(FriendshipParams p, const GroupSpec & spec, const GroupElement & center, F label) -> Labeling
{
    Labeling l{spec, vector<GroupElement>(p.vertex_count(), center)};
    for (int i = 1; i <= p.m; ++i)
        for (int k = 1; k < p.n; ++k)
            l.values[p.arm_vertex(i, k)] = label(i, k);
    return l;
}

auto certify(FriendshipParams p, Labeling l) -> MagicCertificate
{
    auto verdict = verify_magic(gen_friendship(p), l);
    if (auto * c = std::get_if<MagicCertificate>(&verdict))
        return *c;
    throw std::logic_error("friendship labeling failed verification: " + std::get<Refutation>(verdict).describe());
}

auto nonzero_multiples(const GroupSpec & spec, const GroupElement & a, std::initializer_list<int> ks)
{
    for (auto k : ks)
        if (is_zero(scalar_mul(spec, k, a)))
            return false;
    return true;
}

auto second_order3(const GroupSpec & spec, const GroupElement & e1) -> optional<GroupElement>
{
    auto e1_twice = add(spec, e1, e1);
    for (auto & x : enumerate_elements(spec, false))
        if (x != e1 && x != e1_twice && order(spec, x) == 3)
            return x;
    return std::nullopt;
}

auto params_text(FriendshipParams p)
{
    return "f(" + std::to_string(p.n) + "," + std::to_string(p.m) + ")";
}

auto classify_n2(FriendshipParams p, const GroupSpec & spec, FriendshipVerdict v) -> FriendshipVerdict
{
    bool m_good = p.m % 3 == 1;
    auto large = [&](const GroupElement & x) { return nonzero_multiples(spec, x, {1, 2, 3, 4}); };

    if (! spec.is_finite()) {
        auto a = first_canonical(spec, [&](const GroupElement & x) { return ! order(spec, x); });
        v.magic = true;
        v.reason = "n2-large-order";
        v.certificate = label_n2(p, spec, *a);
        return v;
    }
    if (auto a = first_of_order(spec, 2)) {
        v.magic = true;
        v.reason = "n2-order2";
        v.certificate = label_n2(p, spec, *a);
        return v;
    }
    auto e1 = first_of_order(spec, 3);
    if (m_good && e1) {
        v.magic = true;
        v.reason = "n2-order3";
        v.certificate = label_n2(p, spec, *e1);
        return v;
    }
    if (! m_good && e1)
        if (auto e2 = second_order3(spec, *e1)) {
            v.magic = true;
            v.reason = "n2-z3xz3";
            v.certificate = label_n2_z3z3(p, spec, *e1, *e2);
            return v;
        }
    if (auto a = first_canonical(spec, large)) {
        v.magic = true;
        v.reason = "n2-large-order";
        v.certificate = label_n2(p, spec, *a);
        return v;
    }
    v.magic = false;
    v.reason = "n2-order3-only";
    v.detail = "A = Z3, m = " + std::to_string(p.m) + " is not 1 mod 3";
    return v;
}

}

auto label_n13(FriendshipParams p, const GroupSpec & spec, const GroupElement & a) -> MagicCertificate
{
    check_params(p);
    check_spec(spec, a);
    if (residue(p.n) != 1 && residue(p.n) != 3)
        throw PreconditionError("label_n13 needs n = 1 or 3 mod 4");
    auto b = scalar_mul(spec, 2 * int64_t{p.m} - 1, a);
    if (is_zero(b))
        throw PreconditionError("(2m-1)a is zero for a = " + format_element(a));

    Labeling l{spec, {}};
    if (p.n == 3)
        l = arm_labeling(p, spec, b, [&](int, int) { return a; });
    else if (residue(p.n) == 3)
        l = arm_labeling(p, spec, b, [&](int, int k) { return k % 4 == 0 || k % 4 == 3 ? b : a; });
    else
        l = arm_labeling(p, spec, a, [&](int, int k) { return k % 4 == 2 || k % 4 == 3 ? b : a; });
    return certify(p, std::move(l));
}

auto label_n0(FriendshipParams p, const GroupSpec & spec, const GroupElement & a) -> MagicCertificate
{
    check_params(p);
    check_spec(spec, a);
    if (residue(p.n) != 0)
        throw PreconditionError("label_n0 needs n = 0 mod 4");
    if (is_zero(a))
        throw PreconditionError("label_n0 needs a nonzero element");
    auto minus_a = neg(spec, a);
    return certify(p, arm_labeling(p, spec, a, [&](int, int k) { return k % 4 == 1 || k % 4 == 2 ? minus_a : a; }));
}

auto label_n2(FriendshipParams p, const GroupSpec & spec, const GroupElement & a) -> MagicCertificate
{
    check_params(p);
    check_spec(spec, a);
    if (residue(p.n) != 2)
        throw PreconditionError("label_n2 needs n = 2 mod 4");
    if (is_zero(a))
        throw PreconditionError("label_n2 needs a nonzero element");

    auto constant = [&](int, int) { return a; };
    auto times3 = scalar_mul(spec, 3, a);
    if (is_zero(scalar_mul(spec, 2, a)) || (is_zero(times3) && p.m % 3 == 1))
        return certify(p, arm_labeling(p, spec, a, constant));
    if (! nonzero_multiples(spec, a, {2, 3, 4}))
        throw PreconditionError("no f(n,m) pattern applies to a = " + format_element(a) + " for m = "
            + std::to_string(p.m));

    auto minus_a = neg(spec, a);
    auto minus_2a = scalar_mul(spec, -2, a);
    auto times4 = scalar_mul(spec, 4, a);
    Labeling l{spec, {}};
    if (p.m % 2 == 1)
        l = arm_labeling(p, spec, a, [&](int i, int k) {
            if (i % 2 == 0 && k % 4 == 1)
                return minus_a;
            if (i % 2 == 0 && k % 4 == 3)
                return times3;
            return a;
        });
    else
        l = arm_labeling(p, spec, a, [&](int i, int k) {
            if (k % 2 == 0)
                return a;
            bool first = k % 4 == 1;
            if (i == 1)
                return first ? times3 : minus_a;
            if (i == 2)
                return first ? minus_2a : times4;
            if (i % 2 == 0)
                return first ? minus_a : times3;
            return a;
        });
    return certify(p, std::move(l));
}

auto label_n2_z3z3(FriendshipParams p, const GroupSpec & spec, const GroupElement & e1, const GroupElement & e2)
    -> MagicCertificate
{
    check_params(p);
    check_spec(spec, e1);
    check_spec(spec, e2);
    if (residue(p.n) != 2)
        throw PreconditionError("label_n2_z3z3 needs n = 2 mod 4");
    if (order(spec, e1) != 3 || order(spec, e2) != 3 || e2 == e1 || e2 == add(spec, e1, e1))
        throw PreconditionError("e1, e2 do not span a subgroup Z3xZ3");

    auto at = [&](int x, int y) { return add(spec, scalar_mul(spec, x, e1), scalar_mul(spec, y, e2)); };
    auto one_one = at(1, 1);
    Labeling l{spec, {}};
    if (p.m % 2 == 1)
        l = arm_labeling(p, spec, one_one, [&](int i, int k) {
            if (i == 1 || k % 2 == 0)
                return one_one;
            bool first = k % 4 == 1;
            if (i % 2 == 0)
                return first ? at(1, 0) : at(1, 2);
            return first ? at(2, 0) : at(0, 2);
        });
    else
        l = arm_labeling(p, spec, one_one, [&](int i, int k) {
            if (k % 2 == 0)
                return one_one;
            bool first = k % 4 == 1;
            if (i == 1)
                return first ? at(1, 0) : at(1, 2);
            if (i % 2 == 0)
                return first ? at(0, 1) : at(2, 1);
            return first ? at(0, 2) : at(2, 0);
        });
    return certify(p, std::move(l));
}

auto classify(FriendshipParams p, const GroupSpec & spec) -> FriendshipVerdict
{
    check_params(p);
    if (spec.order() == 1)
        throw PreconditionError("the trivial group has no nonzero labels");
    FriendshipVerdict v{p, spec, false, {}, {}, std::nullopt};
    auto r = residue(p.n);

    if (r == 0) {
        v.magic = true;
        v.reason = "n0";
        v.certificate = label_n0(p, spec, *first_canonical(spec, [](auto & x) { return ! is_zero(x); }));
        return v;
    }
    if (r == 1 || r == 3) {
        auto d = 2 * int64_t{p.m} - 1;
        v.reason = p.n == 3 ? "n13-n3" : r == 3 ? "n13-n3mod4" : "n13-n1mod4";
        if (exponent_divides(spec, d)) {
            v.reason = "n13-exponent";
            int64_t exponent = 1;
            for (auto m : spec.moduli())
                exponent = std::lcm(exponent, m);
            v.detail = "exponent " + std::to_string(exponent) + " | " + std::to_string(d);
            return v;
        }
        auto a = first_canonical(spec, [&](auto & x) { return ! is_zero(scalar_mul(spec, d, x)); });
        v.magic = true;
        v.certificate = label_n13(p, spec, *a);
        return v;
    }
    return classify_n2(p, spec, std::move(v));
}

auto classify_all(FriendshipParams p) -> FriendshipVerdict
{
    check_params(p);
    FriendshipVerdict v{p, std::nullopt, false, {}, {}, std::nullopt};
    auto r = residue(p.n);
    if (r == 0) {
        v.magic = true;
        v.reason = "n0";
    } else if (r == 1 || r == 3) {
        v.magic = p.m == 1;
        v.reason = "n13-all";
        if (! v.magic)
            v.detail = "fails over Z" + std::to_string(2 * p.m - 1);
    } else {
        v.magic = p.m % 3 == 1;
        v.reason = "n2-all";
        if (! v.magic)
            v.detail = "fails over Z3, m = " + std::to_string(p.m) + " is not 1 mod 3";
    }
    return v;
}

auto format_verdict(const FriendshipVerdict & v) -> std::string
{
    auto out = params_text(v.params) + " " + (v.spec ? format_spec(*v.spec) : "ALL") + " "
        + (v.magic ? "magic" : "not-magic");
    if (! v.detail.empty())
        out += " (" + v.detail + ")";
    out += " " + v.reason;
    if (v.certificate)
        out += " " + format_element(v.certificate->mu);
    return out;
}

}
