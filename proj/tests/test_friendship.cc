#include <gvm/errors.hh>
#include <gvm/friendship.hh>
#include <gvm/search.hh>

#include "support/oracle.hh"

#include <doctest.h>

using namespace gvm;
using std::int64_t;
using std::vector;

namespace {

auto arm(const MagicCertificate & c, FriendshipParams p, int i)
{
    vector<int64_t> out;
    for (int k = 1; k < p.n; ++k)
        out.push_back(c.labeling.values[p.arm_vertex(i, k)].components.at(0));
    return out;
}

auto pairs(const MagicCertificate & c, FriendshipParams p, int i)
{
    vector<vector<int64_t>> out;
    for (int k = 1; k < p.n; ++k)
        out.push_back(c.labeling.values[p.arm_vertex(i, k)].components);
    return out;
}

auto oracle_verifies(const Graph & g, const MagicCertificate & c)
{
    vector<oracle::Element> labels;
    for (auto & x : c.labeling.values)
        labels.push_back(x.components);
    return oracle::is_magic(g, c.labeling.spec.moduli(), labels)
        && oracle::weights(g, c.labeling.spec.moduli(), labels)[0] == c.mu.components;
}

const vector<const char *> grid_specs = {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z2xZ2", "Z8", "Z9", "Z3xZ3", "Z2xZ4",
    "Z2xZ2xZ2"};

}

TEST_CASE("odd cycle lengths")
{
    auto z3 = parse_spec("Z3"), z5 = parse_spec("Z5");
    auto f32 = classify({3, 2}, z3);
    CHECK_FALSE(f32.magic);
    CHECK(f32.reason == "n13-exponent");
    CHECK(format_verdict(f32) == "f(3,2) Z3 not-magic (exponent 3 | 3) n13-exponent");

    auto one = make_element(z5, {1});
    auto c3 = label_n13({3, 2}, z5, one);
    CHECK(arm(c3, {3, 2}, 1) == vector<int64_t>{1, 1});
    CHECK(c3.labeling.values[0] == make_element(z5, {3}));
    CHECK(c3.mu == make_element(z5, {4}));

    auto c7 = label_n13({7, 2}, z5, one);
    CHECK(arm(c7, {7, 2}, 1) == vector<int64_t>{1, 1, 3, 3, 1, 1});
    CHECK(arm(c7, {7, 2}, 2) == vector<int64_t>{1, 1, 3, 3, 1, 1});
    CHECK(c7.labeling.values[0] == make_element(z5, {3}));
    CHECK(c7.mu == make_element(z5, {4}));

    auto c5 = label_n13({5, 2}, z5, one);
    CHECK(arm(c5, {5, 2}, 1) == vector<int64_t>{1, 3, 3, 1});
    CHECK(c5.labeling.values[0] == one);
    CHECK(c5.mu == make_element(z5, {4}));

    CHECK_THROWS_AS(label_n13({3, 2}, z3, make_element(z3, {1})), PreconditionError);
    CHECK_THROWS_AS(label_n13({4, 2}, z5, one), PreconditionError);

    CHECK(classify({5, 1}, parse_spec("Z2")).magic);
    CHECK_FALSE(classify({7, 3}, parse_spec("Z5")).magic);
    CHECK(classify({7, 3}, parse_spec("Z")).magic);
}

TEST_CASE("cycle lengths divisible by four")
{
    auto z2 = parse_spec("Z2"), z3 = parse_spec("Z3"), z5 = parse_spec("Z5");
    auto f83 = classify({8, 3}, z2);
    CHECK(f83.magic);
    REQUIRE(f83.certificate);
    CHECK(is_zero(f83.certificate->mu));

    auto c4 = label_n0({4, 1}, z2, make_element(z2, {1}));
    CHECK(arm(c4, {4, 1}, 1) == vector<int64_t>{1, 1, 1});
    auto c8 = label_n0({8, 2}, z3, make_element(z3, {1}));
    CHECK(arm(c8, {8, 2}, 1) == vector<int64_t>{2, 2, 1, 1, 2, 2, 1});
    CHECK(c8.labeling.values[0] == make_element(z3, {1}));
    CHECK(is_zero(c8.mu));
    CHECK(is_zero(label_n0({4, 3}, z5, make_element(z5, {2})).mu));
    CHECK(format_verdict(f83) == "f(8,3) Z2 magic n0 0");
}

TEST_CASE("cycle lengths 2 mod 4")
{
    auto z2 = parse_spec("Z2"), z3 = parse_spec("Z3"), z5 = parse_spec("Z5");
    auto c1 = label_n2({6, 1}, z2, make_element(z2, {1}));
    CHECK(arm(c1, {6, 1}, 1) == vector<int64_t>(5, 1));
    CHECK(is_zero(c1.mu));

    auto c4 = label_n2({6, 4}, z3, make_element(z3, {1}));
    CHECK(arm(c4, {6, 4}, 3) == vector<int64_t>(5, 1));
    CHECK(c4.mu == make_element(z3, {2}));

    auto c2 = label_n2({6, 2}, z5, make_element(z5, {1}));
    CHECK(arm(c2, {6, 2}, 1) == vector<int64_t>{3, 1, 4, 1, 3});
    CHECK(arm(c2, {6, 2}, 2) == vector<int64_t>{3, 1, 4, 1, 3});
    CHECK(c2.mu == make_element(z5, {2}));

    auto c3 = label_n2({6, 3}, z5, make_element(z5, {1}));
    CHECK(arm(c3, {6, 3}, 1) == vector<int64_t>(5, 1));
    CHECK(arm(c3, {6, 3}, 2) == vector<int64_t>{4, 1, 3, 1, 4});
    CHECK(arm(c3, {6, 3}, 3) == vector<int64_t>(5, 1));

    CHECK_THROWS_AS(label_n2({6, 2}, z3, make_element(z3, {1})), PreconditionError);

    auto f62 = classify({6, 2}, z3);
    CHECK_FALSE(f62.magic);
    CHECK(f62.reason == "n2-order3-only");
    for (auto text : {"Z2", "Z4", "Z5", "Z9", "Z3xZ3", "Z", "Z7xZ"})
        CHECK_MESSAGE(classify({6, 2}, parse_spec(text)).magic, text);
    CHECK(classify({6, 2}, parse_spec("Z9")).reason == "n2-large-order");
    CHECK(classify({6, 4}, z3).reason == "n2-order3");
}

TEST_CASE("the Z3 x Z3 tables")
{
    auto z33 = parse_spec("Z3xZ3");
    auto e1 = make_element(z33, {1, 0}), e2 = make_element(z33, {0, 1});

    FriendshipParams p3{6, 3};
    auto c3 = label_n2_z3z3(p3, z33, e1, e2);
    CHECK(pairs(c3, p3, 1) == vector<vector<int64_t>>(5, {1, 1}));
    CHECK(pairs(c3, p3, 2) == vector<vector<int64_t>>{{1, 0}, {1, 1}, {1, 2}, {1, 1}, {1, 0}});
    CHECK(pairs(c3, p3, 3) == vector<vector<int64_t>>{{2, 0}, {1, 1}, {0, 2}, {1, 1}, {2, 0}});
    CHECK(c3.labeling.values[0] == make_element(z33, {1, 1}));
    CHECK(c3.mu == make_element(z33, {2, 2}));

    FriendshipParams p2{6, 2};
    auto c2 = label_n2_z3z3(p2, z33, e1, e2);
    CHECK(c2.mu == make_element(z33, {2, 2}));
    CHECK(classify(p2, z33).reason == "n2-z3xz3");

    for (int m : {2, 3, 5, 6, 8, 9})
        for (int n : {6, 10, 14}) {
            FriendshipParams p{n, m};
            auto c = label_n2_z3z3(p, z33, e1, e2);
            CHECK(oracle_verifies(gen_friendship(p), c));
        }
    CHECK_THROWS_AS(label_n2_z3z3(p2, z33, e1, make_element(z33, {2, 0})), PreconditionError);
}

TEST_CASE("every group at once")
{
    CHECK_FALSE(classify_all({6, 2}).magic);
    CHECK(classify_all({6, 4}).magic);
    CHECK(classify_all({8, 3}).magic);
    CHECK(classify_all({5, 1}).magic);
    CHECK_FALSE(classify_all({5, 2}).magic);
    CHECK(format_verdict(classify_all({6, 2})) == "f(6,2) ALL not-magic (fails over Z3, m = 2 is not 1 mod 3) n2-all");
    CHECK(format_verdict(classify_all({6, 4})) == "f(6,4) ALL magic n2-all");
}

TEST_CASE("classification agrees with brute force")
{
    for (int n = 3; n <= 8; ++n)
        for (int m = 1; m <= 3; ++m) {
            FriendshipParams p{n, m};
            auto g = gen_friendship(p);
            for (auto text : grid_specs) {
                auto spec = parse_spec(text);
                auto v = classify(p, spec);
                bool found = std::holds_alternative<MagicCertificate>(brute_force_magic(g, spec));
                CHECK_MESSAGE(v.magic == found, format_verdict(v));
                CHECK(v.certificate.has_value() == v.magic);
                if (v.certificate) {
                    CHECK(oracle_verifies(g, *v.certificate));
                    for (int i = 1; i <= m; ++i)
                        for (int k = 1; k + 4 < n; ++k)
                            CHECK(v.certificate->labeling.values[p.arm_vertex(i, k)]
                                == v.certificate->labeling.values[p.arm_vertex(i, k + 4)]);
                }
            }
        }
}

TEST_CASE("infinite groups get certificates")
{
    for (int n = 3; n <= 10; ++n)
        for (int m = 1; m <= 3; ++m)
            for (auto text : {"Z", "ZxZ2", "Z3xZ"}) {
                auto v = classify({n, m}, parse_spec(text));
                CHECK(v.magic);
                REQUIRE(v.certificate);
                CHECK(std::holds_alternative<MagicCertificate>(verify_magic(gen_friendship({n, m}),
                    v.certificate->labeling)));
            }
}
