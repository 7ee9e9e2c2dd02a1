#pragma once

#include <gvm/generators.hh>
#include <gvm/verify.hh>

#include <optional>
#include <string>

namespace gvm {

struct FriendshipVerdict {
    FriendshipParams params;
    /// nullopt for the "every non-trivial group" question.
    std::optional<GroupSpec> spec;
    bool magic = false;
    /// Case token: n13-*, n0-*, n2-*.
    std::string reason;
    /// Short explanation for negative verdicts, e.g. "exponent 3 | 3".
    std::string detail;
    std::optional<MagicCertificate> certificate;
};

/// Decides whether f_{n,m} is A-vertex magic and, when it is, builds the
/// certificate with the labeler for the case that applies.
auto classify(FriendshipParams params, const GroupSpec & spec) -> FriendshipVerdict;

/// Decides whether f_{n,m} is A-vertex magic for every non-trivial A.
auto classify_all(FriendshipParams params) -> FriendshipVerdict;

/// n = 1, 3 (mod 4), (2m-1)a != 0. mu = 2ma.
auto label_n13(FriendshipParams params, const GroupSpec & spec, const GroupElement & a) -> MagicCertificate;

/// n = 0 (mod 4), a != 0. mu = 0.
auto label_n0(FriendshipParams params, const GroupSpec & spec, const GroupElement & a) -> MagicCertificate;

/// n = 2 (mod 4). Constant labels when 2a = 0 (mu = 0) or when 3a = 0 and
/// m = 1 (mod 3) (mu = 2a); otherwise the arm patterns with coefficients
/// -2, -1, 1, 3, 4, which need 2a, 3a, 4a != 0 (mu = 2a).
auto label_n2(FriendshipParams params, const GroupSpec & spec, const GroupElement & a) -> MagicCertificate;

/// n = 2 (mod 4) over the subgroup spanned by independent order-3 elements
/// e1, e2; labels are written (x, y) for x e1 + y e2 and mu = (2, 2).
auto label_n2_z3z3(FriendshipParams params, const GroupSpec & spec, const GroupElement & e1,
    const GroupElement & e2) -> MagicCertificate;

/// "f(n,m) <spec|ALL> <magic|not-magic> [(detail)] <case> [mu]"
auto format_verdict(const FriendshipVerdict & v) -> std::string;

}
