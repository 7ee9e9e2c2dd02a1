#pragma once

#include <gvm/verify.hh>

#include <cstdint>
#include <variant>

namespace gvm {

struct SearchOptions {
    /// Maximum number of label assignments before giving up with ResourceError.
    std::uint64_t cap = 100'000'000;
    /// Worker threads; the result does not depend on this.
    int jobs = 1;
};

/// Every labeling was ruled out: a proof that none exists.
struct Exhausted {
    std::uint64_t nodes = 0;
};

/// No labeling with labels in [-bound, bound] exists. Says nothing about larger labels.
struct BoundedExhausted {
    std::int64_t bound = 0;
    std::uint64_t nodes = 0;
};

using MagicSearchResult = std::variant<MagicCertificate, Exhausted>;
using QuotientSearchResult = std::variant<QuotientCertificate, Exhausted>;
using IntSearchResult = std::variant<MagicCertificate, BoundedExhausted>;

/// Lexicographically first magic labeling (vertex order, canonical element
/// order) over a finite group, or exhaustion. Throws ResourceError when the
/// cap is hit first.
auto brute_force_magic(const Graph & g, const GroupSpec & spec, const SearchOptions & options = {})
    -> MagicSearchResult;

/// Same search on the quotient of r, with zero allowed on classes of size >= 2.
auto brute_force_a_prime(const ReducedGraph & r, const GroupSpec & spec, const SearchOptions & options = {})
    -> QuotientSearchResult;

/// Z-labelings with labels in [-bound, bound] \ {0}, tried in the order 1, -1, 2, -2, ...
auto brute_force_int(const Graph & g, std::int64_t bound, const SearchOptions & options = {}) -> IntSearchResult;

}
