#pragma once

#include <gvm/abelian.hh>
#include <gvm/graph.hh>
#include <gvm/reduced.hh>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gvm {

/// Vertex-indexed labels over a group. Zero labels are representable so the
/// same type carries quotient (A') labelings; verify_magic rejects them.
struct Labeling {
    GroupSpec spec;
    std::vector<GroupElement> values;
};

/// A verified A-vertex magic labeling and its magic constant.
struct MagicCertificate {
    Labeling labeling;
    GroupElement mu;
};

/// A verified A' labeling of a reduced graph (zero allowed on classes of size >= 2).
struct QuotientCertificate {
    Labeling labeling;
    GroupElement mu;
};

struct Refutation {
    enum class Reason {
        size_mismatch,
        zero_label,
        zero_on_singleton_class,
        weight_mismatch
    };

    Reason reason;
    Vertex vertex = -1;
    Vertex other = -1;
    std::optional<GroupElement> weight, other_weight;

    auto describe() const -> std::string;
};

using MagicVerdict = std::variant<MagicCertificate, Refutation>;
using QuotientVerdict = std::variant<QuotientCertificate, Refutation>;

/// w(v) = sum of labels over the open neighbourhood of v.
auto weights(const Graph & g, const Labeling & l) -> std::vector<GroupElement>;

/// Certificate iff every label is nonzero and all weights agree. A mismatch
/// names vertex 0 and the first vertex whose weight differs from it.
auto verify_magic(const Graph & g, const Labeling & l) -> MagicVerdict;

/// Labels are per class of r, in class order.
auto verify_a_prime(const ReducedGraph & r, const Labeling & l) -> QuotientVerdict;

/// One line per vertex: "<vertex> <c1,c2,...>".
auto write_labeling(const Labeling & l) -> std::string;

/// write_labeling followed by "mu <components>".
auto write_certificate(const MagicCertificate & c) -> std::string;

struct ParsedLabeling {
    Labeling labeling;
    std::optional<GroupElement> mu;
};

/// Every vertex 0..k-1 must appear exactly once; a trailing "mu" line is optional.
auto read_labeling(const GroupSpec & spec, std::string_view text) -> ParsedLabeling;

}
