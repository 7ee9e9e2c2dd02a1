#pragma once

#include <gvm/reduced.hh>
#include <gvm/verify.hh>

#include <optional>
#include <utility>
#include <vector>

namespace gvm {

/// Split target into n nonzero summands.
struct SplitRequest {
    GroupElement target;
    int n = 1;
    GroupSpec spec;
};

/// Auxiliary elements for sum_split. Unset fields are resolved to the first
/// canonical nonzero element meeting the side condition of the pattern used:
///   target 0, n even:      b
///   target 0, n odd:       b, then c with b + c != 0
///   target a != 0, n even: b with a + b != 0
///   target a != 0, n odd:  none
struct SplitChoice {
    std::optional<GroupElement> b, c;
};

/// Summands for target 0:      n odd:  b+c, -c, -b, b, -b, ...   n even: b, -b, b, -b, ...
/// Summands for target a != 0: n odd:  a, -a, a, ..., a          n even: a+b, -b, -a, a, -a, ...
/// Throws PreconditionError when no choice satisfies the side conditions
/// (only possible in groups of order 2) or when n = 1 and target = 0.
auto sum_split(const SplitRequest & request, const SplitChoice & choice = {}) -> std::vector<GroupElement>;

/// Labels each class of size >= 2 by sum_split of its quotient label and each
/// singleton class by the label itself; weights are preserved vertex by class.
auto lift_labeling(const Graph & g, const ReducedGraph & r, const QuotientCertificate & certificate)
    -> MagicCertificate;

/// Elements a, b for zero-sum blocks (a != 0, b != 0, a + b != 0); unset means first canonical.
struct BlockChoice {
    std::optional<GroupElement> a, b;
};

/// A block of `size` >= 2 labels summing to zero:
///   even: a, -a, a, -a, ...    odd: a+b, -b, -a, a, -a, ...
auto zero_sum_block(const GroupSpec & spec, int size, const BlockChoice & choice = {}) -> std::vector<GroupElement>;

/// Certificate with mu = 0 on h_join(h, [empty(n_1), ..., empty(n_k)]), every n_j >= 2.
auto label_h_join_empty(const Graph & h, const std::vector<int> & sizes, const GroupSpec & spec,
    const BlockChoice & choice = {}) -> MagicCertificate;

/// Same labeling for any graph whose neighbourhood classes all have size >= 2,
/// applied to the class members in increasing order.
auto label_twin_classes(const Graph & g, const GroupSpec & spec, const BlockChoice & choice = {})
    -> MagicCertificate;

/// Quotient labeling: a on every class that is not a pendant class, and
/// (2 - d_H([v])) * a on the class of pendants hanging from v. Unverified.
auto pendant_class_labeling(const Graph & g, const ReducedGraph & r, const GroupSpec & spec, const GroupElement & a)
    -> Labeling;

/// Certificate with mu = a for graphs where every non-pendant vertex has at
/// least two pendant neighbours. a defaults to the first canonical nonzero element.
auto label_strong_support(const Graph & g, const GroupSpec & spec, std::optional<GroupElement> a = std::nullopt)
    -> MagicCertificate;

struct CaterpillarVerdict {
    bool magic = false;
    /// A degree-2 vertex when not magic.
    std::optional<Vertex> witness;
    std::optional<MagicCertificate> certificate;
};

/// A caterpillar on at least 4 vertices is magic over every group of order > 2
/// iff it has no vertex of degree 2; smaller trees are always magic. Builds a
/// certificate over spec when one is given and the verdict is magic.
auto classify_caterpillar(const Graph & t, const std::optional<GroupSpec> & spec = std::nullopt)
    -> CaterpillarVerdict;

auto is_caterpillar(const Graph & t) -> bool;

struct Embedding {
    Graph graph;
    MagicCertificate certificate;
    /// (original vertex, vertex in graph) pairs.
    std::vector<std::pair<Vertex, Vertex>> injection;
};

/// Adds a twin for every singleton neighbourhood class, joined to the
/// neighbours of the original and to their twins, so every class has
/// size >= 2, and labels the result with zero-sum classes (mu = 0). Original
/// vertices keep their ids; twins are appended in class order.
auto embed_as_induced(const Graph & h, const GroupSpec & spec) -> Embedding;

struct Extension {
    Graph graph;
    MagicCertificate certificate;
    Vertex new_vertex = -1;
};

/// Adds one vertex to class i of reduce(g) and re-splits the class's label sum
/// over the enlarged class; all other labels and mu are unchanged.
auto extend_class(const Graph & g, const MagicCertificate & certificate, int class_index) -> Extension;

}
